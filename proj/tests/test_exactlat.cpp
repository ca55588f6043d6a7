#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binform/hnf.hpp"
#include "binform/poly.hpp"
#include "binform/tensor.hpp"
#include "test_util.hpp"

using namespace binform;
using testutil::random_int_mat;
using testutil::random_nonsingular_mat;
using testutil::random_unimodular;

namespace {

// Characterization oracle for the canonical column HNF: upper triangular,
// positive diagonal, rows reduced right of the diagonal, same lattice.
bool is_canonical_hnf_of(const RatMat& h, const RatMat& basis) {
    const std::size_t n = h.rows();
    for (std::size_t i = 0; i < n; ++i) {
        if (h(i, i) <= 0) return false;
        for (std::size_t j = 0; j < i; ++j)
            if (h(i, j) != 0) return false;
        for (std::size_t j = i + 1; j < n; ++j)
            if (h(i, j) < 0 || h(i, j) >= h(i, i)) return false;
    }
    return is_integral(solve(h, basis)) && is_integral(solve(basis, h));
}

// Independent 2x2 determinant-form oracle by direct symbolic expansion.
std::vector<Int> det_form_2x2(const Tensor& a) {
    Int c0 = det(a.a1);
    Int c2 = det(a.a2);
    Int c1 = det(a.a1 + a.a2) - c0 - c2;
    return {c0, c1, c2};
}

}  // namespace

TEST_CASE("hnf: pinned examples") {
    RatMat id2 = RatMat::identity(2);
    CHECK(hnf(id2) == id2);

    RatMat perm{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
    CHECK(hnf(perm) == id2);

    RatMat b{{Rat(2), Rat(1)}, {Rat(0), Rat(1)}};
    RatMat expected{{Rat(2), Rat(1)}, {Rat(0), Rat(1)}};  // already canonical
    RatMat h = hnf(b);
    CHECK(h == expected);
    CHECK(is_canonical_hnf_of(h, b));
}

TEST_CASE("hnf: rejects singular input") {
    RatMat s{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
    CHECK_THROWS_WITH_AS(hnf(s), "degenerate lattice", error);
}

TEST_CASE("hnf: basis independence and idempotence") {
    Rng rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 2 + trial % 4;
        IntMat b = random_nonsingular_mat(rng, n, 6);
        IntMat u = random_unimodular(rng, n);
        RatMat h1 = hnf(to_rat(b));
        RatMat h2 = hnf(to_rat(b * u));
        CHECK(h1 == h2);
        CHECK(hnf(h1) == h1);
        CHECK(is_canonical_hnf_of(h1, to_rat(b)));
    }
    // rational bases of the same lattice agree as well
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 2 + trial % 3;
        IntMat b = random_nonsingular_mat(rng, n, 5);
        IntMat u = random_unimodular(rng, n);
        RatMat rb = scale(b, make_rat(1, 6));
        CHECK(hnf(rb) == hnf(scale(b * u, make_rat(1, 6))));
    }
}

TEST_CASE("hnf_span: redundant generators collapse to the basis") {
    Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 2 + trial % 3;
        IntMat b = random_nonsingular_mat(rng, n, 5);
        IntMat gens(n, 2 * n);
        for (std::size_t j = 0; j < n; ++j) {
            auto c = b.col(j);
            gens.set_col(j, c);
            // duplicate column plus a random lattice combination
            std::vector<Int> r(n);
            for (auto& v : r) v = Int(rng.uniform(-2, 2));
            std::vector<Int> mix(n, Int(0));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = 0; k < n; ++k) mix[i] += b(i, k) * r[k];
            gens.set_col(n + j, mix);
        }
        CHECK(to_rat(hnf_span(gens)) == hnf(to_rat(b)));
    }
}

TEST_CASE("lattice_index: pinned examples") {
    RatMat i2 = RatMat::identity(2);
    CHECK(lattice_index(i2 * Rat(2), i2) == Rat(4));
    CHECK(lattice_index(i2, i2) == Rat(1));

    // I_f and J_f for f = 2x^2+3xy+5y^2 from the generator lists:
    // I = <2, 2*theta+3>, J = <1, 2*theta> on the basis (1, theta).
    RatMat If{{Rat(2), Rat(3)}, {Rat(0), Rat(2)}};
    RatMat Jf{{Rat(1), Rat(0)}, {Rat(0), Rat(2)}};
    CHECK(lattice_index(If, Jf) == Rat(2));
}

TEST_CASE("lattice_index: multiplicativity on random chains") {
    Rng rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 2 + trial % 4;
        RatMat l1 = to_rat(random_nonsingular_mat(rng, n, 5));
        RatMat l2 = to_rat(random_nonsingular_mat(rng, n, 5));
        RatMat l3 = to_rat(random_nonsingular_mat(rng, n, 5));
        CHECK(lattice_index(l1, l3) == lattice_index(l1, l2) * lattice_index(l2, l3));
    }
}

TEST_CASE("charpoly: pinned examples") {
    IntPoly f(std::vector<Int>{Int(5), Int(3), Int(1)});  // t^2+3t+5
    CHECK(charpoly(companion(f)) == f);

    CHECK(charpoly(IntMat(3, 3)) == IntPoly::monomial(3));

    IntMat rot{{Int(0), Int(1)}, {Int(-1), Int(0)}};
    CHECK(charpoly(rot) == IntPoly(std::vector<Int>{Int(1), Int(0), Int(1)}));
}

TEST_CASE("charpoly: conjugation invariance and rational matrices") {
    Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 2 + trial % 4;
        IntMat m = random_int_mat(rng, n, 5);
        IntMat p = random_unimodular(rng, n);
        RatMat conj = inverse(p) * to_rat(m) * to_rat(p);
        CHECK(charpoly(conj) == to_rat(charpoly(m)));
        CHECK(charpoly(m).leading() == 1);
    }
    RatMat half{{make_rat(1, 2), Rat(0)}, {Rat(0), make_rat(1, 2)}};
    CHECK(charpoly(half) ==
          RatPoly(std::vector<Rat>{make_rat(1, 4), Rat(-1), Rat(1)}));
}

TEST_CASE("det_binary_form: pinned examples") {
    Tensor gauss(IntMat::identity(2), IntMat{{Int(0), Int(-1)}, {Int(1), Int(0)}});
    CHECK(det_binary_form(gauss) == BinaryForm({Int(1), Int(0), Int(1)}));

    // companion identity det(x*I - C*y) = F(x,y) for monic F
    BinaryForm cubic({Int(1), Int(0), Int(0), Int(1)});
    CHECK(det_binary_form(companion_tensor(cubic)) == cubic);
    BinaryForm quintic({Int(1), Int(-2), Int(0), Int(3), Int(1), Int(-7)});
    CHECK(det_binary_form(companion_tensor(quintic)) == quintic);

    Tensor t(IntMat{{Int(2), Int(0)}, {Int(0), Int(1)}},
             IntMat{{Int(1), Int(1)}, {Int(-1), Int(2)}});
    CHECK(det_binary_form(t) == BinaryForm({Int(2), Int(5), Int(3)}));
    CHECK(det_form_coeffs(t) == det_form_2x2(t));
}

TEST_CASE("det_binary_form: endpoint evaluation and 2x2 oracle sweep") {
    Rng rng(31337);
    for (int trial = 0; trial < 200; ++trial) {
        Tensor t = testutil::random_tensor(rng, 2, 5);
        CHECK(det_form_coeffs(t) == det_form_2x2(t));
    }
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 2 + trial % 4;
        Tensor t = testutil::random_tensor(rng, n, 5);
        std::vector<Int> c = det_form_coeffs(t);
        CHECK(c[0] == det(t.a1));
        CHECK(c[n] == det(t.a2));
    }
}

TEST_CASE("kernel_int: exact integer kernels, saturated") {
    IntMat m{{Int(1), Int(2), Int(3)}, {Int(2), Int(4), Int(6)}};
    IntMat k = kernel_int(m);
    CHECK(k.cols() == 2);
    CHECK((m * k).is_zero());

    // saturation: the kernel of [2 -1] over Z contains (1,2), not just (2,4)
    IntMat row{{Int(2), Int(-1)}};
    IntMat k2 = kernel_int(row);
    REQUIRE(k2.cols() == 1);
    CHECK(int_abs(k2(0, 0)) == 1);
    CHECK(int_abs(k2(1, 0)) == 2);

    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        IntMat a = random_int_mat(rng, 3, 4);
        IntMat ker = kernel_int(a);
        CHECK((a * ker).is_zero());
    }
}

TEST_CASE("integral_preimage_lattice: defining property") {
    Rng rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t n = 2 + trial % 3;
        RatMat d = scale(random_nonsingular_mat(rng, n, 4), make_rat(1, 3));
        RatMat l = integral_preimage_lattice(d);
        CHECK(is_integral(d * l));
        // maximality: scaling any basis column by 1/2 must break integrality
        for (std::size_t j = 0; j < n; ++j) {
            RatMat probe = l;
            for (std::size_t i = 0; i < n; ++i) probe(i, j) /= 2;
            CHECK(!is_integral(d * probe));
        }
    }
}
