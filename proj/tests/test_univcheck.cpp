#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binform/universal.hpp"
#include "test_util.hpp"

using namespace binform;

TEST_CASE("check_nodenom: random specializations and the zero case") {
    Rng rng(501);
    for (std::size_t n : {2, 3}) {
        int done = 0;
        while (done < (n == 2 ? 300 : 100)) {
            Specialization s = Specialization::random(rng, n, 9, false, false);
            if (det(s.tensor.a1) == 0) continue;
            CHECK(check_nodenom(s, n - 1));
            ++done;
        }
    }
    // C2 = 0: the matrix polynomial vanishes, trivially integral
    Specialization z(Tensor(IntMat::identity(3), IntMat(3, 3)));
    CHECK(check_nodenom(z, 2));

    Specialization sing(Tensor(IntMat(2, 2), IntMat::identity(2)));
    CHECK_THROWS_AS(check_nodenom(sing, 1), error);
}

TEST_CASE("check_correspondence_forward: all specializations, all columns") {
    Rng rng(502);
    for (std::size_t n = 2; n <= 4; ++n)
        for (int trial = 0; trial < 120; ++trial) {
            Specialization s = Specialization::random(rng, n, 9, false, true);
            for (std::size_t l = 0; l < n; ++l) CHECK(check_correspondence_forward(s, l));
        }
    // y = 0: both sides vanish
    Specialization z = Specialization::random(rng, 3, 5, false, true);
    for (auto& v : z.y) v = 0;
    CHECK(check_correspondence_forward(z, 0));
}

TEST_CASE("check_correspondence_backward: all (k,l) pairs, pinned corners") {
    Rng rng(503);
    for (std::size_t n = 2; n <= 3; ++n)
        for (int trial = 0; trial < 120; ++trial) {
            Specialization s = Specialization::random(rng, n, 9, true, false);
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    CHECK(check_correspondence_backward(s, k, l));
        }
    // x = (1, 0) reduces to a cofactor-expansion identity on the first slice
    Specialization s = Specialization::random(rng, 3, 6, true, false);
    s.x = {Int(1), Int(0)};
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 3; ++l) CHECK(check_correspondence_backward(s, k, l));
}
