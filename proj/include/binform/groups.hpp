#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "binform/hnf.hpp"
#include "binform/pairing.hpp"

namespace binform {

/// Pair (g1, g2) in GL_n(Z) x GL_n(Z) with det(g1)*det(g2) = 1, acting on
/// tensors by A_i -> g1 * A_i * g2^T.
struct GPair {
    IntMat g1, g2;

    GPair(IntMat m1, IntMat m2) : g1(std::move(m1)), g2(std::move(m2)) {
        if (!g1.is_square() || !g2.is_square() || g1.rows() != g2.rows())
            throw error("group pair needs square matrices of equal size");
        if (det(g1) * det(g2) != 1)
            throw error("group pair needs det(g1)*det(g2) = 1");
    }
};

inline Tensor g_act_tensor(const GPair& h, const Tensor& a) {
    IntMat g2t = h.g2.transpose();
    return Tensor(h.g1 * a.a1 * g2t, h.g1 * a.a2 * g2t);
}

/// GL_n(Z) action on symmetric tensors: A_i -> g * A_i * g^T.
inline Tensor gln_act_symmetric(const IntMat& g, const Tensor& a) {
    Int d = det(g);
    if (d != 1 && d != -1) throw error("symmetric action needs a unimodular matrix");
    if (!a.is_symmetric()) throw error("symmetric action needs a symmetric tensor");
    IntMat gt = g.transpose();
    return Tensor(g * a.a1 * gt, g * a.a2 * gt);
}

enum class IsoStatus { found, none, unknown };

struct IsoResult {
    IsoStatus status;
    std::optional<IntMat> witness;  // unimodular g with g*Z_k(M)*g^-1 = Z_k(M')
};

/// Searches for a based-module isomorphism.  The Z-lattice of intertwiners
/// {X : X*Z_k(M) = Z_k(M')*X for all k} is computed exactly; integer
/// combinations of its basis with coefficients up to coeff_budget are then
/// scanned for determinant ±1.  `none` is definitive (trivial intertwiner
/// lattice); `unknown` means the search budget was exhausted.
inline IsoResult modules_isomorphic(const BasedModule& m, const BasedModule& mp,
                                    long coeff_budget = 2,
                                    std::size_t combination_cap = 200000) {
    if (m.form != mp.form || m.side != mp.side)
        throw error("isomorphism test needs matching ring context and side");
    const std::size_t n = m.n();
    const std::size_t nn = n * n;

    IntMat sys(nn * (n - 1), nn);
    for (std::size_t k = 1; k < n; ++k) {
        const IntMat& z = m.action(k);
        const IntMat& zp = mp.action(k);
        std::size_t base = (k - 1) * nn;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::size_t row = base + i * n + j;
                for (std::size_t l = 0; l < n; ++l) {
                    sys(row, i * n + l) += z(l, j);    // (X*Z)(i,j)
                    sys(row, l * n + j) -= zp(i, l);   // (Z'*X)(i,j)
                }
            }
    }
    IntMat ker = kernel_int(sys);
    const std::size_t r = ker.cols();
    if (r == 0) return {IsoStatus::none, std::nullopt};
    size_reduce_columns(ker);  // small basis vectors make the scan effective

    std::vector<long> coeffs(r, -coeff_budget);
    std::size_t tried = 0;
    while (true) {
        bool all_zero = true;
        for (long c : coeffs) all_zero = all_zero && c == 0;
        if (!all_zero) {
            if (++tried > combination_cap) return {IsoStatus::unknown, std::nullopt};
            IntMat x(n, n);
            for (std::size_t b = 0; b < r; ++b) {
                if (coeffs[b] == 0) continue;
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        x(i, j) += Int(coeffs[b]) * ker(i * n + j, b);
            }
            Int d = det(x);
            if (d == 1 || d == -1) return {IsoStatus::found, x};
        }
        std::size_t pos = 0;
        while (pos < r && coeffs[pos] == coeff_budget) coeffs[pos++] = -coeff_budget;
        if (pos == r) break;
        ++coeffs[pos];
    }
    return {IsoStatus::unknown, std::nullopt};
}

struct OrbitClass {
    Tensor representative;
    std::size_t size_in_box;
};

struct OrbitReport {
    BinaryForm form;
    long entry_bound;
    std::vector<OrbitClass> classes;
    bool budget_limited;  // always true: the census only bounds inequivalence
};

namespace detail {

/// Packed byte key; census entries always fit a signed byte (the box cap
/// keeps bounds tiny).
inline std::string encode_tensor(const Tensor& t) {
    std::string key;
    key.reserve(2 * t.n() * t.n());
    for (const IntMat* m : {&t.a1, &t.a2})
        for (std::size_t i = 0; i < t.n(); ++i)
            for (std::size_t j = 0; j < t.n(); ++j) key.push_back((char)(*m)(i, j).get_si());
    return key;
}

inline Tensor decode_tensor(const std::string& key, std::size_t n) {
    IntMat a1(n, n), a2(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            a1(i, j) = Int((long)(signed char)key[i * n + j]);
            a2(i, j) = Int((long)(signed char)key[n * n + i * n + j]);
        }
    return Tensor(std::move(a1), std::move(a2));
}

inline Tensor tensor_at_box_index(std::size_t index, std::size_t n, long bound) {
    const std::size_t radix = (std::size_t)(2 * bound + 1);
    IntMat a1(n, n), a2(n, n);
    for (std::size_t slot = 0; slot < 2 * n * n; ++slot) {
        long digit = (long)(index % radix) - bound;
        index /= radix;
        (slot < n * n ? a1 : a2)(slot % (n * n) / n, slot % n) = Int(digit);
    }
    return Tensor(std::move(a1), std::move(a2));
}

inline bool within_bound(const Tensor& t, long bound) {
    for (const IntMat* m : {&t.a1, &t.a2})
        for (std::size_t i = 0; i < t.n(); ++i)
            for (std::size_t j = 0; j < t.n(); ++j)
                if ((*m)(i, j) > bound || (*m)(i, j) < -bound) return false;
    return true;
}

/// Two-sided elementary moves: transvections E_ij(±1) acting on either slot
/// and sign pairs (S_i, S_j); every generator satisfies det(g1)*det(g2) = 1.
inline std::vector<Tensor> neighbor_tensors(const Tensor& t) {
    const std::size_t n = t.n();
    std::vector<Tensor> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j)
                for (long s : {1L, -1L}) {
                    Tensor left = t;  // row i += s * row j on both slices
                    Tensor right = t;  // column i += s * column j on both slices
                    for (IntMat* m : {&left.a1, &left.a2})
                        for (std::size_t c = 0; c < n; ++c)
                            (*m)(i, c) += Int(s) * (*m)(j, c);
                    for (IntMat* m : {&right.a1, &right.a2})
                        for (std::size_t rr = 0; rr < n; ++rr)
                            (*m)(rr, i) += Int(s) * (*m)(rr, j);
                    out.push_back(std::move(left));
                    out.push_back(std::move(right));
                }
            Tensor sign = t;  // (S_i, S_j): negate row i and column j
            for (IntMat* m : {&sign.a1, &sign.a2}) {
                for (std::size_t c = 0; c < n; ++c) (*m)(i, c) = -(*m)(i, c);
                for (std::size_t rr = 0; rr < n; ++rr) (*m)(rr, j) = -(*m)(rr, j);
            }
            out.push_back(std::move(sign));
        }
    return out;
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace detail

/// Bounded census of tensors with entries in [-entry_bound, entry_bound] and
/// the given determinant form, partitioned by connectivity under elementary
/// moves of word length up to move_budget (excursions one unit outside the
/// box allowed).  Distinct reported classes may merge under larger budgets.
inline OrbitReport enumerate_orbits(const BinaryForm& f, long entry_bound,
                                    unsigned move_budget, std::size_t max_enum) {
    const std::size_t n = f.degree();
    if (entry_bound < 0 || entry_bound > 100) throw error("entry bound out of range");
    double box_d = 1;
    for (std::size_t i = 0; i < 2 * n * n; ++i) {
        box_d *= (double)(2 * entry_bound + 1);
        if (box_d > (double)max_enum) throw error("enumeration box exceeds the configured cap");
    }
    const std::size_t box = (std::size_t)box_d;

    // box scan, sharded across workers; shard results merged in index order
    std::vector<Tensor> members;
    {
        unsigned workers = std::thread::hardware_concurrency();
        if (workers == 0) workers = 1;
        if ((std::size_t)workers > box) workers = (unsigned)box;
        std::vector<std::vector<Tensor>> found(workers);
        auto scan = [&](unsigned w) {
            std::size_t lo = box * w / workers, hi = box * (w + 1) / workers;
            for (std::size_t idx = lo; idx < hi; ++idx) {
                Tensor t = detail::tensor_at_box_index(idx, n, entry_bound);
                if (det_form_coeffs(t) == f.coeffs()) found[w].push_back(std::move(t));
            }
        };
        if (workers <= 1) {
            scan(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < workers; ++w) pool.emplace_back(scan, w);
            for (auto& t : pool) t.join();
        }
        for (auto& chunk : found)
            for (auto& t : chunk) members.push_back(std::move(t));
    }

    detail::UnionFind uf(members.size());
    if (!members.empty() && move_budget > 0) {
        const long ext_bound = entry_bound + 1;
        // multi-source BFS; visited maps a tensor to the component that reached it
        std::map<std::string, std::size_t> visited;
        std::vector<std::pair<Tensor, std::size_t>> frontier;
        for (std::size_t i = 0; i < members.size(); ++i) {
            visited[detail::encode_tensor(members[i])] = i;
            frontier.emplace_back(members[i], i);
        }
        for (unsigned depth = 0; depth < move_budget && !frontier.empty(); ++depth) {
            std::vector<std::pair<Tensor, std::size_t>> next;
            for (const auto& [t, src] : frontier) {
                for (Tensor& nb : detail::neighbor_tensors(t)) {
                    if (!detail::within_bound(nb, ext_bound)) continue;
                    std::string key = detail::encode_tensor(nb);
                    auto it = visited.find(key);
                    if (it != visited.end()) {
                        uf.unite(src, it->second);
                        continue;
                    }
                    if (visited.size() >= max_enum) continue;  // budget-limited
                    visited.emplace(std::move(key), src);
                    next.emplace_back(std::move(nb), src);
                }
            }
            frontier = std::move(next);
        }
    }

    // deterministic class list: representative = smallest encoding per class
    std::map<std::size_t, std::pair<std::string, std::size_t>> roots;  // root -> (rep, count)
    for (std::size_t i = 0; i < members.size(); ++i) {
        std::size_t r = uf.find(i);
        std::string key = detail::encode_tensor(members[i]);
        auto it = roots.find(r);
        if (it == roots.end())
            roots[r] = {std::move(key), 1};
        else {
            ++it->second.second;
            if (key < it->second.first) it->second.first = std::move(key);
        }
    }
    std::map<std::string, std::size_t> ordered;
    for (auto& [root, rep_count] : roots) ordered[rep_count.first] = rep_count.second;

    OrbitReport report{f, entry_bound, {}, true};
    for (const auto& [key, count] : ordered)
        report.classes.push_back(OrbitClass{detail::decode_tensor(key, n), count});
    return report;
}

}  // namespace binform
