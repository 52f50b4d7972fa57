#pragma once
// Independent brute-force reference computations used by the tests. They
// avoid the library's elimination code on purpose.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "eacode/gf.hpp"
#include "eacode/linalg.hpp"

namespace oracle {

using eacode::Elem;
using eacode::Field;
using eacode::Matrix;

/// Multiplicative inverse by scanning every element.
inline Elem brute_inv(const Field& f, Elem a) {
    for (Elem x = 1; x < f.q(); ++x)
        if (f.mul(a, x) == 1) return x;
    return 0;
}

/// Polynomial product over F_p, coefficients low-to-high, no reduction.
inline std::vector<std::uint32_t> poly_mul(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b, std::uint32_t p) {
    std::vector<std::uint32_t> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return c;
}

/// Every monic polynomial of degree d over F_p.
inline std::vector<std::vector<std::uint32_t>> monic_polys(std::uint32_t p, unsigned d) {
    std::vector<std::vector<std::uint32_t>> out;
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t n = 0; n < count; ++n) {
        std::vector<std::uint32_t> poly(d + 1, 0);
        std::uint64_t t = n;
        for (unsigned i = 0; i < d; ++i) {
            poly[i] = static_cast<std::uint32_t>(t % p);
            t /= p;
        }
        poly[d] = 1;
        out.push_back(poly);
    }
    return out;
}

/// Irreducible iff it is not a product of two monic factors of positive degree.
inline bool brute_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
    unsigned m = static_cast<unsigned>(poly.size() - 1);
    for (unsigned d = 1; d <= m / 2; ++d)
        for (auto& a : monic_polys(p, d))
            for (auto& b : monic_polys(p, m - d))
                if (poly_mul(a, b, p) == poly) return false;
    return true;
}

/// Determinant by permutation expansion. Small matrices only.
inline Elem brute_det(const Matrix& m) {
    const Field& f = m.field();
    std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Elem det = 0;
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Elem term = 1;
        for (std::size_t i = 0; i < n; ++i) term = f.mul(term, m(i, perm[i]));
        det = inversions % 2 ? f.sub(det, term) : f.add(det, term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

/// Enumerate every vector of F_q^n (q^n small).
template <typename Fn>
void for_each_vector(const Field& f, std::size_t n, Fn&& fn) {
    std::vector<Elem> v(n, 0);
    while (true) {
        fn(v);
        std::size_t i = 0;
        while (i < n && ++v[i] == f.q()) v[i++] = 0;
        if (i == n) return;
    }
}

/// All elements of the span of the rows of m, sorted.
inline std::vector<std::vector<Elem>> brute_span(const Matrix& m) {
    std::vector<std::vector<Elem>> out;
    for_each_vector(m.field(), m.rows(), [&](const std::vector<Elem>& c) {
        std::vector<Elem> v(m.cols(), 0);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) v[j] = m.field().add(v[j], m.field().mul(c[i], m(i, j)));
        out.push_back(v);
    });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// log_q of the span size, i.e. the rank, counted by enumeration.
inline std::size_t brute_rank(const Matrix& m) {
    std::size_t size = brute_span(m).size(), r = 0;
    while (size > 1) {
        size /= m.field().q();
        ++r;
    }
    return r;
}

/// Enumerates the support rowspace(gen) + offset and tests that the labels on
/// r are uniform, equal to the labels on qhat, and independent of every
/// other coordinate (support = {(a, a)} x residual).
inline bool brute_factorizes(const Matrix& gen, const std::vector<Elem>& offset, const std::vector<std::size_t>& r,
                             const std::vector<std::size_t>& qhat) {
    const Field& f = gen.field();
    std::vector<bool> special(gen.cols(), false);
    for (auto i : r) special[i] = true;
    for (auto i : qhat) special[i] = true;
    std::map<std::vector<Elem>, std::set<std::vector<Elem>>> residual_by_label;
    for (auto v : brute_span(gen)) {
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = f.add(v[j], offset[j]);
        std::vector<Elem> a, b, rest;
        for (auto i : r) a.push_back(v[i]);
        for (auto i : qhat) b.push_back(v[i]);
        if (a != b) return false;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!special[j]) rest.push_back(v[j]);
        residual_by_label[a].insert(rest);
    }
    std::size_t labels = 1;
    for (std::size_t i = 0; i < r.size(); ++i) labels *= f.q();
    if (residual_by_label.size() != labels) return false;
    for (auto& [a, res] : residual_by_label)
        if (res != residual_by_label.begin()->second) return false;
    return true;
}

}  // namespace oracle
