#pragma once

// Independent reference implementations used to cross-check the library.
// Everything here is written the slow, obvious way on purpose: cofactor
// determinants, schoolbook polynomial arithmetic, brute-force span and
// agreement scans.  Production code must agree with these on small inputs.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "ekrgl/clique_search.hpp"
#include "ekrgl/matfq.hpp"

namespace oracle {

using ekrgl::Felt;
using ekrgl::MatF;
using ekrgl::VecF;

// Determinant by Laplace expansion along the first row.
inline Felt det_cofactor(const MatF& a) {
    const ekrgl::Field& F = *a.field;
    int n = a.rows;
    if (n == 1) return a.at(0, 0);
    Felt total = 0;
    for (int c = 0; c < n; ++c) {
        if (a.at(0, c) == 0) continue;
        MatF minor = ekrgl::mat_zero(a.field, n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int k = 0; k < n; ++k) {
                if (k == c) continue;
                minor.at(r - 1, cc++) = a.at(r, k);
            }
        }
        Felt term = F.mul(a.at(0, c), det_cofactor(minor));
        if (c % 2 == 1) term = F.neg(term);
        total = F.add(total, term);
    }
    return total;
}

// --- schoolbook polynomial arithmetic over Z/p, for checking extension
// --- field tables.  Polynomials are coefficient vectors, low degree first.

inline std::vector<unsigned> poly_mul_p(unsigned p, const std::vector<unsigned>& a,
                                        const std::vector<unsigned>& b) {
    std::vector<unsigned> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    return out;
}

inline std::vector<unsigned> poly_rem_p(unsigned p, std::vector<unsigned> a,
                                        const std::vector<unsigned>& m) {
    std::size_t d = m.size() - 1; // m monic of degree d
    while (a.size() > d) {
        unsigned lead = a.back();
        std::size_t shift = a.size() - 1 - d;
        if (lead != 0)
            for (std::size_t i = 0; i <= d; ++i)
                a[shift + i] = (a[shift + i] + lead * (p - m[i] % p)) % p;
        a.pop_back();
    }
    a.resize(d, 0);
    return a;
}

// Multiply two GF(p^d) elements given as base-p digit strings of length d.
inline std::vector<unsigned> gf_mul_digits(unsigned p, const std::vector<unsigned>& modulus,
                                           std::vector<unsigned> a, std::vector<unsigned> b) {
    if (a.empty()) a.push_back(0);
    if (b.empty()) b.push_back(0);
    return poly_rem_p(p, poly_mul_p(p, a, b), modulus);
}

// --- brute-force agreement scan: T and S agree on a nonzero vector.
// --- This is the alternative definition of "intersecting" and must match
// --- the det(T - S) = 0 test everywhere.

inline bool agree_scan(const MatF& T, const MatF& S) {
    int n = T.rows;
    unsigned q = T.field->size();
    std::uint64_t count = 1;
    for (int i = 0; i < n; ++i) count *= q;
    for (std::uint64_t key = 1; key < count; ++key) {
        VecF v = ekrgl::vec_from_key(T.field, n, key);
        if (ekrgl::vec_mat(v, T) == ekrgl::vec_mat(v, S)) return true;
    }
    return false;
}

// All vector keys in the row space, by enumerating every coefficient tuple.
inline std::set<std::uint64_t> span_keys(const MatF& basis) {
    const ekrgl::Field& F = *basis.field;
    unsigned q = F.size();
    int rows = basis.rows, cols = basis.cols;
    std::set<std::uint64_t> out;
    std::uint64_t combos = 1;
    for (int i = 0; i < rows; ++i) combos *= q;
    for (std::uint64_t c = 0; c < combos; ++c) {
        VecF acc;
        acc.field = basis.field;
        acc.e.assign(static_cast<std::size_t>(cols), 0);
        std::uint64_t rest = c;
        for (int r = 0; r < rows; ++r) {
            Felt coef = static_cast<Felt>(rest % q);
            rest /= q;
            for (int k = 0; k < cols; ++k)
                acc.e[k] = F.add(acc.e[k], F.mul(coef, basis.at(r, k)));
        }
        out.insert(ekrgl::vector_key(acc));
    }
    return out;
}

inline int rank_by_span(const MatF& a) {
    std::size_t size = span_keys(a).size();
    unsigned q = a.field->size();
    int r = 0;
    std::size_t pw = 1;
    while (pw < size) {
        pw *= q;
        ++r;
    }
    return r;
}

// Erdos-Renyi bitmap for fuzzing the clique engine.
inline ekrgl::AdjacencyBitmap random_graph(int n, double p, std::mt19937& rng) {
    ekrgl::AdjacencyBitmap g(n);
    std::bernoulli_distribution coin(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) g.set_pair(i, j);
    return g;
}

inline MatF random_matrix(const ekrgl::FieldPtr& f, int n, std::mt19937& rng) {
    std::uniform_int_distribution<unsigned> pick(0, f->size() - 1);
    MatF m = ekrgl::mat_zero(f, n, n);
    for (Felt& x : m.e) x = static_cast<Felt>(pick(rng));
    return m;
}

inline MatF random_invertible(const ekrgl::FieldPtr& f, int n, std::mt19937& rng) {
    for (;;) {
        MatF m = random_matrix(f, n, rng);
        if (ekrgl::is_invertible(m)) return m;
    }
}

} // namespace oracle
