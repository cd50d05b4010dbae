#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "ekrgl/gfq.hpp"

namespace ekrgl {

/// Row vector over GF(q).  Value type, immutable by convention.
struct VecF {
    FieldPtr field;
    std::vector<Felt> e;

    int dim() const { return static_cast<int>(e.size()); }
    bool is_zero() const;
};

/// Dense row-major matrix over GF(q).  Value type with cheap copies; an
/// invertible square instance represents an element of GL_n(F_q).
struct MatF {
    FieldPtr field;
    int rows = 0;
    int cols = 0;
    std::vector<Felt> e;

    Felt at(int r, int c) const { return e[static_cast<size_t>(r) * cols + c]; }
    Felt& at(int r, int c) { return e[static_cast<size_t>(r) * cols + c]; }
    VecF row(int r) const;
};

bool operator==(const VecF& a, const VecF& b);
bool operator==(const MatF& a, const MatF& b);

MatF mat_zero(const FieldPtr& f, int rows, int cols);
MatF mat_identity(const FieldPtr& f, int n);
/// Convenience literal constructor, entries row-major.
MatF mat_from(const FieldPtr& f, std::initializer_list<std::initializer_list<int>> rows);
VecF vec_from(const FieldPtr& f, std::initializer_list<int> entries);

MatF mat_mul(const MatF& a, const MatF& b);
/// The right action of GL_n on row vectors: v |-> v T.
VecF vec_mat(const VecF& v, const MatF& t);
MatF mat_add(const MatF& a, const MatF& b);
MatF mat_sub(const MatF& a, const MatF& b);
MatF mat_transpose(const MatF& a);
/// [a; b] stacked vertically.
MatF stack_rows(const MatF& a, const MatF& b);
/// [a | b] side by side.
MatF stack_cols(const MatF& a, const MatF& b);

struct RrefResult {
    MatF r;                   // reduced row echelon form, r = transform * input
    int rank = 0;
    std::vector<int> pivots;  // pivot columns, ascending
    MatF transform;           // invertible rows x rows
};

RrefResult rref(const MatF& a);
Felt det(const MatF& a);
bool is_invertible(const MatF& a);
MatF inverse(const MatF& a);

/// RREF basis of {x : x a = 0}, possibly with zero rows dropped (the rows of
/// the rref transform that map to zero rows).
struct Subspace;
Subspace left_null_space(const MatF& a);

/// Subspace of F_q^ambient in canonical form: the basis is the unique RREF
/// representative of the row space, with no zero rows.
struct Subspace {
    int ambient = 0;
    int dim = 0;
    MatF basis;
};

Subspace subspace_from_rows(const MatF& a);
Subspace full_space(const FieldPtr& f, int ambient);
bool subspace_eq(const Subspace& p, const Subspace& q);
bool subspace_contains(const Subspace& p, const VecF& v);
int subspace_intersection_dim(const Subspace& p, const Subspace& q);

/// Integer key: base-q digits of the row-major entry list, most significant
/// digit = first entry.  Certificates name matrices by this key.  Throws
/// Error if the key does not fit in 64 bits.
std::uint64_t matrix_key(const MatF& a);
std::uint64_t vector_key(const VecF& v);
MatF mat_from_key(const FieldPtr& f, int rows, int cols, std::uint64_t key);
VecF vec_from_key(const FieldPtr& f, int n, std::uint64_t key);

} // namespace ekrgl
