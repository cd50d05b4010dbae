#pragma once

#include <cstdint>
#include <vector>

#include "ekrgl/bigint.hpp"
#include "ekrgl/matfq.hpp"

namespace ekrgl {

// Parameters of a general linear group GL_n(F_q).
struct GroupParams {
    int n = 0;
    FieldPtr field;
};

bool operator==(const GroupParams& a, const GroupParams& b);

// A finite set of invertible n x n matrices over a common field, stored in
// ascending integer-key order with duplicates removed.  A Family is the
// common currency between the group, graph and verification layers: cliques,
// cocliques, stabilizers and full groups are all Families.
struct Family {
    GroupParams params;
    std::vector<MatF> members; // ascending matrix_key, unique

    std::size_t size() const { return members.size(); }
    bool empty() const { return members.empty(); }
    const MatF& operator[](std::size_t i) const { return members[i]; }

    std::vector<std::uint64_t> keys() const;
    // Index of the member with the given key, or -1 if absent (binary search).
    std::ptrdiff_t index_of_key(std::uint64_t key) const;
};

// Canonicalizes `members` into a Family: validates that every matrix is an
// invertible n x n matrix over params.field (NonGroupElement otherwise),
// sorts by integer key and removes duplicates.
Family make_family(const GroupParams& params, std::vector<MatF> members);

// |GL_n(F_q)| = prod_{i=0}^{n-1} (q^n - q^i); exact at any size.
BigInt gl_order(int n, unsigned q);

// Default ceiling on q^(n^2), the ambient count of n x n matrices, above
// which enumeration refuses to run.
inline constexpr std::uint64_t kEnumerationCap = 1'000'000'000ULL;

// All of GL_n(F_q) in ascending matrix-key order.  Throws EnumerationTooLarge
// when q^(n^2) exceeds `cap`.  The parallel entry point partitions the work
// by first row and is key-for-key identical to the serial reference.
Family enumerate_gl_serial(const GroupParams& params, std::uint64_t cap = kEnumerationCap);
Family enumerate_gl(const GroupParams& params, std::uint64_t cap = kEnumerationCap);

// { T in GL : v T = v } for a nonzero row vector v (ZeroVector otherwise).
Family stabilizer(const GroupParams& params, const VecF& v);

enum class Side { Left, Right };

// Translate of a family: { g T } or { T g }.  The translate must be
// invertible (SingularTranslate).
Family coset(const Family& fam, const MatF& g, Side side);

} // namespace ekrgl
