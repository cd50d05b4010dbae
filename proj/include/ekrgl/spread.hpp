#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ekrgl/bigint.hpp"
#include "ekrgl/glgroup.hpp"
#include "ekrgl/matfq.hpp"

namespace ekrgl {

// The matrix of "multiply by m" on GF(q^n) viewed as an n-dimensional vector
// space over its base field, in the power basis 1, x, ..., x^{n-1} of the
// extension: row j holds the base-field coordinates of m * x^j.  Requires a
// field built as an explicit extension (IncompatibleExtension otherwise).
// m -> mult_matrix(m) is a field embedding, so differences of distinct
// images are invertible.
MatF mult_matrix(const FieldPtr& ext, Felt m);

// An n-spread of F_q^l: a family of n-dimensional subspaces such that every
// nonzero vector lies in exactly one member.
struct Spread {
    FieldPtr field; // GF(q)
    int n = 0;
    int l = 0;
    std::vector<Subspace> members;

    std::size_t size() const { return members.size(); }
};

// (q^l - 1) / (q^n - 1); throws NotDivisible when n does not divide l
// (the counting obstruction: no spread exists in that case).
BigInt spread_member_count(int n, int l, unsigned q);

// Field reduction: view F_q^l as GF(q^n)^{l/n} and take the GF(q^n)-lines.
// Members are ordered by the column of their leading pivot, then by the
// ascending key of the defining direction vector; for l = 2n this reads
// W_0, W_m for m ascending, W_infinity.  Throws NotDivisible when n ∤ l.
Spread construct_spread(int n, int l, const FieldPtr& field);

inline constexpr std::uint64_t kPartitionCap = 5'000'000;

// Exhaustive check that every nonzero vector of F_q^l is covered exactly
// once: every member marks its q^n span vectors in a q^l-cell count array,
// which must end up all-ones away from zero.  Throws EnumerationTooLarge
// when q^l exceeds `cap`.  The parallel variant distributes members across
// threads (the count cells are updated atomically) and returns the same
// verdict as the serial reference.
struct PartitionCheck {
    bool ok = false;
    std::uint64_t vectors_checked = 0;
    std::optional<std::uint64_t> first_bad_key;
};

PartitionCheck verify_partition_serial(const Spread& s, std::uint64_t cap = kPartitionCap);
PartitionCheck verify_partition(const Spread& s, std::uint64_t cap = kPartitionCap);

// Allocation-free spread test: members are pairwise trivially intersecting
// n-dimensional subspaces and there are exactly (q^l-1)/(q^n-1) of them,
// which forces the partition property by counting.
bool is_spread_structural(const Spread& s);

// Carries members i0 -> rowspace(I|0) and i1 -> rowspace(0|I) by the right
// action of g = [B_{i0}; B_{i1}]^{-1}, preserving member order.  Requires
// l = 2n and the two members to be complementary (NotComplementary).  The
// image is re-verified to be a spread.
struct NormalizeResult {
    Spread spread;
    MatF g;
};

NormalizeResult normalize_spread(const Spread& s, std::size_t i0, std::size_t i1);

// Reads the q^n - 1 matrices T off the members rowspace(I|T) of a normalized
// 2n-dimensional spread; rowspace(I|0) and rowspace(0|I) are skipped.
// Throws NotNormalized when those two members are absent, MalformedMember
// when a member is not of the form rowspace(I|T) with T invertible or when
// the extracted family is not pairwise non-intersecting (either means the
// input was not a spread).  The result is a coclique of size |s| - 2.
Family extract_coclique(const Spread& s);

// Re-enactment of the packing argument that bounds cocliques: the subspaces
// rowspace(I|T) for T in the family, together with rowspace(I|0) and
// rowspace(0|I), are pairwise trivially intersecting in F_q^{2n}, so
// (|A| + 2)(q^n - 1) nonzero vectors are covered without repetition and
// cannot exceed q^{2n} - 1; hence |A| <= q^n - 1.  Optionally compares
// against the exhaustively computed maximum coclique size when the whole
// group has at most `exhaustive_cap` elements.
struct CocliqueMaximalityReport {
    std::size_t size = 0;
    BigInt bound;                 // q^n - 1
    bool meets_bound = false;
    bool pairwise_trivial = false;
    BigInt covered;               // (|A| + 2)(q^n - 1)
    BigInt capacity;              // q^{2n} - 1
    bool within_capacity = false;
    bool packing_equality = false;
    std::optional<std::size_t> exhaustive_alpha;
};

CocliqueMaximalityReport coclique_maximality_audit(const Family& coclique,
                                                   std::uint64_t exhaustive_cap = 512);

} // namespace ekrgl
