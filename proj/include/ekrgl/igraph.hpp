#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ekrgl/bigint.hpp"
#include "ekrgl/clique_search.hpp"
#include "ekrgl/glgroup.hpp"

namespace ekrgl {

// T and S intersect when they agree on some nonzero vector, i.e. when
// det(T - S) = 0.  Both arguments must be invertible square matrices over
// the same field (NonGroupElement / FieldMismatch / ShapeMismatch).
// A matrix intersects itself.
bool intersecting(const MatF& T, const MatF& S);

// A nonzero row vector a with aT = aS: the first basis row of the reduced
// left null space of T - S.  Empty when T and S do not intersect.
std::optional<VecF> intersecting_witness(const MatF& T, const MatF& S);

// Pairwise intersecting / pairwise non-intersecting.
bool is_clique(const Family& fam);
bool is_coclique(const Family& fam);

// Outcome of the clique-coclique inequality |C| * |A| <= |G| together with
// the equality condition (|C ∩ A| = 1 when the product meets |G|).
struct AuditReport {
    enum class Equality { NotApplicable, Met, Violated };

    BigInt v;                   // |GL_n(F_q)|
    bool clique_ok = false;     // C is pairwise intersecting
    bool coclique_ok = false;   // A is pairwise non-intersecting
    bool valid = false;         // both of the above
    std::size_t clique_size = 0;
    std::size_t coclique_size = 0;
    BigInt product;             // |C| * |A|
    bool inequality_holds = false;
    Equality equality_case = Equality::NotApplicable;
    std::size_t intersection_size = 0;
    std::vector<MatF> intersection; // C ∩ A, ascending key
};

AuditReport clique_coclique_audit(const Family& clique, const Family& coclique);

// Vertex-count ceiling for materializing the adjacency bitmap.
inline constexpr std::size_t kBitmapCap = std::size_t{1} << 16;

// The intersecting graph on all of GL_n(F_q): vertices in ascending key
// order, adjacency materialized as a bitmap when the group is small enough.
struct IGraph {
    GroupParams params;
    Family vertices;
    AdjacencyBitmap adj;
    bool bitmap_built = false;
};

// Pairwise adjacency scan; the parallel variant assigns whole bitmap rows to
// threads and is bit-identical to the serial reference.
AdjacencyBitmap build_adjacency_serial(const Family& fam);
AdjacencyBitmap build_adjacency(const Family& fam);

IGraph build_igraph(const GroupParams& params, std::uint64_t enum_cap = kEnumerationCap);

// Maximum clique / coclique of the graph as Families.  Search runs in two
// phases: a parallel branch-and-bound fixes the size, then a serial pass
// reconstructs the lexicographically smallest witness of that size, so the
// returned family is independent of thread count.  `anchor_identity`
// restricts the clique search to cliques through the identity (recorded by
// callers, never applied silently); it is sound on vertex-transitive graphs.
Family max_clique(const IGraph& g, bool anchor_identity = false);
Family max_coclique(const IGraph& g);

// Spot-check that right translation preserves adjacency: for triples
// (T, S, g), T ~ S iff Tg ~ Sg.  Exhaustive over all |V|^3 triples when that
// count is at most `samples` or samples == 0; otherwise `samples` seeded
// pseudorandom triples.
struct TransitivityResult {
    bool exhaustive = false;
    std::uint64_t checks = 0;
    bool ok = false;
};

TransitivityResult transitivity_check(const IGraph& g, std::uint64_t samples, std::uint64_t seed);

} // namespace ekrgl
