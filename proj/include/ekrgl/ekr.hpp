#pragma once

#include <optional>

#include "ekrgl/igraph.hpp"
#include "ekrgl/spread.hpp"

namespace ekrgl {

// The largest size an intersecting family in GL_n(F_q) can have, with the
// counting identity bound * (q^n - 1) = |GL_n(F_q)| checked on construction.
struct BoundClaim {
    int n = 0;
    unsigned q = 0;
    BigInt bound;       // q^{n(n-1)/2} * prod_{i=1}^{n-1} (q^i - 1)
    BigInt group_order; // |GL_n(F_q)|
    BigInt alpha;       // q^n - 1, the maximum coclique size
};

BoundClaim ekr_bound(int n, unsigned q);

// The canonical extremal intersecting family: the stabilizer of a nonzero
// vector v, optionally translated on the chosen side by an invertible g.
// Postconditions (checked): the result is a clique of size ekr_bound.
Family build_extremal(const GroupParams& params, const VecF& v, const MatF* translate = nullptr,
                      Side side = Side::Right);

enum class VerifyMode { Exhaustive, Certificate };

struct VerifyOptions {
    std::uint64_t max_vertices = 512;     // exhaustive-mode group size ceiling
    bool anchored = true;                 // anchor the exhaustive clique search at the identity
    bool extremal = false;                // enumerate all maximum cliques (exhaustive mode)
    std::uint64_t extremal_cap = 64;      // group size ceiling for that enumeration
    bool run_transitivity = true;         // adjacency-invariance spot check (exhaustive mode)
    std::uint64_t transitivity_samples = 10000; // 0 = force exhaustive triples
    std::uint64_t seed = 17;              // for sampled transitivity checks
};

// Survey of all maximum cliques: how many there are and whether each one is
// exactly a coset { h : a h = b } of a vector stabilizer.
struct ExtremalSurvey {
    std::size_t max_clique_count = 0;
    bool all_stabilizer_cosets = false;
};

struct GlVerification {
    int n = 0;
    unsigned q = 0;
    VerifyMode mode = VerifyMode::Exhaustive;
    bool anchored = false;
    BoundClaim claim;
    Family clique;
    Family coclique;
    AuditReport audit;
    bool clique_meets_bound = false;
    bool coclique_meets_alpha = false;
    // exhaustive mode
    std::optional<std::size_t> searched_max_clique;
    std::optional<std::size_t> searched_max_coclique;
    std::optional<TransitivityResult> transitivity;
    std::optional<ExtremalSurvey> extremal;
    // certificate mode
    std::optional<PartitionCheck> partition;
    std::optional<CocliqueMaximalityReport> maximality;
    bool pass = false;
};

// Makes the theorem checkable at a given (n, q).
//
// Exhaustive mode enumerates the group (refusing above opts.max_vertices),
// computes the exact maximum clique and coclique sizes with witnesses, and
// audits the clique-coclique equality.  Certificate mode never searches:
// it builds the stabilizer clique, runs the spread pipeline (construct,
// partition-verify, normalize, extract) for the coclique, re-enacts the
// packing bound, and audits |C| * |A| = |G| with |C ∩ A| = 1.
//
// A failed check makes the verdict false; only precondition violations
// (caps, malformed input) throw.
GlVerification verify_theorem(const GroupParams& params, VerifyMode mode,
                              const VerifyOptions& opts = {});

// The unique common element of a clique and coclique witnessing equality in
// the clique-coclique bound.  Throws EqualityConditionViolated when the
// product misses |G| or the intersection is not a single element.
MatF intersection_point(const Family& clique, const Family& coclique);

} // namespace ekrgl
