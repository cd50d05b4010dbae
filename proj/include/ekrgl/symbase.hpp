#pragma once

#include <optional>
#include <vector>

#include "ekrgl/bigint.hpp"
#include "ekrgl/clique_search.hpp"

namespace ekrgl {

// A permutation of {0, ..., n-1} by its image list.
struct Perm {
    std::vector<int> images;

    int n() const { return static_cast<int>(images.size()); }
    bool operator==(const Perm& o) const { return images == o.images; }
};

// f and g agree at some point; equivalently f ∘ g^{-1} is not a derangement.
bool perm_intersecting(const Perm& f, const Perm& g);

// (n - 1)!, the largest size of an intersecting family in S_n.
BigInt deza_frankl_bound(int n);

// All of S_n in lexicographic order of image lists.
std::vector<Perm> enumerate_sn(int n);

// The agreement graph: permutations adjacent when they agree somewhere.
// Feeds the same clique engine the matrix graphs use.
AdjacencyBitmap agreement_graph(const std::vector<Perm>& perms);

struct SnVerification {
    int n = 0;
    BigInt bound;                  // (n-1)!
    std::size_t max_clique_size = 0;
    bool bound_met = false;
    bool extremal_checked = false; // the n <= 4 all-maximum-cliques pass ran
    std::optional<std::size_t> max_clique_count;
    std::optional<bool> extremal_all_cosets; // every maximum clique is {f : f(x) = y}
    bool pass = false;
};

// Exhaustive confirmation of the (n-1)! bound for n <= 5 (SearchTooLarge
// beyond); with check_extremal and n <= 4, additionally enumerates all
// maximum cliques and checks each is a point-map coset {f : f(x) = y}.
SnVerification verify_sn(int n, bool check_extremal);

} // namespace ekrgl
