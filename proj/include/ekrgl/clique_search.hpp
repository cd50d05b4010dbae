#pragma once

#include <cstdint>
#include <vector>

namespace ekrgl {

// Symmetric adjacency matrix packed into 64-bit words, one row of words per
// vertex.  The diagonal is always clear.
class AdjacencyBitmap {
public:
    AdjacencyBitmap() = default;
    explicit AdjacencyBitmap(int n);

    int size() const { return n_; }
    int words_per_row() const { return wpr_; }

    bool test(int i, int j) const {
        return (row(i)[j >> 6] >> (j & 63)) & 1;
    }
    void set_pair(int i, int j); // sets both (i,j) and (j,i); ignores i == j

    const std::uint64_t* row(int i) const { return bits_.data() + static_cast<std::size_t>(i) * wpr_; }
    std::uint64_t* row(int i) { return bits_.data() + static_cast<std::size_t>(i) * wpr_; }

    std::size_t edge_count() const;
    AdjacencyBitmap complement() const;

    bool operator==(const AdjacencyBitmap& o) const {
        return n_ == o.n_ && bits_ == o.bits_;
    }

private:
    int n_ = 0;
    int wpr_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Exact maximum clique size, Tomita-style branch and bound with a greedy
// colouring bound.  `anchor` >= 0 restricts the search to cliques through
// that vertex (its closed neighbourhood); for vertex-transitive graphs this
// does not change the answer.  The parallel entry point splits the root
// branches across OpenMP threads against a shared best and returns the same
// number as the serial reference.
int max_clique_size_serial(const AdjacencyBitmap& g, int anchor = -1);
int max_clique_size(const AdjacencyBitmap& g, int anchor = -1);

// Unpruned exhaustive search; exponential, test oracle for small graphs.
int max_clique_size_unpruned(const AdjacencyBitmap& g);

// The lexicographically smallest clique of exactly `target` vertices, as a
// sorted index list (first in ascending-index DFS order), or empty if none
// exists.  With an anchor, the smallest such clique containing the anchor.
// Always serial, so witnesses never depend on thread count.
std::vector<int> lexmin_clique_of_size(const AdjacencyBitmap& g, int target, int anchor = -1);

// Every clique of maximum size, each sorted ascending, in lexicographic
// order.  `max_size` must be the (known) maximum clique size.  Throws
// SearchTooLarge if more than `limit` cliques would be produced.
std::vector<std::vector<int>> all_maximum_cliques(const AdjacencyBitmap& g, int max_size,
                                                  std::size_t limit = 1u << 20);

} // namespace ekrgl
