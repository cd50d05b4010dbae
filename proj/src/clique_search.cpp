#include "ekrgl/clique_search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <deque>

#include "ekrgl/errors.hpp"

namespace ekrgl {

AdjacencyBitmap::AdjacencyBitmap(int n) : n_(n), wpr_((n + 63) / 64) {
    if (n < 0) throw Error("adjacency bitmap size must be nonnegative");
    bits_.assign(static_cast<std::size_t>(n_) * wpr_, 0);
}

void AdjacencyBitmap::set_pair(int i, int j) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw Error("adjacency index out of range");
    if (i == j) return;
    row(i)[j >> 6] |= std::uint64_t{1} << (j & 63);
    row(j)[i >> 6] |= std::uint64_t{1} << (i & 63);
}

std::size_t AdjacencyBitmap::edge_count() const {
    std::size_t c = 0;
    for (std::uint64_t w : bits_) c += static_cast<std::size_t>(std::popcount(w));
    return c / 2;
}

AdjacencyBitmap AdjacencyBitmap::complement() const {
    AdjacencyBitmap c(n_);
    for (int i = 0; i < n_; ++i) {
        const std::uint64_t* src = row(i);
        std::uint64_t* dst = c.row(i);
        for (int k = 0; k < wpr_; ++k) dst[k] = ~src[k];
        // mask ghost bits past n_ and clear the diagonal
        int tail = n_ & 63;
        if (tail) dst[wpr_ - 1] &= (std::uint64_t{1} << tail) - 1;
        dst[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
    return c;
}

namespace {

using Words = std::vector<std::uint64_t>;

void and_rows(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out, int w) {
    for (int k = 0; k < w; ++k) out[k] = a[k] & b[k];
}

// out = a & b & { v+1, v+2, ... }
void and_rows_above(const std::uint64_t* a, const std::uint64_t* b, int v, std::uint64_t* out, int w) {
    int kv = v >> 6;
    for (int k = 0; k < kv; ++k) out[k] = 0;
    std::uint64_t keep = ~std::uint64_t{0} << (v & 63);
    keep &= ~(std::uint64_t{1} << (v & 63));
    out[kv] = a[kv] & b[kv] & keep;
    for (int k = kv + 1; k < w; ++k) out[k] = a[k] & b[k];
}

bool rows_intersect(const std::uint64_t* a, const std::uint64_t* b, int w) {
    for (int k = 0; k < w; ++k)
        if (a[k] & b[k]) return true;
    return false;
}

int count_bits(const std::uint64_t* a, int w) {
    int c = 0;
    for (int k = 0; k < w; ++k) c += std::popcount(a[k]);
    return c;
}

bool is_empty(const std::uint64_t* a, int w) {
    for (int k = 0; k < w; ++k)
        if (a[k]) return false;
    return true;
}

Words all_vertices_mask(int n, int w) {
    Words m(static_cast<std::size_t>(w), 0);
    for (int k = 0; k < w; ++k) {
        int lo = k * 64;
        if (lo + 64 <= n) m[k] = ~std::uint64_t{0};
        else if (lo < n) m[k] = (std::uint64_t{1} << (n - lo)) - 1;
    }
    return m;
}

void atomic_max(std::atomic<int>& a, int v) {
    int cur = a.load(std::memory_order_relaxed);
    while (cur < v && !a.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
    }
}

// Greedy colouring of the vertices in P: every vertex goes into the first
// colour class containing none of its neighbours.  The number of classes
// bounds the largest clique inside P from above.  `order`/`colors` come back
// sorted by colour (ascending), which is what the branch-and-bound wants.
class ColorSorter {
public:
    ColorSorter(const AdjacencyBitmap& g) : g_(g), w_(g.words_per_row()) {}

    void sort(const Words& P, std::vector<int>& order, std::vector<int>& colors) {
        int used = color_classes(P);
        order.clear();
        colors.clear();
        for (int k = 0; k < used; ++k) {
            for (int v : class_verts_[k]) {
                order.push_back(v);
                colors.push_back(k + 1);
            }
        }
        release(used);
    }

    int count(const Words& P) {
        int used = color_classes(P);
        release(used);
        return used;
    }

private:
    int color_classes(const Words& P) {
        int used = 0;
        for (int k = 0; k < w_; ++k) {
            std::uint64_t word = P[k];
            while (word) {
                int v = k * 64 + std::countr_zero(word);
                word &= word - 1;
                int cls = 0;
                while (cls < used && rows_intersect(g_.row(v), class_masks_[cls].data(), w_)) ++cls;
                if (cls == used) {
                    if (static_cast<std::size_t>(used) == class_masks_.size()) {
                        class_masks_.emplace_back(static_cast<std::size_t>(w_), 0);
                        class_verts_.emplace_back();
                    }
                    ++used;
                }
                class_masks_[cls][v >> 6] |= std::uint64_t{1} << (v & 63);
                class_verts_[cls].push_back(v);
            }
        }
        return used;
    }

    void release(int used) {
        for (int k = 0; k < used; ++k) {
            for (std::uint64_t& wd : class_masks_[k]) wd = 0;
            class_verts_[k].clear();
        }
    }

    const AdjacencyBitmap& g_;
    int w_;
    std::vector<Words> class_masks_;
    std::vector<std::vector<int>> class_verts_;
};

// Branch and bound for the maximum clique size only (no witness), so the
// shared best may be improved by any thread in any order without affecting
// the result.
class SizeSearch {
public:
    SizeSearch(const AdjacencyBitmap& g, std::atomic<int>& best)
        : g_(g), best_(best), w_(g.words_per_row()), sorter_(g) {}

    // Consumes P.
    void expand(Words& P, int rsize, int depth) {
        if (is_empty(P.data(), w_)) {
            atomic_max(best_, rsize);
            return;
        }
        if (static_cast<std::size_t>(depth) == levels_.size()) levels_.emplace_back();
        Level& L = levels_[depth];
        sorter_.sort(P, L.order, L.colors);
        L.child.assign(static_cast<std::size_t>(w_), 0);
        for (int idx = static_cast<int>(L.order.size()) - 1; idx >= 0; --idx) {
            if (rsize + L.colors[idx] <= best_.load(std::memory_order_relaxed)) return;
            int v = L.order[idx];
            and_rows(P.data(), g_.row(v), L.child.data(), w_);
            expand(L.child, rsize + 1, depth + 1);
            P[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        }
    }

private:
    struct Level {
        Words child;
        std::vector<int> order;
        std::vector<int> colors;
    };

    const AdjacencyBitmap& g_;
    std::atomic<int>& best_;
    int w_;
    ColorSorter sorter_;
    // One scratch level per recursion depth.  A deque, not a vector: expand
    // holds references across the recursive call (the caller's P aliases the
    // previous level's child), so growth must not relocate existing levels.
    std::deque<Level> levels_;
};

struct Root {
    Words P;
    int base = 0;
};

Root root_candidates(const AdjacencyBitmap& g, int anchor) {
    Root r;
    int w = g.words_per_row();
    if (anchor >= 0) {
        if (anchor >= g.size()) throw Error("anchor vertex out of range");
        r.P.assign(g.row(anchor), g.row(anchor) + w);
        r.base = 1;
    } else {
        r.P = all_vertices_mask(g.size(), w);
        r.base = 0;
    }
    return r;
}

} // namespace

int max_clique_size_serial(const AdjacencyBitmap& g, int anchor) {
    if (g.size() == 0) return 0;
    Root root = root_candidates(g, anchor);
    std::atomic<int> best{root.base};
    SizeSearch search(g, best);
    search.expand(root.P, root.base, 0);
    return best.load();
}

int max_clique_size(const AdjacencyBitmap& g, int anchor) {
    if (g.size() == 0) return 0;
    int w = g.words_per_row();
    Root root = root_candidates(g, anchor);
    std::atomic<int> best{root.base};

    std::vector<int> order, colors;
    ColorSorter(g).sort(root.P, order, colors);
    int m = static_cast<int>(order.size());

    // prefix_masks[idx] = the vertices preceding order[idx] in colour order;
    // branch idx then searches N(order[idx]) within that prefix, which is
    // exactly the candidate set the serial loop sees when it reaches idx.
    std::vector<Words> prefix_masks(static_cast<std::size_t>(m));
    Words running(static_cast<std::size_t>(w), 0);
    for (int idx = 0; idx < m; ++idx) {
        prefix_masks[idx] = running;
        running[order[idx] >> 6] |= std::uint64_t{1} << (order[idx] & 63);
    }

#ifdef _OPENMP
#pragma omp parallel
#endif
    {
        SizeSearch search(g, best);
        Words branch(static_cast<std::size_t>(w), 0);
#ifdef _OPENMP
#pragma omp for schedule(dynamic)
#endif
        for (int t = 0; t < m; ++t) {
            int idx = m - 1 - t; // deepest candidate sets first
            if (root.base + colors[idx] <= best.load(std::memory_order_relaxed)) continue;
            int v = order[idx];
            and_rows(prefix_masks[idx].data(), g.row(v), branch.data(), w);
            search.expand(branch, root.base + 1, 0);
        }
    }
    return best.load();
}

namespace {

int unpruned_dfs(const AdjacencyBitmap& g, const Words& P, int rsize) {
    int w = g.words_per_row();
    int best = rsize;
    for (int k = 0; k < w; ++k) {
        std::uint64_t word = P[k];
        while (word) {
            int v = k * 64 + std::countr_zero(word);
            word &= word - 1;
            Words child(static_cast<std::size_t>(w));
            and_rows_above(P.data(), g.row(v), v, child.data(), w);
            int got = unpruned_dfs(g, child, rsize + 1);
            if (got > best) best = got;
        }
    }
    return best;
}

} // namespace

int max_clique_size_unpruned(const AdjacencyBitmap& g) {
    if (g.size() == 0) return 0;
    return unpruned_dfs(g, all_vertices_mask(g.size(), g.words_per_row()), 0);
}

namespace {

class LexminSearch {
public:
    LexminSearch(const AdjacencyBitmap& g) : g_(g), w_(g.words_per_row()), sorter_(g) {}

    bool dfs(const Words& P, int need, std::vector<int>& out) {
        if (need == 0) return true;
        if (count_bits(P.data(), w_) < need) return false;
        if (need > 1 && sorter_.count(P) < need) return false;
        Words child(static_cast<std::size_t>(w_));
        for (int k = 0; k < w_; ++k) {
            std::uint64_t word = P[k];
            while (word) {
                int v = k * 64 + std::countr_zero(word);
                word &= word - 1;
                and_rows_above(P.data(), g_.row(v), v, child.data(), w_);
                out.push_back(v);
                if (dfs(child, need - 1, out)) return true;
                out.pop_back();
            }
        }
        return false;
    }

private:
    const AdjacencyBitmap& g_;
    int w_;
    ColorSorter sorter_;
};

} // namespace

std::vector<int> lexmin_clique_of_size(const AdjacencyBitmap& g, int target, int anchor) {
    if (target < 0) throw Error("clique size target must be nonnegative");
    if (target == 0) return {};
    std::vector<int> out;
    Words P;
    int need = target;
    if (anchor >= 0) {
        if (anchor >= g.size()) throw Error("anchor vertex out of range");
        out.push_back(anchor);
        P.assign(g.row(anchor), g.row(anchor) + g.words_per_row());
        need = target - 1;
    } else {
        P = all_vertices_mask(g.size(), g.words_per_row());
    }
    LexminSearch search(g);
    if (!search.dfs(P, need, out)) return {};
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

class EnumerateSearch {
public:
    EnumerateSearch(const AdjacencyBitmap& g, std::size_t limit)
        : g_(g), w_(g.words_per_row()), limit_(limit), sorter_(g) {}

    void dfs(const Words& P, int need, std::vector<int>& R, std::vector<std::vector<int>>& out) {
        if (need == 0) {
            if (out.size() >= limit_) throw SearchTooLarge("maximum-clique enumeration exceeded its limit");
            out.push_back(R);
            return;
        }
        if (count_bits(P.data(), w_) < need) return;
        if (need > 1 && sorter_.count(P) < need) return;
        Words child(static_cast<std::size_t>(w_));
        for (int k = 0; k < w_; ++k) {
            std::uint64_t word = P[k];
            while (word) {
                int v = k * 64 + std::countr_zero(word);
                word &= word - 1;
                and_rows_above(P.data(), g_.row(v), v, child.data(), w_);
                R.push_back(v);
                dfs(child, need - 1, R, out);
                R.pop_back();
            }
        }
    }

private:
    const AdjacencyBitmap& g_;
    int w_;
    std::size_t limit_;
    ColorSorter sorter_;
};

} // namespace

std::vector<std::vector<int>> all_maximum_cliques(const AdjacencyBitmap& g, int max_size, std::size_t limit) {
    if (max_size <= 0) return {};
    std::vector<std::vector<int>> out;
    std::vector<int> R;
    EnumerateSearch search(g, limit);
    search.dfs(all_vertices_mask(g.size(), g.words_per_row()), max_size, R, out);
    return out;
}

} // namespace ekrgl
