#include "ekrgl/symbase.hpp"

#include <algorithm>
#include <numeric>

#include "ekrgl/errors.hpp"

namespace ekrgl {

bool perm_intersecting(const Perm& f, const Perm& g) {
    if (f.n() != g.n()) throw SizeMismatch("permutations act on different point counts");
    for (int i = 0; i < f.n(); ++i)
        if (f.images[static_cast<std::size_t>(i)] == g.images[static_cast<std::size_t>(i)])
            return true;
    return false;
}

BigInt deza_frankl_bound(int n) {
    if (n < 1) throw Error("deza_frankl_bound requires n >= 1");
    BigInt r = 1;
    for (int i = 2; i < n; ++i) r *= i;
    return r;
}

std::vector<Perm> enumerate_sn(int n) {
    if (n < 1) throw Error("enumerate_sn requires n >= 1");
    if (n > 10) throw EnumerationTooLarge("n! too large to enumerate");
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 0);
    std::vector<Perm> out;
    do {
        out.push_back(Perm{images});
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

AdjacencyBitmap agreement_graph(const std::vector<Perm>& perms) {
    int m = static_cast<int>(perms.size());
    AdjacencyBitmap adj(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (perm_intersecting(perms[static_cast<std::size_t>(i)],
                                  perms[static_cast<std::size_t>(j)]))
                adj.set_pair(i, j);
    return adj;
}

SnVerification verify_sn(int n, bool check_extremal) {
    if (n < 1) throw Error("verify_sn requires n >= 1");
    if (n > 5) throw SearchTooLarge("exhaustive S_n verification is limited to n <= 5");

    SnVerification out;
    out.n = n;
    out.bound = deza_frankl_bound(n);

    std::vector<Perm> perms = enumerate_sn(n);
    AdjacencyBitmap adj = agreement_graph(perms);
    int size = max_clique_size(adj);
    out.max_clique_size = static_cast<std::size_t>(size);
    out.bound_met = BigInt(out.max_clique_size) == out.bound;
    out.pass = out.bound_met;

    if (check_extremal && n <= 4) {
        out.extremal_checked = true;
        std::vector<std::vector<int>> cliques = all_maximum_cliques(adj, size);
        out.max_clique_count = cliques.size();
        bool all_cosets = true;
        for (const std::vector<int>& idx : cliques) {
            // a common (x, y) with f(x) = y across the clique, if any
            bool found = false;
            for (int x = 0; x < n && !found; ++x) {
                int y = perms[static_cast<std::size_t>(idx[0])].images[static_cast<std::size_t>(x)];
                bool common = true;
                for (int i : idx)
                    if (perms[static_cast<std::size_t>(i)].images[static_cast<std::size_t>(x)] != y) {
                        common = false;
                        break;
                    }
                found = common;
            }
            // the full coset {f : f(x) = y} has (n-1)! elements, so agreeing
            // on a point plus maximum size pins the clique to the whole coset
            if (!found || BigInt(idx.size()) != out.bound) {
                all_cosets = false;
                break;
            }
        }
        out.extremal_all_cosets = all_cosets;
        out.pass = out.pass && all_cosets;
    }
    return out;
}

} // namespace ekrgl
