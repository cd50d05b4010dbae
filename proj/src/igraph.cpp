#include "ekrgl/igraph.hpp"

#include <algorithm>
#include <random>

#include "ekrgl/errors.hpp"

namespace ekrgl {

namespace {

void require_group_pair(const MatF& T, const MatF& S) {
    if (!T.field || !S.field || !T.field->same_as(*S.field))
        throw FieldMismatch("matrices live over different fields");
    if (T.rows != T.cols || S.rows != S.cols) throw NotSquare("group elements must be square");
    if (T.rows != S.rows) throw ShapeMismatch("matrices have different shapes");
    if (!is_invertible(T) || !is_invertible(S))
        throw NonGroupElement("intersecting is defined on invertible matrices");
}

// det(T - S) == 0, Gaussian elimination on a caller-owned scratch buffer so
// pair scans stay allocation-free.
bool singular_difference(const MatF& T, const MatF& S, std::vector<Felt>& scratch) {
    const Field& F = *T.field;
    int n = T.rows;
    scratch.resize(static_cast<std::size_t>(n) * n);
    for (std::size_t i = 0; i < scratch.size(); ++i) scratch[i] = F.sub(T.e[i], S.e[i]);
    auto at = [&](int r, int c) -> Felt& { return scratch[static_cast<std::size_t>(r) * n + c]; };
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (at(r, col) != 0) { piv = r; break; }
        if (piv < 0) return true;
        if (piv != col)
            for (int c = col; c < n; ++c) std::swap(at(piv, c), at(col, c));
        Felt inv = F.inv(at(col, col));
        for (int r = col + 1; r < n; ++r) {
            Felt f = at(r, col);
            if (f == 0) continue;
            Felt scale = F.mul(f, inv);
            for (int c = col; c < n; ++c)
                at(r, c) = F.sub(at(r, c), F.mul(scale, at(col, c)));
        }
    }
    return false;
}

} // namespace

bool intersecting(const MatF& T, const MatF& S) {
    require_group_pair(T, S);
    std::vector<Felt> scratch;
    return singular_difference(T, S, scratch);
}

std::optional<VecF> intersecting_witness(const MatF& T, const MatF& S) {
    require_group_pair(T, S);
    Subspace ns = left_null_space(mat_sub(T, S));
    if (ns.dim == 0) return std::nullopt;
    VecF a;
    a.field = T.field;
    a.e.assign(ns.basis.e.begin(), ns.basis.e.begin() + T.rows);
    return a;
}

namespace {

bool pairwise_scan(const Family& fam, bool want_singular) {
    std::vector<Felt> scratch;
    for (std::size_t i = 0; i < fam.size(); ++i)
        for (std::size_t j = i + 1; j < fam.size(); ++j)
            if (singular_difference(fam[i], fam[j], scratch) != want_singular) return false;
    return true;
}

} // namespace

bool is_clique(const Family& fam) { return pairwise_scan(fam, true); }
bool is_coclique(const Family& fam) { return pairwise_scan(fam, false); }

AuditReport clique_coclique_audit(const Family& clique, const Family& coclique) {
    if (clique.empty() || coclique.empty())
        throw Error("clique-coclique audit requires nonempty families");
    if (!clique.params.field->same_as(*coclique.params.field))
        throw FieldMismatch("clique and coclique live over different fields");
    if (clique.params.n != coclique.params.n)
        throw ShapeMismatch("clique and coclique have different degrees");

    AuditReport rep;
    rep.v = gl_order(clique.params.n, static_cast<unsigned>(clique.params.field->size()));
    rep.clique_ok = is_clique(clique);
    rep.coclique_ok = is_coclique(coclique);
    rep.valid = rep.clique_ok && rep.coclique_ok;
    rep.clique_size = clique.size();
    rep.coclique_size = coclique.size();
    rep.product = BigInt(clique.size()) * BigInt(coclique.size());
    rep.inequality_holds = rep.product <= rep.v;

    std::vector<std::uint64_t> ck = clique.keys();
    for (std::size_t i = 0; i < coclique.size(); ++i) {
        std::uint64_t key = matrix_key(coclique[i]);
        if (std::binary_search(ck.begin(), ck.end(), key)) {
            std::ptrdiff_t idx = clique.index_of_key(key);
            rep.intersection.push_back(clique[static_cast<std::size_t>(idx)]);
        }
    }
    rep.intersection_size = rep.intersection.size();

    if (rep.product == rep.v)
        rep.equality_case = rep.intersection_size == 1 ? AuditReport::Equality::Met
                                                       : AuditReport::Equality::Violated;
    return rep;
}

AdjacencyBitmap build_adjacency_serial(const Family& fam) {
    int n = static_cast<int>(fam.size());
    AdjacencyBitmap adj(n);
    std::vector<Felt> scratch;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (singular_difference(fam[i], fam[j], scratch)) adj.set_pair(i, j);
    return adj;
}

AdjacencyBitmap build_adjacency(const Family& fam) {
    int n = static_cast<int>(fam.size());
    AdjacencyBitmap adj(n);
    // Each thread owns whole rows, so writes never touch the same word and
    // the result is bit-identical to the serial scan.
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (int i = 0; i < n; ++i) {
        std::vector<Felt> scratch;
        std::uint64_t* row = adj.row(i);
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            if (singular_difference(fam[i], fam[j], scratch))
                row[j >> 6] |= std::uint64_t{1} << (j & 63);
        }
    }
    return adj;
}

IGraph build_igraph(const GroupParams& params, std::uint64_t enum_cap) {
    IGraph g;
    g.params = params;
    g.vertices = enumerate_gl(params, enum_cap);
    if (g.vertices.size() <= kBitmapCap) {
        g.adj = build_adjacency(g.vertices);
        g.bitmap_built = true;
    }
    return g;
}

namespace {

Family family_at(const IGraph& g, const std::vector<int>& indices) {
    std::vector<MatF> members;
    members.reserve(indices.size());
    for (int i : indices) members.push_back(g.vertices[static_cast<std::size_t>(i)]);
    return make_family(g.params, std::move(members));
}

int identity_index(const IGraph& g) {
    MatF id = mat_identity(g.params.field, g.params.n);
    std::ptrdiff_t idx = g.vertices.index_of_key(matrix_key(id));
    if (idx < 0) throw Error("identity missing from the vertex family");
    return static_cast<int>(idx);
}

Family extreme_set(const IGraph& g, const AdjacencyBitmap& adj, int anchor) {
    if (!g.bitmap_built) throw SearchTooLarge("adjacency bitmap was not materialized");
    int size = max_clique_size(adj, anchor);
    std::vector<int> witness = lexmin_clique_of_size(adj, size, anchor);
    if (static_cast<int>(witness.size()) != size)
        throw Error("witness reconstruction lost the maximum"); // unreachable
    return family_at(g, witness);
}

} // namespace

Family max_clique(const IGraph& g, bool anchor_identity) {
    return extreme_set(g, g.adj, anchor_identity ? identity_index(g) : -1);
}

Family max_coclique(const IGraph& g) {
    if (!g.bitmap_built) throw SearchTooLarge("adjacency bitmap was not materialized");
    return extreme_set(g, g.adj.complement(), -1);
}

TransitivityResult transitivity_check(const IGraph& g, std::uint64_t samples, std::uint64_t seed) {
    if (!g.bitmap_built) throw SearchTooLarge("adjacency bitmap was not materialized");
    std::uint64_t n = g.vertices.size();
    TransitivityResult res;
    res.ok = true;
    std::vector<Felt> scratch;

    auto check_triple = [&](std::uint64_t ti, std::uint64_t si, std::uint64_t gi) {
        bool before = ti == si || g.adj.test(static_cast<int>(ti), static_cast<int>(si));
        MatF tg = mat_mul(g.vertices[ti], g.vertices[gi]);
        MatF sg = mat_mul(g.vertices[si], g.vertices[gi]);
        bool after = singular_difference(tg, sg, scratch);
        ++res.checks;
        if (before != after) res.ok = false;
        return res.ok;
    };

    std::uint64_t cube = 0;
    bool overflow = n > 0 && n > UINT64_MAX / n / n;
    if (!overflow) cube = n * n * n;
    if (samples == 0 || (!overflow && cube <= samples)) {
        res.exhaustive = true;
        for (std::uint64_t t = 0; t < n && res.ok; ++t)
            for (std::uint64_t s = 0; s < n && res.ok; ++s)
                for (std::uint64_t gi = 0; gi < n && res.ok; ++gi)
                    check_triple(t, s, gi);
        return res;
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
    for (std::uint64_t k = 0; k < samples && res.ok; ++k)
        check_triple(pick(rng), pick(rng), pick(rng));
    return res;
}

} // namespace ekrgl
