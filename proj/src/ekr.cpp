#include "ekrgl/ekr.hpp"

#include "ekrgl/errors.hpp"

namespace ekrgl {

namespace {

bool is_prime_power(unsigned q, unsigned& p) {
    if (q < 2) return false;
    unsigned x = q;
    for (unsigned f = 2; f * f <= x; ++f) {
        if (x % f == 0) {
            p = f;
            while (x % f == 0) x /= f;
            return x == 1;
        }
    }
    p = q; // q itself is prime
    return true;
}

} // namespace

BoundClaim ekr_bound(int n, unsigned q) {
    if (n <= 0) throw Error("ekr_bound requires n >= 1");
    unsigned p = 0;
    if (!is_prime_power(q, p))
        throw NonPrimeCharacteristic("q must be a prime power");
    BoundClaim c;
    c.n = n;
    c.q = q;
    c.bound = big_pow(q, static_cast<unsigned>(n) * static_cast<unsigned>(n - 1) / 2);
    for (int i = 1; i < n; ++i) c.bound *= big_pow(q, static_cast<unsigned>(i)) - 1;
    c.group_order = gl_order(n, q);
    c.alpha = big_pow(q, static_cast<unsigned>(n)) - 1;
    if (c.bound * c.alpha != c.group_order)
        throw Error("bound identity bound * (q^n - 1) = |GL| failed"); // unreachable
    return c;
}

Family build_extremal(const GroupParams& params, const VecF& v, const MatF* translate, Side side) {
    Family fam = stabilizer(params, v);
    if (translate) fam = coset(fam, *translate, side);
    BoundClaim claim = ekr_bound(params.n, static_cast<unsigned>(params.field->size()));
    if (BigInt(fam.size()) != claim.bound)
        throw Error("extremal family has the wrong size"); // unreachable
    if (!is_clique(fam))
        throw Error("extremal family is not intersecting"); // unreachable
    return fam;
}

namespace {

// Does every maximum clique consist of all solutions of a h = b for a single
// pair of nonzero vectors?  a is read off the common left null space of the
// in-clique differences; the coset test then scans the whole vertex family.
ExtremalSurvey survey_extremal(const IGraph& graph, std::size_t max_size) {
    std::vector<std::vector<int>> cliques =
        all_maximum_cliques(graph.adj, static_cast<int>(max_size));
    ExtremalSurvey survey;
    survey.max_clique_count = cliques.size();
    survey.all_stabilizer_cosets = true;
    for (const std::vector<int>& idx : cliques) {
        const MatF& t0 = graph.vertices[static_cast<std::size_t>(idx[0])];
        MatF diffs = mat_zero(graph.params.field, graph.params.n, 0);
        for (std::size_t i = 1; i < idx.size(); ++i)
            diffs = stack_cols(diffs, mat_sub(graph.vertices[static_cast<std::size_t>(idx[i])], t0));
        Subspace common = idx.size() == 1
                              ? full_space(graph.params.field, graph.params.n)
                              : left_null_space(diffs);
        if (common.dim == 0) {
            survey.all_stabilizer_cosets = false;
            break;
        }
        VecF a;
        a.field = graph.params.field;
        a.e.assign(common.basis.e.begin(), common.basis.e.begin() + graph.params.n);
        VecF b = vec_mat(a, t0);
        std::size_t coset_size = 0;
        for (const MatF& h : graph.vertices.members)
            if (vec_mat(a, h) == b) ++coset_size;
        if (coset_size != idx.size()) {
            survey.all_stabilizer_cosets = false;
            break;
        }
    }
    return survey;
}

} // namespace

GlVerification verify_theorem(const GroupParams& params, VerifyMode mode,
                              const VerifyOptions& opts) {
    if (!params.field) throw Error("group parameters are incomplete");
    GlVerification out;
    out.n = params.n;
    out.q = static_cast<unsigned>(params.field->size());
    out.mode = mode;
    out.claim = ekr_bound(out.n, out.q);

    if (mode == VerifyMode::Exhaustive) {
        if (out.claim.group_order > opts.max_vertices)
            throw SearchTooLarge("group too large for exhaustive search; raise the vertex cap");
        out.anchored = opts.anchored;
        IGraph graph = build_igraph(params);
        out.clique = max_clique(graph, opts.anchored);
        out.coclique = max_coclique(graph);
        out.searched_max_clique = out.clique.size();
        out.searched_max_coclique = out.coclique.size();
        out.audit = clique_coclique_audit(out.clique, out.coclique);
        if (opts.run_transitivity)
            out.transitivity = transitivity_check(graph, opts.transitivity_samples, opts.seed);
        if (opts.extremal && out.claim.group_order <= opts.extremal_cap)
            out.extremal = survey_extremal(graph, out.clique.size());
    } else {
        VecF e1;
        e1.field = params.field;
        e1.e.assign(static_cast<std::size_t>(params.n), 0);
        e1.e[0] = 1;
        out.clique = build_extremal(params, e1);

        Spread s = construct_spread(params.n, 2 * params.n, params.field);
        out.partition = verify_partition(s);
        NormalizeResult norm = normalize_spread(s, 0, s.size() - 1);
        out.coclique = extract_coclique(norm.spread);
        out.maximality = coclique_maximality_audit(out.coclique);
        out.audit = clique_coclique_audit(out.clique, out.coclique);
    }

    out.clique_meets_bound = BigInt(out.clique.size()) == out.claim.bound;
    out.coclique_meets_alpha = BigInt(out.coclique.size()) == out.claim.alpha;

    bool pass = out.audit.valid && out.audit.inequality_holds &&
                out.audit.equality_case == AuditReport::Equality::Met &&
                out.clique_meets_bound && out.coclique_meets_alpha;
    if (out.transitivity) pass = pass && out.transitivity->ok;
    if (out.partition) pass = pass && out.partition->ok;
    if (out.maximality)
        pass = pass && out.maximality->pairwise_trivial && out.maximality->within_capacity &&
               out.maximality->meets_bound;
    out.pass = pass;
    return out;
}

MatF intersection_point(const Family& clique, const Family& coclique) {
    AuditReport rep = clique_coclique_audit(clique, coclique);
    if (!rep.valid)
        throw Error("intersection point requires a verified clique and coclique");
    if (rep.product != rep.v)
        throw EqualityConditionViolated("|C| * |A| does not meet |GL_n(F_q)|");
    if (rep.intersection_size != 1)
        throw EqualityConditionViolated("clique and coclique do not meet in exactly one element");
    return rep.intersection.front();
}

} // namespace ekrgl
