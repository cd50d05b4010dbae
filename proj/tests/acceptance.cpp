// Acceptance gate: one line per criterion, pass/fail with wall time, exit
// code = number of failures.  Budgets are enforced, not just reported.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "ekrgl/certificate.hpp"
#include "ekrgl/ekr.hpp"
#include "ekrgl/igraph.hpp"
#include "ekrgl/spread.hpp"
#include "ekrgl/symbase.hpp"

using namespace ekrgl;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = false;
    std::string detail;
};

int failures = 0;

template <typename Fn>
void criterion(int id, const std::string& label, double budget_s, Fn&& fn) {
    Clock::time_point t0 = Clock::now();
    Outcome out;
    try {
        out = fn();
    } catch (const std::exception& e) {
        out.ok = false;
        out.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    bool in_budget = budget_s <= 0 || secs <= budget_s;
    bool pass = out.ok && in_budget;
    if (!pass) ++failures;
    std::printf("%s criterion %d: %s (%.2fs", pass ? "PASS" : "FAIL", id, label.c_str(), secs);
    if (budget_s > 0) std::printf(" / budget %.0fs", budget_s);
    std::printf(")%s%s\n", out.detail.empty() ? "" : " — ", out.detail.c_str());
}

bool expect(Outcome& out, bool cond, const std::string& what) {
    if (!cond && out.detail.empty()) out.detail = what;
    return cond;
}

const std::vector<std::pair<int, unsigned>> kExhaustivePairs{{2, 2}, {2, 3}, {3, 2}, {2, 4}};

} // namespace

int main() {
    // 1. bound * (q^n - 1) = |GL_n(F_q)| exactly, across the sweep
    criterion(1, "bound identity for n <= 6, q in {2,3,4,5,7,8,9}", 1.0, [] {
        Outcome out;
        out.ok = true;
        for (int n = 1; n <= 6; ++n)
            for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
                BoundClaim c = ekr_bound(n, q);
                out.ok = expect(out, c.bound * (big_pow(q, static_cast<unsigned>(n)) - 1) ==
                                         gl_order(n, q),
                                "identity broke at n=" + std::to_string(n) +
                                    " q=" + std::to_string(q)) &&
                         out.ok;
            }
        return out;
    });

    // 2 & 3. exhaustive max clique = bound and max coclique = q^n - 1
    struct SearchExpect {
        int n;
        unsigned q;
        std::size_t clique, vertices, coclique;
        double budget;
    };
    const std::vector<SearchExpect> searches{{2, 2, 2, 6, 3, 1.0},
                                             {2, 3, 6, 48, 8, 1.0},
                                             {3, 2, 24, 168, 7, 60.0},
                                             {2, 4, 12, 180, 15, 60.0}};
    std::vector<IGraph> graphs;
    for (const SearchExpect& s : searches) {
        std::string tag = "(" + std::to_string(s.n) + "," + std::to_string(s.q) + ")";
        criterion(2, "exhaustive max intersecting family " + tag, s.budget, [&] {
            Outcome out;
            graphs.push_back(build_igraph({s.n, field_of_order(s.q)}));
            const IGraph& g = graphs.back();
            Family clique = max_clique(g);
            out.ok = expect(out, g.vertices.size() == s.vertices, "vertex count off") &&
                     expect(out, clique.size() == s.clique,
                            "max clique " + std::to_string(clique.size()) + " != " +
                                std::to_string(s.clique)) &&
                     expect(out, is_clique(clique), "witness is not a clique") &&
                     expect(out, BigInt(clique.size()) == ekr_bound(s.n, s.q).bound,
                            "clique misses the bound");
            return out;
        });
    }
    for (std::size_t i = 0; i < searches.size(); ++i) {
        const SearchExpect& s = searches[i];
        std::string tag = "(" + std::to_string(s.n) + "," + std::to_string(s.q) + ")";
        criterion(3, "exhaustive max coclique " + tag, s.budget, [&] {
            Outcome out;
            Family co = max_coclique(graphs[i]);
            out.ok = expect(out, co.size() == s.coclique,
                            "alpha " + std::to_string(co.size()) + " != " +
                                std::to_string(s.coclique)) &&
                     expect(out, is_coclique(co), "witness is not a coclique");
            return out;
        });
    }

    // 4. spread pipeline: counts, exhaustive partition scan, extraction
    criterion(4, "spread pipeline at (1,2,2) (2,4,2) (2,4,3) (3,6,2) (2,4,4)", 10.0, [] {
        Outcome out;
        out.ok = true;
        for (auto [n, l, q] : std::vector<std::tuple<int, int, unsigned>>{
                 {1, 2, 2}, {2, 4, 2}, {2, 4, 3}, {3, 6, 2}, {2, 4, 4}}) {
            std::string tag =
                "(" + std::to_string(n) + "," + std::to_string(l) + "," + std::to_string(q) + ")";
            FieldPtr F = field_of_order(q);
            Spread s = construct_spread(n, l, F);
            out.ok = expect(out, BigInt(s.size()) == spread_member_count(n, l, q),
                            "member count off at " + tag) &&
                     expect(out, verify_partition(s).ok, "partition scan failed at " + tag) &&
                     out.ok;
            if (l == 2 * n) {
                Family co = extract_coclique(s);
                out.ok = expect(out,
                                BigInt(co.size()) == big_pow(q, static_cast<unsigned>(n)) - 1,
                                "coclique size off at " + tag) &&
                         expect(out, is_coclique(co),
                                "pairwise difference went singular at " + tag) &&
                         out.ok;
            }
        }
        return out;
    });

    // 5. clique-coclique audit at equality, searched and constructed
    criterion(5, "clique-coclique audit: 4 exhaustive pairs + (2,5),(2,7) certificates", 30.0, [&] {
        Outcome out;
        out.ok = true;
        for (std::size_t i = 0; i < searches.size(); ++i) {
            Family clique = max_clique(graphs[i]);
            Family co = max_coclique(graphs[i]);
            AuditReport rep = clique_coclique_audit(clique, co);
            out.ok = expect(out, rep.valid && rep.product == rep.v, "product misses |GL|") &&
                     expect(out, rep.equality_case == AuditReport::Equality::Met &&
                                     rep.intersection_size == 1,
                            "|C ∩ A| != 1") &&
                     out.ok;
        }
        for (unsigned q : {5u, 7u}) {
            GlVerification v = verify_theorem({2, field_of_order(q)}, VerifyMode::Certificate);
            out.ok = expect(out, v.pass, "certificate mode failed at q=" + std::to_string(q)) &&
                     expect(out, v.audit.product == v.audit.v && v.audit.intersection_size == 1,
                            "equality audit failed at q=" + std::to_string(q)) &&
                     out.ok;
        }
        return out;
    });

    // 6. oracle equivalence: det test vs agreement scan
    criterion(6, "det-based intersecting vs agreement scan, zero disagreements", 0, [] {
        Outcome out;
        auto scan = [](const MatF& T, const MatF& S) {
            int n = T.rows;
            unsigned q = T.field->size();
            std::uint64_t count = 1;
            for (int i = 0; i < n; ++i) count *= q;
            for (std::uint64_t key = 1; key < count; ++key) {
                VecF v = vec_from_key(T.field, n, key);
                if (vec_mat(v, T) == vec_mat(v, S)) return true;
            }
            return false;
        };
        std::uint64_t disagreements = 0, checked = 0;
        for (auto [n, q] : std::vector<std::pair<int, unsigned>>{{2, 2}, {2, 3}}) {
            Family fam = enumerate_gl({n, field_of_order(q)});
            for (std::size_t i = 0; i < fam.size(); ++i)
                for (std::size_t j = 0; j < fam.size(); ++j) {
                    ++checked;
                    if (intersecting(fam[i], fam[j]) != scan(fam[i], fam[j])) ++disagreements;
                }
        }
        std::mt19937 rng(20260814);
        for (auto [n, q] : std::vector<std::pair<int, unsigned>>{{3, 2}, {2, 4}}) {
            Family fam = enumerate_gl({n, field_of_order(q)});
            std::uniform_int_distribution<std::size_t> pick(0, fam.size() - 1);
            for (int trial = 0; trial < 10000; ++trial) {
                const MatF& T = fam[pick(rng)];
                const MatF& S = fam[pick(rng)];
                ++checked;
                if (intersecting(T, S) != scan(T, S)) ++disagreements;
            }
        }
        Outcome res;
        res.ok = disagreements == 0 && checked >= 2 * 10000;
        res.detail = std::to_string(checked) + " pairs";
        if (disagreements) res.detail += ", " + std::to_string(disagreements) + " disagreements";
        return res;
    });

    // 7. S_n baseline
    for (auto [n, expect_size, budget] : std::vector<std::tuple<int, std::size_t, double>>{
             {2, 1, 0}, {3, 2, 0}, {4, 6, 0}, {5, 24, 120.0}}) {
        criterion(7, "S_" + std::to_string(n) + " max agreeing family = (n-1)!", budget, [&] {
            Outcome out;
            SnVerification v = verify_sn(n, n <= 4);
            out.ok = expect(out, v.max_clique_size == expect_size, "size off") &&
                     expect(out, v.bound_met, "bound missed") &&
                     expect(out, n > 4 || (v.extremal_all_cosets && *v.extremal_all_cosets),
                            "a maximum clique is not a point-map coset") &&
                     expect(out, v.pass, "verdict failed");
            return out;
        });
    }

    // 8. vertex transitivity and anchored-vs-unanchored agreement
    criterion(8, "translation invariance + anchored search agreement", 0, [&] {
        Outcome out;
        out.ok = true;
        for (std::size_t i = 0; i < searches.size(); ++i) {
            const SearchExpect& s = searches[i];
            std::uint64_t samples = (s.n == 2 && s.q == 2) ? 0 : 10000; // 0 = exhaustive triples
            TransitivityResult tr = transitivity_check(graphs[i], samples, 17);
            std::string tag = "(" + std::to_string(s.n) + "," + std::to_string(s.q) + ")";
            out.ok = expect(out, tr.ok, "translation broke adjacency at " + tag) && out.ok;
            if (s.n == 2 && s.q == 2)
                out.ok = expect(out, tr.exhaustive && tr.checks == 216,
                                "(2,2) expected all 216 triples") &&
                         out.ok;
            int plain = max_clique_size(graphs[i].adj);
            std::ptrdiff_t id = graphs[i].vertices.index_of_key(
                matrix_key(mat_identity(graphs[i].params.field, s.n)));
            int anchored = max_clique_size(graphs[i].adj, static_cast<int>(id));
            out.ok = expect(out, plain == anchored, "anchored size diverged at " + tag) && out.ok;
        }
        return out;
    });

    // 9. determinism of certificates
    criterion(9, "repeated verify runs yield identical certificates modulo timings", 0, [] {
        Outcome out;
        out.ok = true;
        auto twice_gl = [&](int n, unsigned q, VerifyMode mode) {
            Json a = gl_certificate(verify_theorem({n, field_of_order(q)}, mode));
            Json b = gl_certificate(verify_theorem({n, field_of_order(q)}, mode));
            return a.dump() == b.dump() && content_hash(a) == content_hash(b);
        };
        out.ok = expect(out, twice_gl(2, 2, VerifyMode::Exhaustive), "(2,2) exhaustive varied") &&
                 expect(out, twice_gl(2, 3, VerifyMode::Exhaustive), "(2,3) exhaustive varied") &&
                 expect(out, twice_gl(2, 5, VerifyMode::Certificate), "(2,5) certificate varied");
        Json sa = sn_certificate(verify_sn(4, true));
        Json sb = sn_certificate(verify_sn(4, true));
        out.ok = expect(out, sa.dump() == sb.dump(), "S_4 certificate varied") && out.ok;
        Spread s1 = construct_spread(2, 4, field_of_order(3));
        Spread s2 = construct_spread(2, 4, field_of_order(3));
        Json p1 = spread_certificate(s1, verify_partition(s1), nullptr, nullptr);
        Json p2 = spread_certificate(s2, verify_partition(s2), nullptr, nullptr);
        out.ok = expect(out, p1.dump() == p2.dump(), "spread certificate varied") && out.ok;
        return out;
    });

    if (failures == 0) std::printf("all acceptance criteria hold\n");
    return failures;
}
