#include <doctest.h>

#include <random>

#include "ekrgl/igraph.hpp"
#include "oracles.hpp"

using namespace ekrgl;

TEST_CASE("intersecting agrees with the nonzero-vector agreement scan on all pairs") {
    // the det-based test vs the definitional scan, exhaustively for q = 2, 3
    for (auto [n, q] : std::vector<std::pair<int, unsigned>>{{2, 2}, {2, 3}}) {
        Family fam = enumerate_gl({n, field_of_order(q)});
        for (std::size_t i = 0; i < fam.size(); ++i)
            for (std::size_t j = 0; j < fam.size(); ++j)
                CHECK(intersecting(fam[i], fam[j]) == oracle::agree_scan(fam[i], fam[j]));
    }
}

TEST_CASE("intersecting agrees with the scan on random larger pairs") {
    std::mt19937 rng(6061);
    for (auto [n, q] : std::vector<std::pair<int, unsigned>>{{3, 2}, {2, 4}}) {
        FieldPtr F = field_of_order(q);
        for (int trial = 0; trial < 2000; ++trial) {
            MatF T = oracle::random_invertible(F, n, rng);
            MatF S = oracle::random_invertible(F, n, rng);
            CHECK(intersecting(T, S) == oracle::agree_scan(T, S));
        }
    }
}

TEST_CASE("a matrix intersects itself and witnesses are honest") {
    FieldPtr F = field_of_order(2);
    MatF id = mat_identity(F, 2);
    CHECK(intersecting(id, id));
    MatF swp = mat_from(F, {{0, 1}, {1, 0}});
    std::optional<VecF> w = intersecting_witness(id, swp);
    REQUIRE(w.has_value());
    CHECK(w->e == std::vector<Felt>{1, 1}); // (1,1) is fixed by the swap
    CHECK(vec_mat(*w, id) == vec_mat(*w, swp));

    std::mt19937 rng(404);
    FieldPtr F3 = field_of_order(3);
    int with = 0;
    for (int trial = 0; trial < 300; ++trial) {
        MatF T = oracle::random_invertible(F3, 2, rng);
        MatF S = oracle::random_invertible(F3, 2, rng);
        std::optional<VecF> v = intersecting_witness(T, S);
        CHECK(v.has_value() == intersecting(T, S));
        if (v) {
            ++with;
            CHECK(!v->is_zero());
            CHECK(vec_mat(*v, T) == vec_mat(*v, S));
        }
    }
    CHECK(with > 0);
}

TEST_CASE("intersecting rejects malformed pairs") {
    FieldPtr F = field_of_order(2);
    CHECK_THROWS_AS(intersecting(mat_identity(F, 2), mat_identity(field_of_order(3), 2)),
                    FieldMismatch);
    CHECK_THROWS_AS(intersecting(mat_identity(F, 2), mat_identity(F, 3)), ShapeMismatch);
    CHECK_THROWS_AS(intersecting(mat_zero(F, 2, 3), mat_zero(F, 2, 3)), NotSquare);
    CHECK_THROWS_AS(intersecting(mat_identity(F, 2), mat_zero(F, 2, 2)), NonGroupElement);
}

TEST_CASE("clique and coclique predicates") {
    FieldPtr F = field_of_order(2);
    GroupParams params{2, F};
    Family stab = stabilizer(params, vec_from(F, {1, 0}));
    CHECK(is_clique(stab));
    // the Singer-cycle coclique in GL_2(F_2)
    Family singer = make_family(
        params, {mat_identity(F, 2), mat_from(F, {{0, 1}, {1, 1}}), mat_from(F, {{1, 1}, {1, 0}})});
    CHECK(is_coclique(singer));
    CHECK(!is_clique(singer));
    CHECK(!is_coclique(stab));
}

TEST_CASE("the full graph on GL_2(F_2)") {
    IGraph g = build_igraph({2, field_of_order(2)});
    CHECK(g.vertices.size() == 6);
    CHECK(g.bitmap_built);
    // identity [[1,0],[0,1]] = key 9 is adjacent to exactly keys 6, 11, 13
    std::ptrdiff_t id = g.vertices.index_of_key(9);
    REQUIRE(id >= 0);
    std::vector<std::uint64_t> nbrs;
    for (std::size_t j = 0; j < g.vertices.size(); ++j)
        if (g.adj.test(static_cast<int>(id), static_cast<int>(j)))
            nbrs.push_back(matrix_key(g.vertices[j]));
    CHECK(nbrs == std::vector<std::uint64_t>{6, 11, 13});

    Family cl = max_clique(g);
    Family co = max_coclique(g);
    CHECK(cl.size() == 2);
    CHECK(co.size() == 3);
    CHECK(is_clique(cl));
    CHECK(is_coclique(co));
    Family anchored = max_clique(g, true);
    CHECK(anchored.size() == 2);
    CHECK(anchored.index_of_key(9) >= 0); // contains the identity
}

TEST_CASE("max clique and coclique sizes for GL_2(F_3)") {
    IGraph g = build_igraph({2, field_of_order(3)});
    CHECK(g.vertices.size() == 48);
    Family cl = max_clique(g);
    Family co = max_coclique(g);
    CHECK(cl.size() == 6);
    CHECK(co.size() == 8);
    CHECK(is_clique(cl));
    CHECK(is_coclique(co));
    CHECK(max_clique(g, true).size() == 6);
}

TEST_CASE("audit certifies the equality case") {
    FieldPtr F = field_of_order(2);
    GroupParams params{2, F};
    Family stab = stabilizer(params, vec_from(F, {1, 0}));
    Family singer = make_family(
        params, {mat_identity(F, 2), mat_from(F, {{0, 1}, {1, 1}}), mat_from(F, {{1, 1}, {1, 0}})});
    AuditReport rep = clique_coclique_audit(stab, singer);
    CHECK(rep.valid);
    CHECK(rep.v == 6);
    CHECK(rep.product == 6);
    CHECK(rep.inequality_holds);
    CHECK(rep.equality_case == AuditReport::Equality::Met);
    CHECK(rep.intersection_size == 1);
    CHECK(rep.intersection[0] == mat_identity(F, 2)); // the only common element
}

TEST_CASE("audit distinguishes strict inequality and violation") {
    FieldPtr F = field_of_order(2);
    GroupParams params{2, F};
    Family singer = make_family(
        params, {mat_identity(F, 2), mat_from(F, {{0, 1}, {1, 1}}), mat_from(F, {{1, 1}, {1, 0}})});
    // |C| * |A| = 3 < 6: inequality is strict, equality case does not apply
    Family just_id = make_family(params, {mat_identity(F, 2)});
    AuditReport strict = clique_coclique_audit(just_id, singer);
    CHECK(strict.valid);
    CHECK(strict.inequality_holds);
    CHECK(strict.equality_case == AuditReport::Equality::NotApplicable);
    // a non-clique of size 2 whose product hits 6 with an empty intersection:
    // the audit reports the equality condition broken and the family invalid
    Family notclique = make_family(params, {mat_identity(F, 2), mat_from(F, {{0, 1}, {1, 1}})});
    AuditReport bad = clique_coclique_audit(notclique, singer);
    CHECK(!bad.clique_ok);
    CHECK(!bad.valid);
    CHECK(bad.product == 6);
    CHECK(bad.equality_case == AuditReport::Equality::Violated);
    CHECK(bad.intersection_size == 2);
    CHECK_THROWS_AS(clique_coclique_audit(Family{}, singer), Error);
}

TEST_CASE("right translation preserves adjacency") {
    IGraph g22 = build_igraph({2, field_of_order(2)});
    TransitivityResult all = transitivity_check(g22, 0, 1);
    CHECK(all.exhaustive);
    CHECK(all.checks == 216); // 6^3 triples
    CHECK(all.ok);
    IGraph g23 = build_igraph({2, field_of_order(3)});
    TransitivityResult sampled = transitivity_check(g23, 5000, 17);
    CHECK(!sampled.exhaustive);
    CHECK(sampled.checks == 5000);
    CHECK(sampled.ok);
    // identical seeds sample identically
    TransitivityResult again = transitivity_check(g23, 5000, 17);
    CHECK(again.ok == sampled.ok);
    CHECK(again.checks == sampled.checks);
}
