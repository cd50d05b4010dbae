#include <doctest.h>

#include <set>

#include "ekrgl/igraph.hpp"
#include "ekrgl/spread.hpp"
#include "oracles.hpp"

using namespace ekrgl;

namespace {

Subspace rows(const FieldPtr& f, std::initializer_list<std::initializer_list<int>> r) {
    return subspace_from_rows(mat_from(f, r));
}

} // namespace

TEST_CASE("mult_matrix represents multiplication in the power basis") {
    FieldPtr gf2 = field_of_order(2);
    FieldPtr ext = extension_new(gf2, 2); // GF(4) over GF(2), basis {1, x}
    CHECK(mult_matrix(ext, 1) == mat_identity(gf2, 2));
    CHECK(mult_matrix(ext, 2) == mat_from(gf2, {{0, 1}, {1, 1}})); // x
    CHECK(mult_matrix(ext, 3) == mat_from(gf2, {{1, 1}, {1, 0}})); // x + 1 = x^2
    MatF zero = mult_matrix(ext, 0);
    for (Felt v : zero.e) CHECK(v == 0);
}

TEST_CASE("mult_matrix is a field embedding") {
    for (auto [q, n] : std::vector<std::pair<unsigned, int>>{{2, 2}, {3, 2}, {2, 3}, {4, 2}}) {
        FieldPtr base = field_of_order(q);
        FieldPtr ext = extension_new(base, static_cast<unsigned>(n));
        for (unsigned a = 0; a < ext->size(); ++a)
            for (unsigned b = 0; b < ext->size(); ++b) {
                MatF ma = mult_matrix(ext, static_cast<Felt>(a));
                MatF mb = mult_matrix(ext, static_cast<Felt>(b));
                CHECK(mat_mul(ma, mb) == mult_matrix(ext, ext->mul(static_cast<Felt>(a), static_cast<Felt>(b))));
                CHECK(mat_add(ma, mb) == mult_matrix(ext, ext->add(static_cast<Felt>(a), static_cast<Felt>(b))));
            }
        // nonzero elements map to invertible matrices, so differences of
        // distinct images are again invertible: a coclique in the making
        for (unsigned a = 1; a < ext->size(); ++a) CHECK(is_invertible(mult_matrix(ext, static_cast<Felt>(a))));
    }
    CHECK_THROWS_AS(mult_matrix(field_of_order(5), 2), IncompatibleExtension);
}

TEST_CASE("spread_member_count") {
    CHECK(spread_member_count(1, 2, 2) == 3);
    CHECK(spread_member_count(2, 4, 2) == 5);
    CHECK(spread_member_count(2, 4, 3) == 10);
    CHECK(spread_member_count(3, 6, 2) == 9);
    CHECK(spread_member_count(2, 4, 4) == 17);
    CHECK(spread_member_count(2, 6, 2) == 21);
    CHECK(spread_member_count(2, 4, 5) == 26);
    CHECK_THROWS_AS(spread_member_count(2, 5, 2), NotDivisible);
    CHECK_THROWS_AS(construct_spread(3, 4, field_of_order(2)), NotDivisible);
}

TEST_CASE("construct_spread yields a verified partition at every desk scale") {
    for (auto [n, l, q] : std::vector<std::tuple<int, int, unsigned>>{
             {1, 2, 2}, {2, 4, 2}, {2, 4, 3}, {3, 6, 2}, {2, 4, 4}, {2, 6, 2}, {1, 3, 3}}) {
        FieldPtr F = field_of_order(q);
        Spread s = construct_spread(n, l, F);
        CHECK(BigInt(s.size()) == spread_member_count(n, l, q));
        for (const Subspace& m : s.members) {
            CHECK(m.dim == n);
            CHECK(m.ambient == l);
        }
        PartitionCheck pc = verify_partition(s);
        CHECK(pc.ok);
        CHECK(!pc.first_bad_key.has_value());
        BigInt nonzero = big_pow(q, static_cast<unsigned>(l)) - 1;
        CHECK(BigInt(pc.vectors_checked) == nonzero);
        CHECK(is_spread_structural(s));
    }
}

TEST_CASE("the 2-in-4 spread over GF(2), member by member") {
    FieldPtr F = field_of_order(2);
    Spread s = construct_spread(2, 4, F);
    REQUIRE(s.size() == 5);
    // W_0 = rowspace(I|0) first, W_m = rowspace(I|mult(m)) ascending in m,
    // W_infinity = rowspace(0|I) last
    CHECK(subspace_eq(s.members[0], rows(F, {{1, 0, 0, 0}, {0, 1, 0, 0}})));
    CHECK(subspace_eq(s.members[1], rows(F, {{1, 0, 1, 0}, {0, 1, 0, 1}}))); // T = I
    CHECK(subspace_eq(s.members[2], rows(F, {{1, 0, 0, 1}, {0, 1, 1, 1}}))); // T = mult(x)
    CHECK(subspace_eq(s.members[3], rows(F, {{1, 0, 1, 1}, {0, 1, 1, 0}}))); // T = mult(x+1)
    CHECK(subspace_eq(s.members[4], rows(F, {{0, 0, 1, 0}, {0, 0, 0, 1}})));
}

TEST_CASE("partition checking localizes the damage") {
    FieldPtr F = field_of_order(2);
    Spread s = construct_spread(2, 4, F);
    // clobber W_1 with a second copy of W_2: some vectors double, some vanish
    Spread bad = s;
    bad.members[1] = bad.members[2];
    PartitionCheck pc = verify_partition(bad);
    CHECK(!pc.ok);
    REQUIRE(pc.first_bad_key.has_value());
    // the least key in the lost member W_1 = span{(1,0,1,0),(0,1,0,1)} is
    // (0,1,0,1) = 5; every smaller nonzero key is still covered once
    CHECK(*pc.first_bad_key == 5);
    PartitionCheck ps = verify_partition_serial(bad);
    CHECK(ps.ok == pc.ok);
    CHECK(ps.first_bad_key == pc.first_bad_key);
    CHECK(!is_spread_structural(bad));
    // losing a member entirely is also caught
    Spread smaller = s;
    smaller.members.pop_back();
    CHECK(!verify_partition(smaller).ok);
    CHECK(!is_spread_structural(smaller));
}

TEST_CASE("partition checking refuses oversized ambients") {
    Spread s = construct_spread(2, 4, field_of_order(2));
    CHECK_THROWS_AS(verify_partition(s, 10), EnumerationTooLarge); // 2^4 = 16 > 10
}

TEST_CASE("normalize_spread carries the chosen pair to the reference members") {
    FieldPtr F = field_of_order(3);
    Spread s = construct_spread(2, 4, F);
    // the constructed spread already has (I|0) first and (0|I) last
    NormalizeResult trivial = normalize_spread(s, 0, s.size() - 1);
    CHECK(trivial.g == mat_identity(F, 4));
    for (std::size_t i = 0; i < s.size(); ++i)
        CHECK(subspace_eq(trivial.spread.members[i], s.members[i]));
    // a nontrivial pair: member order is preserved, images are right-translates
    NormalizeResult norm = normalize_spread(s, 1, 2);
    CHECK(is_invertible(norm.g));
    CHECK(subspace_eq(norm.spread.members[1], rows(F, {{1, 0, 0, 0}, {0, 1, 0, 0}})));
    CHECK(subspace_eq(norm.spread.members[2], rows(F, {{0, 0, 1, 0}, {0, 0, 0, 1}})));
    CHECK(is_spread_structural(norm.spread));
    CHECK(verify_partition(norm.spread).ok);
    for (std::size_t i = 0; i < s.size(); ++i)
        CHECK(subspace_eq(norm.spread.members[i],
                          subspace_from_rows(mat_mul(s.members[i].basis, norm.g))));
}

TEST_CASE("normalize_spread rejects non-complementary pairs") {
    FieldPtr F = field_of_order(2);
    Spread fake;
    fake.field = F;
    fake.n = 2;
    fake.l = 4;
    fake.members = {rows(F, {{1, 0, 0, 0}, {0, 1, 0, 0}}), rows(F, {{1, 0, 0, 0}, {0, 0, 1, 0}})};
    CHECK_THROWS_AS(normalize_spread(fake, 0, 1), NotComplementary);
    Spread s = construct_spread(2, 4, F);
    CHECK_THROWS_AS(normalize_spread(s, 0, 0), Error); // equal indices rejected up front
}

TEST_CASE("extract_coclique reads off the Singer coclique") {
    FieldPtr F = field_of_order(2);
    Spread s = construct_spread(2, 4, F);
    Family co = extract_coclique(s);
    REQUIRE(co.size() == 3); // q^n - 1
    CHECK(is_coclique(co));
    CHECK(co[0] == mat_from(F, {{0, 1}, {1, 1}}));
    CHECK(co[1] == mat_identity(F, 2));
    CHECK(co[2] == mat_from(F, {{1, 1}, {1, 0}}));
    // extracted matrices are exactly the nonzero multiplication matrices
    FieldPtr ext = extension_new(F, 2);
    std::set<std::uint64_t> expect;
    for (unsigned m = 1; m < 4; ++m) expect.insert(matrix_key(mult_matrix(ext, static_cast<Felt>(m))));
    std::vector<std::uint64_t> got = co.keys();
    CHECK(std::set<std::uint64_t>(got.begin(), got.end()) == expect);
}

TEST_CASE("extract_coclique sizes across parameters") {
    for (auto [n, q] : std::vector<std::pair<int, unsigned>>{{1, 2}, {2, 2}, {2, 3}, {3, 2}, {2, 4}}) {
        FieldPtr F = field_of_order(q);
        Spread s = construct_spread(n, 2 * n, F);
        Family co = extract_coclique(s);
        CHECK(BigInt(co.size()) == big_pow(q, static_cast<unsigned>(n)) - 1);
        CHECK(co.size() == s.size() - 2);
        CHECK(is_coclique(co));
    }
}

TEST_CASE("extract_coclique rejects unnormalized or damaged spreads") {
    FieldPtr F = field_of_order(2);
    Spread s = construct_spread(2, 4, F);
    Spread missing = s;
    missing.members.pop_back(); // no rowspace(0|I) any more
    CHECK_THROWS_AS(extract_coclique(missing), NotNormalized);
    Spread damaged = s;
    damaged.members[1] = rows(F, {{1, 1, 0, 0}, {0, 0, 1, 0}}); // left block not I
    CHECK_THROWS_AS(extract_coclique(damaged), MalformedMember);
}

TEST_CASE("maximality audit re-enacts the packing bound") {
    FieldPtr F = field_of_order(3);
    Family co = extract_coclique(construct_spread(2, 4, F));
    CocliqueMaximalityReport rep = coclique_maximality_audit(co);
    CHECK(rep.size == 8);
    CHECK(rep.bound == 8);
    CHECK(rep.meets_bound);
    CHECK(rep.pairwise_trivial);
    CHECK(rep.covered == 80);   // (8 + 2) * (3^2 - 1)
    CHECK(rep.capacity == 80);  // 3^4 - 1
    CHECK(rep.within_capacity);
    CHECK(rep.packing_equality);
    REQUIRE(rep.exhaustive_alpha.has_value()); // |GL_2(F_3)| = 48 <= 512
    CHECK(*rep.exhaustive_alpha == 8);

    FieldPtr F4 = field_of_order(4);
    Family co4 = extract_coclique(construct_spread(2, 4, F4));
    CocliqueMaximalityReport rep4 = coclique_maximality_audit(co4);
    CHECK(rep4.size == 15);
    CHECK(rep4.packing_equality);
    REQUIRE(rep4.exhaustive_alpha.has_value()); // |GL_2(F_4)| = 180
    CHECK(*rep4.exhaustive_alpha == 15);
    // with a tighter cap the exhaustive comparison is skipped, not attempted
    CHECK(!coclique_maximality_audit(co4, 100).exhaustive_alpha.has_value());
}

TEST_CASE("maximality audit rejects non-cocliques") {
    FieldPtr F = field_of_order(2);
    Family stab = stabilizer({2, F}, vec_from(F, {1, 0}));
    CHECK_THROWS_AS(coclique_maximality_audit(stab), NotCoclique);
}
