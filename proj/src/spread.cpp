#include "ekrgl/spread.hpp"

#include <algorithm>

#include "ekrgl/errors.hpp"
#include "ekrgl/igraph.hpp"

namespace ekrgl {

MatF mult_matrix(const FieldPtr& ext, Felt m) {
    if (!ext || !ext->base())
        throw IncompatibleExtension("mult_matrix needs a field built as an explicit extension");
    if (m >= ext->size()) throw Error("element out of range for the extension field");
    const FieldPtr& base = ext->base();
    int n = static_cast<int>(ext->ext_degree());
    MatF mat = mat_zero(base, n, n);
    Poly unit(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n; ++j) {
        unit[static_cast<std::size_t>(j)] = 1;
        Felt xj = ext->from_digits(unit);
        unit[static_cast<std::size_t>(j)] = 0;
        Poly row = ext->digits(ext->mul(m, xj));
        for (int c = 0; c < n; ++c) mat.at(j, c) = row[static_cast<std::size_t>(c)];
    }
    return mat;
}

BigInt spread_member_count(int n, int l, unsigned q) {
    if (n <= 0 || l <= 0) throw Error("spread dimensions must be positive");
    if (l % n != 0)
        throw NotDivisible("no n-spread of F_q^l exists unless n divides l");
    BigInt num = big_pow(q, static_cast<unsigned>(l)) - 1;
    BigInt den = big_pow(q, static_cast<unsigned>(n)) - 1;
    return num / den;
}

namespace {

// Appends the base-field digit block of each extension coordinate of v.
void emit_row(const FieldPtr& ext, const std::vector<Felt>& v, Felt scale, MatF& out, int r) {
    int n = static_cast<int>(ext->ext_degree());
    for (std::size_t c = 0; c < v.size(); ++c) {
        Poly digits = ext->digits(ext->mul(scale, v[c]));
        for (int i = 0; i < n; ++i)
            out.at(r, static_cast<int>(c) * n + i) = digits[static_cast<std::size_t>(i)];
    }
}

} // namespace

Spread construct_spread(int n, int l, const FieldPtr& field) {
    if (!field) throw Error("spread construction needs a field");
    if (n <= 0 || l <= 0) throw Error("spread dimensions must be positive");
    if (l % n != 0)
        throw NotDivisible("no n-spread of F_q^l exists unless n divides l");
    int k = l / n;
    FieldPtr ext = extension_new(field, static_cast<unsigned>(n));
    std::uint64_t K = ext->size();

    Spread s;
    s.field = field;
    s.n = n;
    s.l = l;

    // Power-basis images x^0, ..., x^{n-1} as extension elements.
    std::vector<Felt> xpow(static_cast<std::size_t>(n));
    Poly unit(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n; ++j) {
        unit[static_cast<std::size_t>(j)] = 1;
        xpow[static_cast<std::size_t>(j)] = ext->from_digits(unit);
        unit[static_cast<std::size_t>(j)] = 0;
    }

    // One member per projective direction (0,...,0,1,m_{lead+1},...,m_{k-1}).
    std::vector<Felt> dir(static_cast<std::size_t>(k), 0);
    for (int lead = 0; lead < k; ++lead) {
        std::uint64_t tails = 1;
        for (int i = lead + 1; i < k; ++i) tails *= K;
        for (std::uint64_t t = 0; t < tails; ++t) {
            std::fill(dir.begin(), dir.end(), Felt{0});
            dir[static_cast<std::size_t>(lead)] = 1;
            std::uint64_t x = t;
            for (int i = k; i-- > lead + 1;) {
                dir[static_cast<std::size_t>(i)] = static_cast<Felt>(x % K);
                x /= K;
            }
            MatF basis = mat_zero(field, n, l);
            for (int j = 0; j < n; ++j)
                emit_row(ext, dir, xpow[static_cast<std::size_t>(j)], basis, j);
            s.members.push_back(subspace_from_rows(basis));
        }
    }
    return s;
}

namespace {

std::uint64_t checked_pow(std::uint64_t base, int exp, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > cap / base)
            throw EnumerationTooLarge("q^l exceeds the partition verification cap");
        r *= base;
    }
    if (r > cap) throw EnumerationTooLarge("q^l exceeds the partition verification cap");
    return r;
}

// All q^n span vectors of one member, as integer keys; index 0 is the zero
// vector.
std::vector<std::uint64_t> member_span_keys(const Field& F, const Subspace& member) {
    int l = member.ambient;
    unsigned q = static_cast<unsigned>(F.size());
    std::vector<std::vector<Felt>> vecs;
    vecs.push_back(std::vector<Felt>(static_cast<std::size_t>(l), 0));
    for (int r = 0; r < member.dim; ++r) {
        std::size_t old_size = vecs.size();
        for (std::size_t i = 0; i < old_size; ++i)
            for (unsigned c = 1; c < q; ++c) {
                std::vector<Felt> v(static_cast<std::size_t>(l));
                for (int j = 0; j < l; ++j)
                    v[static_cast<std::size_t>(j)] =
                        F.add(vecs[i][static_cast<std::size_t>(j)],
                              F.mul(static_cast<Felt>(c), member.basis.at(r, j)));
                vecs.push_back(std::move(v));
            }
    }
    std::vector<std::uint64_t> keys;
    keys.reserve(vecs.size());
    for (const auto& v : vecs) {
        std::uint64_t key = 0;
        for (Felt e : v) key = key * q + e;
        keys.push_back(key);
    }
    return keys;
}

PartitionCheck scan_counts(const std::vector<std::uint16_t>& counts) {
    PartitionCheck pc;
    pc.ok = true;
    pc.vectors_checked = counts.size() - 1;
    if (counts[0] != 0) {
        pc.ok = false;
        pc.first_bad_key = 0;
        return pc;
    }
    for (std::uint64_t key = 1; key < counts.size(); ++key)
        if (counts[key] != 1) {
            pc.ok = false;
            pc.first_bad_key = key;
            return pc;
        }
    return pc;
}

void validate_partition_input(const Spread& s, std::uint64_t cap, std::uint64_t& q_l) {
    if (!s.field) throw Error("spread has no field");
    q_l = checked_pow(s.field->size(), s.l, cap);
    if (s.members.size() >= 0xFFFF)
        throw EnumerationTooLarge("too many members for 16-bit coverage counts");
    for (const Subspace& m : s.members)
        if (m.ambient != s.l) throw ShapeMismatch("spread member has the wrong ambient dimension");
}

} // namespace

PartitionCheck verify_partition_serial(const Spread& s, std::uint64_t cap) {
    std::uint64_t q_l = 0;
    validate_partition_input(s, cap, q_l);
    std::vector<std::uint16_t> counts(q_l, 0);
    for (const Subspace& m : s.members) {
        std::vector<std::uint64_t> keys = member_span_keys(*s.field, m);
        for (std::size_t i = 1; i < keys.size(); ++i) ++counts[keys[i]];
    }
    return scan_counts(counts);
}

PartitionCheck verify_partition(const Spread& s, std::uint64_t cap) {
    std::uint64_t q_l = 0;
    validate_partition_input(s, cap, q_l);
    std::vector<std::uint16_t> counts(q_l, 0);
    std::int64_t m = static_cast<std::int64_t>(s.members.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::int64_t i = 0; i < m; ++i) {
        std::vector<std::uint64_t> keys = member_span_keys(*s.field, s.members[static_cast<std::size_t>(i)]);
        for (std::size_t j = 1; j < keys.size(); ++j) {
            std::uint16_t& cell = counts[keys[j]];
#ifdef _OPENMP
#pragma omp atomic update
#endif
            ++cell;
        }
    }
    return scan_counts(counts);
}

bool is_spread_structural(const Spread& s) {
    if (!s.field || s.n <= 0 || s.l <= 0 || s.l % s.n != 0) return false;
    BigInt expected = spread_member_count(s.n, s.l, static_cast<unsigned>(s.field->size()));
    if (BigInt(s.members.size()) != expected) return false;
    for (const Subspace& m : s.members)
        if (m.ambient != s.l || m.dim != s.n) return false;
    for (std::size_t i = 0; i < s.members.size(); ++i)
        for (std::size_t j = i + 1; j < s.members.size(); ++j)
            if (subspace_intersection_dim(s.members[i], s.members[j]) != 0) return false;
    return true;
}

NormalizeResult normalize_spread(const Spread& s, std::size_t i0, std::size_t i1) {
    if (i0 >= s.members.size() || i1 >= s.members.size() || i0 == i1)
        throw Error("normalization needs two distinct member indices");
    if (s.l != 2 * s.n)
        throw Error("normalization is defined for spreads with l = 2n");
    const Subspace& w0 = s.members[i0];
    const Subspace& w1 = s.members[i1];
    MatF stacked = stack_rows(w0.basis, w1.basis);
    if (!is_invertible(stacked))
        throw NotComplementary("the chosen members do not span the ambient space");
    MatF g = inverse(stacked);

    NormalizeResult res{Spread{s.field, s.n, s.l, {}}, g};
    res.spread.members.reserve(s.members.size());
    for (const Subspace& m : s.members)
        res.spread.members.push_back(subspace_from_rows(mat_mul(m.basis, g)));
    if (!is_spread_structural(res.spread))
        throw Error("normalization did not preserve the spread"); // unreachable for true spreads
    return res;
}

Family extract_coclique(const Spread& s) {
    if (s.l != 2 * s.n) throw Error("coclique extraction is defined for spreads with l = 2n");
    if (!s.field) throw Error("spread has no field");
    int n = s.n;
    MatF id = mat_identity(s.field, n);
    MatF zero = mat_zero(s.field, n, n);
    Subspace w0 = subspace_from_rows(stack_cols(id, zero));
    Subspace winf = subspace_from_rows(stack_cols(zero, id));

    bool seen0 = false, seeninf = false;
    std::vector<MatF> ts;
    for (const Subspace& m : s.members) {
        if (subspace_eq(m, w0)) { seen0 = true; continue; }
        if (subspace_eq(m, winf)) { seeninf = true; continue; }
        if (m.dim != n || m.ambient != 2 * n)
            throw MalformedMember("spread member has the wrong dimensions");
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                if (m.basis.at(r, c) != (r == c ? 1 : 0))
                    throw MalformedMember("member basis is not of the form (I | T)");
        MatF t = mat_zero(s.field, n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) t.at(r, c) = m.basis.at(r, n + c);
        if (!is_invertible(t))
            throw MalformedMember("member meets rowspace(0|I) nontrivially; not a spread");
        ts.push_back(std::move(t));
    }
    if (!seen0 || !seeninf)
        throw NotNormalized("spread does not contain rowspace(I|0) and rowspace(0|I)");

    Family fam = make_family(GroupParams{n, s.field}, std::move(ts));
    if (!is_coclique(fam))
        throw MalformedMember("extracted matrices are not pairwise non-intersecting; not a spread");
    return fam;
}

CocliqueMaximalityReport coclique_maximality_audit(const Family& coclique,
                                                   std::uint64_t exhaustive_cap) {
    if (coclique.empty()) throw Error("maximality audit requires a nonempty family");
    if (!is_coclique(coclique))
        throw NotCoclique("family is not pairwise non-intersecting");

    int n = coclique.params.n;
    unsigned q = static_cast<unsigned>(coclique.params.field->size());
    CocliqueMaximalityReport rep;
    rep.size = coclique.size();
    rep.bound = big_pow(q, static_cast<unsigned>(n)) - 1;
    rep.meets_bound = BigInt(rep.size) == rep.bound;

    // Packing in F_q^{2n}: rowspace(I|T) per member plus the two excluded
    // members of the reference spread.
    MatF id = mat_identity(coclique.params.field, n);
    MatF zero = mat_zero(coclique.params.field, n, n);
    std::vector<Subspace> packing;
    packing.push_back(subspace_from_rows(stack_cols(id, zero)));
    packing.push_back(subspace_from_rows(stack_cols(zero, id)));
    for (const MatF& t : coclique.members)
        packing.push_back(subspace_from_rows(stack_cols(id, t)));

    rep.pairwise_trivial = true;
    for (std::size_t i = 0; i < packing.size() && rep.pairwise_trivial; ++i)
        for (std::size_t j = i + 1; j < packing.size() && rep.pairwise_trivial; ++j)
            if (subspace_intersection_dim(packing[i], packing[j]) != 0)
                rep.pairwise_trivial = false;

    rep.covered = BigInt(rep.size + 2) * (big_pow(q, static_cast<unsigned>(n)) - 1);
    rep.capacity = big_pow(q, static_cast<unsigned>(2 * n)) - 1;
    rep.within_capacity = rep.covered <= rep.capacity;
    rep.packing_equality = rep.covered == rep.capacity;

    if (gl_order(n, q) <= exhaustive_cap) {
        IGraph graph = build_igraph(coclique.params);
        rep.exhaustive_alpha = max_coclique(graph).size();
    }
    return rep;
}

} // namespace ekrgl
