#include "ekrgl/glgroup.hpp"

#include <algorithm>
#include <cstdint>

#include "ekrgl/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ekrgl {

bool operator==(const GroupParams& a, const GroupParams& b) {
    return a.n == b.n && a.field && b.field && a.field->same_as(*b.field);
}

std::vector<std::uint64_t> Family::keys() const {
    std::vector<std::uint64_t> ks;
    ks.reserve(members.size());
    for (const MatF& m : members) ks.push_back(matrix_key(m));
    return ks;
}

std::ptrdiff_t Family::index_of_key(std::uint64_t key) const {
    std::uint64_t lo = 0, hi = members.size();
    while (lo < hi) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        std::uint64_t k = matrix_key(members[mid]);
        if (k == key) return static_cast<std::ptrdiff_t>(mid);
        if (k < key) lo = mid + 1; else hi = mid;
    }
    return -1;
}

Family make_family(const GroupParams& params, std::vector<MatF> members) {
    if (params.n <= 0 || !params.field) throw Error("family parameters are incomplete");
    for (const MatF& m : members) {
        if (!m.field || !m.field->same_as(*params.field))
            throw FieldMismatch("family member lives over the wrong field");
        if (m.rows != params.n || m.cols != params.n)
            throw ShapeMismatch("family member has the wrong shape");
        if (!is_invertible(m))
            throw NonGroupElement("family member is singular");
    }
    std::sort(members.begin(), members.end(), [](const MatF& a, const MatF& b) {
        return matrix_key(a) < matrix_key(b);
    });
    members.erase(std::unique(members.begin(), members.end()), members.end());
    Family fam;
    fam.params = params;
    fam.members = std::move(members);
    return fam;
}

BigInt gl_order(int n, unsigned q) {
    if (n <= 0) throw Error("gl_order requires n >= 1");
    BigInt qn = big_pow(q, static_cast<unsigned>(n));
    BigInt order = 1;
    BigInt qi = 1;
    for (int i = 0; i < n; ++i) {
        order *= qn - qi;
        qi *= q;
    }
    return order;
}

namespace {

// Shared scaffolding for row-by-row enumeration.  Vectors of F_q^n are
// handled through their integer keys; `entries` caches the digit expansion of
// every key so span updates stay cheap.
struct RowEnumerator {
    const Field& F;
    int n;
    std::uint64_t vcount; // q^n
    std::vector<Felt> entries; // vcount * n, row-major by key

    explicit RowEnumerator(const GroupParams& params)
        : F(*params.field), n(params.n) {
        std::uint64_t q = F.size();
        vcount = 1;
        for (int i = 0; i < n; ++i) vcount *= q;
        entries.assign(vcount * static_cast<std::uint64_t>(n), 0);
        for (std::uint64_t key = 0; key < vcount; ++key) {
            std::uint64_t x = key;
            for (int i = n; i-- > 0;) {
                entries[key * n + i] = static_cast<Felt>(x % q);
                x /= q;
            }
        }
    }

    std::uint64_t key_of(const Felt* v) const {
        std::uint64_t q = F.size(), key = 0;
        for (int i = 0; i < n; ++i) key = key * q + v[i];
        return key;
    }

    // key of (a + c * b)
    std::uint64_t add_scaled(std::uint64_t a, Felt c, std::uint64_t b) const {
        const Felt* pa = &entries[a * n];
        const Felt* pb = &entries[b * n];
        std::uint64_t q = F.size(), key = 0;
        for (int i = 0; i < n; ++i)
            key = key * q + F.add(pa[i], F.mul(c, pb[i]));
        return key;
    }

    MatF to_matrix(const FieldPtr& field, const std::vector<std::uint64_t>& row_keys) const {
        MatF m = mat_zero(field, n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                m.at(r, c) = entries[row_keys[r] * n + c];
        return m;
    }

    // Depth-first extension: rows[0..level) are fixed and independent,
    // span/marks hold their linear span.  Emits completed matrices in
    // ascending key order given the fixed prefix.
    void extend(const FieldPtr& field, int level, std::vector<std::uint64_t>& rows,
                std::vector<std::uint64_t>& span, std::vector<char>& marks,
                std::vector<MatF>& out) const {
        if (level == n) {
            out.push_back(to_matrix(field, rows));
            return;
        }
        unsigned q = static_cast<unsigned>(F.size());
        for (std::uint64_t key = 1; key < vcount; ++key) {
            if (marks[key]) continue;
            rows[level] = key;
            std::size_t old_size = span.size();
            for (std::size_t i = 0; i < old_size; ++i)
                for (unsigned c = 1; c < q; ++c) {
                    std::uint64_t s = add_scaled(span[i], static_cast<Felt>(c), key);
                    span.push_back(s);
                    marks[s] = 1;
                }
            extend(field, level + 1, rows, span, marks, out);
            for (std::size_t i = old_size; i < span.size(); ++i) marks[span[i]] = 0;
            span.resize(old_size);
        }
    }
};

void check_enumerable(const GroupParams& params, std::uint64_t cap) {
    if (params.n <= 0 || !params.field) throw Error("group parameters are incomplete");
    std::uint64_t q = params.field->size();
    std::uint64_t total = 1;
    for (int i = 0; i < params.n * params.n; ++i) {
        if (total > cap / q) throw EnumerationTooLarge("q^(n^2) exceeds the enumeration cap");
        total *= q;
    }
    if (total > cap) throw EnumerationTooLarge("q^(n^2) exceeds the enumeration cap");
}

} // namespace

Family enumerate_gl_serial(const GroupParams& params, std::uint64_t cap) {
    check_enumerable(params, cap);
    RowEnumerator en(params);
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(params.n));
    std::vector<std::uint64_t> span{0};
    std::vector<char> marks(en.vcount, 0);
    marks[0] = 1;
    std::vector<MatF> out;
    en.extend(params.field, 0, rows, span, marks, out);
    Family fam;
    fam.params = params;
    fam.members = std::move(out); // emitted in ascending key order, no duplicates
    return fam;
}

Family enumerate_gl(const GroupParams& params, std::uint64_t cap) {
    check_enumerable(params, cap);
    RowEnumerator en(params);
    std::uint64_t vcount = en.vcount;
    std::vector<std::vector<MatF>> buckets(vcount);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::int64_t first = 1; first < static_cast<std::int64_t>(vcount); ++first) {
        std::uint64_t key = static_cast<std::uint64_t>(first);
        std::vector<std::uint64_t> rows(static_cast<std::size_t>(params.n));
        std::vector<std::uint64_t> span{0};
        std::vector<char> marks(vcount, 0);
        marks[0] = 1;
        rows[0] = key;
        unsigned q = static_cast<unsigned>(params.field->size());
        for (unsigned c = 1; c < q; ++c) {
            std::uint64_t s = en.add_scaled(0, static_cast<Felt>(c), key);
            span.push_back(s);
            marks[s] = 1;
        }
        en.extend(params.field, 1, rows, span, marks, buckets[key]);
    }

    Family fam;
    fam.params = params;
    std::size_t total = 0;
    for (const auto& b : buckets) total += b.size();
    fam.members.reserve(total);
    for (auto& b : buckets)
        for (MatF& m : b) fam.members.push_back(std::move(m));
    return fam;
}

Family stabilizer(const GroupParams& params, const VecF& v) {
    if (!v.field || !params.field || !v.field->same_as(*params.field))
        throw FieldMismatch("stabilized vector lives over the wrong field");
    if (v.dim() != params.n) throw ShapeMismatch("stabilized vector has the wrong dimension");
    if (v.is_zero()) throw ZeroVector("the zero vector is fixed by everything");
    Family all = enumerate_gl(params);
    Family fam;
    fam.params = params;
    for (MatF& m : all.members)
        if (vec_mat(v, m) == v) fam.members.push_back(std::move(m));
    return fam;
}

Family coset(const Family& fam, const MatF& g, Side side) {
    if (!g.field || !fam.params.field || !g.field->same_as(*fam.params.field))
        throw FieldMismatch("translate lives over the wrong field");
    if (g.rows != fam.params.n || g.cols != fam.params.n)
        throw ShapeMismatch("translate has the wrong shape");
    if (!is_invertible(g)) throw SingularTranslate("coset translate is singular");
    std::vector<MatF> moved;
    moved.reserve(fam.size());
    for (const MatF& m : fam.members)
        moved.push_back(side == Side::Left ? mat_mul(g, m) : mat_mul(m, g));
    return make_family(fam.params, std::move(moved));
}

} // namespace ekrgl
