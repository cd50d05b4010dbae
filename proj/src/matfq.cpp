#include "ekrgl/matfq.hpp"

#include <algorithm>
#include <string>

namespace ekrgl {

namespace {

void require_same_field(const FieldPtr& a, const FieldPtr& b) {
    if (!a || !b || !a->same_as(*b))
        throw FieldMismatch("operands belong to different fields");
}

} // namespace

bool VecF::is_zero() const {
    return std::all_of(e.begin(), e.end(), [](Felt x) { return x == 0; });
}

VecF MatF::row(int r) const {
    VecF v{field, {}};
    v.e.assign(e.begin() + static_cast<size_t>(r) * cols,
               e.begin() + static_cast<size_t>(r + 1) * cols);
    return v;
}

bool operator==(const VecF& a, const VecF& b) {
    return a.field && b.field && a.field->same_as(*b.field) && a.e == b.e;
}

bool operator==(const MatF& a, const MatF& b) {
    return a.field && b.field && a.field->same_as(*b.field) && a.rows == b.rows &&
           a.cols == b.cols && a.e == b.e;
}

MatF mat_zero(const FieldPtr& f, int rows, int cols) {
    return MatF{f, rows, cols, std::vector<Felt>(static_cast<size_t>(rows) * cols, 0)};
}

MatF mat_identity(const FieldPtr& f, int n) {
    MatF m = mat_zero(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

MatF mat_from(const FieldPtr& f, std::initializer_list<std::initializer_list<int>> rows) {
    MatF m;
    m.field = f;
    m.rows = static_cast<int>(rows.size());
    m.cols = m.rows ? static_cast<int>(rows.begin()->size()) : 0;
    for (const auto& r : rows)
        for (int x : r) m.e.push_back(static_cast<Felt>(x));
    return m;
}

VecF vec_from(const FieldPtr& f, std::initializer_list<int> entries) {
    VecF v{f, {}};
    for (int x : entries) v.e.push_back(static_cast<Felt>(x));
    return v;
}

MatF mat_mul(const MatF& a, const MatF& b) {
    require_same_field(a.field, b.field);
    if (a.cols != b.rows) throw ShapeMismatch("mat_mul: inner dimensions differ");
    const Field& F = *a.field;
    MatF c = mat_zero(a.field, a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            Felt aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols; ++j)
                c.at(i, j) = F.add(c.at(i, j), F.mul(aik, b.at(k, j)));
        }
    return c;
}

VecF vec_mat(const VecF& v, const MatF& t) {
    require_same_field(v.field, t.field);
    if (v.dim() != t.rows) throw ShapeMismatch("vec_mat: dimension mismatch");
    const Field& F = *v.field;
    VecF r{v.field, std::vector<Felt>(static_cast<size_t>(t.cols), 0)};
    for (int k = 0; k < t.rows; ++k) {
        Felt vk = v.e[static_cast<size_t>(k)];
        if (vk == 0) continue;
        for (int j = 0; j < t.cols; ++j)
            r.e[static_cast<size_t>(j)] = F.add(r.e[static_cast<size_t>(j)], F.mul(vk, t.at(k, j)));
    }
    return r;
}

MatF mat_add(const MatF& a, const MatF& b) {
    require_same_field(a.field, b.field);
    if (a.rows != b.rows || a.cols != b.cols) throw ShapeMismatch("mat_add: shape mismatch");
    MatF c = a;
    for (size_t i = 0; i < c.e.size(); ++i) c.e[i] = a.field->add(a.e[i], b.e[i]);
    return c;
}

MatF mat_sub(const MatF& a, const MatF& b) {
    require_same_field(a.field, b.field);
    if (a.rows != b.rows || a.cols != b.cols) throw ShapeMismatch("mat_sub: shape mismatch");
    MatF c = a;
    for (size_t i = 0; i < c.e.size(); ++i) c.e[i] = a.field->sub(a.e[i], b.e[i]);
    return c;
}

MatF mat_transpose(const MatF& a) {
    MatF t = mat_zero(a.field, a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) t.at(j, i) = a.at(i, j);
    return t;
}

MatF stack_rows(const MatF& a, const MatF& b) {
    require_same_field(a.field, b.field);
    if (a.cols != b.cols) throw ShapeMismatch("stack_rows: column count differs");
    MatF s{a.field, a.rows + b.rows, a.cols, a.e};
    s.e.insert(s.e.end(), b.e.begin(), b.e.end());
    return s;
}

MatF stack_cols(const MatF& a, const MatF& b) {
    require_same_field(a.field, b.field);
    if (a.rows != b.rows) throw ShapeMismatch("stack_cols: row count differs");
    MatF s = mat_zero(a.field, a.rows, a.cols + b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) s.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols; ++j) s.at(i, a.cols + j) = b.at(i, j);
    }
    return s;
}

RrefResult rref(const MatF& a) {
    const Field& F = *a.field;
    RrefResult out;
    out.r = a;
    out.transform = mat_identity(a.field, a.rows);
    MatF& r = out.r;
    MatF& t = out.transform;
    int lead = 0;
    for (int col = 0; col < a.cols && lead < a.rows; ++col) {
        int piv = -1;
        for (int i = lead; i < a.rows; ++i)
            if (r.at(i, col) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != lead) {
            for (int j = 0; j < a.cols; ++j) std::swap(r.at(piv, j), r.at(lead, j));
            for (int j = 0; j < a.rows; ++j) std::swap(t.at(piv, j), t.at(lead, j));
        }
        Felt pinv = F.inv(r.at(lead, col));
        if (pinv != 1) {
            for (int j = 0; j < a.cols; ++j) r.at(lead, j) = F.mul(r.at(lead, j), pinv);
            for (int j = 0; j < a.rows; ++j) t.at(lead, j) = F.mul(t.at(lead, j), pinv);
        }
        for (int i = 0; i < a.rows; ++i) {
            if (i == lead) continue;
            Felt factor = r.at(i, col);
            if (factor == 0) continue;
            for (int j = 0; j < a.cols; ++j)
                r.at(i, j) = F.sub(r.at(i, j), F.mul(factor, r.at(lead, j)));
            for (int j = 0; j < a.rows; ++j)
                t.at(i, j) = F.sub(t.at(i, j), F.mul(factor, t.at(lead, j)));
        }
        out.pivots.push_back(col);
        ++lead;
    }
    out.rank = lead;
    return out;
}

Felt det(const MatF& a) {
    if (a.rows != a.cols) throw NotSquare("det requires a square matrix");
    const Field& F = *a.field;
    MatF m = a;
    int n = a.rows;
    Felt d = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (m.at(i, col) != 0) { piv = i; break; }
        if (piv < 0) return 0;
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
            d = F.neg(d);
        }
        Felt pivot = m.at(col, col);
        d = F.mul(d, pivot);
        Felt pinv = F.inv(pivot);
        for (int i = col + 1; i < n; ++i) {
            Felt factor = F.mul(m.at(i, col), pinv);
            if (factor == 0) continue;
            for (int j = col; j < n; ++j)
                m.at(i, j) = F.sub(m.at(i, j), F.mul(factor, m.at(col, j)));
        }
    }
    return d;
}

bool is_invertible(const MatF& a) {
    if (a.rows != a.cols) throw NotSquare("is_invertible requires a square matrix");
    return det(a) != 0;
}

MatF inverse(const MatF& a) {
    if (a.rows != a.cols) throw NotSquare("inverse requires a square matrix");
    RrefResult rr = rref(a);
    if (rr.rank != a.rows) throw SingularMatrix("matrix is singular");
    return rr.transform;  // transform * a = I when full rank
}

Subspace left_null_space(const MatF& a) {
    RrefResult rr = rref(a);
    MatF rows{a.field, 0, a.rows, {}};
    for (int i = rr.rank; i < a.rows; ++i) {
        for (int j = 0; j < a.rows; ++j) rows.e.push_back(rr.transform.at(i, j));
        ++rows.rows;
    }
    if (rows.rows == 0) return Subspace{a.rows, 0, rows};
    return subspace_from_rows(rows);
}

Subspace subspace_from_rows(const MatF& a) {
    RrefResult rr = rref(a);
    Subspace s;
    s.ambient = a.cols;
    s.dim = rr.rank;
    s.basis = MatF{a.field, rr.rank, a.cols, {}};
    s.basis.e.assign(rr.r.e.begin(), rr.r.e.begin() + static_cast<size_t>(rr.rank) * a.cols);
    return s;
}

Subspace full_space(const FieldPtr& f, int ambient) {
    return Subspace{ambient, ambient, mat_identity(f, ambient)};
}

bool subspace_eq(const Subspace& p, const Subspace& q) {
    if (p.ambient != q.ambient) throw AmbientMismatch("subspace_eq: ambient dimensions differ");
    return p.dim == q.dim && p.basis == q.basis;
}

bool subspace_contains(const Subspace& p, const VecF& v) {
    if (v.dim() != p.ambient) throw AmbientMismatch("subspace_contains: ambient mismatch");
    if (p.dim == 0) return v.is_zero();
    MatF stacked = p.basis;
    stacked.e.insert(stacked.e.end(), v.e.begin(), v.e.end());
    stacked.rows += 1;
    return rref(stacked).rank == p.dim;
}

int subspace_intersection_dim(const Subspace& p, const Subspace& q) {
    if (p.ambient != q.ambient)
        throw AmbientMismatch("subspace_intersection_dim: ambient mismatch");
    if (p.dim == 0 || q.dim == 0) return 0;
    MatF stacked = stack_rows(p.basis, q.basis);
    return p.dim + q.dim - rref(stacked).rank;
}

namespace {

std::uint64_t key_of(const FieldPtr& f, const std::vector<Felt>& entries) {
    std::uint64_t q = f->size();
    std::uint64_t key = 0;
    for (Felt x : entries) {
        if (key > (UINT64_MAX - x) / q)
            throw Error("integer key exceeds 64 bits");
        key = key * q + x;
    }
    return key;
}

std::vector<Felt> entries_from_key(const FieldPtr& f, size_t count, std::uint64_t key) {
    std::uint64_t q = f->size();
    std::vector<Felt> e(count, 0);
    for (size_t i = count; i-- > 0;) {
        e[i] = static_cast<Felt>(key % q);
        key /= q;
    }
    if (key != 0) throw Error("key out of range for the given shape");
    return e;
}

} // namespace

std::uint64_t matrix_key(const MatF& a) { return key_of(a.field, a.e); }
std::uint64_t vector_key(const VecF& v) { return key_of(v.field, v.e); }

MatF mat_from_key(const FieldPtr& f, int rows, int cols, std::uint64_t key) {
    return MatF{f, rows, cols, entries_from_key(f, static_cast<size_t>(rows) * cols, key)};
}

VecF vec_from_key(const FieldPtr& f, int n, std::uint64_t key) {
    return VecF{f, entries_from_key(f, static_cast<size_t>(n), key)};
}

} // namespace ekrgl
