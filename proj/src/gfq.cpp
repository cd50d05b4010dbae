#include "ekrgl/gfq.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace ekrgl {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

int poly_degree(const Poly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[static_cast<size_t>(i)] != 0) return i;
    return -1;
}

Poly poly_mul(const Field& F, const Poly& a, const Poly& b) {
    int da = poly_degree(a), db = poly_degree(b);
    if (da < 0 || db < 0) return {};
    Poly c(static_cast<size_t>(da + db + 1), 0);
    for (int i = 0; i <= da; ++i) {
        if (a[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j <= db; ++j)
            c[static_cast<size_t>(i + j)] =
                F.add(c[static_cast<size_t>(i + j)],
                      F.mul(a[static_cast<size_t>(i)], b[static_cast<size_t>(j)]));
    }
    return c;
}

Poly poly_rem(const Field& F, const Poly& a, const Poly& b) {
    int db = poly_degree(b);
    assert(db >= 0);
    Poly r = a;
    Felt lead_inv = F.inv(b[static_cast<size_t>(db)]);
    for (int i = poly_degree(r); i >= db; i = poly_degree(r)) {
        Felt factor = F.mul(r[static_cast<size_t>(i)], lead_inv);
        for (int j = 0; j <= db; ++j) {
            size_t k = static_cast<size_t>(i - db + j);
            r[k] = F.sub(r[k], F.mul(factor, b[static_cast<size_t>(j)]));
        }
    }
    r.resize(static_cast<size_t>(db > 0 ? db : 0));
    if (r.empty()) r.push_back(0);
    return r;
}

bool poly_irreducible(const Field& F, const Poly& f) {
    int d = poly_degree(f);
    if (d < 1) return false;
    if (d == 1) return true;
    unsigned q = F.size();
    // all monic divisor candidates of degree e, low coefficients odometer
    for (int e = 1; e <= d / 2; ++e) {
        std::vector<Felt> low(static_cast<size_t>(e), 0);
        while (true) {
            Poly g(low.begin(), low.end());
            g.push_back(1);
            if (poly_degree(poly_rem(F, f, g)) < 0) return false;
            int pos = 0;
            while (pos < e && low[static_cast<size_t>(pos)] == q - 1) {
                low[static_cast<size_t>(pos)] = 0;
                ++pos;
            }
            if (pos == e) break;
            ++low[static_cast<size_t>(pos)];
        }
    }
    return true;
}

std::vector<Felt> Field::digits(Felt v) const {
    unsigned b = base_ ? base_->size() : p_;
    std::vector<Felt> ds(ext_degree_, 0);
    unsigned x = v;
    for (unsigned i = 0; i < ext_degree_; ++i) {
        ds[i] = static_cast<Felt>(x % b);
        x /= b;
    }
    return ds;
}

Felt Field::from_digits(const std::vector<Felt>& ds) const {
    unsigned b = base_ ? base_->size() : p_;
    unsigned v = 0;
    for (size_t i = ds.size(); i-- > 0;) v = v * b + ds[i];
    return static_cast<Felt>(v);
}

Felt Field::add(Felt a, Felt b) const {
    if (!add_table_.empty()) return add_table_[static_cast<size_t>(a) * q_ + b];
    if (!base_) return static_cast<Felt>((static_cast<unsigned>(a) + b) % p_);
    auto da = digits(a), db = digits(b);
    for (unsigned i = 0; i < ext_degree_; ++i) da[i] = base_->add(da[i], db[i]);
    return from_digits(da);
}

Felt Field::neg(Felt a) const {
    if (!base_) return static_cast<Felt>((p_ - a) % p_);
    auto da = digits(a);
    for (auto& d : da) d = base_->neg(d);
    return from_digits(da);
}

Felt Field::sub(Felt a, Felt b) const { return add(a, neg(b)); }

Felt Field::mul_raw(Felt a, Felt b) const {
    if (!base_) return static_cast<Felt>((static_cast<unsigned>(a) * b) % p_);
    auto da = digits(a), db = digits(b);
    unsigned n = ext_degree_;
    std::vector<Felt> c(2 * n - 1, 0);
    for (unsigned i = 0; i < n; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < n; ++j)
            c[i + j] = base_->add(c[i + j], base_->mul(da[i], db[j]));
    }
    // fold x^(n+j) using the precomputed reduction rows
    for (unsigned k = 2 * n - 2; k >= n && k < 2 * n; --k) {
        Felt coeff = c[k];
        if (coeff == 0) continue;
        c[k] = 0;
        const Felt* red = &reduction_[(k - n) * n];
        for (unsigned i = 0; i < n; ++i)
            c[i] = base_->add(c[i], base_->mul(coeff, red[i]));
    }
    c.resize(n);
    return from_digits(c);
}

Felt Field::mul(Felt a, Felt b) const {
    if (!mul_table_.empty()) return mul_table_[static_cast<size_t>(a) * q_ + b];
    return mul_raw(a, b);
}

Felt Field::pow(Felt a, unsigned long long e) const {
    Felt r = 1, x = a;
    while (e) {
        if (e & 1) r = mul(r, x);
        x = mul(x, x);
        e >>= 1;
    }
    return r;
}

Felt Field::inv(Felt a) const {
    if (a == 0) throw DivisionByZero("inverse of zero in GF(" + std::to_string(q_) + ")");
    if (!inv_table_.empty()) return inv_table_[a];
    return pow(a, q_ - 2);
}

void Field::build_tables() {
    if (ext_degree_ > 1) {
        // reduction rows: digits of x^(n+j) mod modulus for j in [0, n-2]
        unsigned n = ext_degree_;
        reduction_.assign(static_cast<size_t>(n > 1 ? n - 1 : 0) * n, 0);
        Poly xk(n + 1, 0);  // x^n to start
        xk[n] = 1;
        for (unsigned j = 0; j + 1 < n; ++j) {
            Poly r = poly_rem(*base_, xk, modulus_);
            r.resize(n, 0);
            std::copy(r.begin(), r.end(), reduction_.begin() + j * n);
            // multiply by x for the next row
            xk.insert(xk.begin(), 0);
        }
        if (n == 1) {
            // K = base[x]/(x - c): identified with base via the constant term
            reduction_.clear();
        }
    }
    if (q_ > kTableMaxQ) return;
    add_table_.resize(static_cast<size_t>(q_) * q_);
    mul_table_.resize(static_cast<size_t>(q_) * q_);
    inv_table_.assign(q_, 0);
    for (unsigned a = 0; a < q_; ++a) {
        for (unsigned b = 0; b < q_; ++b) {
            Felt s, m;
            if (!base_) {
                s = static_cast<Felt>((a + b) % p_);
                m = static_cast<Felt>((a * b) % p_);
            } else {
                auto da = digits(static_cast<Felt>(a)), db = digits(static_cast<Felt>(b));
                for (unsigned i = 0; i < ext_degree_; ++i) da[i] = base_->add(da[i], db[i]);
                s = from_digits(da);
                m = mul_raw(static_cast<Felt>(a), static_cast<Felt>(b));
            }
            add_table_[static_cast<size_t>(a) * q_ + b] = s;
            mul_table_[static_cast<size_t>(a) * q_ + b] = m;
            if (m == 1) inv_table_[a] = static_cast<Felt>(b);
        }
    }
}

bool Field::same_as(const Field& other) const {
    if (p_ != other.p_ || q_ != other.q_ || prime_degree_ != other.prime_degree_)
        return false;
    if (ext_degree_ != other.ext_degree_ || modulus_ != other.modulus_) return false;
    if (!base_ != !other.base_) return false;
    return !base_ || base_->same_as(*other.base_);
}

FieldPtr extension_new(const FieldPtr& base, unsigned degree, unsigned max_q) {
    if (!base || degree < 1)
        throw IncompatibleExtension("extension requires a base field and degree >= 1");
    unsigned long long q = 1;
    for (unsigned i = 0; i < degree; ++i) {
        q *= base->size();
        if (q > max_q)
            throw FieldTooLarge("field of order " + std::to_string(base->size()) + "^" +
                                std::to_string(degree) + " exceeds cap " +
                                std::to_string(max_q));
    }
    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = base->characteristic();
    f->prime_degree_ = base->degree() * degree;
    f->q_ = static_cast<unsigned>(q);
    f->ext_degree_ = degree;
    f->base_ = base;
    if (degree == 1) {
        f->modulus_ = {0, 1};
    } else {
        // lexicographically smallest monic irreducible, low-degree-first order
        unsigned b = base->size();
        unsigned long long total = 1;
        for (unsigned i = 0; i < degree; ++i) total *= b;
        bool found = false;
        for (unsigned long long m = 0; m < total && !found; ++m) {
            Poly cand(degree + 1, 0);
            cand[degree] = 1;
            unsigned long long x = m;
            for (unsigned i = degree; i-- > 0;) {  // c_0 is the slowest digit
                cand[i] = static_cast<Felt>(x % b);
                x /= b;
            }
            if (poly_irreducible(*base, cand)) {
                f->modulus_ = cand;
                found = true;
            }
        }
        if (!found)
            throw IncompatibleExtension("no irreducible modulus found");  // unreachable
    }
    f->build_tables();
    return f;
}

FieldPtr field_new(unsigned p, unsigned d, unsigned max_q) {
    if (!is_prime(p))
        throw NonPrimeCharacteristic(std::to_string(p) + " is not prime");
    if (d < 1) throw FieldTooLarge("extension degree must be >= 1");
    unsigned long long q = 1;
    for (unsigned i = 0; i < d; ++i) {
        q *= p;
        if (q > max_q)
            throw FieldTooLarge("field of order " + std::to_string(p) + "^" +
                                std::to_string(d) + " exceeds cap " +
                                std::to_string(max_q));
    }
    auto prime = std::shared_ptr<Field>(new Field());
    prime->p_ = p;
    prime->prime_degree_ = 1;
    prime->q_ = p;
    prime->ext_degree_ = 1;
    prime->modulus_ = {0, 1};
    prime->build_tables();
    if (d == 1) return prime;
    return extension_new(prime, d, max_q);
}

FieldPtr field_of_order(unsigned q, unsigned max_q) {
    if (q < 2) throw NonPrimeCharacteristic("field order must be at least 2");
    unsigned p = q;
    for (unsigned f = 2; f * f <= q; ++f)
        if (q % f == 0) {
            p = f;
            break;
        }
    unsigned d = 0, x = q;
    while (x % p == 0) {
        x /= p;
        ++d;
    }
    if (x != 1)
        throw NonPrimeCharacteristic(std::to_string(q) + " is not a prime power");
    return field_new(p, d, max_q);
}

} // namespace ekrgl
