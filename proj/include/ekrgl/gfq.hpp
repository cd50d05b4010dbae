#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "ekrgl/errors.hpp"

namespace ekrgl {

/// Field element, encoded as an integer in [0, q).  For GF(p^d) the base-p
/// digits of the value are the polynomial-basis coefficients, least
/// significant digit = constant term.  0 is the additive identity, 1 the
/// multiplicative identity.
using Felt = std::uint16_t;

/// Polynomial over a field, coefficient at index i belongs to x^i.
using Poly = std::vector<Felt>;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// A finite field GF(q).  Prime fields carry no base; extension fields are
/// built over a base field with a monic irreducible modulus and encode
/// elements as base-|base| digit strings.  Instances are immutable after
/// construction and safe to share across threads; all operations are pure.
class Field {
public:
    static constexpr unsigned kDefaultMaxQ = 256;  // cap for field_new
    static constexpr unsigned kTableMaxQ = 256;    // eager lookup tables up to here

    unsigned characteristic() const { return p_; }
    /// Extension degree over the prime field GF(p).
    unsigned degree() const { return prime_degree_; }
    unsigned size() const { return q_; }

    /// Base field of the extension (null for GF(p) itself).
    const FieldPtr& base() const { return base_; }
    /// Degree over base(); 1 for prime fields.
    unsigned ext_degree() const { return ext_degree_; }
    /// Monic modulus over base(), length ext_degree()+1, leading coeff 1.
    /// Prime fields use the degree-1 convention modulus = [0, 1] (i.e. x).
    const Poly& modulus() const { return modulus_; }

    Felt add(Felt a, Felt b) const;
    Felt sub(Felt a, Felt b) const;
    Felt neg(Felt a) const;
    Felt mul(Felt a, Felt b) const;
    Felt inv(Felt a) const;  // throws DivisionByZero on 0
    Felt pow(Felt a, unsigned long long e) const;

    /// Digits of v in base |base()| (low digit first), length ext_degree().
    std::vector<Felt> digits(Felt v) const;
    Felt from_digits(const std::vector<Felt>& ds) const;

    /// Structural equality: same characteristic, tower shape and modulus.
    bool same_as(const Field& other) const;

    friend FieldPtr field_new(unsigned p, unsigned d, unsigned max_q);
    friend FieldPtr extension_new(const FieldPtr& base, unsigned degree,
                                  unsigned max_q);

private:
    Field() = default;
    void build_tables();
    Felt mul_raw(Felt a, Felt b) const;  // polynomial multiply mod modulus

    unsigned p_ = 0;
    unsigned prime_degree_ = 1;
    unsigned q_ = 0;
    unsigned ext_degree_ = 1;
    Poly modulus_;
    FieldPtr base_;  // null for prime fields

    // Eager tables for q <= kTableMaxQ; larger fields compute on the fly.
    std::vector<Felt> add_table_;  // q*q
    std::vector<Felt> mul_table_;  // q*q
    std::vector<Felt> inv_table_;  // q
    std::vector<Felt> reduction_;  // digits of x^(n+j) mod modulus, row-major
};

/// Canonical GF(p^d): the modulus is the lexicographically smallest monic
/// irreducible polynomial of degree d over GF(p), coefficients compared
/// low-degree-first.  Deterministic across runs.
FieldPtr field_new(unsigned p, unsigned d, unsigned max_q = Field::kDefaultMaxQ);

/// Canonical degree-n extension of an arbitrary base field, same modulus
/// convention.  Used for GF(q^n) viewed over GF(q) in spread construction.
FieldPtr extension_new(const FieldPtr& base, unsigned degree,
                       unsigned max_q = 65535);

/// GF(q) for a prime power q = p^d (NonPrimeCharacteristic otherwise).
FieldPtr field_of_order(unsigned q, unsigned max_q = Field::kDefaultMaxQ);

bool is_prime(unsigned n);

/// Monic irreducibility by trial division against all monic polynomials of
/// degree <= deg(f)/2 over the coefficient field.
bool poly_irreducible(const Field& coeffs, const Poly& f);

Poly poly_mul(const Field& coeffs, const Poly& a, const Poly& b);
Poly poly_rem(const Field& coeffs, const Poly& a, const Poly& b);
int poly_degree(const Poly& a);  // -1 for the zero polynomial

} // namespace ekrgl
