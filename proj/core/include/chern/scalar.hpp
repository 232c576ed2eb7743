#ifndef CHERN_SCALAR_HPP
#define CHERN_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "chern/field.hpp"

namespace chern {

// Element of the coefficient field. Rationals are kept in lowest terms with
// positive denominator (GMP canonical form); prime-field residues in [0, p).
class Scalar {
public:
    Scalar() : field_(FieldDescriptor::rationals()) {}

    static Scalar zero(const FieldDescriptor& f);
    static Scalar one(const FieldDescriptor& f);
    static Scalar from_integer(const FieldDescriptor& f, long long n);
    static Scalar from_mpz(const FieldDescriptor& f, const mpz_class& n);
    // Parses "n" or "n/d" (rationals); an integer literal reduced mod p (Fp).
    static Scalar from_string(const FieldDescriptor& f, const std::string& text);
    static Scalar rational(const mpq_class& v);

    const FieldDescriptor& field() const { return field_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const;

    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

    // Rationals only.
    const mpq_class& rational_value() const;
    // Prime fields only.
    std::uint64_t residue() const;

    // True for rational scalars equal to an integer; residues always qualify.
    bool is_integral() const;

    std::string to_string() const;

private:
    void check_same_field(const Scalar& rhs) const;

    FieldDescriptor field_;
    mpq_class rat_;          // rationals
    std::uint64_t res_ = 0;  // prime fields
};

} // namespace chern

#endif
