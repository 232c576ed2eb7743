#ifndef CHERN_POLYNOMIAL_HPP
#define CHERN_POLYNOMIAL_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chern/field.hpp"
#include "chern/monomial.hpp"
#include "chern/scalar.hpp"

namespace chern {

struct Term {
    Monomial mon;
    Scalar coeff;
};

// Sparse multivariate polynomial: terms with nonzero coefficients, kept
// strictly descending under the attached monomial order.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(FieldDescriptor field, std::size_t nvars, MonomialOrder order);

    static Polynomial zero(FieldDescriptor field, std::size_t nvars, MonomialOrder order);
    static Polynomial constant(FieldDescriptor field, std::size_t nvars, MonomialOrder order,
                               const Scalar& c);
    static Polynomial term(FieldDescriptor field, MonomialOrder order, Monomial m, Scalar c);
    static Polynomial from_terms(FieldDescriptor field, std::size_t nvars, MonomialOrder order,
                                 std::vector<Term> terms);

    const FieldDescriptor& field() const { return field_; }
    std::size_t nvars() const { return nvars_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t nterms() const { return terms_.size(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.is_one());
    }

    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().mon; }
    const Scalar& leading_coefficient() const { return leading_term().coeff; }

    // Total degree of the highest-degree term (0 for the zero polynomial).
    std::uint64_t total_degree() const;
    // Weighted degree if homogeneous, nullopt otherwise.
    std::optional<std::uint64_t> homogeneous_degree(const std::vector<std::uint32_t>& weights) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial& operator+=(const Polynomial& rhs) { return *this = *this + rhs; }
    Polynomial& operator-=(const Polynomial& rhs) { return *this = *this - rhs; }

    Polynomial scaled(const Scalar& c) const;
    Polynomial times_term(const Monomial& m, const Scalar& c) const;
    Polynomial monic() const;

    // Same polynomial resorted under a different order.
    Polynomial with_order(const MonomialOrder& ord) const;

    bool operator==(const Polynomial& rhs) const;
    bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

    // Canonical text: terms grevlex-descending, signs folded into coefficients.
    std::string to_string(const std::vector<std::string>& names) const;

private:
    void check_compatible(const Polynomial& rhs) const;

    FieldDescriptor field_;
    std::size_t nvars_ = 0;
    MonomialOrder order_ = MonomialOrder::grevlex();
    std::vector<Term> terms_;
};

struct DivisionResult {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};

// Multivariate division: f = sum(quotients[i] * divisors[i]) + remainder, no
// remainder term divisible by any divisor leading monomial, and
// lm(quotients[i] * divisors[i]) <= lm(f) for every i.
DivisionResult divide_reduce(const Polynomial& f, std::span<const Polynomial> divisors);

// Remainder-only fast path of divide_reduce.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors);

} // namespace chern

#endif
