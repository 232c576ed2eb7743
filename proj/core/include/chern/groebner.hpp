#ifndef CHERN_GROEBNER_HPP
#define CHERN_GROEBNER_HPP

#include <vector>

#include "chern/polynomial.hpp"

namespace chern {

// Reduced Groebner basis: monic elements, no term divisible by another
// element's leading monomial, sorted descending by leading monomial.
struct GroebnerBasis {
    std::vector<Polynomial> elements;
    MonomialOrder order = MonomialOrder::grevlex();

    bool is_unit() const {
        return elements.size() == 1 && elements[0].is_constant() && !elements[0].is_zero();
    }
    bool is_zero() const { return elements.empty(); }
};

// S-polynomial of two nonzero polynomials under their common order.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

// Buchberger's algorithm with normal pair selection (minimal lcm degree) and
// the product and chain elimination criteria; returns the reduced basis.
GroebnerBasis groebner(std::vector<Polynomial> gens, const MonomialOrder& ord);

Polynomial gb_normal_form(const Polynomial& f, const GroebnerBasis& gb);

// S-pair criterion test, quadratic; intended for tests and verification.
bool is_groebner_basis(const std::vector<Polynomial>& basis);

} // namespace chern

#endif
