#ifndef CHERN_QUOTIENT_HPP
#define CHERN_QUOTIENT_HPP

#include <optional>
#include <vector>

#include "chern/ideal.hpp"

namespace chern {

// ell(R/J), ell(R/(J:m)) and their difference N(J;R), the number of
// irreducible components in an irredundant irreducible decomposition of J.
struct SocleReport {
    long long colength = 0;
    long long colon_colength = 0;
    long long index_of_reducibility = 0;
};

// True when every variable has a pure power among the basis leading
// monomials, i.e. the quotient by the leading ideal is finite-dimensional.
bool finite_colength(const GroebnerBasis& gb, std::size_t nvars);

// Monomials outside the leading ideal; requires finite_colength.
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, std::size_t nvars);

// Vector-space dimension of R/J over the base field, for weighted-homogeneous
// J; nullopt when infinite.
std::optional<long long> colength(const IdealHandle& J);

// Finite colength and proper.
bool is_m_primary(const IdealHandle& J);

// J : m for the irrelevant maximal ideal m.
IdealHandle socle_colon(const IdealHandle& J);

// Requires J m-primary.
SocleReport index_of_reducibility(const IdealHandle& J);

// Every generator of J lies in m^n (with n >= 1).
bool contained_in_m_power(const IdealHandle& J, unsigned n);

// I^2 == q*I for q contained in I.
bool reduction_check(const IdealHandle& q, const IdealHandle& I);

// Index of some generator contained in the ideal of the remaining ones.
std::optional<std::size_t> redundant_generator(const IdealHandle& J);

} // namespace chern

#endif
