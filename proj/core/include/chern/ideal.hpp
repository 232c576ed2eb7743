#ifndef CHERN_IDEAL_HPP
#define CHERN_IDEAL_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "chern/groebner.hpp"
#include "chern/ring.hpp"

namespace chern {

// Ideal of R = A/b, stored as its full preimage in the ambient ring A: the
// recorded generators together with the defining ideal b.  Groebner bases are
// of generators + b and are cached per monomial order; handles share state, so
// copies reuse cached bases.
class IdealHandle {
public:
    IdealHandle() = default;
    IdealHandle(RingPtr ring, std::vector<Polynomial> generators);

    bool valid() const { return state_ != nullptr; }
    const RingPresentation& ring() const;
    const RingPtr& ring_ptr() const;

    // Nonzero recorded generators (reduced preimage representatives are not
    // computed; generators are kept as given, re-sorted to the default order).
    const std::vector<Polynomial>& generators() const;

    // True when every generator is weighted-homogeneous.
    bool homogeneous() const;

    // Reduced Groebner basis of generators + b; default order when omitted.
    const GroebnerBasis& groebner_basis() const;
    const GroebnerBasis& groebner_basis(const MonomialOrder& ord) const;

    bool is_zero_ideal() const;
    bool is_unit_ideal() const;

private:
    struct State;
    std::shared_ptr<State> state_;
};

IdealHandle zero_ideal(const RingPtr& ring);
IdealHandle unit_ideal(const RingPtr& ring);
// The irrelevant maximal ideal m = (x_1..x_n).
IdealHandle maximal_ideal(const RingPtr& ring);
// All monomials of total degree n, generating m^n (n >= 1).
IdealHandle maximal_ideal_power(const RingPtr& ring, unsigned n);

bool ideal_membership(const Polynomial& f, const IdealHandle& J);
bool ideal_contains(const IdealHandle& J, const IdealHandle& K);
bool ideal_equals(const IdealHandle& J, const IdealHandle& K);

IdealHandle ideal_sum(const IdealHandle& J, const IdealHandle& K);
IdealHandle ideal_product(const IdealHandle& J, const IdealHandle& K);
IdealHandle ideal_power(const IdealHandle& J, unsigned n);

// J : f for a nonzero ring element f, via the elimination intersection with
// the principal ideal (f) followed by exact division.
IdealHandle colon_by_element(const IdealHandle& J, const Polynomial& f);
// J : K as the intersection of the colons by the generators of K.
IdealHandle colon_by_ideal(const IdealHandle& J, const IdealHandle& K);

IdealHandle ideal_intersection(const IdealHandle& J, const IdealHandle& K);

} // namespace chern

#endif
