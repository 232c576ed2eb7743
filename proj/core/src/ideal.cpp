#include "chern/ideal.hpp"

#include <algorithm>
#include <utility>

#include "chern/errors.hpp"

namespace chern {

struct IdealHandle::State {
    RingPtr ring;
    std::vector<Polynomial> gens;
    bool homogeneous = true;

    std::mutex mu;
    // Keyed by (order kind, elimination block size).
    std::map<std::pair<int, std::size_t>, std::shared_ptr<const GroebnerBasis>> gb;
};

namespace {

std::pair<int, std::size_t> order_key(const MonomialOrder& ord) {
    int kind = 0;
    switch (ord.kind()) {
        case MonomialOrder::Kind::grevlex: kind = 0; break;
        case MonomialOrder::Kind::lex: kind = 1; break;
        case MonomialOrder::Kind::block_elimination: kind = 2; break;
    }
    return {kind, ord.lead_block()};
}

void check_same_ring(const IdealHandle& J, const IdealHandle& K) {
    if (!J.valid() || !K.valid()) throw internal_error("operation on an empty ideal handle");
    if (J.ring_ptr() == K.ring_ptr()) return;
    if (!same_ring(J.ring(), K.ring())) {
        throw structural_error("ideals of different rings cannot be combined");
    }
}

void check_element(const Polynomial& f, const RingPresentation& R) {
    if (f.field() != R.field() || f.nvars() != R.nvars()) {
        throw structural_error("polynomial does not live in the ideal's ring");
    }
}

// Polynomials in A = k[x_1..x_n] embedded into k[t, x_1..x_n] with the
// elimination variable in front, so block_elimination(1) orders t-first.
Polynomial prepend_variable(const Polynomial& f, const MonomialOrder& ext_ord) {
    std::vector<Term> terms;
    terms.reserve(f.nterms());
    for (const auto& t : f.terms()) {
        std::vector<std::uint32_t> exps;
        exps.reserve(t.mon.nvars() + 1);
        exps.push_back(0);
        for (std::size_t i = 0; i < t.mon.nvars(); ++i) exps.push_back(t.mon.exponent(i));
        terms.push_back(Term{Monomial(std::move(exps)), t.coeff});
    }
    return Polynomial::from_terms(f.field(), f.nvars() + 1, ext_ord, std::move(terms));
}

Polynomial strip_first_variable(const Polynomial& f, const MonomialOrder& base_ord) {
    std::vector<Term> terms;
    terms.reserve(f.nterms());
    for (const auto& t : f.terms()) {
        internal_check(t.mon.exponent(0) == 0, "residual elimination variable");
        std::vector<std::uint32_t> exps;
        exps.reserve(t.mon.nvars() - 1);
        for (std::size_t i = 1; i < t.mon.nvars(); ++i) exps.push_back(t.mon.exponent(i));
        terms.push_back(Term{Monomial(std::move(exps)), t.coeff});
    }
    return Polynomial::from_terms(f.field(), f.nvars() - 1, base_ord, std::move(terms));
}

// Generators of (t*J + (1-t)*K) in the extended ring, where J and K are given
// by full ambient generating sets (already including b).
std::vector<Polynomial> elimination_input(const RingPresentation& R,
                                          const std::vector<Polynomial>& left,
                                          const std::vector<Polynomial>& right,
                                          const MonomialOrder& ext_ord) {
    const std::size_t next = R.nvars() + 1;
    const FieldDescriptor f = R.field();
    const Polynomial t =
        Polynomial::term(f, ext_ord, Monomial::variable(next, 0), Scalar::one(f));
    const Polynomial one_minus_t =
        Polynomial::constant(f, next, ext_ord, Scalar::one(f)) - t;

    std::vector<Polynomial> gens;
    gens.reserve(left.size() + right.size());
    for (const auto& g : left) gens.push_back(t * prepend_variable(g, ext_ord));
    for (const auto& g : right) gens.push_back(one_minus_t * prepend_variable(g, ext_ord));
    return gens;
}

// Elements of the reduced basis not involving the elimination variable, mapped
// back to the ambient ring.
std::vector<Polynomial> eliminate_first_variable(const std::vector<Polynomial>& ext_gens,
                                                 const MonomialOrder& ext_ord,
                                                 const MonomialOrder& base_ord) {
    const GroebnerBasis gb = groebner(ext_gens, ext_ord);
    std::vector<Polynomial> kept;
    for (const auto& g : gb.elements) {
        if (g.leading_monomial().exponent(0) == 0) {
            kept.push_back(strip_first_variable(g, base_ord));
        }
    }
    return kept;
}

std::vector<Polynomial> full_generators(const IdealHandle& J) {
    std::vector<Polynomial> gens = J.generators();
    const auto& b = J.ring().defining_generators();
    gens.insert(gens.end(), b.begin(), b.end());
    return gens;
}

} // namespace

IdealHandle::IdealHandle(RingPtr ring, std::vector<Polynomial> generators)
    : state_(std::make_shared<State>()) {
    if (!ring) throw internal_error("ideal over a null ring");
    state_->ring = std::move(ring);
    const RingPresentation& R = *state_->ring;
    for (auto& g : generators) {
        check_element(g, R);
        if (g.is_zero()) continue;
        state_->gens.push_back(g.with_order(R.default_order()));
        if (!R.graded_degree(state_->gens.back()).has_value()) {
            state_->homogeneous = false;
        }
    }
}

const RingPresentation& IdealHandle::ring() const {
    internal_check(valid(), "empty ideal handle");
    return *state_->ring;
}

const RingPtr& IdealHandle::ring_ptr() const {
    internal_check(valid(), "empty ideal handle");
    return state_->ring;
}

const std::vector<Polynomial>& IdealHandle::generators() const {
    internal_check(valid(), "empty ideal handle");
    return state_->gens;
}

bool IdealHandle::homogeneous() const {
    internal_check(valid(), "empty ideal handle");
    return state_->homogeneous;
}

const GroebnerBasis& IdealHandle::groebner_basis() const {
    return groebner_basis(ring().default_order());
}

const GroebnerBasis& IdealHandle::groebner_basis(const MonomialOrder& ord) const {
    internal_check(valid(), "empty ideal handle");
    State& st = *state_;
    const auto key = order_key(ord);
    {
        std::lock_guard<std::mutex> lock(st.mu);
        auto it = st.gb.find(key);
        if (it != st.gb.end()) return *it->second;
    }
    auto computed = std::make_shared<const GroebnerBasis>(groebner(full_generators(*this), ord));
    std::lock_guard<std::mutex> lock(st.mu);
    auto [it, inserted] = st.gb.emplace(key, std::move(computed));
    return *it->second;
}

bool IdealHandle::is_zero_ideal() const { return groebner_basis().is_zero(); }

bool IdealHandle::is_unit_ideal() const { return groebner_basis().is_unit(); }

IdealHandle zero_ideal(const RingPtr& ring) { return IdealHandle(ring, {}); }

IdealHandle unit_ideal(const RingPtr& ring) {
    return IdealHandle(ring, {ring->constant(Scalar::one(ring->field()))});
}

IdealHandle maximal_ideal(const RingPtr& ring) {
    std::vector<Polynomial> gens;
    gens.reserve(ring->nvars());
    for (std::size_t i = 0; i < ring->nvars(); ++i) gens.push_back(ring->variable(i));
    return IdealHandle(ring, std::move(gens));
}

IdealHandle maximal_ideal_power(const RingPtr& ring, unsigned n) {
    if (n == 0) return unit_ideal(ring);
    const std::size_t nv = ring->nvars();
    std::vector<Polynomial> gens;
    std::vector<std::uint32_t> exps(nv, 0);
    // Enumerate exponent vectors of total degree n.
    const Scalar one = Scalar::one(ring->field());
    const MonomialOrder& ord = ring->default_order();
    auto emit = [&]() {
        gens.push_back(Polynomial::term(ring->field(), ord, Monomial(exps), one));
    };
    auto rec = [&](auto&& self, std::size_t idx, unsigned remaining) -> void {
        if (idx + 1 == nv) {
            exps[idx] = remaining;
            emit();
            exps[idx] = 0;
            return;
        }
        for (unsigned e = 0; e <= remaining; ++e) {
            exps[idx] = e;
            self(self, idx + 1, remaining - e);
        }
        exps[idx] = 0;
    };
    rec(rec, 0, n);
    return IdealHandle(ring, std::move(gens));
}

bool ideal_membership(const Polynomial& f, const IdealHandle& J) {
    check_element(f, J.ring());
    return gb_normal_form(f, J.groebner_basis()).is_zero();
}

bool ideal_contains(const IdealHandle& J, const IdealHandle& K) {
    check_same_ring(J, K);
    for (const auto& g : K.generators()) {
        if (!ideal_membership(g, J)) return false;
    }
    return true;
}

bool ideal_equals(const IdealHandle& J, const IdealHandle& K) {
    check_same_ring(J, K);
    const auto& a = J.groebner_basis().elements;
    const auto& b = K.groebner_basis().elements;
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(a[i] == b[i])) return false;
    }
    return true;
}

IdealHandle ideal_sum(const IdealHandle& J, const IdealHandle& K) {
    check_same_ring(J, K);
    std::vector<Polynomial> gens = J.generators();
    const auto& kg = K.generators();
    gens.insert(gens.end(), kg.begin(), kg.end());
    return IdealHandle(J.ring_ptr(), std::move(gens));
}

IdealHandle ideal_product(const IdealHandle& J, const IdealHandle& K) {
    check_same_ring(J, K);
    std::vector<Polynomial> gens;
    gens.reserve(J.generators().size() * K.generators().size());
    for (const auto& a : J.generators()) {
        for (const auto& b : K.generators()) gens.push_back(a * b);
    }
    return IdealHandle(J.ring_ptr(), std::move(gens));
}

IdealHandle ideal_power(const IdealHandle& J, unsigned n) {
    if (!J.valid()) throw internal_error("power of an empty ideal handle");
    if (n == 0) return unit_ideal(J.ring_ptr());
    IdealHandle acc = J;
    for (unsigned k = 1; k < n; ++k) {
        // Collapse through the Groebner basis to keep generator counts small;
        // basis elements generate the same full preimage.
        IdealHandle collapsed(acc.ring_ptr(), acc.groebner_basis().elements);
        acc = ideal_product(collapsed, J);
    }
    return acc;
}

IdealHandle ideal_intersection(const IdealHandle& J, const IdealHandle& K) {
    check_same_ring(J, K);
    const RingPresentation& R = J.ring();
    const MonomialOrder ext_ord = MonomialOrder::block_elimination(1);
    const auto gens =
        elimination_input(R, full_generators(J), full_generators(K), ext_ord);
    auto kept = eliminate_first_variable(gens, ext_ord, R.default_order());
    return IdealHandle(J.ring_ptr(), std::move(kept));
}

IdealHandle colon_by_element(const IdealHandle& J, const Polynomial& f) {
    const RingPresentation& R = J.ring();
    check_element(f, R);
    if (f.is_zero()) throw argument_error("colon by the zero element");
    const MonomialOrder ext_ord = MonomialOrder::block_elimination(1);
    // (J cap (f)) : computed in the ambient ring with J's full preimage on the
    // left and the pure principal ideal (f) on the right, so every element of
    // the intersection is an honest multiple of f.
    const auto gens = elimination_input(R, full_generators(J), {f}, ext_ord);
    const auto meet = eliminate_first_variable(gens, ext_ord, R.default_order());
    std::vector<Polynomial> quotients;
    quotients.reserve(meet.size());
    const std::vector<Polynomial> divisor{f.with_order(R.default_order())};
    for (const auto& g : meet) {
        DivisionResult dr = divide_reduce(g, divisor);
        internal_check(dr.remainder.is_zero(), "inexact division in colon computation");
        quotients.push_back(dr.quotients[0]);
    }
    return IdealHandle(J.ring_ptr(), std::move(quotients));
}

IdealHandle colon_by_ideal(const IdealHandle& J, const IdealHandle& K) {
    check_same_ring(J, K);
    if (K.generators().empty()) throw argument_error("colon by the zero ideal");
    IdealHandle result;
    bool first = true;
    for (const auto& f : K.generators()) {
        IdealHandle part = colon_by_element(J, f);
        result = first ? part : ideal_intersection(result, part);
        first = false;
    }
    return result;
}

} // namespace chern
