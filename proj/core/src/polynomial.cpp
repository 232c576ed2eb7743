#include "chern/polynomial.hpp"

#include <algorithm>

#include "chern/errors.hpp"

namespace chern {

Polynomial::Polynomial(FieldDescriptor field, std::size_t nvars, MonomialOrder order)
    : field_(field), nvars_(nvars), order_(order) {}

Polynomial Polynomial::zero(FieldDescriptor field, std::size_t nvars, MonomialOrder order) {
    return Polynomial(field, nvars, order);
}

Polynomial Polynomial::constant(FieldDescriptor field, std::size_t nvars, MonomialOrder order,
                                const Scalar& c) {
    Polynomial p(field, nvars, order);
    if (!c.is_zero()) p.terms_.push_back({Monomial::one(nvars), c});
    return p;
}

Polynomial Polynomial::term(FieldDescriptor field, MonomialOrder order, Monomial m, Scalar c) {
    Polynomial p(field, m.nvars(), order);
    if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

Polynomial Polynomial::from_terms(FieldDescriptor field, std::size_t nvars, MonomialOrder order,
                                  std::vector<Term> terms) {
    Polynomial p(field, nvars, order);
    for (const Term& t : terms)
        internal_check(t.mon.nvars() == nvars && t.coeff.field() == field,
                       "term incompatible with polynomial shape");
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return order.greater(a.mon, b.mon);
    });
    for (Term& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mon == t.mon)
            p.terms_.back().coeff += t.coeff;
        else
            p.terms_.push_back(std::move(t));
        if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    }
    return p;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw internal_error("leading term of zero polynomial");
    return terms_.front();
}

std::uint64_t Polynomial::total_degree() const {
    std::uint64_t d = 0;
    for (const Term& t : terms_) d = std::max(d, t.mon.degree());
    return d;
}

std::optional<std::uint64_t> Polynomial::homogeneous_degree(
    const std::vector<std::uint32_t>& weights) const {
    if (terms_.empty()) return 0;
    std::uint64_t d = terms_[0].mon.weighted_degree(weights);
    for (std::size_t i = 1; i < terms_.size(); ++i)
        if (terms_[i].mon.weighted_degree(weights) != d) return std::nullopt;
    return d;
}

void Polynomial::check_compatible(const Polynomial& rhs) const {
    if (field_ != rhs.field_ || nvars_ != rhs.nvars_ || !(order_ == rhs.order_))
        throw structural_error("polynomial operands have mismatched field, arity, or order");
}

Polynomial Polynomial::operator-() const {
    Polynomial out(field_, nvars_, order_);
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_) out.terms_.push_back({t.mon, -t.coeff});
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    check_compatible(rhs);
    Polynomial out(field_, nvars_, order_);
    out.terms_.reserve(terms_.size() + rhs.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < rhs.terms_.size()) {
        Ordering c = order_.compare(terms_[i].mon, rhs.terms_[j].mon);
        if (c == Ordering::GT) {
            out.terms_.push_back(terms_[i++]);
        } else if (c == Ordering::LT) {
            out.terms_.push_back(rhs.terms_[j++]);
        } else {
            Scalar s = terms_[i].coeff + rhs.terms_[j].coeff;
            if (!s.is_zero()) out.terms_.push_back({terms_[i].mon, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
    for (; j < rhs.terms_.size(); ++j) out.terms_.push_back(rhs.terms_[j]);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    return *this + (-rhs);
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    check_compatible(rhs);
    std::vector<Term> prod;
    prod.reserve(terms_.size() * rhs.terms_.size());
    for (const Term& a : terms_)
        for (const Term& b : rhs.terms_)
            prod.push_back({a.mon * b.mon, a.coeff * b.coeff});
    return from_terms(field_, nvars_, order_, std::move(prod));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    if (c.is_zero()) return zero(field_, nvars_, order_);
    Polynomial out(field_, nvars_, order_);
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_) out.terms_.push_back({t.mon, t.coeff * c});
    return out;
}

Polynomial Polynomial::times_term(const Monomial& m, const Scalar& c) const {
    if (c.is_zero()) return zero(field_, nvars_, order_);
    Polynomial out(field_, nvars_, order_);
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_) out.terms_.push_back({t.mon * m, t.coeff * c});
    return out;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coefficient().inverse());
}

Polynomial Polynomial::with_order(const MonomialOrder& ord) const {
    if (ord == order_) return *this;
    std::vector<Term> ts = terms_;
    Polynomial out = from_terms(field_, nvars_, ord, std::move(ts));
    return out;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
    if (field_ != rhs.field_ || nvars_ != rhs.nvars_) return false;
    if (terms_.size() != rhs.terms_.size()) return false;
    if (order_ == rhs.order_) {
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].mon != rhs.terms_[i].mon || terms_[i].coeff != rhs.terms_[i].coeff)
                return false;
        return true;
    }
    return with_order(MonomialOrder::grevlex()) == rhs.with_order(MonomialOrder::grevlex());
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::vector<Term> ts = terms_;
    MonomialOrder g = MonomialOrder::grevlex();
    if (!(order_ == g))
        std::sort(ts.begin(), ts.end(),
                  [&](const Term& a, const Term& b) { return g.greater(a.mon, b.mon); });

    std::string out;
    bool first = true;
    for (const Term& t : ts) {
        std::string coeff = t.coeff.to_string();
        bool negative = !coeff.empty() && coeff[0] == '-';
        std::string mag = negative ? coeff.substr(1) : coeff;
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        if (t.mon.is_one()) {
            out += mag;
        } else if (mag == "1") {
            out += t.mon.to_string(names);
        } else {
            out += mag + "*" + t.mon.to_string(names);
        }
    }
    return out;
}

namespace {

// Index of the first divisor whose leading monomial divides m, or npos.
std::size_t find_reducer(const Monomial& m, std::span<const Polynomial> divisors) {
    for (std::size_t i = 0; i < divisors.size(); ++i) {
        if (divisors[i].is_zero()) continue;
        if (divisors[i].leading_monomial().divides(m)) return i;
    }
    return static_cast<std::size_t>(-1);
}

} // namespace

DivisionResult divide_reduce(const Polynomial& f, std::span<const Polynomial> divisors) {
    for (const Polynomial& d : divisors)
        if (d.field() != f.field() || d.nvars() != f.nvars() || !(d.order() == f.order()))
            throw structural_error("divisor incompatible with dividend");

    DivisionResult res;
    res.quotients.assign(divisors.size(),
                         Polynomial::zero(f.field(), f.nvars(), f.order()));
    res.remainder = Polynomial::zero(f.field(), f.nvars(), f.order());

    Polynomial p = f;
    std::vector<Term> rem_terms;
    while (!p.is_zero()) {
        const Term& lt = p.leading_term();
        std::size_t i = find_reducer(lt.mon, divisors);
        if (i == static_cast<std::size_t>(-1)) {
            rem_terms.push_back(lt);
            p = p - Polynomial::term(f.field(), f.order(), lt.mon, lt.coeff);
        } else {
            const Polynomial& d = divisors[i];
            Monomial qm = d.leading_monomial().divide_into(lt.mon);
            Scalar qc = lt.coeff / d.leading_coefficient();
            res.quotients[i] += Polynomial::term(f.field(), f.order(), qm, qc);
            p = p - d.times_term(qm, qc);
        }
    }
    res.remainder = Polynomial::from_terms(f.field(), f.nvars(), f.order(), std::move(rem_terms));
    return res;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors) {
    Polynomial p = f;
    std::vector<Term> rem_terms;
    while (!p.is_zero()) {
        const Term& lt = p.leading_term();
        std::size_t i = find_reducer(lt.mon, divisors);
        if (i == static_cast<std::size_t>(-1)) {
            rem_terms.push_back(lt);
            p = p - Polynomial::term(f.field(), f.order(), lt.mon, lt.coeff);
        } else {
            const Polynomial& d = divisors[i];
            Monomial qm = d.leading_monomial().divide_into(lt.mon);
            Scalar qc = lt.coeff / d.leading_coefficient();
            p = p - d.times_term(qm, qc);
        }
    }
    return Polynomial::from_terms(f.field(), f.nvars(), f.order(), std::move(rem_terms));
}

} // namespace chern
