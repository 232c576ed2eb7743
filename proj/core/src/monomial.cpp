#include "chern/monomial.hpp"

#include <numeric>

#include "chern/errors.hpp"

namespace chern {

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
    degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
    internal_check(index < nvars, "variable index out of range");
    Monomial m(nvars);
    m.exps_[index] = power;
    m.degree_ = power;
    return m;
}

std::uint64_t Monomial::weighted_degree(const std::vector<std::uint32_t>& weights) const {
    internal_check(weights.size() == exps_.size(), "weight vector length mismatch");
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        d += std::uint64_t{exps_[i]} * weights[i];
    return d;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
    internal_check(exps_.size() == rhs.exps_.size(), "monomial arity mismatch");
    Monomial out(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += rhs.exps_[i];
    out.degree_ = degree_ + rhs.degree_;
    return out;
}

bool Monomial::divides(const Monomial& m) const {
    internal_check(exps_.size() == m.exps_.size(), "monomial arity mismatch");
    if (degree_ > m.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > m.exps_[i]) return false;
    return true;
}

Monomial Monomial::divide_into(const Monomial& m) const {
    internal_check(divides(m), "non-exact monomial division");
    Monomial out(m);
    for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] -= exps_[i];
    out.degree_ = m.degree_ - degree_;
    return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    internal_check(a.exps_.size() == b.exps_.size(), "monomial arity mismatch");
    Monomial out(a);
    std::uint64_t deg = 0;
    for (std::size_t i = 0; i < out.exps_.size(); ++i) {
        out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
        deg += out.exps_[i];
    }
    out.degree_ = deg;
    return out;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
    internal_check(a.exps_.size() == b.exps_.size(), "monomial arity mismatch");
    for (std::size_t i = 0; i < a.exps_.size(); ++i)
        if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
    return true;
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
    internal_check(names.size() == exps_.size(), "variable name list length mismatch");
    if (is_one()) return "1";
    std::string out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[i];
        if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
    }
    return out;
}

namespace {

// Graded reverse lexicographic on a contiguous index range.
Ordering grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a.exponent(i);
        db += b.exponent(i);
    }
    if (da != db) return da < db ? Ordering::LT : Ordering::GT;
    for (std::size_t i = hi; i-- > lo;) {
        if (a.exponent(i) != b.exponent(i))
            return a.exponent(i) > b.exponent(i) ? Ordering::LT : Ordering::GT;
    }
    return Ordering::EQ;
}

Ordering lex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
        if (a.exponent(i) != b.exponent(i))
            return a.exponent(i) < b.exponent(i) ? Ordering::LT : Ordering::GT;
    }
    return Ordering::EQ;
}

} // namespace

Ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    internal_check(a.nvars() == b.nvars(), "monomial arity mismatch");
    const std::size_t n = a.nvars();
    switch (kind_) {
    case Kind::grevlex:
        return grevlex_range(a, b, 0, n);
    case Kind::lex:
        return lex_range(a, b, 0, n);
    case Kind::block_elimination: {
        const std::size_t split = std::min(lead_block_, n);
        Ordering first = grevlex_range(a, b, 0, split);
        if (first != Ordering::EQ) return first;
        return grevlex_range(a, b, split, n);
    }
    }
    throw internal_error("unreachable monomial order kind");
}

std::string MonomialOrder::to_string() const {
    switch (kind_) {
    case Kind::grevlex: return "grevlex";
    case Kind::lex: return "lex";
    case Kind::block_elimination:
        return "block(" + std::to_string(lead_block_) + ")";
    }
    return "?";
}

Ordering compare_monomials(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
    return ord.compare(a, b);
}

} // namespace chern
