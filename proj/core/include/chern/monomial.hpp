#ifndef CHERN_MONOMIAL_HPP
#define CHERN_MONOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace chern {

enum class Ordering { LT, EQ, GT };

// Power product in a fixed number of variables, with cached total degree.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps);

    static Monomial one(std::size_t nvars) { return Monomial(nvars); }
    static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

    std::size_t nvars() const { return exps_.size(); }
    std::uint32_t exponent(std::size_t i) const { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }
    std::uint64_t degree() const { return degree_; }
    std::uint64_t weighted_degree(const std::vector<std::uint32_t>& weights) const;
    bool is_one() const { return degree_ == 0; }

    Monomial operator*(const Monomial& rhs) const;
    bool divides(const Monomial& m) const;
    // Requires divides(m).
    Monomial divide_into(const Monomial& m) const;

    static Monomial lcm(const Monomial& a, const Monomial& b);
    static bool coprime(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& rhs) const { return exps_ == rhs.exps_; }
    bool operator!=(const Monomial& rhs) const { return !(*this == rhs); }

    std::string to_string(const std::vector<std::string>& names) const;

private:
    std::vector<std::uint32_t> exps_;
    std::uint64_t degree_ = 0;
};

// Admissible term order. Block elimination compares the leading block of
// variables grevlex-first, then the remaining variables grevlex.
class MonomialOrder {
public:
    enum class Kind { grevlex, lex, block_elimination };

    static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
    static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
    static MonomialOrder block_elimination(std::size_t lead_block_size) {
        return MonomialOrder(Kind::block_elimination, lead_block_size);
    }

    Kind kind() const { return kind_; }
    std::size_t lead_block() const { return lead_block_; }

    Ordering compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == Ordering::LT;
    }
    bool greater(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == Ordering::GT;
    }

    bool operator==(const MonomialOrder&) const = default;

    std::string to_string() const;

private:
    MonomialOrder(Kind k, std::size_t b) : kind_(k), lead_block_(b) {}

    Kind kind_;
    std::size_t lead_block_;
};

Ordering compare_monomials(const Monomial& a, const Monomial& b, const MonomialOrder& ord);

} // namespace chern

#endif
