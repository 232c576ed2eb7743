#include "chern/quotient.hpp"

#include <algorithm>

#include "chern/errors.hpp"

namespace chern {

namespace {

std::vector<Monomial> leading_monomials(const GroebnerBasis& gb) {
    std::vector<Monomial> lead;
    lead.reserve(gb.elements.size());
    for (const auto& g : gb.elements) lead.push_back(g.leading_monomial());
    return lead;
}

// Least pure-power exponent of each variable among the leading monomials;
// nullopt for a variable with no pure power (infinite quotient).
std::optional<std::vector<std::uint32_t>> pure_power_bounds(const std::vector<Monomial>& lead,
                                                            std::size_t nvars) {
    std::vector<std::uint32_t> bounds(nvars, 0);
    std::vector<bool> found(nvars, false);
    for (const auto& m : lead) {
        std::size_t support_var = nvars;
        bool pure = true;
        for (std::size_t i = 0; i < nvars; ++i) {
            if (m.exponent(i) == 0) continue;
            if (support_var != nvars) {
                pure = false;
                break;
            }
            support_var = i;
        }
        if (!pure || support_var == nvars) continue;
        const std::uint32_t e = m.exponent(support_var);
        if (!found[support_var] || e < bounds[support_var]) {
            bounds[support_var] = e;
            found[support_var] = true;
        }
    }
    for (std::size_t i = 0; i < nvars; ++i) {
        if (!found[i]) return std::nullopt;
    }
    return bounds;
}

} // namespace

bool finite_colength(const GroebnerBasis& gb, std::size_t nvars) {
    if (gb.is_unit()) return true;
    return pure_power_bounds(leading_monomials(gb), nvars).has_value();
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, std::size_t nvars) {
    if (gb.is_unit()) return {};
    const auto lead = leading_monomials(gb);
    const auto bounds = pure_power_bounds(lead, nvars);
    if (!bounds.has_value()) {
        throw argument_error("the quotient is not finite-dimensional over the base field");
    }

    unsigned long long cells = 1;
    for (std::size_t i = 0; i < nvars; ++i) {
        cells *= (*bounds)[i];
        if (cells > 50'000'000ULL) {
            throw resource_error("standard monomial enumeration box exceeds 5e7 cells");
        }
    }

    std::vector<Monomial> result;
    std::vector<std::uint32_t> exps(nvars, 0);
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == nvars) {
            Monomial cand(exps);
            for (const auto& m : lead) {
                if (m.divides(cand)) return;
            }
            result.push_back(std::move(cand));
            return;
        }
        for (std::uint32_t e = 0; e < (*bounds)[idx]; ++e) {
            exps[idx] = e;
            self(self, idx + 1);
        }
        exps[idx] = 0;
    };
    rec(rec, 0);

    std::sort(result.begin(), result.end(), [](const Monomial& a, const Monomial& b) {
        return compare_monomials(a, b, MonomialOrder::grevlex()) == Ordering::LT;
    });
    return result;
}

std::optional<long long> colength(const IdealHandle& J) {
    if (!J.homogeneous()) {
        throw argument_error(
            "length computations require homogeneous generators (weighted grading)");
    }
    const GroebnerBasis& gb = J.groebner_basis();
    if (gb.is_unit()) return 0;
    if (!finite_colength(gb, J.ring().nvars())) return std::nullopt;
    return static_cast<long long>(standard_monomials(gb, J.ring().nvars()).size());
}

bool is_m_primary(const IdealHandle& J) {
    const auto len = colength(J);
    return len.has_value() && !J.is_unit_ideal();
}

IdealHandle socle_colon(const IdealHandle& J) {
    return colon_by_ideal(J, maximal_ideal(J.ring_ptr()));
}

SocleReport index_of_reducibility(const IdealHandle& J) {
    const auto len = colength(J);
    if (!len.has_value() || J.is_unit_ideal()) {
        throw argument_error("the index of reducibility requires an m-primary ideal");
    }
    const auto colon_len = colength(socle_colon(J));
    internal_check(colon_len.has_value(), "socle colon of an m-primary ideal must be m-primary");
    SocleReport report;
    report.colength = *len;
    report.colon_colength = *colon_len;
    report.index_of_reducibility = report.colength - report.colon_colength;
    return report;
}

bool contained_in_m_power(const IdealHandle& J, unsigned n) {
    if (n == 0) return true;
    const IdealHandle mn = maximal_ideal_power(J.ring_ptr(), n);
    return ideal_contains(mn, J);
}

bool reduction_check(const IdealHandle& q, const IdealHandle& I) {
    if (!ideal_contains(I, q)) {
        throw argument_error("reduction check requires the first ideal inside the second");
    }
    return ideal_equals(ideal_product(I, I), ideal_product(q, I));
}

std::optional<std::size_t> redundant_generator(const IdealHandle& J) {
    const auto& gens = J.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::vector<Polynomial> others;
        others.reserve(gens.size() - 1);
        for (std::size_t k = 0; k < gens.size(); ++k) {
            if (k != i) others.push_back(gens[k]);
        }
        if (ideal_membership(gens[i], IdealHandle(J.ring_ptr(), std::move(others)))) {
            return i;
        }
    }
    return std::nullopt;
}

} // namespace chern
