#include "chern/hilbert.hpp"

#include <algorithm>
#include <string>

#include "chern/errors.hpp"
#include "chern/quotient.hpp"

namespace chern {

namespace {

// Incremental chain of powers I, I^2, I^3, ...  Each step multiplies the
// previous power's basis elements by the generators of I, which generates the
// next power's full preimage because basis elements generate power + b and
// (power + b) * I + b = power * I + b.
class PowerChain {
public:
    explicit PowerChain(IdealHandle I) : I_(std::move(I)), current_(I_), power_(1) {}

    const IdealHandle& current() const { return current_; }
    unsigned power() const { return power_; }

    void advance() {
        IdealHandle collapsed(current_.ring_ptr(), current_.groebner_basis().elements);
        current_ = ideal_product(collapsed, I_);
        ++power_;
    }

private:
    IdealHandle I_;
    IdealHandle current_;
    unsigned power_;
};

void require_m_primary(const IdealHandle& I, const char* what) {
    if (!is_m_primary(I)) {
        throw argument_error(std::string(what) + " requires an m-primary proper ideal");
    }
}

long long finite_colength_value(const IdealHandle& J) {
    const auto len = colength(J);
    internal_check(len.has_value(), "power of an m-primary ideal has infinite colength");
    return *len;
}

FunctionTable grow_table(PowerChain& chain, FunctionTable table, long long n_max,
                         bool samuel_indexing) {
    // Hilbert-Samuel tables record H(n) = ell(R/I^{n+1}) from n = 0;
    // irreducible tables record N(I^n) from n = 1.
    while (table.start + static_cast<long long>(table.values.size()) <= n_max) {
        const long long wanted_power =
            table.start + static_cast<long long>(table.values.size()) + (samuel_indexing ? 1 : 0);
        while (static_cast<long long>(chain.power()) < wanted_power) chain.advance();
        if (samuel_indexing) {
            table.values.push_back(finite_colength_value(chain.current()));
        } else {
            table.values.push_back(index_of_reducibility(chain.current()).index_of_reducibility);
        }
    }
    return table;
}

HilbertData fit_with_growth(const IdealHandle& I, int degree, bool samuel_indexing,
                            const char* kind, long long initial_n_max,
                            const HilbertOptions& opts) {
    PowerChain chain(I);
    FunctionTable table;
    table.kind = kind;
    table.start = samuel_indexing ? 0 : 1;

    long long n_max = std::min(std::max(initial_n_max, table.start + 2 * degree + 2),
                               opts.n_cap);
    table = grow_table(chain, std::move(table), n_max, samuel_indexing);
    for (;;) {
        try {
            return fit_binomial_polynomial(table, degree);
        } catch (const not_stabilized& e) {
            if (n_max >= opts.n_cap) {
                throw not_stabilized(std::string(kind) +
                                         " table did not stabilize by the cap: " + e.what(),
                                     n_max);
            }
            n_max = std::min(opts.n_cap, std::max(2 * n_max, n_max + 4));
            table = grow_table(chain, std::move(table), n_max, samuel_indexing);
        }
    }
}

// ell(R/m^{n+1}) without a Groebner basis of the power: for a standard-graded
// b under a degree-compatible order, in(b + m^{n+1}) = in(b) + m^{n+1}, so the
// value is the number of standard monomials of b with total degree <= n.
long long bounded_standard_monomial_count(const RingPresentation& ring, long long cap) {
    std::vector<Monomial> leads;
    for (const auto& g : ring.defining_basis().elements) {
        leads.push_back(g.leading_monomial());
    }
    const std::size_t nv = ring.nvars();
    long long count = 0;
    std::vector<std::uint32_t> exps(nv, 0);
    auto rec = [&](auto&& self, std::size_t idx, long long remaining) -> void {
        if (idx == nv) {
            const Monomial candidate(exps);
            for (const auto& lead : leads) {
                if (lead.divides(candidate)) return;
            }
            ++count;
            return;
        }
        for (long long e = 0; e <= remaining; ++e) {
            exps[idx] = static_cast<std::uint32_t>(e);
            self(self, idx + 1, remaining - e);
        }
        exps[idx] = 0;
    };
    rec(rec, 0, cap);
    return count;
}

} // namespace

int krull_dimension(const RingPtr& ring, const HilbertOptions& opts) {
    internal_check(ring != nullptr, "dimension of a null ring");
    if (const auto cached = ring->cached_dimension()) return *cached;

    // Fast path for standard-graded rings under a degree-compatible order.
    const bool direct_count =
        !ring->weighted() && ring->default_order().kind() == MonomialOrder::Kind::grevlex;

    std::optional<PowerChain> chain;
    if (!direct_count) chain.emplace(maximal_ideal(ring));
    FunctionTable table;
    table.kind = "maximal-adic";
    table.start = 0;

    auto extend = [&](long long target) {
        if (direct_count) {
            while (static_cast<long long>(table.values.size()) <= target) {
                table.values.push_back(bounded_standard_monomial_count(
                    *ring, static_cast<long long>(table.values.size())));
            }
        } else {
            table = grow_table(*chain, std::move(table), target, true);
        }
    };

    const int nvars = static_cast<int>(ring->nvars());
    long long n_max = std::min<long long>(8, opts.n_cap);
    extend(n_max);
    for (;;) {
        for (int s = 0; s <= nvars; ++s) {
            if (table.values.size() < static_cast<std::size_t>(2 * s + 3)) break;
            try {
                const HilbertData fit = fit_binomial_polynomial(table, s);
                // A fit whose leading coefficient vanishes is really a fit of
                // lower degree, which an earlier iteration already rejected.
                if (s > 0 && fit.leading_zero) continue;
                ring->cache_dimension(s);
                return s;
            } catch (const not_stabilized&) {
                continue;
            }
        }
        if (n_max >= opts.n_cap) {
            throw not_stabilized("maximal-adic growth did not stabilize by the cap", n_max);
        }
        n_max = std::min(opts.n_cap, std::max(2 * n_max, n_max + 4));
        extend(n_max);
    }
}

bool is_parameter_ideal(const IdealHandle& q, const HilbertOptions& opts) {
    const int d = krull_dimension(q.ring_ptr(), opts);
    if (!is_m_primary(q)) return false;
    return q.generators().size() == static_cast<std::size_t>(d);
}

FunctionTable hilbert_samuel_table(const IdealHandle& I, long long n_max) {
    require_m_primary(I, "the Hilbert-Samuel function");
    if (n_max < 0) throw argument_error("table bound must be nonnegative");
    PowerChain chain(I);
    FunctionTable table;
    table.kind = "hilbert-samuel";
    table.start = 0;
    return grow_table(chain, std::move(table), n_max, true);
}

FunctionTable irreducible_table(const IdealHandle& I, long long n_max) {
    require_m_primary(I, "the irreducible decomposition function");
    if (n_max < 1) throw argument_error("table bound must be at least 1");
    PowerChain chain(I);
    FunctionTable table;
    table.kind = "irreducible";
    table.start = 1;
    return grow_table(chain, std::move(table), n_max, false);
}

HilbertData hilbert_samuel_data(const IdealHandle& I, const HilbertOptions& opts) {
    require_m_primary(I, "the Hilbert-Samuel function");
    const int d = krull_dimension(I.ring_ptr(), opts);
    return fit_with_growth(I, d, true, "hilbert-samuel", 2 * d + 2, opts);
}

HilbertData irreducible_data(const IdealHandle& I, const HilbertOptions& opts) {
    require_m_primary(I, "the irreducible decomposition function");
    const int d = krull_dimension(I.ring_ptr(), opts);
    if (d == 0) {
        throw argument_error("the irreducible decomposition function needs positive dimension");
    }
    return fit_with_growth(I, d - 1, false, "irreducible", 2 * d + 1, opts);
}

long long multiplicity(const IdealHandle& I, const HilbertOptions& opts) {
    return hilbert_samuel_data(I, opts).coefficients.at(0);
}

long long chern_coefficient(const IdealHandle& I, const HilbertOptions& opts) {
    const HilbertData data = hilbert_samuel_data(I, opts);
    if (data.coefficients.size() < 2) {
        throw argument_error("the Chern coefficient requires positive dimension");
    }
    return data.coefficients.at(1);
}

long long irreducible_multiplicity(const IdealHandle& I, const HilbertOptions& opts) {
    return irreducible_data(I, opts).coefficients.at(0);
}

} // namespace chern
