#include "chern/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "chern/errors.hpp"

namespace chern {

namespace {

void check_common_shape(const std::vector<Polynomial>& polys) {
    for (size_t i = 1; i < polys.size(); ++i) {
        if (polys[i].field() != polys[0].field() || polys[i].nvars() != polys[0].nvars()) {
            throw structural_error("polynomials from different rings in one basis computation");
        }
    }
}

struct PairKey {
    unsigned long long degree;
    size_t i;
    size_t j;

    bool operator<(const PairKey& o) const {
        if (degree != o.degree) return degree < o.degree;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

using PairSet = std::set<std::pair<size_t, size_t>>;

bool pair_done(const PairSet& done, size_t a, size_t b) {
    return done.count({std::min(a, b), std::max(a, b)}) != 0;
}

} // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    internal_check(!f.is_zero() && !g.is_zero(), "s_polynomial of zero polynomial");
    const Monomial lcm = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    const Monomial mf = f.leading_monomial().divide_into(lcm);
    const Monomial mg = g.leading_monomial().divide_into(lcm);
    return f.times_term(mf, f.leading_coefficient().inverse()) -
           g.times_term(mg, g.leading_coefficient().inverse());
}

GroebnerBasis groebner(std::vector<Polynomial> gens, const MonomialOrder& ord) {
    check_common_shape(gens);

    std::vector<Polynomial> basis;
    basis.reserve(gens.size());
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        basis.push_back(g.with_order(ord).monic());
    }
    if (basis.empty()) return GroebnerBasis{{}, ord};

    std::set<PairKey> pending;
    PairSet done;

    auto queue_pairs_with = [&](size_t t) {
        for (size_t i = 0; i < t; ++i) {
            const Monomial lcm =
                Monomial::lcm(basis[i].leading_monomial(), basis[t].leading_monomial());
            pending.insert(PairKey{lcm.degree(), i, t});
        }
    };
    for (size_t t = 1; t < basis.size(); ++t) queue_pairs_with(t);

    while (!pending.empty()) {
        const PairKey key = *pending.begin();
        pending.erase(pending.begin());
        const size_t i = key.i;
        const size_t j = key.j;
        done.insert({i, j});

        const Monomial& lmi = basis[i].leading_monomial();
        const Monomial& lmj = basis[j].leading_monomial();
        if (Monomial::coprime(lmi, lmj)) continue;

        const Monomial lcm = Monomial::lcm(lmi, lmj);
        bool chain_skip = false;
        for (size_t k = 0; k < basis.size(); ++k) {
            if (k == i || k == j) continue;
            if (!basis[k].leading_monomial().divides(lcm)) continue;
            if (pair_done(done, i, k) && pair_done(done, j, k)) {
                chain_skip = true;
                break;
            }
        }
        if (chain_skip) continue;

        const Polynomial h = normal_form(s_polynomial(basis[i], basis[j]), basis);
        if (h.is_zero()) continue;
        basis.push_back(h.monic());
        queue_pairs_with(basis.size() - 1);
    }

    // Minimal basis: keep only elements whose leading monomial is not divisible
    // by another kept element's leading monomial.  Processing by ascending
    // leading monomial makes potential divisors available before their multiples.
    std::vector<size_t> by_lead(basis.size());
    for (size_t k = 0; k < basis.size(); ++k) by_lead[k] = k;
    std::sort(by_lead.begin(), by_lead.end(), [&](size_t a, size_t b) {
        return ord.less(basis[a].leading_monomial(), basis[b].leading_monomial());
    });
    std::vector<Polynomial> minimal;
    for (size_t idx : by_lead) {
        const Monomial& lm = basis[idx].leading_monomial();
        bool redundant = false;
        for (const auto& kept : minimal) {
            if (kept.leading_monomial().divides(lm)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(basis[idx]);
    }

    // Tail reduction.  Leading monomials are pairwise non-divisible at this
    // point, so reduction can only rewrite tails; one pass yields the unique
    // reduced basis.
    for (size_t k = 0; k < minimal.size(); ++k) {
        std::vector<Polynomial> others;
        others.reserve(minimal.size() - 1);
        for (size_t t = 0; t < minimal.size(); ++t) {
            if (t != k) others.push_back(minimal[t]);
        }
        minimal[k] = normal_form(minimal[k], others).monic();
    }

    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.greater(a.leading_monomial(), b.leading_monomial());
    });
    return GroebnerBasis{std::move(minimal), ord};
}

Polynomial gb_normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    return normal_form(f.with_order(gb.order), gb.elements);
}

bool is_groebner_basis(const std::vector<Polynomial>& basis) {
    std::vector<Polynomial> nonzero;
    for (const auto& g : basis) {
        if (!g.is_zero()) nonzero.push_back(g);
    }
    if (nonzero.empty()) return true;
    check_common_shape(nonzero);
    for (size_t i = 0; i < nonzero.size(); ++i) {
        for (size_t j = i + 1; j < nonzero.size(); ++j) {
            const Polynomial s = s_polynomial(nonzero[i], nonzero[j]);
            if (!normal_form(s, nonzero).is_zero()) return false;
        }
    }
    return true;
}

} // namespace chern
