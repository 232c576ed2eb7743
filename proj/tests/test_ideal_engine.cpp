#include <doctest.h>

#include <algorithm>
#include <random>

#include "chern/corpus.hpp"
#include "chern/errors.hpp"
#include "chern/groebner.hpp"
#include "chern/ideal.hpp"
#include "chern/poly_text.hpp"
#include "oracles.hpp"

using namespace chern;
using namespace chern::tests;

namespace {

std::vector<std::string> basis_strings(const GroebnerBasis& gb,
                                       const std::vector<std::string>& names) {
    std::vector<std::string> out;
    for (const Polynomial& g : gb.elements) out.push_back(g.to_string(names));
    return out;
}

// Reduced-basis structural invariants: monic, sorted by descending lead, and
// no term divisible by another element's leading monomial.
void check_reduced(const GroebnerBasis& gb) {
    for (std::size_t i = 0; i < gb.elements.size(); ++i) {
        const Polynomial& g = gb.elements[i];
        CHECK(g.leading_coefficient().is_one());
        if (i + 1 < gb.elements.size()) {
            CHECK(gb.order.greater(g.leading_monomial(),
                                   gb.elements[i + 1].leading_monomial()));
        }
        for (std::size_t j = 0; j < gb.elements.size(); ++j) {
            if (i == j) continue;
            for (const Term& t : g.terms()) {
                CHECK_FALSE(gb.elements[j].leading_monomial().divides(t.mon));
            }
        }
    }
}

} // namespace

TEST_CASE("s-polynomial worked example") {
    ScriptEnv env("ring R = QQ[x, y];");
    const Polynomial f = env.p("x^2 - y");
    const Polynomial g = env.p("x y - 1");
    CHECK(s_polynomial(f, g) == env.p("x - y^2"));
}

TEST_CASE("reduced basis worked example") {
    ScriptEnv env("ring R = QQ[x, y]; ideal J = (x^2 + y^2, x y);");
    const GroebnerBasis& gb = env.ideal("J").groebner_basis();
    CHECK(basis_strings(gb, {"x", "y"}) ==
          std::vector<std::string>{"y^3", "x^2 + y^2", "x*y"});
    CHECK(is_groebner_basis(gb.elements));
    check_reduced(gb);
}

TEST_CASE("every corpus basis passes the Buchberger criterion") {
    for (const CorpusEntry& entry : all_entries()) {
        INFO("entry " << entry.id);
        const GroebnerBasis& defining = entry.ring->defining_basis();
        if (!defining.elements.empty()) {
            CHECK(is_groebner_basis(defining.elements));
            check_reduced(defining);
        }
        for (const DesignatedParameter& p : entry.parameters) {
            INFO("parameter " << p.label);
            const GroebnerBasis& gb = p.ideal.groebner_basis();
            CHECK(is_groebner_basis(gb.elements));
            check_reduced(gb);
        }
    }
}

TEST_CASE("rewritten generator sets give the same reduced basis") {
    ScriptEnv env("ring R = QQ[x, y, z]; ideal J = (x^2 + y^2, x y, y z - x^2);");
    const IdealHandle& J = env.ideal("J");
    const auto names = env.ring->variable_names();
    const auto reference = basis_strings(J.groebner_basis(), names);

    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<Polynomial> gens = J.generators();
        // Random row operations: add a polynomial multiple of one generator to
        // another, then shuffle.
        for (int step = 0; step < 3; ++step) {
            const std::size_t i = rng() % gens.size();
            std::size_t j = rng() % gens.size();
            if (i == j) continue;
            const Polynomial h =
                random_polynomial(env.ring->field(), env.ring->nvars(),
                                  env.ring->default_order(), rng, 2, 1);
            gens[i] += h * gens[j];
        }
        std::shuffle(gens.begin(), gens.end(), rng);
        const IdealHandle rewritten(env.rings.at("R"), gens);
        CHECK(basis_strings(rewritten.groebner_basis(), names) == reference);
    }
}

TEST_CASE("membership") {
    ScriptEnv env("ring R = QQ[x, y]; ideal J = (x^2 + y^2, x y);");
    const IdealHandle& J = env.ideal("J");
    CHECK(ideal_membership(env.p("x^3"), J));
    CHECK(ideal_membership(env.p("x^3 + 5 x y"), J));
    CHECK_FALSE(ideal_membership(env.p("x"), J));
    CHECK_FALSE(ideal_membership(env.p("x^2"), J));
    CHECK(ideal_membership(env.p("0"), J));

    // Random combinations of the generators are members.
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        Polynomial combo = env.p("0");
        for (const Polynomial& g : J.generators()) {
            combo += random_polynomial(env.ring->field(), 2, env.ring->default_order(), rng,
                                       2, 2) *
                     g;
        }
        CHECK(ideal_membership(combo, J));
        CHECK_FALSE(ideal_membership(combo + env.p("y"), J));
    }
}

TEST_CASE("sum, product and power") {
    ScriptEnv env(
        "ring R = QQ[x, y];"
        "ideal X = (x); ideal Y = (y); ideal m = (x, y); ideal m2 = (x^2, x y, y^2);");
    CHECK(ideal_equals(ideal_sum(env.ideal("X"), env.ideal("Y")), env.ideal("m")));
    CHECK(ideal_equals(ideal_product(env.ideal("m"), env.ideal("m")), env.ideal("m2")));
    CHECK(ideal_equals(ideal_power(env.ideal("m"), 3),
                       ideal_product(env.ideal("m2"), env.ideal("m"))));
    CHECK(ideal_contains(env.ideal("m"), env.ideal("m2")));
    CHECK_FALSE(ideal_contains(env.ideal("m2"), env.ideal("m")));
}

TEST_CASE("intersection agrees with two-sided membership") {
    ScriptEnv env("ring R = QQ[x, y]; ideal X = (x); ideal Y = (y);"
                  "ideal J = (x^2 + y^2, x y); ideal K = (y^3, x - y); ideal XY = (x y);");
    CHECK(ideal_equals(ideal_intersection(env.ideal("X"), env.ideal("Y")), env.ideal("XY")));

    const IdealHandle meet = ideal_intersection(env.ideal("J"), env.ideal("K"));
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const Polynomial h =
            random_polynomial(env.ring->field(), 2, env.ring->default_order(), rng, 4, 3);
        const bool in_both =
            ideal_membership(h, env.ideal("J")) && ideal_membership(h, env.ideal("K"));
        CHECK(ideal_membership(h, meet) == in_both);
    }
    // Products of one generator from each side are always in the intersection.
    for (const Polynomial& a : env.ideal("J").generators()) {
        for (const Polynomial& b : env.ideal("K").generators()) {
            CHECK(ideal_membership(a * b, meet));
        }
    }
}

TEST_CASE("colon by element, validated from both sides") {
    ScriptEnv env("ring R = QQ[x, y]; ideal J = (x^2, x y); ideal m = (x, y);");
    const IdealHandle colon = colon_by_element(env.ideal("J"), env.p("x"));
    CHECK(ideal_equals(colon, env.ideal("m")));

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const Polynomial f =
            random_polynomial(env.ring->field(), 2, env.ring->default_order(), rng, 2, 2);
        if (f.is_zero()) continue;
        const IdealHandle C = colon_by_element(env.ideal("J"), f);
        for (const Polynomial& g : C.generators()) {
            CHECK(ideal_membership(g * f, env.ideal("J")));
        }
        for (int probe = 0; probe < 5; ++probe) {
            const Polynomial h = random_polynomial(env.ring->field(), 2,
                                                   env.ring->default_order(), rng, 3, 2);
            CHECK(ideal_membership(h, C) == ideal_membership(h * f, env.ideal("J")));
        }
    }
}

TEST_CASE("colon by ideal") {
    ScriptEnv env("ring R = QQ[x, y]; ideal J = (x y, y^2); ideal K = (y); ideal m = (x, y);");
    CHECK(ideal_equals(colon_by_ideal(env.ideal("J"), env.ideal("K")), env.ideal("m")));
}

TEST_CASE("colon in a quotient ring sees the defining ideal") {
    ScriptEnv env("ring R = QQ[x, y] / (x y); ideal Y = (y);");
    const IdealHandle annihilator = colon_by_element(zero_ideal(env.ring), env.p("x"));
    CHECK(ideal_equals(annihilator, env.ideal("Y")));
    CHECK(ideal_membership(env.p("y"), annihilator));
    CHECK_FALSE(ideal_membership(env.p("x"), annihilator));
}

TEST_CASE("basis computation is deterministic") {
    ScriptEnv env("ring R = QQ[x, y, z]; ideal J = (x^2 - y z, y^2 - x z, z^2 - x y);");
    const auto names = env.ring->variable_names();
    const auto first = basis_strings(env.ideal("J").groebner_basis(), names);

    std::vector<Polynomial> reversed = env.ideal("J").generators();
    std::reverse(reversed.begin(), reversed.end());
    const IdealHandle again(env.rings.at("R"), reversed);
    CHECK(basis_strings(again.groebner_basis(), names) == first);

    const GroebnerBasis direct =
        groebner(env.ideal("J").generators(), MonomialOrder::grevlex());
    CHECK(basis_strings(direct, names) == first);
}

TEST_CASE("unit and zero ideals") {
    ScriptEnv env("ring R = QQ[x, y]; ideal J = (x^2 - 1, x);");
    CHECK(env.ideal("J").is_unit_ideal());
    CHECK(env.ideal("J").groebner_basis().is_unit());
    CHECK(zero_ideal(env.rings.at("R")).is_zero_ideal());
    CHECK(unit_ideal(env.rings.at("R")).is_unit_ideal());

    const IdealHandle m = maximal_ideal(env.rings.at("R"));
    CHECK(m.generators().size() == 2);
    const IdealHandle m2 = maximal_ideal_power(env.rings.at("R"), 2);
    CHECK(m2.generators().size() == 3);
    CHECK(ideal_equals(m2, ideal_product(m, m)));
}
