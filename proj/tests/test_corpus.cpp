// Corpus catalog: every designated parameter ideal must reproduce its frozen
// quantity table, exports must re-parse to the same rings and ideals, and the
// two-parameter family comparison must flag the discrepancies it was built to
// expose.  Aggregate batch counts are frozen from hand-tallied per-entry runs.
#include <doctest.h>

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <chern/cm.hpp>
#include <chern/corpus.hpp>
#include <chern/errors.hpp>
#include <chern/hilbert.hpp>
#include <chern/quotient.hpp>
#include <chern/script.hpp>

#include "oracles.hpp"

using namespace chern;

namespace {

std::optional<long long> quantity_by_key(const VerifyReport& rep, const std::string& key) {
    if (key == "len_R_q") return rep.len_q;
    if (key == "e0_q") return rep.e0_q;
    if (key == "e1_q") return rep.e1_q;
    if (key == "index_q") return rep.index_q;
    if (key == "f0_q") return rep.f0_q;
    if (key == "len_R_I") return rep.len_I;
    if (key == "e0_I") return rep.e0_I;
    if (key == "e1_I") return rep.e1_I;
    if (key == "r") return rep.r;
    // e<i>_q for i >= 2.
    if (key.size() >= 4 && key.front() == 'e' && key.substr(key.size() - 2) == "_q") {
        const std::size_t i = std::stoul(key.substr(1, key.size() - 3));
        if (i < rep.e_q.size()) return rep.e_q[i];
        return std::nullopt;
    }
    return std::nullopt;
}

std::vector<std::string> reduced_basis_strings(const IdealHandle& J) {
    std::vector<std::string> out;
    for (const auto& g : J.groebner_basis().elements) {
        out.push_back(g.to_string(J.ring().variable_names()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("catalog lists nine entries sorted by id") {
    const auto entries = all_entries();
    REQUIRE(entries.size() == 9);
    const std::vector<std::string> want = {
        "goto-sakurai-2-2", "goto-sakurai-3-2", "goto-sakurai-3-3",
        "monomial-curve-t345", "node-curve", "non-cm-control",
        "quadric-cone", "regular-2", "regular-3"};
    for (std::size_t i = 0; i < want.size(); ++i) {
        CHECK(entries[i].id == want[i]);
        CHECK_FALSE(entries[i].description.empty());
        CHECK_FALSE(entries[i].expected_source.empty());
        CHECK(entries[i].ring_expected.count("dim") == 1);
        CHECK_FALSE(entries[i].parameters.empty());
        const std::string& u = entries[i].unmixed;
        CHECK((u == "true" || u == "false" || u == "unknown"));
    }
    CHECK(find_entry("regular-2").has_value());
    CHECK(find_entry("regular-2")->id == "regular-2");
    CHECK_FALSE(find_entry("no-such-entry").has_value());
}

TEST_CASE("standard entries reproduce their frozen quantity tables") {
    for (const auto& entry : standard_entries()) {
        CAPTURE(entry.id);
        CHECK(krull_dimension(entry.ring) == entry.ring_expected.at("dim"));
        for (const auto& p : entry.parameters) {
            CAPTURE(p.label);
            REQUIRE(is_parameter_ideal(p.ideal));
            const VerifyReport rep =
                verify_theorems(p.ideal, entry.id + ":" + p.label, entry.unmixed);
            CHECK(rep.dim == entry.ring_expected.at("dim"));
            CHECK(rep.cm.is_cm == entry.cm_expected);
            CHECK(rep.flags.unmixed == entry.unmixed);
            for (const auto& [key, want] : p.expected) {
                CAPTURE(key);
                const auto got = quantity_by_key(rep, key);
                REQUIRE_MESSAGE(got.has_value(), "quantity missing for " << key);
                CHECK_MESSAGE(*got == want, "computed " << *got << ", expected " << want);
            }
        }
    }
}

TEST_CASE("exported scripts re-parse to identical rings and ideals") {
    for (const auto& entry : all_entries()) {
        CAPTURE(entry.id);
        const std::string script = export_entry_script(entry);
        chern::tests::ScriptEnv env(script);
        REQUIRE(env.ring != nullptr);
        CHECK(env.ring->nvars() == entry.ring->nvars());
        CHECK(env.ring->variable_names() == entry.ring->variable_names());
        CHECK(env.ring->weights() == entry.ring->weights());
        CHECK(env.ring->field().to_string() == entry.ring->field().to_string());
        // The defining ideal is the full preimage of (0); reduced bases agree.
        CHECK(reduced_basis_strings(zero_ideal(env.ring)) ==
              reduced_basis_strings(zero_ideal(entry.ring)));
        for (const auto& p : entry.parameters) {
            CAPTURE(p.label);
            const IdealHandle reparsed = env.ideal(p.label);
            CHECK(reduced_basis_strings(reparsed) == reduced_basis_strings(p.ideal));
        }
    }
}

TEST_CASE("family builder: claimed closed forms and guard rails") {
    CHECK(goto_sakurai_claimed_hilbert(2, 2, 0) == 4);
    CHECK(goto_sakurai_claimed_hilbert(2, 2, 1) == 12);
    CHECK(goto_sakurai_claimed_hilbert(2, 2, 6) == 112);
    CHECK(goto_sakurai_claimed_hilbert(3, 2, 0) == 5);
    CHECK(goto_sakurai_claimed_hilbert(3, 2, 2) == 33);
    CHECK(goto_sakurai_claimed_hilbert(3, 3, 1) == 21);

    const CorpusEntry e = build_goto_sakurai(2, 2, GotoSakuraiVariant::xm_squared);
    CHECK(e.id == "goto-sakurai-2-2");
    CHECK(e.ring->nvars() == 5);
    REQUIRE(e.parameters.size() == 1);
    const auto& exp = e.parameters[0].expected;
    CHECK(exp.at("len_R_q") == 5);
    CHECK(exp.at("e0_q") == 4);
    CHECK(exp.at("e1_q") == -1);
    CHECK(exp.at("e2_q") == 0);
    CHECK(exp.at("index_q") == 1);
    CHECK(exp.at("len_R_I") == 4);
    CHECK(exp.at("e0_I") == 4);
    CHECK(exp.at("e1_I") == 0);

    CHECK(variant_name(GotoSakuraiVariant::as_printed) == "as-printed");
    CHECK(variant_name(GotoSakuraiVariant::xm_squared) == "x_m-squared");
    CHECK_THROWS_AS(build_goto_sakurai(5, 2, GotoSakuraiVariant::as_printed), argument_error);
    CHECK_THROWS_AS(build_goto_sakurai(2, 3, GotoSakuraiVariant::as_printed), argument_error);
}

TEST_CASE("as-printed variant at m=3 has a non-parameter designated ideal") {
    // The printed special generator x_2^m leaves x_3 outside the nilradical
    // modulo q, so q = (z_1, z_2) is not m-primary.
    const CorpusEntry e = build_goto_sakurai(3, 2, GotoSakuraiVariant::as_printed);
    CHECK_FALSE(is_parameter_ideal(e.parameters[0].ideal));
}

TEST_CASE("variant comparison at (2,2): computed values disagree with the claims") {
    const VariantComparison cmp = compare_goto_sakurai_variants(2, 2);
    CHECK(cmp.m == 2);
    CHECK(cmp.d == 2);
    CHECK_FALSE(cmp.matching_variant.has_value());

    // At m = 2 the printed special generator x_2^m equals x_m^2, so the two
    // variants are the same ring and must report identical quantities.
    for (const VariantQuantities* v : {&cmp.as_printed, &cmp.xm_squared}) {
        CAPTURE(v->variant);
        REQUIRE(v->q_is_parameter);
        CHECK(v->len_q == 5);
        CHECK(v->e0_q == 4);
        CHECK(v->e1_q == 0);
        CHECK(v->e_q == std::vector<long long>{4, 0, 1});
        CHECK(v->index_q == 2);
        CHECK(v->len_I == 3);
        CHECK(v->e0_I == 4);
        CHECK(v->e1_I == 2);
        CHECK(v->hilbert_I == std::vector<long long>{3, 10, 20, 34, 52, 74, 100});
        CHECK_FALSE(v->all_match);
        CHECK(v->matches.at("len_R_q"));
        CHECK(v->matches.at("e0_q"));
        CHECK(v->matches.at("e0_I"));
        CHECK_FALSE(v->matches.at("e1_q"));
        CHECK_FALSE(v->matches.at("e2_q"));
        CHECK_FALSE(v->matches.at("index_q"));
        CHECK_FALSE(v->matches.at("len_R_I"));
        CHECK_FALSE(v->matches.at("e1_I"));
        CHECK_FALSE(v->matches.at("hilbert_I"));
    }
}

TEST_CASE("random parameter ideals are seeded and deterministic") {
    const auto entry = find_entry("regular-2");
    REQUIRE(entry.has_value());
    std::mt19937_64 rng_a(123456);
    std::mt19937_64 rng_b(123456);
    const auto qa = random_parameter_ideal(entry->ring, 2, rng_a);
    const auto qb = random_parameter_ideal(entry->ring, 2, rng_b);
    REQUIRE(qa.has_value());
    REQUIRE(qb.has_value());
    CHECK(is_parameter_ideal(*qa));
    const auto& names = entry->ring->variable_names();
    REQUIRE(qa->generators().size() == qb->generators().size());
    for (std::size_t i = 0; i < qa->generators().size(); ++i) {
        CHECK(qa->generators()[i].to_string(names) == qb->generators()[i].to_string(names));
    }

    // Weighted ring: ask for a weighted degree with a nonempty form space.
    const auto t345 = find_entry("monomial-curve-t345");
    REQUIRE(t345.has_value());
    std::mt19937_64 rng_c(7);
    const auto qc = random_parameter_ideal(t345->ring, 12, rng_c);
    REQUIRE(qc.has_value());
    CHECK(is_parameter_ideal(*qc));
    CHECK(qc->generators().size() == 1);
}

TEST_CASE("batch verify: frozen aggregate counts per family") {
    SUBCASE("single entries, designated parameters") {
        const BatchReport reg2 = batch_verify("regular-2");
        CHECK(reg2.family == "regular-2");
        CHECK(reg2.strategy == "given");
        REQUIRE(reg2.results.size() == 3);
        CHECK(reg2.results[0].parameter_label == "q1");
        CHECK(reg2.results[1].parameter_label == "q2");
        CHECK(reg2.results[2].parameter_label == "q3");
        CHECK(reg2.checks_held == 22);
        CHECK(reg2.checks_failed == 2);
        CHECK(reg2.checks_unavailable == 12);
        for (const auto& res : reg2.results) {
            CHECK_FALSE(res.skipped);
            for (const auto& check : res.report.checks) {
                if (check.holds.has_value() && !*check.holds) {
                    CHECK(check.id == "huneke-ooishi-printed");
                }
            }
        }

        const BatchReport node = batch_verify("node-curve");
        CHECK(node.checks_held == 22);
        CHECK(node.checks_failed == 2);
        CHECK(node.checks_unavailable == 0);

        const BatchReport t345 = batch_verify("monomial-curve-t345");
        CHECK(t345.checks_held == 20);
        CHECK(t345.checks_failed == 4);
        CHECK(t345.checks_unavailable == 0);
    }

    SUBCASE("cm family aggregates over ten designated parameters") {
        const BatchReport cm = batch_verify("cm");
        REQUIRE(cm.results.size() == 10);
        for (const auto& res : cm.results) CHECK_FALSE(res.skipped);
        CHECK(cm.checks_held == 97);
        CHECK(cm.checks_failed == 11);
        CHECK(cm.checks_unavailable == 12);
    }

    SUBCASE("unknown selector is a user error") {
        CHECK_THROWS_AS(batch_verify("no-such-family"), argument_error);
    }
}

TEST_CASE("batch verify: powers strategy keeps principal parameters only") {
    BatchOptions opts;
    opts.strategy = QStrategy::powers_of_given;
    opts.power = 2;

    // Dimension 1, principal designated parameters: q^2 stays a parameter
    // ideal and the index of reducibility stays at the CM type.
    const BatchReport t345 = batch_verify("monomial-curve-t345", opts);
    REQUIRE(t345.results.size() == 2);
    CHECK(t345.strategy == "powers-2");
    for (const auto& res : t345.results) {
        CAPTURE(res.parameter_label);
        CHECK_FALSE(res.skipped);
        REQUIRE(res.report.index_q.has_value());
        CHECK(*res.report.index_q == 2);
        CHECK(res.report.cm.is_cm);
    }
    CHECK(t345.results[0].parameter_label == "q1^2");

    // Dimension 2: the square of a two-generated parameter ideal needs three
    // generators, so every instance is skipped with a reason.
    const BatchReport reg2 = batch_verify("regular-2", opts);
    REQUIRE(reg2.results.size() == 3);
    for (const auto& res : reg2.results) {
        CHECK(res.skipped);
        CHECK(res.skip_reason.find("not generated by") != std::string::npos);
    }
}

TEST_CASE("batch verify: random strategy is reproducible and thread-count independent") {
    BatchOptions a;
    a.strategy = QStrategy::random_forms;
    a.degree = 1;
    a.seed = 42;
    const BatchReport ra = batch_verify("regular-2", a);
    const BatchReport rb = batch_verify("regular-2", a);
    REQUIRE(ra.results.size() == 1);
    REQUIRE(rb.results.size() == 1);
    CHECK_FALSE(ra.results[0].skipped);
    CHECK(ra.results[0].report.cm.witness == rb.results[0].report.cm.witness);
    CHECK(ra.checks_held == rb.checks_held);
    CHECK(ra.checks_failed == rb.checks_failed);

    BatchOptions four = a;
    four.threads = 4;
    const BatchReport rc = batch_verify("cm", a);
    const BatchReport rd = batch_verify("cm", four);
    REQUIRE(rc.results.size() == rd.results.size());
    for (std::size_t i = 0; i < rc.results.size(); ++i) {
        CHECK(rc.results[i].entry_id == rd.results[i].entry_id);
        CHECK(rc.results[i].skipped == rd.results[i].skipped);
        if (!rc.results[i].skipped) {
            CHECK(rc.results[i].report.cm.witness == rd.results[i].report.cm.witness);
        }
    }
    CHECK(rc.checks_held == rd.checks_held);
    CHECK(rc.checks_failed == rd.checks_failed);
    CHECK(rc.checks_unavailable == rd.checks_unavailable);
}
