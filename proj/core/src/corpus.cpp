#include "chern/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <future>
#include <sstream>

#include "chern/errors.hpp"
#include "chern/fitting.hpp"

namespace chern {

namespace {

// Small builder for assembling entries programmatically.
struct RingScope {
    RingPtr ring;

    Polynomial v(const std::string& name) const {
        const auto idx = ring->variable_index(name);
        internal_check(idx.has_value(), "corpus references an unknown variable");
        return ring->variable(*idx);
    }
    Polynomial c(long long k) const {
        return ring->constant(Scalar::from_integer(ring->field(), k));
    }
    IdealHandle ideal(std::vector<Polynomial> gens) const {
        return IdealHandle(ring, std::move(gens));
    }
};

RingScope make_ring(std::vector<std::string> vars, std::vector<Polynomial> defining = {},
                    std::vector<std::uint32_t> weights = {}) {
    auto ring = std::make_shared<const RingPresentation>(
        FieldDescriptor::rationals(), std::move(vars), std::move(defining), std::move(weights));
    return RingScope{std::move(ring)};
}

// Two-stage construction for quotient rings: the ambient scope provides the
// variables used to spell the defining polynomials.
RingScope ambient(std::vector<std::string> vars) { return make_ring(std::move(vars)); }

RingScope quotient_of(const RingScope& amb, std::vector<Polynomial> defining,
                      std::vector<std::uint32_t> weights = {}) {
    auto ring = std::make_shared<const RingPresentation>(
        amb.ring->field(), amb.ring->variable_names(), std::move(defining), std::move(weights));
    return RingScope{std::move(ring)};
}

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace

std::string variant_name(GotoSakuraiVariant v) {
    return v == GotoSakuraiVariant::as_printed ? "as-printed" : "x_m-squared";
}

long long goto_sakurai_claimed_hilbert(int m, int d, long long n) {
    return 2LL * m * binomial(n + d, d) - (m - 2LL) * binomial(n + d - 1, d - 1);
}

CorpusEntry build_goto_sakurai(int m, int d, GotoSakuraiVariant variant) {
    if (!(2 <= d && d <= m && m <= 4)) {
        throw argument_error("family parameters need 2 <= d <= m <= 4");
    }

    std::vector<std::string> vars;
    for (int i = 1; i <= m; ++i) vars.push_back("x" + std::to_string(i));
    vars.push_back("v");
    for (int j = 1; j <= d; ++j) vars.push_back("z" + std::to_string(j));

    RingScope amb = ambient(vars);
    auto x = [&](int i) { return amb.v("x" + std::to_string(i)); };
    auto z = [&](int j) { return amb.v("z" + std::to_string(j)); };
    const Polynomial v = amb.v("v");

    std::vector<Polynomial> b;
    for (int i = 1; i <= m - 1; ++i) {
        for (int j = i; j <= m - 1; ++j) b.push_back(x(i) * x(j));
    }
    if (variant == GotoSakuraiVariant::as_printed) {
        Polynomial p = amb.c(1);
        for (int k = 0; k < m; ++k) p = p * x(2);
        b.push_back(p);  // x_2^m
    } else {
        b.push_back(x(m) * x(m));  // x_m^2
    }
    for (int i = 1; i <= m; ++i) b.push_back(x(i) * v);
    Polynomial mixed = v * v;
    for (int i = 1; i <= d; ++i) mixed = mixed - x(i) * z(i);
    b.push_back(mixed);

    RingScope R = quotient_of(amb, std::move(b));

    std::vector<Polynomial> qgens;
    for (int j = 1; j <= d; ++j) qgens.push_back(R.v("z" + std::to_string(j)));

    CorpusEntry entry;
    entry.id = "goto-sakurai-" + std::to_string(m) + "-" + std::to_string(d);
    entry.description = "graded family member (m=" + std::to_string(m) +
                        ", d=" + std::to_string(d) + ", variant " + variant_name(variant) +
                        "): nilpotent x/v block over a polynomial block z_1..z_d";
    entry.ring = R.ring;
    entry.unmixed = "unknown";
    entry.cm_expected = false;
    entry.depth_note = "family construction advertises depth d-1, dimension d";
    entry.expected_source = "closed forms attached to the family (see the builder's contract)";
    entry.ring_expected["dim"] = d;

    DesignatedParameter q;
    q.label = "q";
    q.ideal = R.ideal(qgens);
    q.expected["len_R_q"] = 2LL * m + 1;
    q.expected["e0_q"] = 2LL * m;
    q.expected["e1_q"] = -1;
    for (int i = 2; i <= d; ++i) q.expected["e" + std::to_string(i) + "_q"] = 0;
    q.expected["index_q"] = m - 1;
    q.expected["len_R_I"] = m + 2;
    q.expected["e0_I"] = 2LL * m;
    q.expected["e1_I"] = m - 2;
    entry.parameters.push_back(std::move(q));
    return entry;
}

std::vector<CorpusEntry> standard_entries() {
    std::vector<CorpusEntry> out;

    { // regular-2
        RingScope R = make_ring({"x", "y"});
        const Polynomial x = R.v("x"), y = R.v("y");
        CorpusEntry e;
        e.id = "regular-2";
        e.description = "regular ring QQ[x,y]";
        e.ring = R.ring;
        e.unmixed = "true";
        e.cm_expected = true;
        e.depth_note = "regular, depth 2";
        e.expected_source = "hand computation with standard monomials";
        e.ring_expected["dim"] = 2;
        DesignatedParameter q1;
        q1.label = "q1";
        q1.ideal = R.ideal({x, y});
        q1.expected = {{"len_R_q", 1}, {"e0_q", 1}, {"e1_q", 0}, {"e2_q", 0}, {"index_q", 1}};
        DesignatedParameter q2;
        q2.label = "q2";
        q2.ideal = R.ideal({x * x, y * y});
        q2.expected = {{"len_R_q", 4}, {"e0_q", 4},   {"e1_q", 0},   {"e2_q", 0},
                       {"index_q", 1}, {"len_R_I", 3}, {"e0_I", 4},  {"e1_I", 1},
                       {"f0_q", 1},    {"r", 1}};
        DesignatedParameter q3;
        q3.label = "q3";
        q3.ideal = R.ideal({x * x * x, y * y});
        q3.expected = {{"len_R_q", 6}, {"e0_q", 6}, {"e1_q", 0}, {"index_q", 1},
                       {"len_R_I", 5}, {"r", 1}};
        e.parameters = {std::move(q1), std::move(q2), std::move(q3)};
        out.push_back(std::move(e));
    }

    { // regular-3
        RingScope R = make_ring({"x", "y", "z"});
        const Polynomial x = R.v("x"), y = R.v("y"), z = R.v("z");
        CorpusEntry e;
        e.id = "regular-3";
        e.description = "regular ring QQ[x,y,z]";
        e.ring = R.ring;
        e.unmixed = "true";
        e.cm_expected = true;
        e.depth_note = "regular, depth 3";
        e.expected_source = "hand computation with standard monomials";
        e.ring_expected["dim"] = 3;
        DesignatedParameter q;
        q.label = "q";
        q.ideal = R.ideal({x * x, y * y, z * z});
        q.expected = {{"len_R_q", 8}, {"e0_q", 8},   {"e1_q", 0},  {"index_q", 1},
                      {"len_R_I", 7}, {"e0_I", 8},   {"e1_I", 1},  {"f0_q", 1},
                      {"r", 1}};
        e.parameters = {std::move(q)};
        out.push_back(std::move(e));
    }

    { // node-curve
        RingScope amb = ambient({"x", "y"});
        RingScope R = quotient_of(amb, {amb.v("x") * amb.v("y")});
        const Polynomial x = R.v("x"), y = R.v("y");
        CorpusEntry e;
        e.id = "node-curve";
        e.description = "coordinate cross QQ[x,y]/(x*y)";
        e.ring = R.ring;
        e.unmixed = "true";
        e.cm_expected = true;
        e.depth_note = "one-dimensional hypersurface, depth 1";
        e.expected_source = "hand computation with standard monomials";
        e.ring_expected["dim"] = 1;
        DesignatedParameter q1;
        q1.label = "q1";
        q1.ideal = R.ideal({x + y});
        q1.expected = {{"len_R_q", 2}, {"e0_q", 2},  {"e1_q", 0},  {"index_q", 1},
                       {"len_R_I", 1}, {"e0_I", 2},  {"e1_I", 1},  {"f0_q", 1},
                       {"r", 1}};
        DesignatedParameter q2;
        q2.label = "q2";
        q2.ideal = R.ideal({x * x + y * y});
        q2.expected = {{"len_R_q", 4}, {"e0_q", 4}, {"index_q", 1}, {"r", 1}};
        e.parameters = {std::move(q1), std::move(q2)};
        out.push_back(std::move(e));
    }

    { // quadric-cone
        RingScope amb = ambient({"x", "y", "z"});
        RingScope R = quotient_of(
            amb, {amb.v("x") * amb.v("x") + amb.v("y") * amb.v("y") + amb.v("z") * amb.v("z")});
        const Polynomial y = R.v("y"), z = R.v("z");
        CorpusEntry e;
        e.id = "quadric-cone";
        e.description = "quadric hypersurface QQ[x,y,z]/(x^2 + y^2 + z^2)";
        e.ring = R.ring;
        e.unmixed = "true";
        e.cm_expected = true;
        e.depth_note = "two-dimensional hypersurface, depth 2";
        e.expected_source = "hand computation with standard monomials";
        e.ring_expected["dim"] = 2;
        DesignatedParameter q1;
        q1.label = "q1";
        q1.ideal = R.ideal({y, z});
        q1.expected = {{"len_R_q", 2}, {"e0_q", 2},  {"e1_q", 0},  {"e2_q", 0},
                       {"index_q", 1}, {"len_R_I", 1}, {"e0_I", 2}, {"e1_I", 1},
                       {"f0_q", 1},    {"r", 1}};
        DesignatedParameter q2;
        q2.label = "q2";
        q2.ideal = R.ideal({y * y, z * z});
        q2.expected = {{"len_R_q", 8}, {"e0_q", 8}, {"index_q", 1}, {"len_R_I", 7}, {"r", 1}};
        e.parameters = {std::move(q1), std::move(q2)};
        out.push_back(std::move(e));
    }

    { // monomial-curve-t345
        RingScope amb = ambient({"x", "y", "z"});
        const Polynomial X = amb.v("x"), Y = amb.v("y"), Z = amb.v("z");
        RingScope R = quotient_of(amb, {Y * Y - X * Z, Z * Z - X * X * Y, Y * Z - X * X * X},
                                  {3, 4, 5});
        const Polynomial x = R.v("x");
        CorpusEntry e;
        e.id = "monomial-curve-t345";
        e.description =
            "semigroup ring of <3,4,5> presented as QQ[x,y,z]/(y^2 - x*z, z^2 - x^2*y, "
            "y*z - x^3) with weights 3, 4, 5";
        e.ring = R.ring;
        e.unmixed = "true";
        e.cm_expected = true;
        e.depth_note = "one-dimensional Cohen-Macaulay domain of type 2";
        e.expected_source = "hand computation in the numerical semigroup <3,4,5>";
        e.ring_expected["dim"] = 1;
        DesignatedParameter q1;
        q1.label = "q1";
        q1.ideal = R.ideal({x});
        q1.expected = {{"len_R_q", 3}, {"e0_q", 3},  {"e1_q", 0},  {"index_q", 2},
                       {"len_R_I", 1}, {"e0_I", 3},  {"e1_I", 2},  {"f0_q", 2},
                       {"r", 2}};
        DesignatedParameter q2;
        q2.label = "q2";
        q2.ideal = R.ideal({x * x});
        q2.expected = {{"len_R_q", 6}, {"e0_q", 6}, {"e1_q", 0}, {"index_q", 2}, {"r", 2}};
        e.parameters = {std::move(q1), std::move(q2)};
        out.push_back(std::move(e));
    }

    { // non-cm-control
        RingScope amb = ambient({"x", "y"});
        RingScope R =
            quotient_of(amb, {amb.v("x") * amb.v("x"), amb.v("x") * amb.v("y")});
        const Polynomial y = R.v("y");
        CorpusEntry e;
        e.id = "non-cm-control";
        e.description = "QQ[x,y]/(x^2, x*y): embedded point on a line, depth 0";
        e.ring = R.ring;
        e.unmixed = "false";
        e.cm_expected = false;
        e.depth_note = "dimension 1, depth 0 (x is a socle element of R)";
        e.expected_source = "hand computation with standard monomials";
        e.ring_expected["dim"] = 1;
        DesignatedParameter q;
        q.label = "q";
        q.ideal = R.ideal({y});
        q.expected = {{"len_R_q", 2}, {"e0_q", 1},  {"e1_q", -1}, {"index_q", 1},
                      {"len_R_I", 1}, {"e0_I", 1},  {"e1_I", -1}, {"f0_q", 2}};
        e.parameters = {std::move(q)};
        out.push_back(std::move(e));
    }

    return out;
}

std::vector<CorpusEntry> all_entries() {
    std::vector<CorpusEntry> out = standard_entries();
    out.push_back(build_goto_sakurai(2, 2, GotoSakuraiVariant::xm_squared));
    out.push_back(build_goto_sakurai(3, 2, GotoSakuraiVariant::xm_squared));
    out.push_back(build_goto_sakurai(3, 3, GotoSakuraiVariant::xm_squared));
    std::sort(out.begin(), out.end(),
              [](const CorpusEntry& a, const CorpusEntry& b) { return a.id < b.id; });
    return out;
}

std::optional<CorpusEntry> find_entry(const std::string& id) {
    for (auto& e : all_entries()) {
        if (e.id == id) return e;
    }
    return std::nullopt;
}

std::string export_entry_script(const CorpusEntry& entry) {
    const RingPresentation& R = *entry.ring;
    std::ostringstream out;
    out << "ring R = QQ[";
    const auto& names = R.variable_names();
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out << ",";
        out << names[i];
    }
    out << "]";
    if (!R.defining_generators().empty()) {
        out << " / (";
        const auto& b = R.defining_generators();
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (i) out << ", ";
            out << b[i].to_string(names);
        }
        out << ")";
    }
    if (R.weighted()) {
        out << " weights";
        for (auto w : R.weights()) out << " " << w;
    }
    out << ";\n";
    for (const auto& p : entry.parameters) {
        out << "ideal " << p.label << " = (";
        const auto& gens = p.ideal.generators();
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (i) out << ", ";
            out << gens[i].to_string(names);
        }
        out << ");\n";
    }
    return out.str();
}

namespace {

VariantQuantities variant_quantities(int m, int d, GotoSakuraiVariant variant,
                                     const HilbertOptions& opts) {
    VariantQuantities out;
    out.variant = variant_name(variant);
    const CorpusEntry entry = build_goto_sakurai(m, d, variant);
    const IdealHandle& q = entry.parameters[0].ideal;
    const auto& expected = entry.parameters[0].expected;

    out.q_is_parameter = is_parameter_ideal(q, opts);
    auto match = [&](const std::string& key, std::optional<long long> computed) {
        const auto it = expected.find(key);
        if (it == expected.end()) return;
        out.matches[key] = computed.has_value() && *computed == it->second;
    };

    if (!out.q_is_parameter) {
        for (const auto& [key, val] : expected) out.matches[key] = false;
        out.all_match = false;
        return out;
    }

    const SocleReport socle = index_of_reducibility(q);
    out.len_q = socle.colength;
    out.index_q = socle.index_of_reducibility;
    const IdealHandle I = socle_colon(q);
    if (!I.is_unit_ideal()) out.len_I = colength(I);

    try {
        const HilbertData data_q = hilbert_samuel_data(q, opts);
        out.e_q = data_q.coefficients;
        out.e0_q = data_q.coefficients.at(0);
        if (d >= 1) out.e1_q = data_q.coefficients.at(1);
    } catch (const not_stabilized&) {
    }
    try {
        if (!I.is_unit_ideal()) {
            const HilbertData data_I = hilbert_samuel_data(I, opts);
            out.e0_I = data_I.coefficients.at(0);
            out.e1_I = data_I.coefficients.at(1);
            const FunctionTable t = hilbert_samuel_table(I, 6);
            out.hilbert_I = t.values;
        }
    } catch (const not_stabilized&) {
    }

    match("len_R_q", out.len_q);
    match("e0_q", out.e0_q);
    match("e1_q", out.e1_q);
    for (int i = 2; i <= d; ++i) {
        const std::string key = "e" + std::to_string(i) + "_q";
        if (static_cast<int>(out.e_q.size()) > i) {
            match(key, out.e_q[static_cast<std::size_t>(i)]);
        } else {
            match(key, std::nullopt);
        }
    }
    match("index_q", out.index_q);
    match("len_R_I", out.len_I);
    match("e0_I", out.e0_I);
    match("e1_I", out.e1_I);

    bool hilbert_match = !out.hilbert_I.empty();
    for (std::size_t n = 0; n < out.hilbert_I.size(); ++n) {
        if (out.hilbert_I[n] !=
            goto_sakurai_claimed_hilbert(m, d, static_cast<long long>(n))) {
            hilbert_match = false;
        }
    }
    out.matches["hilbert_I"] = hilbert_match;

    out.all_match = true;
    for (const auto& [key, ok] : out.matches) {
        if (!ok) out.all_match = false;
    }
    return out;
}

// q^k generated by the degree-k monomials in the designated generators.  The
// generic ideal_power feeds its result through a Groebner basis, which mixes
// in relation elements and would make the d-generator parameter test fail
// even when q^k genuinely is a parameter ideal (principal q in dimension 1).
IdealHandle designated_power(const IdealHandle& q, unsigned k) {
    const auto& gens = q.generators();
    std::vector<Polynomial> out;
    std::vector<unsigned> exps(gens.size(), 0);
    auto emit = [&]() {
        Polynomial prod = Polynomial::constant(q.ring().field(), q.ring().nvars(),
                                               q.ring().default_order(),
                                               Scalar::from_integer(q.ring().field(), 1));
        for (std::size_t j = 0; j < gens.size(); ++j) {
            for (unsigned e = 0; e < exps[j]; ++e) prod = prod * gens[j];
        }
        out.push_back(std::move(prod));
    };
    auto rec = [&](auto&& self, std::size_t idx, unsigned remaining) -> void {
        if (idx + 1 == exps.size()) {
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
    if (gens.empty()) return IdealHandle(q.ring_ptr(), {});
    rec(rec, 0, k);
    return IdealHandle(q.ring_ptr(), std::move(out));
}

} // namespace

VariantComparison compare_goto_sakurai_variants(int m, int d, const HilbertOptions& opts) {
    VariantComparison cmp;
    cmp.m = m;
    cmp.d = d;
    cmp.as_printed = variant_quantities(m, d, GotoSakuraiVariant::as_printed, opts);
    cmp.xm_squared = variant_quantities(m, d, GotoSakuraiVariant::xm_squared, opts);
    if (cmp.xm_squared.all_match) {
        cmp.matching_variant = GotoSakuraiVariant::xm_squared;
    } else if (cmp.as_printed.all_match) {
        cmp.matching_variant = GotoSakuraiVariant::as_printed;
    }
    return cmp;
}

std::optional<IdealHandle> random_parameter_ideal(const RingPtr& ring,
                                                  std::uint32_t weighted_degree,
                                                  std::mt19937_64& rng, int max_retries,
                                                  const HilbertOptions& opts) {
    const int d = krull_dimension(ring, opts);
    if (d == 0) return IdealHandle(ring, {});

    // Monomials of the requested weighted degree.
    std::vector<Monomial> basis;
    const std::size_t nv = ring->nvars();
    std::vector<std::uint32_t> exps(nv, 0);
    auto rec = [&](auto&& self, std::size_t idx, std::uint32_t remaining) -> void {
        if (idx + 1 == nv) {
            const std::uint32_t w = ring->weights()[idx];
            if (remaining % w == 0) {
                exps[idx] = remaining / w;
                basis.emplace_back(exps);
                exps[idx] = 0;
            }
            return;
        }
        const std::uint32_t w = ring->weights()[idx];
        for (std::uint32_t e = 0; e * w <= remaining; ++e) {
            exps[idx] = e;
            self(self, idx + 1, remaining - e * w);
        }
        exps[idx] = 0;
    };
    rec(rec, 0, weighted_degree);
    if (basis.empty()) return std::nullopt;

    const FieldDescriptor field = ring->field();
    auto draw_coeff = [&]() -> Scalar {
        if (field.is_prime_field()) {
            return Scalar::from_integer(field,
                                        1 + static_cast<long long>(rng() % (field.p - 1)));
        }
        static const long long pool[6] = {-3, -2, -1, 1, 2, 3};
        return Scalar::from_integer(field, pool[rng() % 6]);
    };

    for (int attempt = 0; attempt < max_retries; ++attempt) {
        std::vector<Polynomial> gens;
        gens.reserve(static_cast<std::size_t>(d));
        for (int g = 0; g < d; ++g) {
            std::vector<Term> terms;
            terms.reserve(basis.size());
            for (const auto& mon : basis) terms.push_back(Term{mon, draw_coeff()});
            gens.push_back(Polynomial::from_terms(field, nv, ring->default_order(),
                                                  std::move(terms)));
        }
        IdealHandle q(ring, std::move(gens));
        if (is_parameter_ideal(q, opts)) return q;
    }
    return std::nullopt;
}

BatchReport batch_verify(const std::string& family, const BatchOptions& opts) {
    std::vector<CorpusEntry> selected;
    for (auto& e : all_entries()) {
        const bool take = family == "all" || (family == "cm" && e.cm_expected) ||
                          (family == "non-cm" && !e.cm_expected) ||
                          (family == "goto-sakurai" && e.id.rfind("goto-sakurai", 0) == 0) ||
                          e.id == family;
        if (take) selected.push_back(std::move(e));
    }
    if (selected.empty()) {
        throw argument_error("no corpus entry matches selector '" + family + "'");
    }

    BatchReport report;
    report.family = family;
    report.seed = opts.seed;
    switch (opts.strategy) {
        case QStrategy::given: report.strategy = "given"; break;
        case QStrategy::random_forms:
            report.strategy = "random-forms-" + std::to_string(opts.degree);
            break;
        case QStrategy::powers_of_given:
            report.strategy = "powers-" + std::to_string(opts.power);
            break;
    }

    struct Job {
        std::string entry_id;
        std::string label;
        std::string unmixed;
        IdealHandle q;
        bool skipped = false;
        std::string skip_reason;
    };
    std::vector<Job> jobs;
    for (const auto& entry : selected) {
        if (opts.strategy == QStrategy::random_forms) {
            std::mt19937_64 rng(opts.seed ^ fnv1a(entry.id));
            // Scale the unit-weight degree by the smallest variable weight so
            // weighted rings get a nonempty form space.
            std::uint32_t wdeg = opts.degree;
            const auto& ws = entry.ring->weights();
            const std::uint32_t wmin = *std::min_element(ws.begin(), ws.end());
            const std::uint32_t wmax = *std::max_element(ws.begin(), ws.end());
            if (wmax != 1) wdeg = opts.degree * wmin * wmax;  // divisible by several weights
            Job job{entry.id, "random", entry.unmixed, {}, false, {}};
            auto q = random_parameter_ideal(entry.ring, wdeg, rng, 20, opts.hilbert);
            if (q.has_value()) {
                job.q = *q;
            } else {
                job.skipped = true;
                job.skip_reason = "no parameter ideal found after bounded retries";
            }
            jobs.push_back(std::move(job));
        } else {
            for (const auto& p : entry.parameters) {
                Job job{entry.id, p.label, entry.unmixed, p.ideal, false, {}};
                if (opts.strategy == QStrategy::powers_of_given) {
                    job.label = p.label + "^" + std::to_string(opts.power);
                    IdealHandle powered = designated_power(p.ideal, opts.power);
                    if (is_parameter_ideal(powered, opts.hilbert)) {
                        job.q = powered;
                    } else {
                        job.skipped = true;
                        job.skip_reason =
                            "the power is m-primary but not generated by dim R elements";
                    }
                }
                jobs.push_back(std::move(job));
            }
        }
    }

    auto run_job = [&](const Job& job) -> BatchEntryResult {
        BatchEntryResult result;
        result.entry_id = job.entry_id;
        result.parameter_label = job.label;
        if (job.skipped) {
            result.skipped = true;
            result.skip_reason = job.skip_reason;
            return result;
        }
        try {
            result.report = verify_theorems(job.q, job.entry_id + ":" + job.label,
                                            job.unmixed, opts.hilbert);
        } catch (const user_error& e) {
            result.skipped = true;
            result.skip_reason = e.what();
        }
        return result;
    };

    report.results.resize(jobs.size());
    if (opts.threads > 1 && jobs.size() > 1) {
        // Results land at their job's index, so the report order is
        // deterministic regardless of completion order.
        std::atomic<std::size_t> cursor{0};
        auto worker = [&]() {
            for (;;) {
                const std::size_t k = cursor.fetch_add(1);
                if (k >= jobs.size()) return;
                report.results[k] = run_job(jobs[k]);
            }
        };
        std::vector<std::future<void>> pool;
        const std::size_t n_workers = std::min<std::size_t>(opts.threads, jobs.size());
        pool.reserve(n_workers);
        for (std::size_t t = 0; t < n_workers; ++t) {
            pool.push_back(std::async(std::launch::async, worker));
        }
        for (auto& f : pool) f.get();
    } else {
        std::transform(jobs.begin(), jobs.end(), report.results.begin(), run_job);
    }

    for (const auto& r : report.results) {
        if (r.skipped) continue;
        for (const auto& check : r.report.checks) {
            if (check.status == CheckStatus::unavailable) {
                ++report.checks_unavailable;
            } else if (check.holds.value_or(false)) {
                ++report.checks_held;
            } else {
                ++report.checks_failed;
            }
        }
    }
    return report;
}

} // namespace chern
