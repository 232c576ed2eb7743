#include "chern/cm.hpp"

#include <sstream>

#include "chern/errors.hpp"

namespace chern {

namespace {

std::string ideal_witness(const IdealHandle& q) {
    std::ostringstream out;
    out << "(";
    const auto& gens = q.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) out << ", ";
        out << gens[i].to_string(q.ring().variable_names());
    }
    out << ")";
    return out.str();
}

bool eval_relation(const std::string& relation, long long lhs, long long rhs) {
    if (relation == "=") return lhs == rhs;
    if (relation == "<=") return lhs <= rhs;
    if (relation == ">=") return lhs >= rhs;
    throw internal_error("unknown verdict relation");
}

} // namespace

CMReport cohen_macaulay_report(const IdealHandle& q, const HilbertOptions& opts) {
    if (!is_parameter_ideal(q, opts)) {
        throw argument_error("the Cohen-Macaulay witness test requires a parameter ideal");
    }
    CMReport report;
    report.witness = ideal_witness(q);
    const auto len = colength(q);
    internal_check(len.has_value(), "parameter ideal with infinite colength");
    report.len = *len;
    report.e0 = multiplicity(q, opts);
    report.is_cm = (report.len == report.e0);
    if (report.is_cm) {
        report.cm_type = index_of_reducibility(q).index_of_reducibility;
        report.gorenstein = (*report.cm_type == 1);
    }
    return report;
}

const std::vector<std::string>& verdict_check_ids() {
    static const std::vector<std::string> ids = {
        "northcott",
        "goto-nishida",
        "huneke-ooishi-printed",
        "huneke-ooishi-standard",
        "prop-2.4",
        "thm-2.2",
        "thm-1.1-N-inequality",
        "thm-1.1-N-equality",
        "thm-3.6",
        "thm-4.5-r-inequality",
        "thm-4.5-r-equality",
        "thm-4.8",
    };
    return ids;
}

VerifyReport verify_theorems(const IdealHandle& q, const std::string& entry_label,
                             const std::string& unmixed_annotation, const HilbertOptions& opts) {
    if (!is_parameter_ideal(q, opts)) {
        throw argument_error("theorem verification requires a parameter ideal");
    }

    VerifyReport report;
    report.entry = entry_label;
    report.flags.unmixed = unmixed_annotation;
    report.dim = krull_dimension(q.ring_ptr(), opts);

    if (q.ring().field().is_prime_field()) {
        report.warnings.push_back(
            "computations over a prime field: genericity of random choices and "
            "characteristic-dependent identities are not guaranteed");
    }

    const SocleReport socle = index_of_reducibility(q);
    report.len_q = socle.colength;
    report.index_q = socle.index_of_reducibility;
    report.flags.q_in_m2 = contained_in_m_power(q, 2);

    std::string e1_q_reason;
    try {
        const HilbertData data_q = hilbert_samuel_data(q, opts);
        report.e_q = data_q.coefficients;
        report.e0_q = data_q.coefficients.at(0);
        if (report.dim >= 1) report.e1_q = data_q.coefficients.at(1);
        else e1_q_reason = "e1(q) undefined in dimension 0";
    } catch (const not_stabilized& e) {
        e1_q_reason = std::string("Hilbert-Samuel fit for q did not stabilize: ") + e.what();
        report.warnings.push_back(e1_q_reason);
    }

    const IdealHandle I = socle_colon(q);
    std::string I_reason;
    if (I.is_unit_ideal()) {
        I_reason = "q : m is the unit ideal (q = m), so I-based quantities are undefined";
        report.warnings.push_back(I_reason);
    } else {
        const auto len_I = colength(I);
        internal_check(len_I.has_value(), "q : m of an m-primary ideal must be m-primary");
        report.len_I = *len_I;
        report.flags.reduction_I2_eq_qI = reduction_check(q, I);
        try {
            const HilbertData data_I = hilbert_samuel_data(I, opts);
            report.e0_I = data_I.coefficients.at(0);
            if (report.dim >= 1) report.e1_I = data_I.coefficients.at(1);
            else I_reason = "e1(I) undefined in dimension 0";
        } catch (const not_stabilized& e) {
            I_reason = std::string("Hilbert-Samuel fit for I did not stabilize: ") + e.what();
            report.warnings.push_back(I_reason);
        }
    }

    std::string f0_reason;
    if (report.dim == 0) {
        f0_reason = "f0(q) undefined in dimension 0";
    } else {
        try {
            report.f0_q = irreducible_data(q, opts).coefficients.at(0);
        } catch (const not_stabilized& e) {
            f0_reason = std::string("irreducible-function fit did not stabilize: ") + e.what();
            report.warnings.push_back(f0_reason);
        }
    }

    report.cm.witness = ideal_witness(q);
    if (report.len_q && report.e0_q) {
        report.cm.len = *report.len_q;
        report.cm.e0 = *report.e0_q;
        report.cm.is_cm = (*report.len_q == *report.e0_q);
        if (report.cm.is_cm) {
            report.cm.cm_type = *report.index_q;
            report.cm.gorenstein = (*report.cm.cm_type == 1);
            report.r = report.cm.cm_type;
        }
    }
    std::string r_reason = report.cm.is_cm
                               ? std::string()
                               : "r(R) is reported only for Cohen-Macaulay rings";

    const auto diff = [&]() -> std::optional<long long> {
        if (report.e1_I && report.e1_q) return *report.e1_I - *report.e1_q;
        return std::nullopt;
    }();
    const auto surplus = [&]() -> std::optional<long long> {
        if (report.e0_I && report.len_I) return *report.e0_I - *report.len_I;
        return std::nullopt;
    }();
    const std::string diff_reason = !I_reason.empty() ? I_reason : e1_q_reason;

    auto add = [&](const std::string& id, const std::string& citation,
                   const std::string& relation, std::optional<long long> lhs,
                   std::optional<long long> rhs, const std::string& reason) {
        TheoremVerdict v;
        v.id = id;
        v.citation = citation;
        v.relation = relation;
        v.lhs = lhs;
        v.rhs = rhs;
        if (lhs && rhs) {
            v.holds = eval_relation(relation, *lhs, *rhs);
        } else {
            v.status = CheckStatus::unavailable;
            v.reason = reason.empty() ? "required quantity unavailable" : reason;
        }
        report.checks.push_back(std::move(v));
    };

    add("northcott", "Northcott's inequality: e0(I) - l(R/I) <= e1(I) for m-primary I",
        "<=", surplus, report.e1_I, I_reason);
    add("goto-nishida",
        "Goto-Nishida inequality: e0(I) - l(R/I) <= e1(I) - e1(q) for I = q : m", "<=",
        surplus, diff, diff_reason);
    add("huneke-ooishi-printed",
        "reduction-number-one identity, printed form: e1(I) = l(R/I) - e0(q) when I^2 = qI",
        "=", report.e1_I,
        (report.len_I && report.e0_q) ? std::optional<long long>(*report.len_I - *report.e0_q)
                                      : std::nullopt,
        !I_reason.empty() ? I_reason : e1_q_reason);
    add("huneke-ooishi-standard",
        "Huneke-Ooishi identity, standard form: e1(I) = e0(I) - l(R/I) when I^2 = qI", "=",
        report.e1_I, surplus, I_reason);
    add("prop-2.4", "when I^2 = qI: e1(I) - e1(q) <= f0(q)", "<=", diff, report.f0_q,
        !diff_reason.empty() ? diff_reason : f0_reason);
    add("thm-2.2",
        "f0(q) = e1(I) for parameter ideals of Cohen-Macaulay rings that are not regular",
        "=", report.f0_q, report.e1_I, !f0_reason.empty() ? f0_reason : I_reason);
    add("thm-1.1-N-inequality",
        "N(q;R) <= e1(I) - e1(q) for parameter ideals q in m^2 of unmixed rings", "<=",
        report.index_q, diff, diff_reason);
    add("thm-1.1-N-equality",
        "N(q;R) = e1(I) - e1(q) holds (for q in m^2, unmixed) exactly when R is "
        "Cohen-Macaulay",
        "=", report.index_q, diff, diff_reason);
    add("thm-3.6",
        "N(q;R) = e1(I) - e1(q) as a Cohen-Macaulay characterization among unmixed rings",
        "=", report.index_q, diff, diff_reason);
    add("thm-4.5-r-inequality",
        "e1(I) - e1(q) <= r(R) for parameter ideals q in m^2 of unmixed rings", "<=", diff,
        report.r, !diff_reason.empty() ? diff_reason : r_reason);
    add("thm-4.5-r-equality",
        "e1(I) - e1(q) = r(R) holds (for q in m^2, unmixed) exactly when R is "
        "Cohen-Macaulay",
        "=", diff, report.r, !diff_reason.empty() ? diff_reason : r_reason);
    add("thm-4.8",
        "Gorenstein characterization: e1(I) - e1(q) = 1 for parameter ideals q in m^2 of "
        "unmixed Cohen-Macaulay rings",
        "=", diff, std::optional<long long>(1), diff_reason);

    return report;
}

} // namespace chern
