#include "chern/session.hpp"

#include <chrono>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "chern/cm.hpp"
#include "chern/corpus.hpp"
#include "chern/errors.hpp"
#include "chern/hilbert.hpp"
#include "chern/quotient.hpp"
#include "chern/script.hpp"
#include "chern/version.hpp"

namespace chern {

namespace {

using ojson = nlohmann::ordered_json;

// JSON numbers stay exact for consumers that read them as doubles; larger
// magnitudes are emitted as decimal strings.
ojson json_int(long long v) {
    constexpr long long limit = 1LL << 53;
    if (v > -limit && v < limit) return ojson(v);
    return ojson(std::to_string(v));
}

ojson json_int_array(const std::vector<long long>& values) {
    ojson arr = ojson::array();
    for (long long v : values) arr.push_back(json_int(v));
    return arr;
}

void put_optional(ojson& o, const char* key, const std::optional<long long>& v) {
    if (v.has_value()) o[key] = json_int(*v);
}

std::string order_name(const MonomialOrder& ord) {
    switch (ord.kind()) {
        case MonomialOrder::Kind::grevlex: return "grevlex";
        case MonomialOrder::Kind::lex: return "lex";
        case MonomialOrder::Kind::block_elimination: return "block-elimination";
    }
    return "unknown";
}

std::vector<std::string> basis_strings(const IdealHandle& J) {
    const auto& names = J.ring().variable_names();
    std::vector<std::string> out;
    for (const auto& f : J.groebner_basis().elements) out.push_back(f.to_string(names));
    return out;
}

ojson string_array(const std::vector<std::string>& items) {
    ojson arr = ojson::array();
    for (const auto& s : items) arr.push_back(s);
    return arr;
}

ojson table_payload(const FunctionTable& table) {
    ojson o;
    o["kind"] = table.kind;
    o["start"] = table.start;
    o["values"] = json_int_array(table.values);
    return o;
}

ojson hilbert_data_payload(const HilbertData& data) {
    ojson o = table_payload(data.table);
    o["degree"] = data.degree;
    o["coefficients"] = json_int_array(data.coefficients);
    o["postulation"] = json_int(data.postulation);
    if (data.leading_zero) o["leading_zero"] = true;
    return o;
}

ojson cm_payload(const CMReport& cm) {
    ojson o;
    o["witness"] = cm.witness;
    o["len"] = json_int(cm.len);
    o["e0"] = json_int(cm.e0);
    o["is_cm"] = cm.is_cm;
    if (cm.cm_type.has_value()) o["type"] = json_int(*cm.cm_type);
    if (cm.gorenstein.has_value()) o["gorenstein"] = *cm.gorenstein;
    return o;
}

ojson verify_payload(const VerifyReport& report) {
    ojson o;
    o["entry"] = report.entry;
    o["dim"] = report.dim;

    ojson flags;
    flags["q_in_m2"] = report.flags.q_in_m2;
    if (report.flags.reduction_I2_eq_qI.has_value()) {
        flags["reduction_I2_eq_qI"] = *report.flags.reduction_I2_eq_qI;
    }
    flags["unmixed"] = report.flags.unmixed;
    o["flags"] = flags;

    ojson q;
    put_optional(q, "len_R_q", report.len_q);
    put_optional(q, "e0_q", report.e0_q);
    put_optional(q, "e1_q", report.e1_q);
    if (!report.e_q.empty()) q["e_q"] = json_int_array(report.e_q);
    put_optional(q, "index_of_reducibility", report.index_q);
    put_optional(q, "f0_q", report.f0_q);
    put_optional(q, "len_R_I", report.len_I);
    put_optional(q, "e0_I", report.e0_I);
    put_optional(q, "e1_I", report.e1_I);
    put_optional(q, "r", report.r);
    o["quantities"] = q;

    ojson checks = ojson::array();
    for (const auto& check : report.checks) {
        ojson c;
        c["id"] = check.id;
        c["relation"] = check.relation;
        put_optional(c, "lhs", check.lhs);
        put_optional(c, "rhs", check.rhs);
        if (check.holds.has_value()) c["holds"] = *check.holds;
        c["status"] = check.status == CheckStatus::ok ? "ok" : "unavailable";
        if (!check.reason.empty()) c["reason"] = check.reason;
        c["citation"] = check.citation;
        checks.push_back(std::move(c));
    }
    o["checks"] = checks;
    o["cm"] = cm_payload(report.cm);
    o["warnings"] = string_array(report.warnings);
    return o;
}

ojson batch_payload(const BatchReport& report) {
    ojson o;
    o["family"] = report.family;
    o["strategy"] = report.strategy;
    o["seed"] = json_int(static_cast<long long>(report.seed));
    ojson results = ojson::array();
    for (const auto& r : report.results) {
        ojson item;
        item["entry_id"] = r.entry_id;
        item["parameter_label"] = r.parameter_label;
        item["skipped"] = r.skipped;
        if (r.skipped) {
            item["skip_reason"] = r.skip_reason;
        } else {
            item["report"] = verify_payload(r.report);
        }
        results.push_back(std::move(item));
    }
    o["results"] = results;
    o["checks_held"] = json_int(report.checks_held);
    o["checks_failed"] = json_int(report.checks_failed);
    o["checks_unavailable"] = json_int(report.checks_unavailable);
    return o;
}

// ----- plain-text rendering ----------------------------------------------

std::string opt_text(const std::optional<long long>& v) {
    return v.has_value() ? std::to_string(*v) : "unavailable";
}

void render_table_text(std::ostream& out, const FunctionTable& table) {
    for (std::size_t i = 0; i < table.values.size(); ++i) {
        out << "  n=" << (table.start + static_cast<long long>(i)) << ": "
            << table.values[i] << "\n";
    }
}

void render_hilbert_data_text(std::ostream& out, const HilbertData& data) {
    render_table_text(out, data.table);
    out << "degree " << data.degree << "\n";
    out << "coefficients (";
    for (std::size_t i = 0; i < data.coefficients.size(); ++i) {
        if (i) out << ", ";
        out << data.coefficients[i];
    }
    out << ")\n";
    out << "postulation " << data.postulation << "\n";
    if (data.leading_zero) out << "warning: leading coefficient is zero\n";
}

void render_cm_text(std::ostream& out, const CMReport& cm) {
    out << "witness " << cm.witness << "\n";
    out << "len = " << cm.len << ", e0 = " << cm.e0 << "\n";
    out << "cohen_macaulay = " << (cm.is_cm ? "true" : "false") << "\n";
    if (cm.cm_type.has_value()) out << "type = " << *cm.cm_type << "\n";
    if (cm.gorenstein.has_value()) {
        out << "gorenstein = " << (*cm.gorenstein ? "true" : "false") << "\n";
    }
}

void render_verify_text(std::ostream& out, const VerifyReport& report) {
    out << "entry " << report.entry << "\n";
    out << "dim = " << report.dim << "\n";
    out << "flags: q_in_m2=" << (report.flags.q_in_m2 ? "true" : "false");
    if (report.flags.reduction_I2_eq_qI.has_value()) {
        out << " reduction_I2_eq_qI=" << (*report.flags.reduction_I2_eq_qI ? "true" : "false");
    }
    out << " unmixed=" << report.flags.unmixed << "\n";
    out << "len_R_q = " << opt_text(report.len_q) << ", e0_q = " << opt_text(report.e0_q)
        << ", e1_q = " << opt_text(report.e1_q) << "\n";
    if (!report.e_q.empty()) {
        out << "e_q = (";
        for (std::size_t i = 0; i < report.e_q.size(); ++i) {
            if (i) out << ", ";
            out << report.e_q[i];
        }
        out << ")\n";
    }
    out << "index_of_reducibility = " << opt_text(report.index_q) << "\n";
    out << "f0_q = " << opt_text(report.f0_q) << "\n";
    out << "len_R_I = " << opt_text(report.len_I) << ", e0_I = " << opt_text(report.e0_I)
        << ", e1_I = " << opt_text(report.e1_I) << "\n";
    if (report.r.has_value()) out << "r = " << *report.r << "\n";
    out << "checks:\n";
    for (const auto& check : report.checks) {
        if (check.status == CheckStatus::unavailable) {
            out << "  [n/a]  " << check.id << ": " << check.reason << "\n";
        } else {
            out << "  " << (check.holds.value_or(false) ? "[ok]  " : "[FAIL]") << " "
                << check.id << ": " << opt_text(check.lhs) << " " << check.relation << " "
                << opt_text(check.rhs) << "\n";
        }
    }
    out << "cm: is_cm=" << (report.cm.is_cm ? "true" : "false") << " len=" << report.cm.len
        << " e0=" << report.cm.e0;
    if (report.cm.cm_type.has_value()) out << " type=" << *report.cm.cm_type;
    if (report.cm.gorenstein.has_value()) {
        out << " gorenstein=" << (*report.cm.gorenstein ? "true" : "false");
    }
    out << "\n";
    for (const auto& w : report.warnings) out << "warning: " << w << "\n";
}

void render_batch_text(std::ostream& out, const BatchReport& report) {
    out << "family " << report.family << ", strategy " << report.strategy << ", seed "
        << report.seed << "\n";
    for (const auto& r : report.results) {
        out << "---- " << r.entry_id << " [" << r.parameter_label << "]\n";
        if (r.skipped) {
            out << "skipped: " << r.skip_reason << "\n";
        } else {
            render_verify_text(out, r.report);
        }
    }
    out << "summary: held " << report.checks_held << ", failed " << report.checks_failed
        << ", unavailable " << report.checks_unavailable << "\n";
}

// ----- executor ------------------------------------------------------------

std::string command_echo(const Statement& stmt) {
    std::string echo = stmt.command;
    for (const auto& a : stmt.args) echo += " " + a;
    for (const auto& [k, v] : stmt.int_options) echo += " --" + k + " " + std::to_string(v);
    for (const auto& [k, v] : stmt.str_options) echo += " --" + k + " " + v;
    for (const auto& f : stmt.flag_options) echo += " --" + f;
    return echo;
}

struct CommandOutput {
    ojson payload;
    std::string text;
    bool seed_used = false;
    std::uint64_t seed = 0;
};

class Executor {
public:
    Executor(const SessionOptions& options, std::ostream& out, std::ostream& err)
        : opts_(options), out_(out), err_(err) {}

    int run(const SessionScript& script) {
        json_mode_ = opts_.json;
        for (const auto& stmt : script.statements) {
            if (stmt.kind == Statement::Kind::command && stmt.flag_options.count("json")) {
                json_mode_ = true;
            }
        }

        for (const auto& stmt : script.statements) {
            if (stmt.kind != Statement::Kind::command) continue;
            const std::string echo = command_echo(stmt);
            const auto t0 = std::chrono::steady_clock::now();
            try {
                // Diagnostic switch so deployments can verify the internal-error
                // reporting path (exit code 3) end to end.
                if (std::getenv("CHERN_INTERNAL_ERROR_TEST") != nullptr) {
                    throw internal_error(
                        "internal-error self-test requested via CHERN_INTERNAL_ERROR_TEST");
                }
                CommandOutput result = execute(stmt);
                const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                    std::chrono::steady_clock::now() - t0)
                                    .count();
                if (json_mode_) {
                    ojson envelope;
                    envelope["command"] = echo;
                    envelope["version"] = version_string;
                    envelope["timing_ms"] = static_cast<long long>(ms);
                    if (result.seed_used) {
                        envelope["seed"] = json_int(static_cast<long long>(result.seed));
                    }
                    envelope["result"] = std::move(result.payload);
                    reports_.push_back(std::move(envelope));
                } else {
                    out_ << "== " << echo << "\n" << result.text << "\n";
                }
            } catch (const user_error& e) {
                emit_error(echo, "user", e.what());
                err_ << "error: " << e.what() << "\n";
                flush();
                return 2;
            } catch (const internal_error& e) {
                emit_error(echo, "internal", e.what());
                err_ << "internal error: " << e.what() << "\n";
                flush();
                return 3;
            }
        }
        flush();
        return 0;
    }

private:
    HilbertOptions hilbert_options(const Statement& stmt) const {
        HilbertOptions h;
        h.n_cap = opts_.n_cap;
        const auto it = stmt.int_options.find("ncap");
        if (it != stmt.int_options.end()) {
            if (it->second <= 0) throw argument_error("--ncap must be positive");
            h.n_cap = it->second;
        }
        return h;
    }

    CommandOutput execute(const Statement& stmt) {
        CommandOutput result;
        std::ostringstream text;
        const std::string& cmd = stmt.command;

        if (cmd == "gb") {
            const GroebnerBasis& gb = stmt.ideal.groebner_basis();
            ojson o;
            o["ring"] = stmt.ideal.ring().describe();
            o["order"] = order_name(gb.order);
            o["reduced"] = true;
            o["generators"] = string_array(basis_strings(stmt.ideal));
            result.payload = std::move(o);
            for (const auto& s : basis_strings(stmt.ideal)) text << s << "\n";
        } else if (cmd == "colength") {
            const std::optional<long long> len = colength(stmt.ideal);
            ojson o;
            o["colength"] = len.has_value() ? json_int(*len) : ojson("infinite");
            result.payload = std::move(o);
            text << "colength = " << (len.has_value() ? std::to_string(*len) : "infinite")
                 << "\n";
        } else if (cmd == "dim") {
            const int d = krull_dimension(stmt.ring, hilbert_options(stmt));
            ojson o;
            o["ring"] = stmt.ring->describe();
            o["dim"] = d;
            result.payload = std::move(o);
            text << "dim = " << d << "\n";
        } else if (cmd == "socle") {
            const IdealHandle colon = socle_colon(stmt.ideal);
            ojson o;
            o["ring"] = stmt.ideal.ring().describe();
            o["colon_generators"] = string_array(basis_strings(colon));
            std::optional<long long> dimension;
            try {
                const auto a = colength(stmt.ideal);
                const auto b = colength(colon);
                if (a.has_value() && b.has_value()) dimension = *a - *b;
            } catch (const user_error&) {
                // inhomogeneous input: socle generators only
            }
            put_optional(o, "socle_dimension", dimension);
            result.payload = std::move(o);
            for (const auto& s : basis_strings(colon)) text << s << "\n";
            if (dimension.has_value()) text << "socle dimension = " << *dimension << "\n";
        } else if (cmd == "indexred") {
            const SocleReport report = index_of_reducibility(stmt.ideal);
            ojson o;
            o["colength"] = json_int(report.colength);
            o["colon_colength"] = json_int(report.colon_colength);
            o["index_of_reducibility"] = json_int(report.index_of_reducibility);
            result.payload = std::move(o);
            text << "index of reducibility = " << report.index_of_reducibility
                 << " (colength " << report.colength << ", colon colength "
                 << report.colon_colength << ")\n";
        } else if (cmd == "hilbert") {
            const auto it = stmt.int_options.find("nmax");
            if (it != stmt.int_options.end()) {
                if (it->second < 0) throw argument_error("--nmax must be non-negative");
                const FunctionTable table = hilbert_samuel_table(stmt.ideal, it->second);
                result.payload = table_payload(table);
                render_table_text(text, table);
            } else {
                const HilbertData data = hilbert_samuel_data(stmt.ideal, hilbert_options(stmt));
                result.payload = hilbert_data_payload(data);
                render_hilbert_data_text(text, data);
            }
        } else if (cmd == "coeffs") {
            const HilbertData data = hilbert_samuel_data(stmt.ideal, hilbert_options(stmt));
            result.payload = hilbert_data_payload(data);
            render_hilbert_data_text(text, data);
        } else if (cmd == "chern") {
            const long long e1 = chern_coefficient(stmt.ideal, hilbert_options(stmt));
            ojson o;
            o["e1"] = json_int(e1);
            result.payload = std::move(o);
            text << "e1 = " << e1 << "\n";
        } else if (cmd == "f0") {
            const HilbertData data = irreducible_data(stmt.ideal, hilbert_options(stmt));
            ojson o = hilbert_data_payload(data);
            o["f0"] = json_int(data.coefficients.at(0));
            result.payload = std::move(o);
            render_hilbert_data_text(text, data);
            text << "f0 = " << data.coefficients.at(0) << "\n";
        } else if (cmd == "cmtest") {
            const CMReport report = cohen_macaulay_report(stmt.ideal, hilbert_options(stmt));
            result.payload = cm_payload(report);
            render_cm_text(text, report);
        } else if (cmd == "verify") {
            const VerifyReport report =
                verify_theorems(stmt.ideal, stmt.args.at(0), "unknown", hilbert_options(stmt));
            result.payload = verify_payload(report);
            render_verify_text(text, report);
        } else if (cmd == "corpus") {
            execute_corpus(stmt, result, text);
        } else {
            throw internal_error("unhandled command reached the executor");
        }

        result.text = text.str();
        return result;
    }

    void execute_corpus(const Statement& stmt, CommandOutput& result, std::ostringstream& text) {
        if (stmt.args.at(0) == "list") {
            ojson arr = ojson::array();
            for (const auto& entry : all_entries()) {
                ojson o;
                o["id"] = entry.id;
                o["description"] = entry.description;
                std::vector<std::string> labels;
                for (const auto& p : entry.parameters) labels.push_back(p.label);
                o["parameters"] = string_array(labels);
                o["cm_expected"] = entry.cm_expected;
                o["unmixed"] = entry.unmixed;
                o["depth_note"] = entry.depth_note;
                arr.push_back(std::move(o));
                text << entry.id << " - " << entry.description << "\n";
            }
            result.payload = std::move(arr);
            return;
        }

        const std::string selector =
            stmt.args.size() > 1 ? stmt.args[1] : std::string("all");
        BatchOptions options;
        options.hilbert.n_cap = opts_.n_cap;
        const auto ncap = stmt.int_options.find("ncap");
        if (ncap != stmt.int_options.end()) options.hilbert.n_cap = ncap->second;
        options.threads = opts_.threads;
        options.seed = opts_.seed;
        const auto seed = stmt.int_options.find("seed");
        if (seed != stmt.int_options.end()) {
            options.seed = static_cast<std::uint64_t>(seed->second);
        }
        const auto degree = stmt.int_options.find("degree");
        if (degree != stmt.int_options.end()) {
            if (degree->second <= 0) throw argument_error("--degree must be positive");
            options.degree = static_cast<std::uint32_t>(degree->second);
        }
        const auto power = stmt.int_options.find("power");
        if (power != stmt.int_options.end()) {
            if (power->second <= 0) throw argument_error("--power must be positive");
            options.power = static_cast<unsigned>(power->second);
        }
        const auto strategy = stmt.str_options.find("strategy");
        if (strategy != stmt.str_options.end()) {
            if (strategy->second == "given") {
                options.strategy = QStrategy::given;
            } else if (strategy->second == "random") {
                options.strategy = QStrategy::random_forms;
            } else if (strategy->second == "powers") {
                options.strategy = QStrategy::powers_of_given;
            } else {
                throw argument_error("unknown strategy '" + strategy->second +
                                     "' (expected given, random, or powers)");
            }
        }

        const BatchReport report = batch_verify(selector, options);
        result.payload = batch_payload(report);
        render_batch_text(text, report);
        if (options.strategy == QStrategy::random_forms) {
            result.seed_used = true;
            result.seed = options.seed;
        }
    }

    void emit_error(const std::string& echo, const std::string& kind,
                    const std::string& message) {
        if (!json_mode_) {
            out_ << "== " << echo << "\n" << "error: " << message << "\n\n";
            return;
        }
        ojson envelope;
        envelope["command"] = echo;
        envelope["version"] = version_string;
        ojson error;
        error["kind"] = kind;
        error["message"] = message;
        envelope["error"] = std::move(error);
        reports_.push_back(std::move(envelope));
    }

    void flush() {
        if (json_mode_) out_ << reports_.dump(2) << "\n";
    }

    SessionOptions opts_;
    std::ostream& out_;
    std::ostream& err_;
    bool json_mode_ = false;
    ojson reports_ = ojson::array();
};

long long env_positive(const char* name, long long fallback) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return fallback;
    char* end = nullptr;
    const long long value = std::strtoll(raw, &end, 10);
    if (end == nullptr || *end != '\0' || value <= 0) {
        throw user_error(std::string(name) + " must be a positive integer, got '" + raw + "'");
    }
    return value;
}

} // namespace

SessionOptions apply_environment(SessionOptions base) {
    base.n_cap = env_positive("CHERN_NCAP", base.n_cap);
    base.threads = static_cast<unsigned>(
        env_positive("CHERN_THREADS", static_cast<long long>(base.threads)));
    return base;
}

int run_script_text(const std::string& text, const std::string& source_name,
                    const SessionOptions& options, std::ostream& out, std::ostream& err) {
    SessionScript script;
    try {
        script = parse_script(text, options.default_order);
    } catch (const parse_error& e) {
        err << source_name << ": error: " << e.what() << "\n";
        return 2;
    } catch (const user_error& e) {
        err << source_name << ": error: " << e.what() << "\n";
        return 2;
    } catch (const internal_error& e) {
        err << source_name << ": internal error: " << e.what() << "\n";
        return 3;
    }
    Executor executor(options, out, err);
    return executor.run(script);
}

} // namespace chern
