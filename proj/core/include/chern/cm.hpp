#ifndef CHERN_CM_HPP
#define CHERN_CM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chern/hilbert.hpp"
#include "chern/quotient.hpp"

namespace chern {

// Cohen-Macaulay witness test on a parameter ideal q: the ring is CM exactly
// when ell(R/q) = e_0(q); the Cohen-Macaulay type r(R) is reported only for
// CM rings, where it equals N(q;R) for every parameter ideal.
struct CMReport {
    std::string witness;   // printed form of q
    long long len = 0;     // ell(R/q)
    long long e0 = 0;      // e_0(q)
    bool is_cm = false;
    std::optional<long long> cm_type;  // r(R), present iff is_cm
    std::optional<bool> gorenstein;    // present iff is_cm
};

CMReport cohen_macaulay_report(const IdealHandle& q, const HilbertOptions& opts = {});

enum class CheckStatus { ok, unavailable };

struct TheoremVerdict {
    std::string id;
    std::string citation;      // self-contained statement of the classical fact
    std::string relation;      // "=", "<=" or ">="
    std::optional<long long> lhs;
    std::optional<long long> rhs;
    std::optional<bool> holds; // lhs relation rhs, when both sides are known
    CheckStatus status = CheckStatus::ok;
    std::string reason;        // when unavailable
};

struct VerifyFlags {
    bool q_in_m2 = false;                       // computed
    std::optional<bool> reduction_I2_eq_qI;     // computed when I is available
    std::string unmixed = "unknown";            // curated annotation, never computed
};

// Full verdict report for one (ring, parameter ideal) pair.
struct VerifyReport {
    std::string entry;  // label for the (ring, q) pair
    VerifyFlags flags;
    std::vector<TheoremVerdict> checks;
    CMReport cm;
    std::vector<std::string> warnings;

    // Computed quantities (optional when a fit failed or I is degenerate).
    int dim = 0;
    std::optional<long long> len_q, e0_q, e1_q;
    std::vector<long long> e_q;  // all e_i(q) when available
    std::optional<long long> index_q;  // N(q;R)
    std::optional<long long> f0_q;
    std::optional<long long> len_I, e0_I, e1_I;
    std::optional<long long> r;  // cm type when CM
};

// Evaluates every check id on the pair (q, I = q:m).  Fitting failures and
// degenerate I (the unit ideal, when q = m) downgrade the affected checks to
// UNAVAILABLE instead of failing the report.
VerifyReport verify_theorems(const IdealHandle& q, const std::string& entry_label,
                             const std::string& unmixed_annotation,
                             const HilbertOptions& opts = {});

const std::vector<std::string>& verdict_check_ids();

} // namespace chern

#endif
