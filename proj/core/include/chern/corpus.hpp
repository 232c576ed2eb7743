#ifndef CHERN_CORPUS_HPP
#define CHERN_CORPUS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "chern/cm.hpp"
#include "chern/ideal.hpp"

namespace chern {

// A designated parameter ideal together with hand-frozen expected quantities
// (keys like "len_R_q", "e0_q", "e1_q", "index_q", "len_R_I", "e1_I", "f0_q",
// "r"); tests compare them against computed values.
struct DesignatedParameter {
    std::string label;
    IdealHandle ideal;
    std::map<std::string, long long> expected;
};

struct CorpusEntry {
    std::string id;
    std::string description;
    RingPtr ring;
    std::vector<DesignatedParameter> parameters;
    // Curated annotations; data, never computed.
    std::string unmixed = "unknown";  // "true" | "false" | "unknown"
    bool cm_expected = false;
    std::string depth_note;
    std::string expected_source;  // one line on where the expected numbers come from
    std::map<std::string, long long> ring_expected;  // e.g. {"dim", d}
};

enum class GotoSakuraiVariant { as_printed, xm_squared };

std::string variant_name(GotoSakuraiVariant v);

// The two-parameter family over QQ: ambient k[x_1..x_m, v, z_1..z_d] modulo
//   (x_i : i < m)^2 + (special) + (x_i v : i <= m) + (v^2 - sum x_i z_i),
// where the special generator is x_2^m (as printed in the source example) or
// x_m^2 (the variant); q = (z_1..z_d).  Expected values are the family's
// closed forms: e0(q)=2m, e1(q)=-1, e_i(q)=0 (i>=2), e1(I)=m-2, N(q;R)=m-1,
// l(R/q)=2m+1, l(R/I)=m+2, H_I(n)=2m*C(n+d,d)-(m-2)*C(n+d-1,d-1).
CorpusEntry build_goto_sakurai(int m, int d, GotoSakuraiVariant variant);

// Closed-form H_I(n) the family claims.
long long goto_sakurai_claimed_hilbert(int m, int d, long long n);

// Non-family entries: regular rings, hypersurfaces, a non-Gorenstein CM
// monomial curve and a non-CM control.
std::vector<CorpusEntry> standard_entries();

// standard_entries plus the shipped family instances (2,2), (3,2), (3,3).
std::vector<CorpusEntry> all_entries();

std::optional<CorpusEntry> find_entry(const std::string& id);

// Ring + ideal definitions of the entry in the script language.
std::string export_entry_script(const CorpusEntry& entry);

// Computed-vs-expected tuple for one variant of the family.
struct VariantQuantities {
    std::string variant;
    bool q_is_parameter = false;
    std::optional<long long> len_q, e0_q, e1_q, index_q, len_I, e0_I, e1_I;
    std::vector<long long> e_q;
    std::vector<long long> hilbert_I;  // H_I(0..6) when available
    std::map<std::string, bool> matches;
    bool all_match = false;
};

struct VariantComparison {
    int m = 0, d = 0;
    VariantQuantities as_printed;
    VariantQuantities xm_squared;
    std::optional<GotoSakuraiVariant> matching_variant;
};

VariantComparison compare_goto_sakurai_variants(int m, int d, const HilbertOptions& opts = {});

// Random homogeneous forms: d forms of the given weighted degree with nonzero
// seeded coefficients; retried until is_parameter_ideal or the retry cap.
std::optional<IdealHandle> random_parameter_ideal(const RingPtr& ring,
                                                  std::uint32_t weighted_degree,
                                                  std::mt19937_64& rng, int max_retries = 20,
                                                  const HilbertOptions& opts = {});

enum class QStrategy { given, random_forms, powers_of_given };

struct BatchOptions {
    QStrategy strategy = QStrategy::given;
    std::uint32_t degree = 2;   // random_forms: weighted degree of each form
    unsigned power = 2;         // powers_of_given: exponent
    std::uint64_t seed = 0;
    unsigned threads = 1;       // instances evaluated concurrently
    HilbertOptions hilbert;
};

struct BatchEntryResult {
    std::string entry_id;
    std::string parameter_label;
    bool skipped = false;
    std::string skip_reason;
    VerifyReport report;  // valid when not skipped
};

struct BatchReport {
    std::string family;
    std::string strategy;
    std::uint64_t seed = 0;
    std::vector<BatchEntryResult> results;
    long long checks_held = 0;
    long long checks_failed = 0;
    long long checks_unavailable = 0;
};

// family: "all" | "cm" | "non-cm" | "goto-sakurai" | an entry id.
BatchReport batch_verify(const std::string& family, const BatchOptions& opts = {});

} // namespace chern

#endif
