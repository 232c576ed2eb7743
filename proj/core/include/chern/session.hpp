#ifndef CHERN_SESSION_HPP
#define CHERN_SESSION_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "chern/monomial.hpp"

namespace chern {

struct SessionOptions {
    bool json = false;
    MonomialOrder default_order = MonomialOrder::grevlex();
    long long n_cap = 40;  // stabilization cap for table growth
    unsigned threads = 1;  // corpus batch parallelism
    std::uint64_t seed = 0;
};

// Applies CHERN_NCAP and CHERN_THREADS on top of the given defaults.
// Explicit command-line flags should be applied after this.
SessionOptions apply_environment(SessionOptions base);

// Parses and executes a script.  Reports are written to `out` (text blocks,
// or one JSON array of report objects with --json); diagnostics go to `err`.
// Returns the process exit code: 0 on success, 2 on user errors, 3 when an
// internal invariant broke.
int run_script_text(const std::string& text, const std::string& source_name,
                    const SessionOptions& options, std::ostream& out, std::ostream& err);

} // namespace chern

#endif
