#ifndef CHERN_SCRIPT_HPP
#define CHERN_SCRIPT_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "chern/ideal.hpp"
#include "chern/ring.hpp"

namespace chern {

// One statement of the script language.  Ring and ideal declarations are
// bound during parsing (variables resolved, relations checked for weighted
// homogeneity), so executing a script never re-parses polynomial text.
struct Statement {
    enum class Kind { field_decl, ring_decl, ideal_decl, command };

    Kind kind = Kind::command;
    int line = 1;
    int col = 1;

    // field_decl
    FieldDescriptor field;

    // ring_decl / ideal_decl
    std::string name;
    RingPtr ring;        // ring_decl: the declared ring; ideal_decl: its ring
    IdealHandle ideal;   // ideal_decl

    // command
    std::string command;                            // "gb", "corpus", ...
    std::vector<std::string> args;                  // ideal names, selectors
    std::map<std::string, long long> int_options;   // --nmax 8, --seed 7, ...
    std::map<std::string, std::string> str_options; // --strategy random
    std::set<std::string> flag_options;             // --all, --json
};

struct SessionScript {
    std::vector<Statement> statements;
};

// Parses and binds a script.  Declared names must be unique; ideals need a
// ring in scope; commands must reference declared ideals.  All diagnostics
// carry line/column positions.
SessionScript parse_script(const std::string& text,
                           MonomialOrder default_order = MonomialOrder::grevlex());

// Canonical text of a bound script; parsing the result yields a structurally
// identical script (prints are a fixed point of parse-then-print).
std::string print_script(const SessionScript& script);

} // namespace chern

#endif
