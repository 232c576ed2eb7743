#ifndef CHERN_ERRORS_HPP
#define CHERN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chern {

// User-facing failures: bad arguments, malformed input, mismatched structures.
// The CLI maps these to exit code 2.
class user_error : public std::runtime_error {
public:
    explicit user_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operands belong to different rings, fields, or variable counts.
class structural_error : public user_error {
public:
    explicit structural_error(const std::string& msg) : user_error(msg) {}
};

// A precondition on the mathematical input is violated (non-proper ideal,
// inhomogeneous generators where a grading is required, zero divisor, ...).
class argument_error : public user_error {
public:
    explicit argument_error(const std::string& msg) : user_error(msg) {}
};

// A configured resource cap was exceeded (table size, enumeration cells).
class resource_error : public user_error {
public:
    explicit resource_error(const std::string& msg) : user_error(msg) {}
};

// A function table did not stabilize to a polynomial within the permitted
// range; callers may grow the table and retry.
class not_stabilized : public resource_error {
public:
    not_stabilized(const std::string& msg, long long n_max)
        : resource_error(msg), n_max_tried(n_max) {}
    long long n_max_tried;
};

// Syntax error in script or polynomial text, with source position.
class parse_error : public user_error {
public:
    parse_error(const std::string& msg, int line, int column)
        : user_error(msg + " (line " + std::to_string(line) + ", column " +
                     std::to_string(column) + ")"),
          line(line), column(column) {}
    int line;
    int column;
};

// Broken internal invariant; indicates a bug, never bad user input.
// The CLI maps these to exit code 3.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

inline void internal_check(bool ok, const char* what) {
    if (!ok) throw internal_error(what);
}

} // namespace chern

#endif
