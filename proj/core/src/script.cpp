#include "chern/script.hpp"

#include <algorithm>

#include "chern/errors.hpp"
#include "chern/poly_text.hpp"

namespace chern {

namespace {

// Commands taking exactly one declared ideal.
const std::set<std::string> kIdealCommands = {"gb",     "colength", "socle", "indexred",
                                              "hilbert", "coeffs",   "chern", "f0",
                                              "cmtest",  "verify"};
const std::set<std::string> kIntOptions = {"nmax", "ncap", "seed", "degree", "power"};
const std::set<std::string> kStrOptions = {"strategy"};
const std::set<std::string> kFlagOptions = {"all", "json"};

void reject_reserved(const std::string& name, int line, int col) {
    if (name.find('@') != std::string::npos) {
        throw parse_error("the name '" + name + "' is reserved for internal use", line, col);
    }
}

FieldDescriptor parse_fieldref(TokenCursor& cur) {
    const Token t = cur.expect(TokenKind::identifier, "a field (QQ or Fp <prime>)");
    if (t.text == "QQ") return FieldDescriptor::rationals();
    if (t.text == "Fp") {
        const Token p = cur.expect(TokenKind::integer, "a prime after Fp");
        unsigned long long value = 0;
        try {
            value = std::stoull(p.text);
        } catch (const std::exception&) {
            throw parse_error("characteristic '" + p.text + "' is out of range", p.line, p.col);
        }
        try {
            return FieldDescriptor::prime(value);
        } catch (const user_error& e) {
            throw parse_error(e.what(), p.line, p.col);
        }
    }
    throw parse_error("unknown field '" + t.text + "' (expected QQ or Fp <prime>)", t.line,
                      t.col);
}

long long parse_integer_value(TokenCursor& cur, const std::string& what) {
    const Token t = cur.expect(TokenKind::integer, what);
    try {
        return std::stoll(t.text);
    } catch (const std::exception&) {
        throw parse_error("value '" + t.text + "' is out of range", t.line, t.col);
    }
}

std::vector<Polynomial> parse_polylist(TokenCursor& cur, const PolyContext& ctx) {
    std::vector<Polynomial> polys;
    cur.expect_punct("(");
    polys.push_back(parse_polynomial_expression(cur, ctx));
    while (cur.accept_punct(",")) polys.push_back(parse_polynomial_expression(cur, ctx));
    cur.expect_punct(")");
    return polys;
}

// Corpus selectors such as goto-sakurai-2-2 lex as several tokens; glue the
// run while the pieces are physically adjacent on one line.
std::string parse_selector(TokenCursor& cur) {
    Token t = cur.expect(TokenKind::identifier, "a corpus selector");
    std::string text = t.text;
    int line = t.line;
    int end_col = t.col + static_cast<int>(t.text.size());
    for (;;) {
        const Token& dash = cur.peek();
        if (!(dash.kind == TokenKind::punct && dash.text == "-" && dash.line == line &&
              dash.col == end_col)) {
            return text;
        }
        cur.next();
        const Token& piece = cur.peek();
        const bool adjacent = (piece.kind == TokenKind::identifier ||
                               piece.kind == TokenKind::integer) &&
                              piece.line == line && piece.col == end_col + 1;
        if (!adjacent) cur.fail("expected the rest of a corpus selector after '-'");
        text += "-" + piece.text;
        end_col = piece.col + static_cast<int>(piece.text.size());
        cur.next();
    }
}

struct Binder {
    MonomialOrder default_order;
    FieldDescriptor current_field = FieldDescriptor::rationals();
    RingPtr current_ring;
    std::set<std::string> declared_names;
    std::map<std::string, IdealHandle> ideals;

    void declare(const std::string& name, int line, int col) {
        reject_reserved(name, line, col);
        if (!declared_names.insert(name).second) {
            throw parse_error("duplicate name '" + name + "'", line, col);
        }
    }
};

Statement parse_ring_decl(TokenCursor& cur, Binder& binder) {
    Statement stmt;
    stmt.kind = Statement::Kind::ring_decl;
    const Token head = cur.next();  // "ring"
    stmt.line = head.line;
    stmt.col = head.col;
    const Token name = cur.expect(TokenKind::identifier, "a ring name");
    binder.declare(name.text, name.line, name.col);
    stmt.name = name.text;
    cur.expect_punct("=");

    const FieldDescriptor field = parse_fieldref(cur);
    cur.expect_punct("[");
    std::vector<std::string> vars;
    do {
        const Token v = cur.expect(TokenKind::identifier, "a variable name");
        reject_reserved(v.text, v.line, v.col);
        vars.push_back(v.text);
    } while (cur.accept_punct(","));
    cur.expect_punct("]");

    std::vector<Polynomial> relations;
    if (cur.accept_punct("/")) {
        PolyContext ctx{field, vars, binder.default_order};
        relations = parse_polylist(cur, ctx);
    }

    std::vector<std::uint32_t> weights;
    if (cur.accept_identifier("weights")) {
        do {
            const Token w = cur.peek();
            const long long value = parse_integer_value(cur, "a positive weight");
            if (value <= 0) throw parse_error("weights must be positive", w.line, w.col);
            weights.push_back(static_cast<std::uint32_t>(value));
        } while (cur.peek().kind == TokenKind::integer || cur.accept_punct(","));
    }

    try {
        stmt.ring = std::make_shared<const RingPresentation>(field, vars, relations, weights,
                                                             binder.default_order);
    } catch (const user_error& e) {
        throw parse_error(e.what(), stmt.line, stmt.col);
    }
    binder.current_field = field;
    binder.current_ring = stmt.ring;
    return stmt;
}

Statement parse_ideal_decl(TokenCursor& cur, Binder& binder) {
    Statement stmt;
    stmt.kind = Statement::Kind::ideal_decl;
    const Token head = cur.next();  // "ideal"
    stmt.line = head.line;
    stmt.col = head.col;
    if (!binder.current_ring) {
        throw parse_error("no ring in scope for the ideal declaration", head.line, head.col);
    }
    const Token name = cur.expect(TokenKind::identifier, "an ideal name");
    binder.declare(name.text, name.line, name.col);
    stmt.name = name.text;
    stmt.ring = binder.current_ring;
    cur.expect_punct("=");
    PolyContext ctx{binder.current_ring->field(), binder.current_ring->variable_names(),
                    binder.current_ring->default_order()};
    std::vector<Polynomial> gens = parse_polylist(cur, ctx);
    try {
        stmt.ideal = IdealHandle(binder.current_ring, std::move(gens));
    } catch (const user_error& e) {
        throw parse_error(e.what(), stmt.line, stmt.col);
    }
    binder.ideals.emplace(stmt.name, stmt.ideal);
    return stmt;
}

Statement parse_command(TokenCursor& cur, Binder& binder) {
    Statement stmt;
    stmt.kind = Statement::Kind::command;
    const Token head = cur.next();
    stmt.line = head.line;
    stmt.col = head.col;
    stmt.command = head.text;

    if (kIdealCommands.count(stmt.command)) {
        const Token arg = cur.expect(TokenKind::identifier, "an ideal name");
        const auto it = binder.ideals.find(arg.text);
        if (it == binder.ideals.end()) {
            throw parse_error("unknown ideal '" + arg.text + "'", arg.line, arg.col);
        }
        stmt.args.push_back(arg.text);
        stmt.ideal = it->second;
        stmt.ring = stmt.ideal.ring_ptr();
    } else if (stmt.command == "dim") {
        if (!binder.current_ring) {
            throw parse_error("no ring in scope for 'dim'", head.line, head.col);
        }
        stmt.ring = binder.current_ring;
    } else if (stmt.command == "corpus") {
        const Token sub = cur.expect(TokenKind::identifier, "'list' or 'run'");
        if (sub.text != "list" && sub.text != "run") {
            throw parse_error("unknown corpus action '" + sub.text + "'", sub.line, sub.col);
        }
        stmt.args.push_back(sub.text);
        if (sub.text == "run" && cur.peek().kind == TokenKind::identifier) {
            stmt.args.push_back(parse_selector(cur));
        }
    } else {
        throw parse_error("unknown command '" + stmt.command + "'", head.line, head.col);
    }

    while (cur.peek().kind == TokenKind::option) {
        const Token opt = cur.next();
        if (kIntOptions.count(opt.text)) {
            stmt.int_options[opt.text] =
                parse_integer_value(cur, "an integer value for --" + opt.text);
        } else if (kStrOptions.count(opt.text)) {
            const Token v = cur.expect(TokenKind::identifier, "a value for --" + opt.text);
            stmt.str_options[opt.text] = v.text;
        } else if (kFlagOptions.count(opt.text)) {
            stmt.flag_options.insert(opt.text);
        } else {
            throw parse_error("unknown option '--" + opt.text + "'", opt.line, opt.col);
        }
    }

    if (stmt.command == "corpus" && stmt.args[0] == "run" && stmt.args.size() == 1 &&
        !stmt.flag_options.count("all")) {
        throw parse_error("corpus run needs an entry id or --all", head.line, head.col);
    }
    return stmt;
}

} // namespace

SessionScript parse_script(const std::string& text, MonomialOrder default_order) {
    const std::vector<Token> tokens = tokenize(text);
    TokenCursor cur(tokens);
    Binder binder{default_order};

    SessionScript script;
    if (cur.peek().kind == TokenKind::end) {
        throw parse_error("empty script", 1, 1);
    }
    while (cur.peek().kind != TokenKind::end) {
        const Token& head = cur.peek();
        Statement stmt;
        if (head.kind != TokenKind::identifier) {
            cur.fail("expected a statement");
        }
        if (head.text == "field") {
            stmt.kind = Statement::Kind::field_decl;
            stmt.line = head.line;
            stmt.col = head.col;
            cur.next();
            stmt.field = parse_fieldref(cur);
            binder.current_field = stmt.field;
        } else if (head.text == "ring") {
            stmt = parse_ring_decl(cur, binder);
        } else if (head.text == "ideal") {
            stmt = parse_ideal_decl(cur, binder);
        } else {
            stmt = parse_command(cur, binder);
        }
        cur.expect_punct(";");
        script.statements.push_back(std::move(stmt));
    }
    return script;
}

namespace {

std::string print_polylist(const std::vector<Polynomial>& polys,
                           const std::vector<std::string>& names) {
    std::string out = "(";
    for (std::size_t i = 0; i < polys.size(); ++i) {
        if (i) out += ", ";
        out += polys[i].to_string(names);
    }
    out += ")";
    return out;
}

} // namespace

std::string print_script(const SessionScript& script) {
    std::string out;
    for (const Statement& stmt : script.statements) {
        switch (stmt.kind) {
            case Statement::Kind::field_decl:
                out += "field " + (stmt.field.is_prime_field()
                                       ? "Fp " + std::to_string(stmt.field.p)
                                       : std::string("QQ"));
                break;
            case Statement::Kind::ring_decl: {
                const RingPresentation& R = *stmt.ring;
                out += "ring " + stmt.name + " = " + R.field().to_string() + "[";
                const auto& names = R.variable_names();
                for (std::size_t i = 0; i < names.size(); ++i) {
                    if (i) out += ", ";
                    out += names[i];
                }
                out += "]";
                if (!R.is_polynomial_ring())
                    out += " / " + print_polylist(R.defining_generators(), names);
                if (R.weighted()) {
                    out += " weights ";
                    for (std::size_t i = 0; i < R.weights().size(); ++i) {
                        if (i) out += ", ";
                        out += std::to_string(R.weights()[i]);
                    }
                }
                break;
            }
            case Statement::Kind::ideal_decl:
                out += "ideal " + stmt.name + " = " +
                       print_polylist(stmt.ideal.generators(),
                                      stmt.ideal.ring().variable_names());
                break;
            case Statement::Kind::command: {
                out += stmt.command;
                for (const auto& a : stmt.args) out += " " + a;
                for (const auto& [k, v] : stmt.int_options)
                    out += " --" + k + " " + std::to_string(v);
                for (const auto& [k, v] : stmt.str_options) out += " --" + k + " " + v;
                for (const auto& k : stmt.flag_options) out += " --" + k;
                break;
            }
        }
        out += ";\n";
    }
    return out;
}

} // namespace chern
