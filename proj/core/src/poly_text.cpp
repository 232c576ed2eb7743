#include "chern/poly_text.hpp"

#include <cctype>

#include "chern/errors.hpp"

namespace chern {

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    int line = 1;
    int col = 1;
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto advance = [&](std::size_t count) {
        for (std::size_t k = 0; k < count; ++k) {
            if (text[i + k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        i += count;
    };
    static const std::string punct = "()[],;=/+-*^";

    while (i < n) {
        const char c = text[i];
        if (c == '#') {
            std::size_t j = i;
            while (j < n && text[j] != '\n') ++j;
            advance(j - i);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        const int tline = line, tcol = col;
        if (c == '-' && i + 1 < n && text[i + 1] == '-') {
            std::size_t j = i + 2;
            while (j < n && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                             text[j] == '_' || text[j] == '-')) {
                ++j;
            }
            if (j == i + 2) throw parse_error("expected an option name after '--'", tline, tcol);
            out.push_back({TokenKind::option, text.substr(i + 2, j - i - 2), tline, tcol});
            advance(j - i);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({TokenKind::integer, text.substr(i, j - i), tline, tcol});
            advance(j - i);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '@' || c == '_') {
            std::size_t j = i + 1;
            while (j < n && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                             text[j] == '_')) {
                ++j;
            }
            out.push_back({TokenKind::identifier, text.substr(i, j - i), tline, tcol});
            advance(j - i);
            continue;
        }
        if (punct.find(c) != std::string::npos) {
            out.push_back({TokenKind::punct, std::string(1, c), tline, tcol});
            advance(1);
            continue;
        }
        throw parse_error(std::string("unexpected character '") + c + "'", tline, tcol);
    }
    out.push_back({TokenKind::end, "", line, col});
    return out;
}

const Token& TokenCursor::peek() const { return (*tokens_)[pos_]; }

const Token& TokenCursor::next() {
    const Token& t = (*tokens_)[pos_];
    if (t.kind != TokenKind::end) ++pos_;
    return t;
}

bool TokenCursor::at_punct(const std::string& text) const {
    return peek().kind == TokenKind::punct && peek().text == text;
}

bool TokenCursor::at_identifier(const std::string& text) const {
    return peek().kind == TokenKind::identifier && peek().text == text;
}

bool TokenCursor::accept_punct(const std::string& text) {
    if (!at_punct(text)) return false;
    next();
    return true;
}

bool TokenCursor::accept_identifier(const std::string& text) {
    if (!at_identifier(text)) return false;
    next();
    return true;
}

Token TokenCursor::expect(TokenKind kind, const std::string& what) {
    if (peek().kind != kind) fail("expected " + what);
    return next();
}

void TokenCursor::expect_punct(const std::string& text) {
    if (!accept_punct(text)) fail("expected '" + text + "'");
}

void TokenCursor::fail(const std::string& message) const {
    const Token& t = peek();
    const std::string got =
        t.kind == TokenKind::end ? "end of input" : "'" + t.text + "'";
    throw parse_error(message + " (found " + got + ")", t.line, t.col);
}

namespace {

bool starts_factor(const Token& t) {
    return t.kind == TokenKind::integer || t.kind == TokenKind::identifier ||
           (t.kind == TokenKind::punct && t.text == "(");
}

long long parse_exponent(TokenCursor& cursor) {
    const Token t = cursor.expect(TokenKind::integer, "a non-negative exponent");
    try {
        return std::stoll(t.text);
    } catch (const std::exception&) {
        throw parse_error("exponent '" + t.text + "' is out of range", t.line, t.col);
    }
}

Polynomial parse_factor(TokenCursor& cursor, const PolyContext& ctx) {
    const Token t = cursor.peek();
    Polynomial base;
    if (t.kind == TokenKind::integer) {
        cursor.next();
        std::string literal = t.text;
        // Rational literal n/d: only when a digit follows the slash, so ring
        // declarations like QQ[x] / (...) never consume the '/'.
        if (cursor.at_punct("/")) {
            // peek one past the '/' by copying the cursor state cheaply
            TokenCursor probe = cursor;
            probe.next();
            if (probe.peek().kind == TokenKind::integer) {
                cursor.next();
                const Token den = cursor.next();
                if (ctx.field.is_prime_field()) {
                    throw parse_error("rational literals are not allowed over " +
                                          ctx.field.to_string(),
                                      t.line, t.col);
                }
                if (den.text.find_first_not_of('0') == std::string::npos) {
                    throw parse_error("zero denominator in rational literal", den.line,
                                      den.col);
                }
                literal += "/" + den.text;
            }
        }
        base = Polynomial::constant(ctx.field, ctx.names.size(), ctx.order,
                                    Scalar::from_string(ctx.field, literal));
    } else if (t.kind == TokenKind::identifier) {
        cursor.next();
        if (t.text.find('@') != std::string::npos) {
            throw parse_error("the name '" + t.text + "' is reserved", t.line, t.col);
        }
        std::size_t idx = ctx.names.size();
        for (std::size_t k = 0; k < ctx.names.size(); ++k) {
            if (ctx.names[k] == t.text) {
                idx = k;
                break;
            }
        }
        if (idx == ctx.names.size()) {
            throw parse_error("unknown variable '" + t.text + "'", t.line, t.col);
        }
        base = Polynomial::term(ctx.field, ctx.order,
                                Monomial::variable(ctx.names.size(), idx),
                                Scalar::one(ctx.field));
    } else if (cursor.accept_punct("(")) {
        base = parse_polynomial_expression(cursor, ctx);
        cursor.expect_punct(")");
    } else {
        cursor.fail("expected a coefficient, variable, or '('");
    }

    if (cursor.accept_punct("^")) {
        const long long e = parse_exponent(cursor);
        if (e > 64) {
            throw parse_error("exponent " + std::to_string(e) + " exceeds the limit of 64",
                              t.line, t.col);
        }
        Polynomial power = Polynomial::constant(ctx.field, ctx.names.size(), ctx.order,
                                                Scalar::one(ctx.field));
        for (long long k = 0; k < e; ++k) power = power * base;
        base = std::move(power);
    }
    return base;
}

Polynomial parse_term(TokenCursor& cursor, const PolyContext& ctx) {
    Polynomial product = parse_factor(cursor, ctx);
    for (;;) {
        if (cursor.accept_punct("*")) {
            product = product * parse_factor(cursor, ctx);
        } else if (starts_factor(cursor.peek())) {
            product = product * parse_factor(cursor, ctx);
        } else {
            return product;
        }
    }
}

} // namespace

Polynomial parse_polynomial_expression(TokenCursor& cursor, const PolyContext& ctx) {
    bool negate = false;
    if (cursor.accept_punct("-")) {
        negate = true;
    } else {
        cursor.accept_punct("+");
    }
    if (!starts_factor(cursor.peek())) cursor.fail("expected a polynomial");
    Polynomial sum = parse_term(cursor, ctx);
    if (negate) sum = -sum;
    for (;;) {
        if (cursor.accept_punct("+")) {
            sum += parse_term(cursor, ctx);
        } else if (cursor.accept_punct("-")) {
            sum -= parse_term(cursor, ctx);
        } else {
            return sum;
        }
    }
}

Polynomial parse_polynomial(const std::string& text, const PolyContext& ctx) {
    const std::vector<Token> tokens = tokenize(text);
    TokenCursor cursor(tokens);
    Polynomial f = parse_polynomial_expression(cursor, ctx);
    if (cursor.peek().kind != TokenKind::end) cursor.fail("trailing input after polynomial");
    return f;
}

} // namespace chern
