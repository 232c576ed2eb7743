#ifndef CHERN_POLY_TEXT_HPP
#define CHERN_POLY_TEXT_HPP

#include <string>
#include <vector>

#include "chern/polynomial.hpp"

namespace chern {

// Lexer shared by the polynomial reader and the script parser.
enum class TokenKind { identifier, integer, punct, option, end };

struct Token {
    TokenKind kind = TokenKind::end;
    std::string text;
    int line = 1;
    int col = 1;
};

// Splits script text into tokens.  Identifiers are [@A-Za-z][A-Za-z0-9_]*
// (a leading '@' is lexed so the parser can reject reserved names with a
// clear message), integers are digit runs, options are --name, and the
// punctuation set is ( ) [ ] , ; = / + - * ^.  '#' starts a line comment.
std::vector<Token> tokenize(const std::string& text);

class TokenCursor {
public:
    explicit TokenCursor(const std::vector<Token>& tokens) : tokens_(&tokens) {}

    const Token& peek() const;
    const Token& next();
    bool at_punct(const std::string& text) const;
    bool at_identifier(const std::string& text) const;
    // Consumes the token if it matches.
    bool accept_punct(const std::string& text);
    bool accept_identifier(const std::string& text);
    // Consumes the token or throws a parse error naming what was expected.
    Token expect(TokenKind kind, const std::string& what);
    void expect_punct(const std::string& text);
    [[noreturn]] void fail(const std::string& message) const;

private:
    const std::vector<Token>* tokens_;
    std::size_t pos_ = 0;
};

// Naming context a polynomial is read against.
struct PolyContext {
    FieldDescriptor field;
    std::vector<std::string> names;
    MonomialOrder order = MonomialOrder::grevlex();
};

// Reads one polynomial expression: sums of products of factors, where a
// factor is an integer or rational literal, a variable with optional ^exp,
// or a parenthesized subexpression; '*' between factors is optional.  Stops
// at the first token that cannot continue the expression.
Polynomial parse_polynomial_expression(TokenCursor& cursor, const PolyContext& context);

// Parses a complete string as a single polynomial.
Polynomial parse_polynomial(const std::string& text, const PolyContext& context);

} // namespace chern

#endif
