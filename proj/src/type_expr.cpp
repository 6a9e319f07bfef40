#include "vna/type_expr.hpp"

#include "vna/free_monoid.hpp"
#include "vna/tensor.hpp"

#include <cctype>

namespace vna {

namespace {

struct Token {
    enum class Kind { UnitI, Bit, Qubit, Bang, Star, Plus, LParen, RParen, End };
    Kind kind;
    size_t position;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> tokens;
    size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '!') {
            tokens.push_back({Token::Kind::Bang, i++});
        } else if (c == '*') {
            tokens.push_back({Token::Kind::Star, i++});
        } else if (c == '+') {
            tokens.push_back({Token::Kind::Plus, i++});
        } else if (c == '(') {
            tokens.push_back({Token::Kind::LParen, i++});
        } else if (c == ')') {
            tokens.push_back({Token::Kind::RParen, i++});
        } else if (c == '-' && i + 1 < text.size() && text[i + 1] == 'o') {
            throw ParseError("function types (-o) are outside the scope of this toolkit", i);
        } else if (text.compare(i, 3, "⊸") == 0) {
            throw ParseError("function types (-o) are outside the scope of this toolkit", i);
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = i;
            while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
            const std::string word = text.substr(start, i - start);
            if (word == "I")
                tokens.push_back({Token::Kind::UnitI, start});
            else if (word == "bit")
                tokens.push_back({Token::Kind::Bit, start});
            else if (word == "qubit")
                tokens.push_back({Token::Kind::Qubit, start});
            else
                throw ParseError("unknown identifier '" + word + "'", start);
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
    }
    tokens.push_back({Token::Kind::End, text.size()});
    return tokens;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    TypeExpr parse() {
        TypeExpr result = parse_sum();
        expect(Token::Kind::End, "end of input");
        return result;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    Token advance() { return tokens_[pos_++]; }
    void expect(Token::Kind kind, const std::string& what) {
        if (peek().kind != kind) throw ParseError("expected " + what, peek().position);
        advance();
    }

    TypeExpr parse_sum() {
        TypeExpr lhs = parse_product();
        while (peek().kind == Token::Kind::Plus) {
            advance();
            lhs = TypeExpr::sum(std::move(lhs), parse_product());
        }
        return lhs;
    }

    TypeExpr parse_product() {
        TypeExpr lhs = parse_unary();
        while (peek().kind == Token::Kind::Star) {
            advance();
            lhs = TypeExpr::tensor(std::move(lhs), parse_unary());
        }
        return lhs;
    }

    TypeExpr parse_unary() {
        if (peek().kind == Token::Kind::Bang) {
            advance();
            return TypeExpr::bang(parse_unary());
        }
        return parse_atom();
    }

    TypeExpr parse_atom() {
        const Token token = advance();
        switch (token.kind) {
            case Token::Kind::UnitI: return TypeExpr::unit_i();
            case Token::Kind::Bit: return TypeExpr::bit();
            case Token::Kind::Qubit: return TypeExpr::qubit();
            case Token::Kind::LParen: {
                TypeExpr inner = parse_sum();
                if (peek().kind != Token::Kind::RParen)
                    throw ParseError("expected ')'", peek().position);
                advance();
                return inner;
            }
            default: throw ParseError("expected a type", token.position);
        }
    }

    std::vector<Token> tokens_;
    size_t pos_ = 0;
};

int precedence(TypeExpr::Kind kind) {
    switch (kind) {
        case TypeExpr::Kind::Sum: return 1;
        case TypeExpr::Kind::Tensor: return 2;
        case TypeExpr::Kind::Bang: return 3;
        default: return 4;
    }
}

void print_into(const TypeExpr& t, std::string& out, int parent_prec) {
    const int prec = precedence(t.kind);
    const bool parens = prec < parent_prec;
    if (parens) out += '(';
    switch (t.kind) {
        case TypeExpr::Kind::UnitI: out += 'I'; break;
        case TypeExpr::Kind::Bit: out += "bit"; break;
        case TypeExpr::Kind::Qubit: out += "qubit"; break;
        case TypeExpr::Kind::Bang:
            out += '!';
            print_into(t.children[0], out, prec);
            break;
        case TypeExpr::Kind::Tensor:
        case TypeExpr::Kind::Sum:
            print_into(t.children[0], out, prec);
            out += t.kind == TypeExpr::Kind::Tensor ? '*' : '+';
            // Left-associative: a parenthesised right child at equal level.
            print_into(t.children[1], out, prec + 1);
            break;
    }
    if (parens) out += ')';
}

}  // namespace

TypeExpr parse_type(const std::string& text) { return Parser(tokenize(text)).parse(); }

std::string print_type(const TypeExpr& t) {
    std::string out;
    print_into(t, out, 0);
    return out;
}

Algebra denote_type(const TypeExpr& t) {
    switch (t.kind) {
        case TypeExpr::Kind::UnitI: return scalar_algebra();
        case TypeExpr::Kind::Bit: return Algebra({1, 1});
        case TypeExpr::Kind::Qubit: return Algebra({2});
        case TypeExpr::Kind::Tensor:
            return tensor_algebra(denote_type(t.children[0]), denote_type(t.children[1]));
        case TypeExpr::Kind::Sum:
            return direct_sum(denote_type(t.children[0]), denote_type(t.children[1])).sum;
        case TypeExpr::Kind::Bang:
            return linf(static_cast<int>(nsp(denote_type(t.children[0])).size()));
    }
    throw std::logic_error("unreachable");
}

}  // namespace vna
