#include "oretel/expr.hpp"

#include <cctype>
#include <sstream>

namespace oretel {

namespace {

struct Token {
    enum Type { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } type;
    std::string text;
    int line, col;
};

class Lexer {
public:
    Lexer(const std::string& s, int line_offset) : s_(s), line_(1 + line_offset) {}

    Token next() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            if (s_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
        int line = line_, col = col_;
        if (pos_ >= s_.size()) return {Token::End, "", line, col};
        char c = s_[pos_];
        auto one = [&](Token::Type t) {
            ++pos_;
            ++col_;
            return Token{t, std::string(1, c), line, col};
        };
        switch (c) {
            case '+': return one(Token::Plus);
            case '-': return one(Token::Minus);
            case '*': return one(Token::Star);
            case '/': return one(Token::Slash);
            case '^': return one(Token::Caret);
            case '(': return one(Token::LParen);
            case ')': return one(Token::RParen);
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string t;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                t += s_[pos_++];
                ++col_;
            }
            return {Token::Int, t, line, col};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string t;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
                t += s_[pos_++];
                ++col_;
            }
            return {Token::Ident, t, line, col};
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }

private:
    const std::string& s_;
    size_t pos_ = 0;
    int line_, col_ = 1;
};

// One grammar, two value semantics: scalars (RatFunc) and operators.
template <class Value, class Ops>
class Parser {
public:
    Parser(const std::string& text, const Ops& ops, int line_offset)
        : lex_(text, line_offset), ops_(ops) {
        advance();
    }

    Value parse() {
        Value v = expr();
        expect(Token::End, "end of expression");
        return v;
    }

private:
    void advance() { tok_ = lex_.next(); }
    void expect(Token::Type t, const char* what) {
        if (tok_.type != t)
            throw ParseError(std::string("expected ") + what + ", got '" + tok_.text + "'",
                             tok_.line, tok_.col);
    }

    Value expr() {
        Value v = term();
        while (tok_.type == Token::Plus || tok_.type == Token::Minus) {
            bool plus = tok_.type == Token::Plus;
            advance();
            Value w = term();
            v = plus ? ops_.add(v, w) : ops_.sub(v, w);
        }
        return v;
    }

    Value term() {
        Value v = unary();
        while (tok_.type == Token::Star || tok_.type == Token::Slash) {
            bool mul = tok_.type == Token::Star;
            advance();
            Value w = unary();
            v = mul ? ops_.mul(v, w) : ops_.div(v, w, tok_.line, tok_.col);
        }
        return v;
    }

    Value unary() {
        if (tok_.type == Token::Minus) {
            advance();
            return ops_.neg(unary());
        }
        if (tok_.type == Token::Plus) {
            advance();
            return unary();
        }
        return power();
    }

    Value power() {
        Value v = atom();
        if (tok_.type == Token::Caret) {
            advance();
            expect(Token::Int, "nonnegative integer exponent");
            long e = std::stol(tok_.text);
            advance();
            v = ops_.pow(v, static_cast<int>(e));
        }
        return v;
    }

    Value atom() {
        if (tok_.type == Token::Int) {
            Value v = ops_.integer(Integer(tok_.text));
            advance();
            return v;
        }
        if (tok_.type == Token::Ident) {
            Value v = ops_.symbol(tok_.text, tok_.line, tok_.col);
            advance();
            return v;
        }
        if (tok_.type == Token::LParen) {
            advance();
            Value v = expr();
            expect(Token::RParen, "')'");
            advance();
            return v;
        }
        throw ParseError("expected a value, got '" + tok_.text + "'", tok_.line, tok_.col);
    }

    Lexer lex_;
    Token tok_;
    const Ops& ops_;
};

struct ScalarOps {
    const FieldSpec& field;
    RatFunc integer(const Integer& i) const { return RatFunc(Rational(i)); }
    RatFunc symbol(const std::string& s, int line, int col) const {
        int v = field.var_index(s);
        if (v < 0) throw ParseError("unknown symbol '" + s + "'", line, col);
        return RatFunc::variable(v);
    }
    RatFunc add(const RatFunc& a, const RatFunc& b) const { return a + b; }
    RatFunc sub(const RatFunc& a, const RatFunc& b) const { return a - b; }
    RatFunc mul(const RatFunc& a, const RatFunc& b) const { return a * b; }
    RatFunc div(const RatFunc& a, const RatFunc& b, int line, int col) const {
        if (b.is_zero()) throw ParseError("division by zero", line, col);
        return a / b;
    }
    RatFunc neg(const RatFunc& a) const { return -a; }
    RatFunc pow(const RatFunc& a, int e) const { return a.pow(e); }
};

struct OperatorOps {
    const FieldSpec& field;
    const OreSpec& spec;
    OreOperator integer(const Integer& i) const { return OreOperator(RatFunc(Rational(i))); }
    OreOperator symbol(const std::string& s, int line, int col) const {
        if (s == "Dx") return OreOperator::dx();
        if (s == "Dy") return OreOperator::dy();
        int v = field.var_index(s);
        if (v < 0) throw ParseError("unknown symbol '" + s + "'", line, col);
        return OreOperator(RatFunc::variable(v));
    }
    OreOperator add(const OreOperator& a, const OreOperator& b) const { return a + b; }
    OreOperator sub(const OreOperator& a, const OreOperator& b) const { return a - b; }
    OreOperator mul(const OreOperator& a, const OreOperator& b) const {
        return op_multiply(a, b, spec);
    }
    OreOperator div(const OreOperator& a, const OreOperator& b, int line, int col) const {
        if (b.is_zero()) throw ParseError("division by zero", line, col);
        if (b.ord_x() > 0 || b.ord_y() > 0)
            throw ParseError("division by an operator is not defined", line, col);
        return a.scale_left(RatFunc(1) / b.coeff(0, 0));
    }
    OreOperator neg(const OreOperator& a) const { return -a; }
    OreOperator pow(const OreOperator& a, int e) const { return op_pow(a, e, spec); }
};

} // namespace

RatFunc parse_scalar(const std::string& text, const FieldSpec& field, int line_offset) {
    ScalarOps ops{field};
    return Parser<RatFunc, ScalarOps>(text, ops, line_offset).parse();
}

OreOperator parse_operator(const std::string& text, const FieldSpec& field, const OreSpec& spec,
                           int line_offset) {
    OperatorOps ops{field, spec};
    return Parser<OreOperator, OperatorOps>(text, ops, line_offset).parse();
}

std::string print_rational(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

namespace {

std::string print_monomial(const Monomial& m, const FieldSpec& field) {
    std::string out;
    for (size_t v = 0; v < m.width(); ++v) {
        int e = m.deg(static_cast<int>(v));
        if (e == 0) continue;
        if (!out.empty()) out += "*";
        out += field.var_name(static_cast<int>(v));
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

} // namespace

std::string print_poly(const Poly& p, const FieldSpec& field) {
    if (p.is_zero()) return "0";
    std::string out;
    // descending graded-lex
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        Rational c = p.content() * Rational(it->second);
        bool neg = c < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        Rational a = abs(c);
        std::string mono = print_monomial(it->first, field);
        if (mono.empty()) {
            out += print_rational(a);
        } else if (a == 1) {
            out += mono;
        } else {
            out += print_rational(a) + "*" + mono;
        }
    }
    return out;
}

std::string print_ratfunc(const RatFunc& f, const FieldSpec& field) {
    if (f.is_polynomial()) return print_poly(f.num(), field);
    return "(" + print_poly(f.num(), field) + ")/(" + print_poly(f.den(), field) + ")";
}

std::string print_operator(const OreOperator& op, const FieldSpec& field) {
    if (op.is_zero()) return "(0)";
    std::string out;
    for (auto it = op.terms().rbegin(); it != op.terms().rend(); ++it) {
        if (!out.empty()) out += " + ";
        auto [i, j] = it->first;
        out += "(" + print_ratfunc(it->second, field) + ")";
        if (i > 0) out += i > 1 ? "*Dx^" + std::to_string(i) : "*Dx";
        if (j > 0) out += j > 1 ? "*Dy^" + std::to_string(j) : "*Dy";
    }
    return out;
}

} // namespace oretel
