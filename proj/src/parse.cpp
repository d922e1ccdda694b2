#include "pvg/parse.hpp"

#include <cctype>

#include "pvg/errors.hpp"

namespace pvg {

namespace {

constexpr long kExponentBound = 4096;

struct Token {
    enum class Kind {
        Integer, Name, Plus, Minus, Star, Slash, Caret,
        LParen, RParen, LBracket, RBracket, Comma, Equals, Arrow, End
    };
    Kind kind = Kind::End;
    Integer value;        // Integer tokens
    std::string name;     // Name tokens
    int primes = 0;       // apostrophes after a name
    std::size_t pos = 0;  // 1-based position in the input
};

class Lexer {
public:
    explicit Lexer(std::string text) : s_(std::move(text)) { advance(); }

    const Token& peek() const { return cur_; }
    Token eat() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
        cur_ = Token{};
        cur_.pos = i_ + 1;
        if (i_ >= s_.size()) {
            cur_.kind = Token::Kind::End;
            return;
        }
        const char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j])))
                ++j;
            cur_.kind = Token::Kind::Integer;
            cur_.value = Integer(s_.substr(i_, j - i_));
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isalpha(static_cast<unsigned char>(s_[j])))
                ++j;
            cur_.kind = Token::Kind::Name;
            cur_.name = s_.substr(i_, j - i_);
            i_ = j;
            while (i_ < s_.size() && s_[i_] == '\'') {
                ++cur_.primes;
                ++i_;
            }
            return;
        }
        ++i_;
        switch (c) {
            case '+': cur_.kind = Token::Kind::Plus; return;
            case '-':
                if (i_ < s_.size() && s_[i_] == '>') {
                    ++i_;
                    cur_.kind = Token::Kind::Arrow;
                } else {
                    cur_.kind = Token::Kind::Minus;
                }
                return;
            case '*': cur_.kind = Token::Kind::Star; return;
            case '/': cur_.kind = Token::Kind::Slash; return;
            case '^': cur_.kind = Token::Kind::Caret; return;
            case '(': cur_.kind = Token::Kind::LParen; return;
            case ')': cur_.kind = Token::Kind::RParen; return;
            case '[': cur_.kind = Token::Kind::LBracket; return;
            case ']': cur_.kind = Token::Kind::RBracket; return;
            case ',': cur_.kind = Token::Kind::Comma; return;
            case '=': cur_.kind = Token::Kind::Equals; return;
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", cur_.pos);
    }

    std::string s_;
    std::size_t i_ = 0;
    Token cur_;
};

// Value of a subexpression, kept linear in x: a + b*x.
struct Lin {
    RatFunc a;
    RatFunc b;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    Lin parse_expr() {
        bool neg = false;
        if (lex_.peek().kind == Token::Kind::Minus) {
            lex_.eat();
            neg = true;
        }
        Lin v = parse_term();
        if (neg) v = Lin{-v.a, -v.b};
        while (lex_.peek().kind == Token::Kind::Plus ||
               lex_.peek().kind == Token::Kind::Minus) {
            const bool minus = lex_.eat().kind == Token::Kind::Minus;
            const Lin r = parse_term();
            v = minus ? Lin{v.a - r.a, v.b - r.b} : Lin{v.a + r.a, v.b + r.b};
        }
        return v;
    }

    Rational parse_signed_rational() {
        bool neg = false;
        if (lex_.peek().kind == Token::Kind::Minus) {
            lex_.eat();
            neg = true;
        }
        const Token num = expect(Token::Kind::Integer, "expected an integer");
        Integer den(1);
        if (lex_.peek().kind == Token::Kind::Slash) {
            lex_.eat();
            den = expect(Token::Kind::Integer, "expected a denominator").value;
            if (den == 0) throw UnsupportedInput("division by zero in the input");
        }
        Rational r(num.value, den);
        return neg ? -r : r;
    }

    Token expect(Token::Kind k, const char* what) {
        if (lex_.peek().kind != k) throw SyntaxError(what, lex_.peek().pos);
        return lex_.eat();
    }

    void expect_end() {
        if (lex_.peek().kind != Token::Kind::End)
            throw SyntaxError("unexpected trailing input", lex_.peek().pos);
    }

    const Token& peek() const { return lex_.peek(); }
    Token eat() { return lex_.eat(); }

    bool saw_x = false;

private:
    Lin parse_term() {
        Lin v = parse_factor();
        while (lex_.peek().kind == Token::Kind::Star ||
               lex_.peek().kind == Token::Kind::Slash) {
            const bool div = lex_.eat().kind == Token::Kind::Slash;
            const Lin r = parse_factor();
            if (div) {
                if (!r.b.is_zero())
                    throw UnsupportedInput("nonlinear equation: x in a denominator");
                if (r.a.is_zero())
                    throw UnsupportedInput("division by zero in the input");
                v = Lin{v.a / r.a, v.b / r.a};
            } else {
                if (!v.b.is_zero() && !r.b.is_zero())
                    throw UnsupportedInput("nonlinear equation: x times x");
                v = Lin{v.a * r.a, v.a * r.b + v.b * r.a};
            }
        }
        return v;
    }

    Lin parse_factor() {
        Lin v = parse_base();
        if (lex_.peek().kind != Token::Kind::Caret) return v;
        lex_.eat();
        bool neg = false;
        if (lex_.peek().kind == Token::Kind::Minus) {
            lex_.eat();
            neg = true;
        }
        const Token e = expect(Token::Kind::Integer, "expected an integer exponent");
        if (!e.value.fits_slong_p() || e.value.get_si() > kExponentBound)
            throw UnsupportedInput("exponent exceeds the supported bound of 4096");
        long exp = e.value.get_si();
        if (neg) exp = -exp;
        if (exp == 1) return v;
        if (!v.b.is_zero()) {
            if (exp == 0) return Lin{RatFunc(1), RatFunc()};
            throw UnsupportedInput("nonlinear equation: x raised to a power");
        }
        if (exp < 0 && v.a.is_zero())
            throw UnsupportedInput("division by zero in the input");
        return Lin{v.a.pow(exp), RatFunc()};
    }

    Lin parse_base() {
        const Token t = lex_.peek();
        switch (t.kind) {
            case Token::Kind::Integer:
                lex_.eat();
                return Lin{RatFunc(Rational(t.value)), RatFunc()};
            case Token::Kind::Name:
                if (t.name == "t") {
                    if (t.primes > 0)
                        throw SyntaxError("t cannot be differentiated", t.pos);
                    lex_.eat();
                    return Lin{RatFunc::t(), RatFunc()};
                }
                if (t.name == "x") {
                    if (t.primes > 0)
                        throw SyntaxError(
                            "the derivative may only appear on the left side",
                            t.pos);
                    lex_.eat();
                    saw_x = true;
                    return Lin{RatFunc(), RatFunc(1)};
                }
                throw SyntaxError("unknown symbol '" + t.name + "'", t.pos);
            case Token::Kind::LParen: {
                lex_.eat();
                const Lin v = parse_expr();
                expect(Token::Kind::RParen, "expected ')'");
                return v;
            }
            default:
                throw SyntaxError("expected a number, t, x or '('", t.pos);
        }
    }

    Lexer lex_;
};

} // namespace

LinearODE parse_equation(const std::string& text,
                         std::optional<LinearODE::Kind> forced) {
    Parser p(text);
    const Token head = p.expect(Token::Kind::Name, "expected x' on the left side");
    if (head.name != "x" || head.primes == 0)
        throw SyntaxError("expected x' on the left side", head.pos);
    if (head.primes > 1)
        throw UnsupportedOrder("order " + std::to_string(head.primes) +
                               " equations are not supported, only x' = ...");
    p.expect(Token::Kind::Equals, "expected '='");
    const Lin v = p.parse_expr();
    p.expect_end();

    if (forced == LinearODE::Kind::Homogeneous) {
        if (!p.saw_x) return LinearODE::homogeneous(v.a);
        if (!v.a.is_zero())
            throw UnsupportedInput(
                "affine equations x' = a*x + g are not supported");
        return LinearODE::homogeneous(v.b);
    }
    if (forced == LinearODE::Kind::Quadrature) {
        if (p.saw_x)
            throw UnsupportedInput("a quadrature right side must not contain x");
        return LinearODE::quadrature(v.a);
    }
    if (!v.b.is_zero()) {
        if (!v.a.is_zero())
            throw UnsupportedInput(
                "affine equations x' = a*x + g are not supported");
        return LinearODE::homogeneous(v.b);
    }
    // x cancelled away entirely ("0*x", "x - x") still reads as homogeneous
    if (p.saw_x && v.a.is_zero()) return LinearODE::homogeneous(RatFunc());
    return LinearODE::quadrature(v.a);
}

Cut parse_cut(const std::string& text) {
    Parser p(text);
    const Token head = p.expect(Token::Kind::Name, "expected 't' at the start");
    if (head.name != "t" || head.primes != 0)
        throw SyntaxError("expected 't' at the start", head.pos);
    p.expect(Token::Kind::Arrow, "expected '->'");

    // optional sign, then an infinite end or a point value
    bool neg = false;
    if (p.peek().kind == Token::Kind::Plus || p.peek().kind == Token::Kind::Minus) {
        neg = p.eat().kind == Token::Kind::Minus;
        if (p.peek().kind == Token::Kind::Name && p.peek().name == "inf") {
            p.eat();
            p.expect_end();
            return neg ? Cut::minus_infinity() : Cut::plus_infinity();
        }
        if (!neg) throw SyntaxError("expected 'inf' after '+'", p.peek().pos);
    }

    RealAlgebraic point;
    if (p.peek().kind == Token::Kind::Name && p.peek().name == "root") {
        p.eat();
        p.expect(Token::Kind::LParen, "expected '(' after root");
        const Lin body = p.parse_expr();
        if (p.saw_x)
            throw UnsupportedInput("x may not appear inside root(...)");
        if (!body.a.is_polynomial())
            throw UnsupportedInput("root(...) expects a polynomial");
        p.expect(Token::Kind::Comma, "expected ',' after the polynomial");
        p.expect(Token::Kind::LBracket, "expected '['");
        const Rational lo = p.parse_signed_rational();
        p.expect(Token::Kind::Comma, "expected ',' in the interval");
        const Rational hi = p.parse_signed_rational();
        p.expect(Token::Kind::RBracket, "expected ']'");
        p.expect(Token::Kind::RParen, "expected ')'");
        point = RealAlgebraic::from_root(body.a.num(), lo, hi);
    } else {
        point = RealAlgebraic(p.parse_signed_rational());
    }
    if (neg) point = -point;

    const Token side = p.eat();
    if (side.kind != Token::Kind::Plus && side.kind != Token::Kind::Minus)
        throw SyntaxError("expected '+' or '-' after the point", side.pos);
    p.expect_end();
    return side.kind == Token::Kind::Plus ? Cut::right_of(point)
                                          : Cut::left_of(point);
}

} // namespace pvg
