#include "qharm/parse.hpp"

#include <cctype>
#include <optional>

namespace qharm {

namespace {

enum class Tok { Int, Q, Var, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::size_t pos;
    mpz_class value; // Int
    int var = 0;     // Var index
};

class Lexer {
public:
    explicit Lexer(std::string_view s) : s_(s) { advance(); }

    const Token& peek() const { return cur_; }
    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        cur_.pos = i_;
        if (i_ >= s_.size()) {
            cur_.kind = Tok::End;
            return;
        }
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            cur_.kind = Tok::Int;
            cur_.value = mpz_class(std::string(s_.substr(i_, j - i_)), 10);
            i_ = j;
            return;
        }
        if (c == 'q') {
            cur_.kind = Tok::Q;
            ++i_;
            return;
        }
        if (c == 'x') {
            std::size_t j = i_ + 1;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            if (j == i_ + 1) throw SyntaxError("variable needs an index", i_);
            cur_.kind = Tok::Var;
            cur_.var = std::stoi(std::string(s_.substr(i_ + 1, j - i_ - 1)));
            i_ = j;
            return;
        }
        switch (c) {
            case '+': cur_.kind = Tok::Plus; break;
            case '-': cur_.kind = Tok::Minus; break;
            case '*': cur_.kind = Tok::Star; break;
            case '/': cur_.kind = Tok::Slash; break;
            case '^': cur_.kind = Tok::Caret; break;
            case '(': cur_.kind = Tok::LParen; break;
            case ')': cur_.kind = Tok::RParen; break;
            default: throw SyntaxError(std::string("unexpected character '") + c + "'", i_);
        }
        ++i_;
    }

    std::string_view s_;
    std::size_t i_ = 0;
    Token cur_;
};

// Shared recursive-descent parser; Value is Poly or QScalar.
template <class Ops>
class Parser {
public:
    using Value = typename Ops::Value;

    Parser(std::string_view text, Ops ops) : lex_(text), ops_(std::move(ops)) {}

    Value parse() {
        Value v = expr();
        if (lex_.peek().kind != Tok::End)
            throw SyntaxError("unexpected trailing input", lex_.peek().pos);
        return v;
    }

private:
    Value expr() {
        Value v = term();
        while (true) {
            Tok k = lex_.peek().kind;
            if (k == Tok::Plus) {
                lex_.take();
                v = ops_.add(v, term());
            } else if (k == Tok::Minus) {
                lex_.take();
                v = ops_.sub(v, term());
            } else {
                return v;
            }
        }
    }

    static bool starts_factor(Tok k) {
        return k == Tok::Int || k == Tok::Q || k == Tok::Var || k == Tok::LParen;
    }

    Value term() {
        Value v = factor();
        while (true) {
            Tok k = lex_.peek().kind;
            if (k == Tok::Star) {
                lex_.take();
                v = ops_.mul(v, factor());
            } else if (k == Tok::Slash) {
                std::size_t pos = lex_.peek().pos;
                lex_.take();
                v = ops_.div(v, factor(), pos);
            } else if (starts_factor(k)) {
                v = ops_.mul(v, factor()); // juxtaposition, written order
            } else {
                return v;
            }
        }
    }

    Value factor() {
        bool neg = false;
        while (lex_.peek().kind == Tok::Minus || lex_.peek().kind == Tok::Plus) {
            if (lex_.take().kind == Tok::Minus) neg = !neg;
        }
        Value v = power();
        return neg ? ops_.neg(v) : v;
    }

    Value power() {
        Token t = lex_.peek();
        bool base_is_q = (t.kind == Tok::Q);
        Value v = atom();
        if (lex_.peek().kind == Tok::Caret) {
            std::size_t cpos = lex_.peek().pos;
            lex_.take();
            auto [num, den] = exponent();
            if (den == 2) {
                if (!base_is_q)
                    throw SyntaxError("half-integer exponent is only allowed on q", cpos);
                return ops_.q_half_power(num);
            }
            if (base_is_q) return ops_.q_half_power(2 * num);
            if (num < 0) throw SyntaxError("negative exponent on a non-scalar base", cpos);
            return ops_.int_power(v, num, cpos);
        }
        return v;
    }

    // integer, or (p), or (p/2) with optional sign on p
    std::pair<long, long> exponent() {
        Token t = lex_.peek();
        if (t.kind == Tok::Int) {
            lex_.take();
            return {t.value.get_si(), 1};
        }
        if (t.kind == Tok::Minus) {
            lex_.take();
            Token u = lex_.take();
            if (u.kind != Tok::Int) throw SyntaxError("expected integer exponent", u.pos);
            return {-u.value.get_si(), 1};
        }
        if (t.kind != Tok::LParen) throw SyntaxError("expected exponent", t.pos);
        lex_.take();
        bool neg = false;
        if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            neg = true;
        }
        Token num = lex_.take();
        if (num.kind != Tok::Int) throw SyntaxError("expected integer in exponent", num.pos);
        long p = num.value.get_si();
        if (neg) p = -p;
        long den = 1;
        if (lex_.peek().kind == Tok::Slash) {
            lex_.take();
            Token d = lex_.take();
            if (d.kind != Tok::Int || (d.value != 1 && d.value != 2))
                throw SyntaxError("exponent denominator must be 1 or 2", d.pos);
            den = d.value.get_si();
        }
        Token close = lex_.take();
        if (close.kind != Tok::RParen) throw SyntaxError("expected ')' in exponent", close.pos);
        return {p, den};
    }

    Value atom() {
        Token t = lex_.take();
        switch (t.kind) {
            case Tok::Int: return ops_.from_int(t.value);
            case Tok::Q: return ops_.q();
            case Tok::Var: return ops_.var(t.var, t.pos);
            case Tok::LParen: {
                Value v = expr();
                Token close = lex_.take();
                if (close.kind != Tok::RParen) throw SyntaxError("expected ')'", close.pos);
                return v;
            }
            default: throw SyntaxError("expected a value", t.pos);
        }
    }

    Lexer lex_;
    Ops ops_;
};

struct PolyOps {
    using Value = Poly;
    int N;

    Poly from_int(const mpz_class& v) const { return Poly::constant(N, QScalar::integer(v)); }
    Poly q() const { return Poly::constant(N, QScalar::qpow(1)); }
    Poly var(int i, std::size_t pos) const {
        if (i < 1 || i > N)
            throw IndexOutOfRange("variable x" + std::to_string(i) + " is out of range for N=" +
                                  std::to_string(N));
        (void)pos;
        return Poly::generator(N, i);
    }
    Poly add(const Poly& a, const Poly& b) const { return a + b; }
    Poly sub(const Poly& a, const Poly& b) const { return a - b; }
    Poly mul(const Poly& a, const Poly& b) const { return multiply(a, b); }
    Poly neg(const Poly& a) const { return -a; }
    Poly div(const Poly& a, const Poly& b, std::size_t pos) const {
        QScalar s;
        if (!b.scalar_value(&s)) throw SyntaxError("division by a non-scalar expression", pos);
        if (s.is_zero()) throw DivisionByZero("division by zero in expression");
        return a * s.inv();
    }
    Poly q_half_power(long p) const { return Poly::constant(N, QScalar::tpow(static_cast<int>(p))); }
    Poly int_power(const Poly& a, long e, std::size_t pos) const {
        if (e > 64) throw SyntaxError("exponent too large", pos);
        Poly r = Poly::one(N);
        for (long i = 0; i < e; ++i) r = multiply(r, a);
        return r;
    }
};

struct ScalarOps {
    using Value = QScalar;

    QScalar from_int(const mpz_class& v) const { return QScalar::integer(v); }
    QScalar q() const { return QScalar::qpow(1); }
    QScalar var(int i, std::size_t pos) const {
        throw SyntaxError("variable x" + std::to_string(i) + " not allowed in a scalar", pos);
    }
    QScalar add(const QScalar& a, const QScalar& b) const { return a + b; }
    QScalar sub(const QScalar& a, const QScalar& b) const { return a - b; }
    QScalar mul(const QScalar& a, const QScalar& b) const { return a * b; }
    QScalar neg(const QScalar& a) const { return -a; }
    QScalar div(const QScalar& a, const QScalar& b, std::size_t) const {
        if (b.is_zero()) throw DivisionByZero("division by zero in expression");
        return a / b;
    }
    QScalar q_half_power(long p) const { return QScalar::tpow(static_cast<int>(p)); }
    QScalar int_power(const QScalar& a, long e, std::size_t) const { return pow(a, e); }
};

} // namespace

Poly parse_poly(std::string_view text, int N) {
    Parser<PolyOps> p(text, PolyOps{N});
    return p.parse();
}

QScalar parse_scalar(std::string_view text) {
    Parser<ScalarOps> p(text, ScalarOps{});
    return p.parse();
}

} // namespace qharm
