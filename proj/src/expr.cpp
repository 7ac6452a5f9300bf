#include "affinegerm/expr.hpp"

#include <cctype>

namespace ag {

bool Expression::is_zero() const {
    if (kind == Kind::Form) return form.is_zero();
    for (auto& c : poly)
        if (!c.is_zero()) return false;
    return true;
}

namespace {

enum class Tok { Number, Ident, Op, End };

struct Token {
    Tok type;
    std::string text;
    int column;
};

using Poly = std::vector<TransJet>;

class Parser {
public:
    Parser(const std::string& text, int order, int line) : order_(order), line_(line) { lex(text); }

    Expression run() {
        Expression e = sum();
        if (peek().type != Tok::End) error("unexpected '" + peek().text + "'");
        return e;
    }

private:
    [[noreturn]] void error(const std::string& what, ErrorKind k = ErrorKind::ParseError) const {
        throw SourceError(k, what, line_, peek().column);
    }
    [[noreturn]] void error_at(const Token& t, const std::string& what, ErrorKind k = ErrorKind::ParseError) const {
        throw SourceError(k, what, line_, t.column);
    }

    void lex(const std::string& s) {
        size_t k = 0;
        while (k < s.size()) {
            unsigned char c = s[k];
            int col = static_cast<int>(k) + 1;
            if (std::isspace(c)) {
                ++k;
            } else if (std::isdigit(c)) {
                size_t b = k;
                while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
                if (k < s.size() && (s[k] == '.' || s[k] == 'e' || s[k] == 'E'))
                    throw SourceError(ErrorKind::ParseError, "floating literal", line_, col);
                toks_.push_back({Tok::Number, s.substr(b, k - b), col});
            } else if (c == '.') {
                throw SourceError(ErrorKind::ParseError, "floating literal", line_, col);
            } else if (std::isalpha(c)) {
                size_t b = k;
                while (k < s.size() && std::isalpha(static_cast<unsigned char>(s[k]))) ++k;
                toks_.push_back({Tok::Ident, s.substr(b, k - b), col});
            } else if (std::string("+-*/^()").find(static_cast<char>(c)) != std::string::npos) {
                toks_.push_back({Tok::Op, std::string(1, static_cast<char>(c)), col});
                ++k;
            } else {
                throw SourceError(ErrorKind::ParseError, std::string("unexpected character '") + s[k] + "'",
                                  line_, col);
            }
        }
        toks_.push_back({Tok::End, "end of input", static_cast<int>(s.size()) + 1});
    }

    const Token& peek() const { return toks_[pos_]; }
    bool accept(const std::string& op) {
        if (peek().type == Tok::Op && peek().text == op) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(const std::string& op) {
        if (!accept(op)) error("expected '" + op + "'");
    }

    Expression scalar(const TransJet& f) const { return {Expression::Kind::Function, {f}, {}}; }
    Expression constant(const QComplex& c) const { return scalar(TransJet(c, order_)); }

    static Poly add(const Poly& a, const Poly& b) {
        Poly r = a.size() >= b.size() ? a : b;
        const Poly& s = a.size() >= b.size() ? b : a;
        for (size_t k = 0; k < s.size(); ++k) r[k] += s[k];
        return r;
    }

    static Poly mul(const Poly& a, const Poly& b) {
        Poly r(a.size() + b.size() - 1, TransJet(std::min(a[0].order(), b[0].order())));
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        return r;
    }

    Expression combine(const Expression& a, const Expression& b, bool minus, const Token& at) const {
        Expression e = b;
        if (minus) {
            for (auto& c : e.poly) c = -c;
            e.form = -e.form;
        }
        if (a.kind == Expression::Kind::Function && b.kind == Expression::Kind::Function) {
            Expression r = a;
            r.poly = add(a.poly, e.poly);
            return r;
        }
        if (a.kind == Expression::Kind::Form && b.kind == Expression::Kind::Form) {
            Expression r = a;
            r.form += e.form;
            return r;
        }
        // 0 + form is harmless
        if (a.is_zero()) return e;
        if (b.is_zero()) return a;
        error_at(at, "cannot add a function and a 1-form");
    }

    Expression sum() {
        Expression e = product();
        for (;;) {
            Token t = peek();
            if (accept("+")) e = combine(e, product(), false, t);
            else if (accept("-")) e = combine(e, product(), true, t);
            else return e;
        }
    }

    TransJet z_free(const Expression& e, const Token& at, const char* what) const {
        if (e.kind == Expression::Kind::Form || e.z_degree() > 0) error_at(at, what);
        return e.poly[0];
    }

    Expression times(const Expression& a, const Expression& b, const Token& at) const {
        if (a.kind == Expression::Kind::Form && b.kind == Expression::Kind::Form)
            error_at(at, "product of two 1-forms");
        if (a.kind == Expression::Kind::Form || b.kind == Expression::Kind::Form) {
            const Expression& f = a.kind == Expression::Kind::Form ? a : b;
            const Expression& s = a.kind == Expression::Kind::Form ? b : a;
            TransJet c = z_free(s, at, "1-form coefficients cannot involve z");
            return {Expression::Kind::Form, {}, c * f.form};
        }
        return {Expression::Kind::Function, mul(a.poly, b.poly), {}};
    }

    TransJet invert(const TransJet& f, const Token& at) const {
        if (f.is_zero()) error_at(at, "division by zero");
        try {
            return f.inverse();
        } catch (const Error&) {
            error_at(at, "division by a non-unit: only y^r times a unit may be inverted (no x-poles)");
        }
    }

    Expression product() {
        Expression e = unary();
        for (;;) {
            Token t = peek();
            if (accept("*")) {
                e = times(e, unary(), t);
            } else if (accept("/")) {
                Expression d = unary();
                TransJet inv = invert(z_free(d, t, "division by a 1-form or by a polynomial in z"), t);
                e = times(e, scalar(inv), t);
            } else {
                return e;
            }
        }
    }

    Expression unary() {
        Token t = peek();
        if (accept("-")) return times(constant(-1), unary(), t);
        if (accept("+")) return unary();
        return power();
    }

    // Integer exponent, possibly signed, or a parenthesized constant.
    QComplex exponent() {
        Token t = peek();
        if (accept("(")) {
            Expression e = sum();
            expect(")");
            if (e.kind != Expression::Kind::Function || e.z_degree() > 0 || !e.poly[0].is_laurent())
                error_at(t, "exponent must be a constant", ErrorKind::ExponentNotAllowed);
            LaurentJet c = e.poly[0].to_laurent();
            for (auto& [k, v] : c.terms())
                if (k.first != 0 || k.second != 0)
                    error_at(t, "exponent must be a constant", ErrorKind::ExponentNotAllowed);
            return c.coeff(0, 0);
        }
        bool neg = accept("-");
        if (peek().type != Tok::Number) error("expected an exponent");
        QComplex v(Rational(mpz_class(toks_[pos_++].text)));
        return neg ? -v : v;
    }

    Expression power() {
        Token base_tok = peek();
        bool bare_y = base_tok.type == Tok::Ident && base_tok.text == "y";
        Expression base = atom();
        Token t = peek();
        if (!accept("^")) return base;
        QComplex e = exponent();
        if (bare_y) return scalar(TransJet::power_of_y(e, order_));
        if (!e.is_integer())
            error_at(t, "non-integer exponents are only allowed on y", ErrorKind::ExponentNotAllowed);
        long n = e.to_long();
        if (base.kind == Expression::Kind::Form) error_at(t, "power of a 1-form");
        if (base.z_degree() > 0) {
            if (n < 0) error_at(t, "negative power of a polynomial in z");
            Expression r = constant(1);
            for (long k = 0; k < n; ++k) r.poly = mul(r.poly, base.poly);
            return r;
        }
        TransJet f = base.poly[0];
        if (n < 0) {
            f = invert(f, t);
            n = -n;
        }
        TransJet r(1, order_);
        for (long k = 0; k < n; ++k) r = r * f;
        return scalar(r);
    }

    Expression atom() {
        Token t = peek();
        if (t.type == Tok::Number) {
            ++pos_;
            return constant(QComplex(Rational(mpz_class(t.text))));
        }
        if (accept("(")) {
            Expression e = sum();
            expect(")");
            return e;
        }
        if (t.type != Tok::Ident) error("expected a number, variable or '('");
        ++pos_;
        if (t.text == "x") return scalar(TransJet(LaurentJet::x(order_)));
        if (t.text == "y") return scalar(TransJet(LaurentJet::y(order_)));
        if (t.text == "i") return constant(QComplex::i());
        if (t.text == "z") return {Expression::Kind::Function, {TransJet(order_), TransJet(1, order_)}, {}};
        if (t.text == "dx") return {Expression::Kind::Form, {}, Form1::dx(order_)};
        if (t.text == "dy") return {Expression::Kind::Form, {}, Form1::dy(order_)};
        if (t.text == "log") {
            expect("(");
            if (!(peek().type == Tok::Ident && peek().text == "y")) error("log is only allowed of y");
            ++pos_;
            expect(")");
            return scalar(TransJet::log_y(order_));
        }
        error_at(t, "unknown name '" + t.text + "'");
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
    int order_, line_;
};

}  // namespace

Expression parse_expression(const std::string& text, int order, int line) {
    return Parser(text, order, line).run();
}

TransJet parse_function(const std::string& text, int order, int line) {
    Expression e = parse_expression(text, order, line);
    if (e.kind == Expression::Kind::Form) throw SourceError(ErrorKind::ParseError, "expected a function, got a 1-form", line, 1);
    if (e.z_degree() > 0) throw SourceError(ErrorKind::ParseError, "unexpected z", line, 1);
    return e.poly[0];
}

Form1 parse_form(const std::string& text, int order, int line) {
    Expression e = parse_expression(text, order, line);
    if (e.kind == Expression::Kind::Form) return e.form;
    if (e.is_zero()) return Form1(TransJet(order), TransJet(order));
    throw SourceError(ErrorKind::ParseError, "expected a 1-form in dx, dy", line, 1);
}

std::vector<TransJet> parse_polynomial(const std::string& text, int order, int line) {
    Expression e = parse_expression(text, order, line);
    if (e.kind == Expression::Kind::Form)
        throw SourceError(ErrorKind::ParseError, "expected a polynomial in z, got a 1-form", line, 1);
    while (e.poly.size() > 1 && e.poly.back().is_zero()) e.poly.pop_back();
    return e.poly;
}

std::string print(const TransJet& f) { return f.to_string(); }
std::string print(const Form1& w) { return w.to_string(); }
std::string print(const Form2& w) { return w.to_string(); }

std::string print_polynomial(const std::vector<TransJet>& p) {
    std::string s;
    for (size_t k = 0; k < p.size(); ++k) {
        if (p[k].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + p[k].to_string() + ")";
        if (k == 1) s += "*z";
        if (k > 1) s += "*z^" + std::to_string(k);
    }
    return s.empty() ? "0" : s;
}

}  // namespace ag
