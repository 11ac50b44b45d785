#include "wqt/textio.hpp"

#include <cctype>
#include <stdexcept>

namespace wqt {

namespace {

struct Parser {
    const std::string& s;
    size_t p = 0;

    explicit Parser(const std::string& text) : s(text) {}

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("scalar parse error at " +
                                    std::to_string(p) + ": " + what);
    }
    bool eof() const { return p >= s.size(); }
    char peek() const { return eof() ? '\0' : s[p]; }
    bool consume(const std::string& lit) {
        if (s.compare(p, lit.size(), lit) != 0) return false;
        p += lit.size();
        return true;
    }
    void expect(const std::string& lit) {
        if (!consume(lit)) fail("expected '" + lit + "'");
    }

    Rational rational() {
        size_t start = p;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++p;
        if (p == start) fail("expected a number");
        size_t slash = p;
        if (peek() == '/' && p + 1 < s.size() &&
            std::isdigit(static_cast<unsigned char>(s[p + 1]))) {
            ++p;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++p;
        }
        (void)slash;
        return Rational(s.substr(start, p - start));
    }

    // Polynomial in r, Poly::to_string form: signs not surrounded by spaces.
    Poly poly() {
        std::vector<Rational> coeffs;
        auto put = [&](int deg, const Rational& k) {
            if (static_cast<int>(coeffs.size()) <= deg)
                coeffs.resize(deg + 1, Rational(0));
            coeffs[deg] += k;
        };
        bool first = true;
        for (;;) {
            Rational sign(1);
            if (consume("-")) sign = -1;
            else if (consume("+")) { /* explicit plus */ }
            else if (!first) break;
            Rational k(1);
            bool have_k = false;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                k = rational();
                have_k = true;
                consume("*");
            }
            int deg = 0;
            if (consume("r")) {
                deg = 1;
                if (consume("^")) deg = rational().convert_to<int>();
            } else if (!have_k) {
                fail("expected a polynomial term");
            }
            put(deg, sign * k);
            first = false;
            if (peek() != '+' && peek() != '-') break;
        }
        return Poly(std::move(coeffs));
    }

    ExponentFn exponent() {
        if (consume("(")) {
            Poly num = poly();
            expect(")/(");
            Poly den = poly();
            expect(")");
            return ExponentFn(std::move(num), std::move(den));
        }
        return ExponentFn(poly(), Poly(Rational(1)));
    }

    // Sum::to_string form: terms separated by " + " / " - ".
    Sum sum() {
        Sum out;
        Rational sign = consume("-") ? Rational(-1) : Rational(1);
        for (;;) {
            Rational k(1);
            bool have_k = false;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                k = rational();
                have_k = true;
                consume("*");
            }
            ExponentFn e;
            if (consume("x^(")) {
                e = exponent();
                expect(")");
            } else if (!have_k) {
                fail("expected a term");
            }
            out.add_term(e, sign * k);
            if (consume(" + ")) sign = 1;
            else if (consume(" - ")) sign = -1;
            else break;
        }
        return out;
    }

    Scalar scalar() {
        if (peek() == '(') {
            expect("(");
            Scalar out(sum());
            expect(")");
            while (consume(" / (")) {
                Scalar den(sum());
                expect(")");
                out /= den;
            }
            return out;
        }
        if (consume("0") && eof()) return Scalar();
        p = 0;
        return Scalar(sum());
    }
};

}  // namespace

Scalar parse_scalar(const std::string& text) {
    Parser ps(text);
    Scalar out = ps.scalar();
    if (!ps.eof()) ps.fail("trailing input");
    return out;
}

ExponentFn parse_exponent(const std::string& text) {
    Parser ps(text);
    ExponentFn out = ps.exponent();
    if (!ps.eof()) ps.fail("trailing input");
    return out;
}

}  // namespace wqt
