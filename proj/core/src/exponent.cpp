#include "wqt/exponent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wqt {

Poly::Poly(Rational constant) {
    if (constant != 0) c_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::variable() {
    return Poly(std::vector<Rational>{Rational(0), Rational(1)});
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& Poly::coeff(int i) const {
    static const Rational zero{0};
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
}

const Rational& Poly::leading() const {
    if (c_.empty()) throw std::logic_error("leading() of zero polynomial");
    return c_.back();
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(v));
}

std::strong_ordering Poly::operator<=>(const Poly& o) const {
    if (c_.size() != o.c_.size())
        return c_.size() <=> o.c_.size();
    for (size_t i = c_.size(); i-- > 0;) {
        // Structural order only; integer compares of the reduced parts are
        // much cheaper than rational value comparison.
        if (int c = numerator(c_[i]).compare(numerator(o.c_[i])); c != 0)
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        if (int c = denominator(c_[i]).compare(denominator(o.c_[i])); c != 0)
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& rem) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    q = Poly();
    rem = a;
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int d = rem.degree() - b.degree();
        Rational k = rem.leading() / b.leading();
        std::vector<Rational> mono(d + 1, Rational(0));
        mono[d] = k;
        Poly t(std::move(mono));
        q = q + t;
        rem = rem - t * b;
    }
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(Rational(1) / a.leading());  // monic
}

Poly Poly::scaled(const Rational& k) const {
    if (k == 0) return Poly();
    Poly out = *this;
    for (auto& x : out.c_) x *= k;
    return out;
}

Rational Poly::eval(const Rational& r0) const {
    Rational acc{0};
    for (size_t i = c_.size(); i-- > 0;) acc = acc * r0 + c_[i];
    return acc;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rational k = c_[i];
        if (!first) {
            os << (k < 0 ? "-" : "+");
            if (k < 0) k = -k;
        }
        first = false;
        if (i == 0) {
            os << k;
        } else {
            if (k != 1) os << k << "*";
            os << "r";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

ExponentFn::ExponentFn(Poly num, Poly den) {
    if (den.is_zero()) throw std::domain_error("ExponentFn: zero denominator");
    Poly g = Poly::gcd(num, den);
    if (!g.is_zero() && g.degree() > 0) {
        Poly q, rem;
        Poly::divmod(num, g, q, rem);
        num = std::move(q);
        Poly::divmod(den, g, q, rem);
        den = std::move(q);
    }
    Rational lead = den.leading();
    num_ = num.scaled(Rational(1) / lead);
    den_ = den.scaled(Rational(1) / lead);
}

ExponentFn ExponentFn::r() { return ExponentFn(Poly::variable(), Poly(Rational(1))); }

bool ExponentFn::is_integer() const {
    if (num_.is_zero()) return true;
    if (den_.degree() != 0 || num_.degree() != 0) return false;
    Rational v = num_.coeff(0) / den_.coeff(0);
    return denominator(v) == 1;
}

long ExponentFn::as_integer() const {
    if (num_.is_zero()) return 0;
    if (!is_integer()) throw std::logic_error("ExponentFn is not an integer");
    Rational v = num_.coeff(0) / den_.coeff(0);
    return static_cast<long>(numerator(v));
}

ExponentFn ExponentFn::operator-() const {
    ExponentFn out = *this;
    out.num_ = -out.num_;
    return out;
}

ExponentFn ExponentFn::operator+(const ExponentFn& o) const {
    // Integer denominators (monic => 1) dominate in practice; skip the gcd.
    if (den_.degree() == 0 && o.den_.degree() == 0) {
        ExponentFn out;
        out.num_ = num_ + o.num_;
        return out;
    }
    return ExponentFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

ExponentFn ExponentFn::operator-(const ExponentFn& o) const {
    if (den_.degree() == 0 && o.den_.degree() == 0) {
        ExponentFn out;
        out.num_ = num_ - o.num_;
        return out;
    }
    return ExponentFn(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

ExponentFn ExponentFn::operator*(const ExponentFn& o) const {
    return ExponentFn(num_ * o.num_, den_ * o.den_);
}

ExponentFn ExponentFn::operator/(const ExponentFn& o) const {
    if (o.is_zero()) throw std::domain_error("ExponentFn division by zero");
    return ExponentFn(num_ * o.den_, den_ * o.num_);
}

ExponentFn ExponentFn::operator*(long k) const {
    ExponentFn out = *this;
    out.num_ = out.num_.scaled(Rational(k));
    return out;
}

bool ExponentFn::operator==(const ExponentFn& o) const {
    return num_ == o.num_ && den_ == o.den_;
}

std::strong_ordering ExponentFn::operator<=>(const ExponentFn& o) const {
    if (auto c = num_ <=> o.num_; c != 0) return c;
    return den_ <=> o.den_;
}

int ExponentFn::asym_sign() const {
    if (num_.is_zero()) return 0;
    // Denominator is monic, hence positive at +infinity.
    return num_.leading() > 0 ? 1 : -1;
}

int ExponentFn::asym_cmp(const ExponentFn& o) const {
    if (den_ == o.den_) {
        // First differing coefficient from the top decides the sign.
        int d1 = num_.degree(), d2 = o.num_.degree();
        for (int i = std::max(d1, d2); i >= 0; --i) {
            const Rational& a = num_.coeff(i);
            const Rational& b = o.num_.coeff(i);
            if (a != b) return a > b ? 1 : -1;
        }
        return 0;
    }
    Poly diff = num_ * o.den_ - o.num_ * den_;
    if (diff.is_zero()) return 0;
    return diff.leading() > 0 ? 1 : -1;
}

Rational ExponentFn::eval(const Rational& r0) const {
    Rational d = den_.eval(r0);
    if (d == 0) throw std::domain_error("ExponentFn denominator vanishes at r0");
    return num_.eval(r0) / d;
}

std::string ExponentFn::to_string() const {
    if (den_ == Poly(Rational(1))) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace wqt
