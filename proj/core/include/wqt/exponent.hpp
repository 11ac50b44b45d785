#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <string>
#include <vector>

namespace wqt {

using Rational = boost::multiprecision::cpp_rational;

/// Dense polynomial in the formal symbol r with exact rational coefficients.
/// Coefficient i is the coefficient of r^i; the vector never ends in zeros.
class Poly {
public:
    Poly() = default;
    Poly(Rational constant);
    explicit Poly(std::vector<Rational> coeffs);

    static Poly variable();  // the polynomial r

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
    const Rational& coeff(int i) const;
    const Rational& leading() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    std::strong_ordering operator<=>(const Poly& o) const;

    /// Euclidean division; denominator must be nonzero.
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& rem);
    /// Monic gcd.
    static Poly gcd(Poly a, Poly b);

    Poly scaled(const Rational& k) const;
    Rational eval(const Rational& r0) const;

    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Exact rational function of r: numerator/denominator, reduced, denominator
/// monic.  The total order is the asymptotic one as r -> +infinity, matching
/// the regime r > 1.
class ExponentFn {
public:
    ExponentFn() = default;                      // zero
    ExponentFn(long n) : ExponentFn(Poly(Rational(n)), Poly(Rational(1))) {}
    ExponentFn(Rational q) : ExponentFn(Poly(std::move(q)), Poly(Rational(1))) {}
    ExponentFn(Poly num, Poly den);

    static ExponentFn r();  // the symbol itself

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const;
    long as_integer() const;  // requires is_integer()

    ExponentFn operator-() const;
    ExponentFn operator+(const ExponentFn& o) const;
    ExponentFn operator-(const ExponentFn& o) const;
    ExponentFn operator*(const ExponentFn& o) const;
    ExponentFn operator/(const ExponentFn& o) const;  // o nonzero
    ExponentFn operator*(long k) const;

    bool operator==(const ExponentFn& o) const;
    /// Structural order (canonical-form lexicographic); cheap, used for maps.
    std::strong_ordering operator<=>(const ExponentFn& o) const;

    /// Sign of the value as r -> +infinity: -1, 0, +1.
    int asym_sign() const;
    /// Asymptotic comparison: sign of (*this - o) as r -> +infinity.
    int asym_cmp(const ExponentFn& o) const;

    Rational eval(const Rational& r0) const;  // den(r0) must be nonzero

    std::string to_string() const;

private:
    Poly num_, den_{Rational(1)};
};

}  // namespace wqt
