#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wqt/exponent.hpp"

namespace wqt {

using Float = boost::multiprecision::cpp_bin_float_50;

/// Finite sum of terms c * x^e with e an ExponentFn: an element of the group
/// algebra Q[(Q(r), +)].  Terms are keyed by the structural order on
/// exponents; the asymptotic order (r -> +infinity) defines leading terms.
class Sum {
public:
    Sum() = default;
    explicit Sum(Rational constant);
    static Sum monomial(Rational coeff, const ExponentFn& e);

    bool is_zero() const { return t_.empty(); }
    size_t terms() const { return t_.size(); }
    const std::map<ExponentFn, Rational>& term_map() const { return t_; }

    void add_term(const ExponentFn& e, const Rational& c);

    Sum operator-() const;
    Sum operator+(const Sum& o) const;
    Sum operator-(const Sum& o) const;
    Sum operator*(const Sum& o) const;
    Sum scaled(const Rational& k) const;
    Sum shifted(const ExponentFn& e) const;  // multiply by x^e
    bool operator==(const Sum& o) const { return t_ == o.t_; }
    std::strong_ordering operator<=>(const Sum& o) const;

    /// Term with the asymptotically largest exponent.
    std::pair<ExponentFn, Rational> leading() const;
    /// Term with the asymptotically smallest exponent.
    std::pair<ExponentFn, Rational> trailing() const;

    /// Exact quotient *this / d if it exists (greedy leading-term division).
    std::optional<Sum> divided_by(const Sum& d) const;

    /// Substitute numeric x0, r0 at 50-digit precision.
    Float eval_f(const Float& x0, const Float& r0) const;

    std::string to_string() const;

private:
    std::map<ExponentFn, Rational> t_;
};

/// Element of the fraction field of the group algebra: num / prod(den_k).
/// Denominator factors are kept in factored form and each is normalized to
/// leading (asymptotic) coefficient 1; cancellation against the numerator is
/// attempted after every operation, so values built by mul/div chains return
/// to their shortest shape.  Zero tests and equality are exact.
class Scalar {
public:
    Scalar() = default;  // zero
    Scalar(long n) : Scalar(Rational(n)) {}
    explicit Scalar(Rational q);
    explicit Scalar(Sum s);

    /// x^e
    static Scalar x_pow(const ExponentFn& e);
    /// q-integer [e]_x = (x^e - x^-e)/(x - x^-1), with e any ExponentFn.
    static Scalar qint(const ExponentFn& e);
    static Scalar qint(long n) { return qint(ExponentFn(n)); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    const Sum& num() const { return num_; }
    const std::vector<Sum>& den() const { return den_; }
    Sum den_expanded() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // o nonzero
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
    Scalar inverse() const;
    Scalar pow(long k) const;

    /// Copy with denominator cancellation attempted; a value that is secretly
    /// polynomial comes back with an empty denominator list.
    Scalar canonical() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Numeric substitution x -> x0, r -> r0 at 50-digit precision (the
    /// classical limit drives x to 1, where double precision is not enough).
    /// Throws on vanishing evaluated denominator.
    Float eval_f(const Float& x0, const Float& r0) const;
    double eval_numeric(double x0, double r0) const;

    /// Canonical text form: terms in structural key order, factored
    /// denominator.  Deterministic across runs.
    std::string to_string() const;

private:
    void simplify(bool attempt_cancel = true);
    Sum num_;
    std::vector<Sum> den_;  // sorted structurally; each leading-coeff 1
};

}  // namespace wqt
