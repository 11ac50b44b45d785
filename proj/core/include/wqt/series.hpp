#pragma once

#include <map>

#include "wqt/scalar.hpp"

namespace wqt {

/// Truncated Laurent series in a formal variable with Scalar coefficients.
/// Coefficients are tracked for exponents n <= order(); anything above the
/// truncation order is unknown, anything stored below it is exact.
class LaurentSeries {
public:
    explicit LaurentSeries(int order) : order_(order) {}
    static LaurentSeries one(int order);

    int order() const { return order_; }
    /// Smallest stored exponent; order()+1 when empty.
    int lo() const;
    bool is_zero() const { return c_.empty(); }
    const std::map<int, Scalar>& coeffs() const { return c_; }

    Scalar coeff(int n) const;
    void set_coeff(int n, Scalar v);
    void add_coeff(int n, const Scalar& v);

    LaurentSeries operator+(const LaurentSeries& o) const;
    LaurentSeries operator-(const LaurentSeries& o) const;
    LaurentSeries operator*(const LaurentSeries& o) const;
    LaurentSeries scaled(const Scalar& k) const;

    /// Multiply by zeta^k.
    LaurentSeries shifted(int k) const;
    /// Substitute zeta -> c*zeta: coefficient n picks up c^n.
    LaurentSeries arg_scaled(const Scalar& c) const;
    /// Substitute zeta -> zeta^-1 (exponent sign flip); order becomes -lo.
    LaurentSeries reversed() const;
    /// Raise the truncation order; only valid when the caller knows the
    /// coefficients in the widened window vanish.
    LaurentSeries padded(int order) const;

    /// exp of a series supported on n >= 1; result has constant term 1.
    LaurentSeries exp() const;
    /// log of a series with constant term 1 and no terms below 0.
    LaurentSeries log() const;

    bool operator==(const LaurentSeries& o) const;

private:
    int order_;
    std::map<int, Scalar> c_;  // nonzero coefficients only
};

}  // namespace wqt
