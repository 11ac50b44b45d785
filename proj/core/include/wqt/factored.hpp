#pragma once

#include <utility>
#include <vector>

#include "wqt/series.hpp"

namespace wqt {

/// One term of a formal delta-function expansion: coeff * delta(c*zeta),
/// with delta(w) = sum_{m in Z} w^m.
struct DeltaTerm {
    Scalar c;
    Scalar coeff;
};

using DeltaExpansion = std::vector<DeltaTerm>;

/// Rational function of one variable kept in the factored shape
///     pref * zeta^zpow * prod_f (1 - c_f*zeta)^{m_f},
/// with c_f nonzero Scalars (monomials in practice) and integer m_f of either
/// sign.  This is the exact home for kernels Delta_i and for structure
/// functions after fusion cancellation; expansion to LaurentSeries happens
/// only at the edges.
class FactoredRational {
public:
    FactoredRational() : pref_(Scalar(1)) {}
    explicit FactoredRational(Scalar pref) : pref_(std::move(pref)) {}

    static FactoredRational zero() { return FactoredRational(Scalar()); }
    /// (1 - c*zeta)^mult
    static FactoredRational factor(Scalar c, int mult = 1);
    /// zeta^k
    static FactoredRational zeta_pow(int k);

    bool is_zero() const { return pref_.is_zero(); }
    bool is_one() const;
    const Scalar& pref() const { return pref_; }
    int zpow() const { return zpow_; }
    const std::vector<std::pair<Scalar, int>>& factors() const { return f_; }

    FactoredRational operator*(const FactoredRational& o) const;
    FactoredRational& operator*=(const FactoredRational& o) { return *this = *this * o; }
    FactoredRational inverse() const;
    FactoredRational operator/(const FactoredRational& o) const { return *this * o.inverse(); }
    FactoredRational pow(int k) const;

    /// Substitute zeta -> c0*zeta.
    FactoredRational arg_scaled(const Scalar& c0) const;
    /// Substitute zeta -> zeta^-1, rewritten back into factored shape via
    /// (1 - c/zeta) = -c*zeta^-1*(1 - zeta/c).
    FactoredRational arg_inverted() const;

    /// Exact equality as rational functions.
    bool operator==(const FactoredRational& o) const;

    /// Power series expansion around zeta = 0 up to zeta^order.
    LaurentSeries expand_at_zero(int order) const;
    /// Expansion around zeta = infinity: exact for exponents >= -order.
    LaurentSeries expand_at_infinity(int order) const;

    /// lim (1 - c*zeta) * R(zeta) at zeta = 1/c: zero when R has no simple
    /// pole there, the delta-coefficient of that pole otherwise.
    /// Requires any pole at 1/c to be simple.
    Scalar residue_limit(const Scalar& c) const;

    /// Taylor coefficients h_0..h_n, in powers of (1 - c*zeta) at zeta = 1/c,
    /// of this function with any (1 - c*zeta) factor divided out.  When that
    /// factor carries exponent -k (a pole of order k), h_t is the coefficient
    /// of (1 - c*zeta)^{t-k} in the Laurent expansion at 1/c.
    std::vector<Scalar> taylor_at_point(const Scalar& c, int n) const;

    /// Expansion at zero minus expansion at infinity as a finite sum of
    /// delta functions.  Valid (and checked) only when every pole is simple
    /// and the function vanishes at both 0-degree ends, which is the shape
    /// all kernel differences take.
    DeltaExpansion delta_decompose() const;

    Scalar evaluate(const Scalar& z0) const;

    std::string to_string() const;

private:
    void absorb(Scalar c, int mult);
    Scalar pref_;
    int zpow_ = 0;
    std::vector<std::pair<Scalar, int>> f_;
};

}  // namespace wqt
