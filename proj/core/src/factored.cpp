#include "wqt/factored.hpp"

#include <sstream>
#include <stdexcept>

namespace wqt {

FactoredRational FactoredRational::factor(Scalar c, int mult) {
    FactoredRational out;
    out.absorb(std::move(c), mult);
    return out;
}

FactoredRational FactoredRational::zeta_pow(int k) {
    FactoredRational out;
    out.zpow_ = k;
    return out;
}

bool FactoredRational::is_one() const {
    return zpow_ == 0 && f_.empty() && pref_.is_one();
}

void FactoredRational::absorb(Scalar c, int mult) {
    if (mult == 0 || c.is_zero()) return;
    for (auto it = f_.begin(); it != f_.end(); ++it) {
        if (it->first == c) {
            it->second += mult;
            if (it->second == 0) f_.erase(it);
            return;
        }
    }
    f_.emplace_back(std::move(c), mult);
}

FactoredRational FactoredRational::operator*(const FactoredRational& o) const {
    FactoredRational out = *this;
    out.pref_ *= o.pref_;
    if (out.pref_.is_zero()) return zero();
    out.zpow_ += o.zpow_;
    for (const auto& [c, m] : o.f_) out.absorb(c, m);
    return out;
}

FactoredRational FactoredRational::inverse() const {
    if (is_zero()) throw std::domain_error("FactoredRational division by zero");
    FactoredRational out;
    out.pref_ = pref_.inverse();
    out.zpow_ = -zpow_;
    for (const auto& [c, m] : f_) out.f_.emplace_back(c, -m);
    return out;
}

FactoredRational FactoredRational::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    FactoredRational out;
    out.pref_ = pref_.pow(k);
    out.zpow_ = zpow_ * k;
    for (const auto& [c, m] : f_) out.f_.emplace_back(c, m * k);
    return out;
}

FactoredRational FactoredRational::arg_scaled(const Scalar& c0) const {
    FactoredRational out;
    out.pref_ = pref_ * c0.pow(zpow_);
    out.zpow_ = zpow_;
    for (const auto& [c, m] : f_) out.absorb(c * c0, m);
    return out;
}

FactoredRational FactoredRational::arg_inverted() const {
    // (1 - c/zeta) = -c * zeta^-1 * (1 - zeta/c)
    FactoredRational out;
    out.pref_ = pref_;
    out.zpow_ = -zpow_;
    for (const auto& [c, m] : f_) {
        out.pref_ *= (-c).pow(m);
        out.zpow_ -= m;
        out.absorb(c.inverse(), m);
    }
    return out;
}

bool FactoredRational::operator==(const FactoredRational& o) const {
    if (is_zero() || o.is_zero()) return is_zero() == o.is_zero();
    // Cross-multiplied Laurent-polynomial comparison: exact and independent
    // of how the factors happen to be arranged.
    auto num_den = [](const FactoredRational& r, int ord) {
        LaurentSeries num = LaurentSeries::one(ord);
        LaurentSeries den = LaurentSeries::one(ord);
        for (const auto& [c, m] : r.f_) {
            LaurentSeries lin(ord);
            lin.set_coeff(0, Scalar(1));
            lin.set_coeff(1, -c);
            for (int i = 0; i < std::abs(m); ++i)
                (m > 0 ? num : den) = (m > 0 ? num : den) * lin;
        }
        num = num.scaled(r.pref_).shifted(r.zpow_);
        return std::pair{num, den};
    };
    int deg = 2;
    for (const auto& [c, m] : f_) deg += std::abs(m);
    for (const auto& [c, m] : o.f_) deg += std::abs(m);
    deg += std::abs(zpow_) + std::abs(o.zpow_);
    auto [na, da] = num_den(*this, deg);
    auto [nb, db] = num_den(o, deg);
    return na * db == nb * da;
}

LaurentSeries FactoredRational::expand_at_zero(int order) const {
    if (is_zero()) return LaurentSeries(order);
    int n_ord = order - zpow_;
    if (n_ord < 0) return LaurentSeries(order);
    LaurentSeries lg(n_ord);
    for (const auto& [c, m] : f_) {
        Scalar cp(1);
        for (int n = 1; n <= n_ord; ++n) {
            cp *= c;
            // log(1-c*zeta) contributes -c^n/n at zeta^n
            lg.add_coeff(n, cp * Scalar(Rational(-m) / n));
        }
    }
    return lg.exp().scaled(pref_).shifted(zpow_);
}

LaurentSeries FactoredRational::expand_at_infinity(int order) const {
    // The expansion at infinity has a genuine top degree, so exponents above
    // it are exactly zero and the window can be widened for free.
    return arg_inverted().expand_at_zero(order).reversed().padded(order);
}

Scalar FactoredRational::residue_limit(const Scalar& c) const {
    if (is_zero()) return Scalar();
    const std::pair<Scalar, int>* pole = nullptr;
    for (const auto& fac : f_)
        if (fac.second < 0 && fac.first == c) pole = &fac;
    if (!pole) return Scalar();
    if (pole->second != -1)
        throw std::logic_error("residue_limit: pole is not simple");
    Scalar cinv = c.inverse();
    Scalar out = pref_ * cinv.pow(zpow_);
    for (const auto& fac : f_) {
        if (&fac == pole) continue;
        out *= (Scalar(1) - fac.first * cinv).pow(fac.second);
    }
    return out;
}

std::vector<Scalar> FactoredRational::taylor_at_point(const Scalar& c, int n) const {
    // H = R with the (1 - c*zeta) factor removed is analytic and nonzero at
    // zeta0 = 1/c (absorb() keeps pole positions distinct), so its Taylor
    // coefficients follow from H' = H * L with L the logarithmic derivative.
    FactoredRational H;
    H.pref_ = pref_;
    H.zpow_ = zpow_;
    for (const auto& [cf, m] : f_)
        if (!(cf == c)) H.f_.emplace_back(cf, m);
    Scalar zeta0 = c.inverse();

    // Derivatives of L at zeta0: L(z) = zpow/z + sum_f m_f (-c_f)/(1 - c_f z).
    std::vector<Scalar> L(n > 0 ? n : 1);
    Rational fact(1);
    for (int t = 0; t < static_cast<int>(L.size()); ++t) {
        if (t > 0) fact *= t;
        Scalar v = Scalar(zpow_) * Scalar(Rational((t % 2) ? -1 : 1) * fact) *
                   zeta0.inverse().pow(t + 1);
        for (const auto& [cf, m] : H.f_) {
            Scalar u = Scalar(1) - cf * zeta0;
            v += Scalar(m) * (-cf) * cf.pow(t) * Scalar(fact) * u.inverse().pow(t + 1);
        }
        L[t] = v;
    }

    // D_t = H^{(t)}(zeta0) via D_t = sum_s C(t-1,s) D_s L^{(t-1-s)}.
    std::vector<Scalar> D(n + 1);
    D[0] = H.evaluate(zeta0);
    std::vector<Rational> binom{Rational(1)};
    for (int t = 1; t <= n; ++t) {
        Scalar acc;
        for (int s = 0; s < t; ++s) acc += Scalar(binom[s]) * D[s] * L[t - 1 - s];
        D[t] = acc;
        binom.push_back(Rational(1));
        for (int s = t - 1; s >= 1; --s) binom[s] += binom[s - 1];
    }

    // h_t = D_t (-1/c)^t / t!
    std::vector<Scalar> h(n + 1);
    Scalar cinv_pow(1);
    Rational tfact(1);
    for (int t = 0; t <= n; ++t) {
        if (t > 0) {
            cinv_pow *= -zeta0;
            tfact *= t;
        }
        h[t] = D[t] * cinv_pow * Scalar(Rational(1) / tfact);
    }
    return h;
}

DeltaExpansion FactoredRational::delta_decompose() const {
    DeltaExpansion out;
    if (is_zero()) return out;
    for (const auto& [c, m] : f_) {
        if (m >= 0) continue;
        if (m != -1) throw std::logic_error("delta_decompose: pole is not simple");
        out.push_back({c, residue_limit(c)});
    }
    return out;
}

Scalar FactoredRational::evaluate(const Scalar& z0) const {
    Scalar out = pref_ * z0.pow(zpow_);
    for (const auto& [c, m] : f_) out *= (Scalar(1) - c * z0).pow(m);
    return out;
}

std::string FactoredRational::to_string() const {
    std::ostringstream os;
    os << "[" << pref_.to_string() << "]";
    if (zpow_ != 0) os << " * z^" << zpow_;
    for (const auto& [c, m] : f_) {
        os << " * (1 - (" << c.to_string() << ")*z)";
        if (m != 1) os << "^" << m;
    }
    return os.str();
}

}  // namespace wqt
