#include "wqt/series.hpp"

#include <stdexcept>

namespace wqt {

LaurentSeries LaurentSeries::one(int order) {
    LaurentSeries s(order);
    s.set_coeff(0, Scalar(1));
    return s;
}

int LaurentSeries::lo() const {
    return c_.empty() ? order_ + 1 : c_.begin()->first;
}

Scalar LaurentSeries::coeff(int n) const {
    if (n > order_) throw std::logic_error("coefficient beyond truncation order");
    auto it = c_.find(n);
    return it == c_.end() ? Scalar() : it->second;
}

void LaurentSeries::set_coeff(int n, Scalar v) {
    if (n > order_) return;
    if (v.is_zero())
        c_.erase(n);
    else
        c_[n] = std::move(v);
}

void LaurentSeries::add_coeff(int n, const Scalar& v) {
    if (n > order_ || v.is_zero()) return;
    auto it = c_.find(n);
    if (it == c_.end()) {
        c_.emplace(n, v);
    } else {
        it->second += v;
        if (it->second.is_zero()) c_.erase(it);
    }
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
    LaurentSeries out(std::min(order_, o.order_));
    for (const auto& [n, v] : c_) out.add_coeff(n, v);
    for (const auto& [n, v] : o.c_) out.add_coeff(n, v);
    return out;
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const {
    LaurentSeries out(std::min(order_, o.order_));
    for (const auto& [n, v] : c_) out.add_coeff(n, v);
    for (const auto& [n, v] : o.c_) out.add_coeff(n, -v);
    return out;
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
    // Coefficient n of the product is exact only while every contributing
    // pair sits inside both truncation windows.
    LaurentSeries out(std::min(order_ + o.lo(), o.order_ + lo()));
    for (const auto& [n1, v1] : c_)
        for (const auto& [n2, v2] : o.c_) {
            if (n1 + n2 > out.order_) continue;
            out.add_coeff(n1 + n2, v1 * v2);
        }
    return out;
}

LaurentSeries LaurentSeries::scaled(const Scalar& k) const {
    LaurentSeries out(order_);
    for (const auto& [n, v] : c_) out.set_coeff(n, v * k);
    return out;
}

LaurentSeries LaurentSeries::shifted(int k) const {
    LaurentSeries out(order_ + k);
    for (const auto& [n, v] : c_) out.set_coeff(n + k, v);
    return out;
}

LaurentSeries LaurentSeries::arg_scaled(const Scalar& c) const {
    LaurentSeries out(order_);
    for (const auto& [n, v] : c_) out.set_coeff(n, v * c.pow(n));
    return out;
}

LaurentSeries LaurentSeries::reversed() const {
    LaurentSeries out(-lo());
    for (const auto& [n, v] : c_)
        if (-n <= out.order_) out.set_coeff(-n, v);
    return out;
}

LaurentSeries LaurentSeries::padded(int order) const {
    LaurentSeries out = *this;
    out.order_ = std::max(order_, order);
    return out;
}

LaurentSeries LaurentSeries::exp() const {
    if (!c_.empty() && c_.begin()->first < 1)
        throw std::logic_error("exp: series has terms below degree 1");
    LaurentSeries out(order_);
    std::vector<Scalar> e(order_ + 1);
    e[0] = Scalar(1);
    // n*E_n = sum_{k=1..n} k*S_k*E_{n-k}
    for (int n = 1; n <= order_; ++n) {
        Scalar acc;
        for (const auto& [k, sk] : c_) {
            if (k > n) break;
            acc += Scalar(k) * sk * e[n - k];
        }
        e[n] = acc / Scalar(n);
    }
    for (int n = 0; n <= order_; ++n) out.set_coeff(n, e[n]);
    return out;
}

LaurentSeries LaurentSeries::log() const {
    if (!(coeff(0) == Scalar(1)) || lo() < 0)
        throw std::logic_error("log: series must start at 1");
    LaurentSeries out(order_);
    std::vector<Scalar> s(order_ + 1);
    // n*S_n = n*E_n - sum_{k=1..n-1} k*S_k*E_{n-k}
    for (int n = 1; n <= order_; ++n) {
        Scalar acc = Scalar(n) * coeff(n);
        for (int k = 1; k < n; ++k) {
            if (s[k].is_zero()) continue;
            acc -= Scalar(k) * s[k] * coeff(n - k);
        }
        s[n] = acc / Scalar(n);
        out.set_coeff(n, s[n]);
    }
    return out;
}

bool LaurentSeries::operator==(const LaurentSeries& o) const {
    int top = std::min(order_, o.order_);
    for (const auto& [n, v] : c_)
        if (n <= top && !(coeff(n) == o.coeff(n))) return false;
    for (const auto& [n, v] : o.c_)
        if (n <= top && !(coeff(n) == o.coeff(n))) return false;
    return true;
}

}  // namespace wqt
