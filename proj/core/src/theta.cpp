#include "wqt/theta.hpp"

#include <stdexcept>

namespace wqt {

Scalar theta_log_coeff(const ExponentFn& p_exp, const ExponentFn& a_exp, int m) {
    if (m == 0) throw std::logic_error("theta_log_coeff: m must be nonzero");
    // m > 0: sum_i -(p^i a)^m / m = -a^m / (m (1 - p^m))
    // m < 0 (n = -m): sum_i -(p^{i+1}/a)^n / n = -(p/a)^n p^0.. = -x^{(p-a)n}/(n(1-p^n))
    long n = m > 0 ? m : -m;
    ExponentFn top = m > 0 ? a_exp * n : (p_exp - a_exp) * n;
    Scalar den = Scalar(1) - Scalar::x_pow(p_exp * n);
    return Scalar(Sum::monomial(Rational(-1, n), top)) / den;
}

Scalar theta_ratio_log_coeff(const ExponentFn& p_exp, const ExponentFn& a_exp,
                             int m) {
    // log Theta_p(a/zeta) at zeta^m equals log Theta_p(a*w) at w^{-m}.
    return theta_log_coeff(p_exp, a_exp, m) - theta_log_coeff(p_exp, a_exp, -m);
}

}  // namespace wqt
