#pragma once

#include "wqt/scalar.hpp"

namespace wqt {

/// Coefficient of zeta^m (m != 0) in log Theta_p(a*zeta), where
/// Theta_p(w) = prod_{i>=0} (1 - p^i w)(1 - p^{i+1}/w), with nome p = x^p_exp
/// and argument prefactor a = x^a_exp.
Scalar theta_log_coeff(const ExponentFn& p_exp, const ExponentFn& a_exp, int m);

/// Coefficient of zeta^m in log[ Theta_p(a*zeta) / Theta_p(a/zeta) ].
Scalar theta_ratio_log_coeff(const ExponentFn& p_exp, const ExponentFn& a_exp,
                             int m);

}  // namespace wqt
