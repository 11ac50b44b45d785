#pragma once

#include "wqt/contraction.hpp"
#include "wqt/series.hpp"

namespace wqt {

/// Coefficient of z^m (m >= 1) in log f_{i,j}(z):
///   -(1/m) [(r-1)m][rm][Min(i,j)m][(s-Max(i,j))m] / ([m][sm]) (x-x^{-1})^2
/// with s = 3 (case 1) or r+1 (cases 2, 3).
Scalar f_log_coeff(const CaseParams& P, int i, int j, int m);

/// f_{i,j}(z) as a truncated power series.
LaurentSeries f_series(const CaseParams& P, int i, int j, int order);

/// Delta_i evaluated at zeta = x^e.
Scalar delta_value(int i, int e);

}  // namespace wqt
