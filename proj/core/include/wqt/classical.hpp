#pragma once

#include "wqt/report.hpp"
#include "wqt/scalar.hpp"

namespace wqt {

/// Numeric ladder for the q-Poisson limit: r = 1/(1-beta), x = q0^{1/(2r)},
/// beta -> 0 with q0 fixed.
struct PBParams {
    double q0 = 4.0;
    std::vector<double> betas = {1e-2, 1e-3, 1e-4};
    int N = 6;          // mode range for the structure-function expansion
    int max_grade = 3;  // (i, j) up to this grade
};

/// m-th structure-function coefficient of the q-Poisson bracket,
///   [Min(i,j)m/2]_q [(Max(i,j)/2 - 1)m]_q / [m]_q,
/// as an exact Scalar with the formal variable read as q.
Scalar poisson_coeff(int i, int j, int m);

/// Exact properties of poisson_coeff plus the numeric beta ladder: c(r,x)
/// approaches -beta log q and the first beta-order of f_{i,j} matches the
/// Poisson coefficients, with residuals decaying at the expected rates.
Report verify_classical_limit(const PBParams& p);

}  // namespace wqt
