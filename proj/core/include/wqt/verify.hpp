#pragma once

#include "wqt/params.hpp"
#include "wqt/report.hpp"

namespace wqt {

/// Locality, q-difference and symmetry conditions on the parameter tables
/// (Theorem-level uniqueness data).  N bounds the oscillator mode range.
Report verify_theorem21(const CaseParams& P, int N);

/// Screening-current exchange relations: theta-function quotients for the
/// bosonic pairs, fermionic anticommutation for the rest.
Report verify_screening(const CaseParams& P, int N);

/// Lambda-Lambda exchange relation (elliptic kernel ratio).
Report verify_prop22(const CaseParams& P, int N);

/// Pairwise normal-ordering kernels f_{1,1}*phi_{Lambda Lambda} as rational
/// functions, checked along two independent routes (log coefficients up to
/// N and a direct low-order expansion up to exp_order).
Report verify_kernels(const CaseParams& P, int N, int exp_order);

/// Fusion relations of Delta_i and f_{i,j} (log-coefficient level).
Report verify_fusion_f(const CaseParams& P, int imax, int N);

/// Quadratic relation for the pair (i, j), i <= j: exact delta-function
/// decomposition of both sides, matched pattern by pattern.
Report verify_quadratic(const CaseParams& P, int i, int j);

/// Brute-force series cross-check of the quadratic relations for small
/// grades (i + j <= ijmax) in a window of size `order`.
Report verify_cross_check(const CaseParams& P, int ijmax, int order);

/// Cases 2 and 3 produce identical quadratic-relation data after the
/// generator relabeling (1,2,3) -> (3,1,2).
Report verify_dynkin(int imax, int jmax);

/// Fusion of W-currents (residue at zeta = x^{+-(i+j)}).
Report verify_fusion_T(const CaseParams& P, int imax);

/// Exchange symmetry R_ab(zeta) = R~_ba(zeta) of the dressed products and
/// their delta decompositions.
Report verify_exchange_T(const CaseParams& P, int imax);

/// Case-1 truncation: the full column equals the identity operator and
/// higher currents vanish.
Report verify_truncation(int N);

}  // namespace wqt
