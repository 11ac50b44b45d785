#pragma once

#include "wqt/factored.hpp"
#include "wqt/params.hpp"

namespace wqt {

/// Log-coefficients of the vertex-operator contraction functions phi at the
/// m-th power of the expansion variable (m >= 1 throughout):
///   phi_{Lambda_i, S_j}(z,w)   in powers of w/z,
///   phi_{S_j, Lambda_i}(w,z)   in powers of z/w,
///   phi_{~S_k, ~S_l}(w1,w2)    in powers of w2/w1,
///   phi_{Lambda_k, Lambda_l}(z1,z2) in powers of z2/z1.
Scalar phi_LS_log(const CaseParams& P, int i, int j, int m);
Scalar phi_SL_log(const CaseParams& P, int j, int i, int m);
Scalar phi_SS_log(const CaseParams& P, int k, int l, int m);
Scalar phi_LL_log(const CaseParams& P, int k, int l, int m);

/// Zero-mode exponent of phi_{Lambda_i, S_j}: the prefactor is x^(this).
ExponentFn phi_LS_zero_exp(const CaseParams& P, int i, int j);

/// Delta_i(zeta) = (1-x^{2r-i} zeta)(1-x^{-2r+i} zeta) /
///                 ((1-x^i zeta)(1-x^{-i} zeta)).
FactoredRational delta_rational(int i);

/// Pairwise contraction kernel of Prop-style normal ordering:
/// f_{1,1}(zeta) * phi_{Lambda_k, Lambda_l}(zeta) as an exact rational
/// function: Delta_1(x^{-1} zeta) for k<l, Delta_1(x zeta) for k>l, 1 for
/// k=l=1, and Delta_2(zeta) or 1 on the diagonal depending on the case.
FactoredRational pair_kernel(const CaseParams& P, int k, int l);

/// True when the (k,k) diagonal kernel is Delta_2(zeta) for this case.
bool diagonal_has_delta2(CaseId c, int k);

}  // namespace wqt
