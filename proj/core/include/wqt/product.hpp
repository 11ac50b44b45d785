#pragma once

#include "wqt/currents.hpp"
#include "wqt/structure.hpp"

namespace wqt {

/// One pattern of the structure-function-dressed operator product
/// f_{i,j}(z2/z1) T_i(z1) T_j(z2): the weight, the two monomials (arguments
/// relative to z1 and z2 respectively), and the exact rational function R
/// multiplying the normal-ordered pattern, in zeta = z2/z1.
struct PatternTerm {
    Scalar weight;
    Monomial a, b;
    FactoredRational R;
};

/// The Delta_1-inverse prefactor of the fused structure function: the part
/// of f_{i,j} left over after one f_{1,1} factor is matched to every
/// generator pair.
FactoredRational product_prefactor(int i, int j);

/// Expand f_{i,j}(z2/z1) T_i(z1) T_j(z2) into patterns with exact rational
/// coefficient functions.  Requires the currents' monomials to sit on the
/// standard shift grids (checked).
std::vector<PatternTerm> current_product(const CaseParams& P, const Current& A,
                                         const Current& B);

/// Currents T_0..T_imax generated from T_1 by the algebra itself: T_{i+1} is
/// the residue of f_{1,i} T_1 T_i at the delta(x^{-(i+1)} z2/z1) pole, over
/// c(r,x).  This is the inductive definition behind the quadratic relations;
/// the closed-form build_T tables are checked against it.
std::vector<Current> derive_tower(const CaseParams& P, int imax);

}  // namespace wqt
