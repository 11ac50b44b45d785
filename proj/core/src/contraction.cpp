#include "wqt/contraction.hpp"

#include <stdexcept>

namespace wqt {

Scalar phi_LS_log(const CaseParams& P, int i, int j, int m) {
    Scalar acc;
    for (int k = 1; k <= 2; ++k)
        acc += P.lam(i, k, m) * P.A(k, j, m) * P.s(j, -m);
    return acc / Scalar(m);
}

Scalar phi_SL_log(const CaseParams& P, int j, int i, int m) {
    Scalar acc;
    for (int k = 1; k <= 2; ++k)
        acc += P.s(j, m) * P.A(j, k, m) * P.lam(i, k, -m);
    return acc / Scalar(m);
}

Scalar phi_SS_log(const CaseParams& P, int k, int l, int m) {
    return P.s(k, m) * P.A(k, l, m) * P.s(l, -m) / Scalar(m);
}

Scalar phi_LL_log(const CaseParams& P, int k, int l, int m) {
    Scalar acc;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            acc += P.lam(k, i, m) * P.A(i, j, m) * P.lam(l, j, -m);
    return acc / Scalar(m);
}

ExponentFn phi_LS_zero_exp(const CaseParams& P, int i, int j) {
    ExponentFn acc;
    for (int k = 1; k <= 2; ++k) acc = acc + P.lam0(i, k) * P.A0(k, j);
    return acc;
}

FactoredRational delta_rational(int i) {
    const ExponentFn R = ExponentFn::r();
    auto xs = [](const ExponentFn& e) { return Scalar::x_pow(e); };
    return FactoredRational::factor(xs(R * 2 - ExponentFn(i))) *
           FactoredRational::factor(xs(-(R * 2) + ExponentFn(i))) *
           FactoredRational::factor(xs(ExponentFn(i)), -1) *
           FactoredRational::factor(xs(ExponentFn(-i)), -1);
}

bool diagonal_has_delta2(CaseId c, int k) {
    if (k == 2) return c == CaseId::C3;
    if (k == 3) return c == CaseId::C2;
    return false;
}

FactoredRational pair_kernel(const CaseParams& P, int k, int l) {
    if (k < l) return delta_rational(1).arg_scaled(Scalar::x_pow(ExponentFn(-1)));
    if (k > l) return delta_rational(1).arg_scaled(Scalar::x_pow(ExponentFn(1)));
    if (diagonal_has_delta2(P.which(), k)) return delta_rational(2);
    return FactoredRational();  // 1
}

}  // namespace wqt
