#include "wqt/structure.hpp"

namespace wqt {

Scalar f_log_coeff(const CaseParams& P, int i, int j, int m) {
    const ExponentFn R = ExponentFn::r();
    ExponentFn s = P.s_param();
    int mn = std::min(i, j), mx = std::max(i, j);
    if (mn == 0) return Scalar();
    Sum xm;
    xm.add_term(ExponentFn(1), Rational(1));
    xm.add_term(ExponentFn(-1), Rational(-1));
    Scalar num = Scalar::qint((R - ExponentFn(1)) * m) * Scalar::qint(R * m) *
                 Scalar::qint(ExponentFn(mn) * m) *
                 Scalar::qint((s - ExponentFn(mx)) * m) * Scalar(xm) * Scalar(xm);
    Scalar den = Scalar::qint(ExponentFn(m)) * Scalar::qint(s * m);
    return -(num / den) / Scalar(m);
}

LaurentSeries f_series(const CaseParams& P, int i, int j, int order) {
    LaurentSeries lg(order);
    for (int m = 1; m <= order; ++m) lg.set_coeff(m, f_log_coeff(P, i, j, m));
    return lg.exp();
}

Scalar delta_value(int i, int e) {
    return delta_rational(i).evaluate(Scalar::x_pow(ExponentFn(e)));
}

}  // namespace wqt
