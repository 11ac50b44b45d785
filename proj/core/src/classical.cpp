#include "wqt/classical.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wqt/currents.hpp"
#include "wqt/structure.hpp"

namespace wqt {

Scalar poisson_coeff(int i, int j, int m) {
    Rational half(1, 2);
    ExponentFn a(Rational(std::min(i, j)) * half * m);
    ExponentFn b((Rational(std::max(i, j)) * half - 1) * m);
    return Scalar::qint(a) * Scalar::qint(b) / Scalar::qint(ExponentFn(m));
}

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

// Least-squares slope of log(residual) against log(beta).
double fitted_order(const std::vector<double>& betas,
                    const std::vector<Float>& res) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (size_t k = 0; k < betas.size(); ++k) {
        if (res[k] <= 0) continue;  // exact zero: better than any power law
        double lx = std::log(betas[k]);
        double ly = static_cast<double>(log(res[k]));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++n;
    }
    if (n < 2) return 1e9;
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

Report verify_classical_limit(const PBParams& p) {
    Report rep("classical-limit");
    const double K = 10.0;

    // Exact structure of the Poisson coefficients.
    {
        bool anti = true, sym = true, c2 = true, c11 = true;
        for (int m = 1; m <= 6; ++m) {
            for (int i = 1; i <= p.max_grade; ++i)
                for (int j = 1; j <= p.max_grade; ++j) {
                    anti = anti &&
                           poisson_coeff(i, j, -m) == -poisson_coeff(i, j, m);
                    sym = sym && poisson_coeff(i, j, m) == poisson_coeff(j, i, m);
                }
            for (int i = 1; i <= 2; ++i)
                c2 = c2 && poisson_coeff(i, 2, m).is_zero();
            c11 = c11 &&
                  poisson_coeff(1, 1, m) ==
                      -Scalar::qint(ExponentFn(Rational(m, 2))).pow(2) /
                          Scalar::qint(ExponentFn(m));
        }
        rep.add("poisson/antisymmetry-in-m", anti);
        rep.add("poisson/symmetry-in-ij", sym);
        rep.add("poisson/C-i2-vanishes", c2);
        rep.add("poisson/C11-closed-form", c11);
    }

    CaseParams P(CaseId::C2);  // sl(2|1) structure functions
    Float q0(p.q0);
    Float logq = log(q0);
    Float qfac = q0 - 1 / q0;

    // c(r,x) = [r][r-1](x - x^-1) -> +beta log q.  (The classical-limit
    // section prints a minus sign here, which contradicts the definition it
    // uses everywhere else: [r] -> 1, [r-1](x - x^-1) -> 2(r-1) log x =
    // +beta log q.  The quadratic relations fix the sign to +.)
    std::vector<Float> cres;
    for (double beta : p.betas) {
        Float b(beta);
        Float r0 = 1 / (1 - b);
        Float x0 = exp(logq / (2 * r0));
        Float ratio = c_coeff().eval_f(x0, r0) / (b * logq);
        Float res = abs(ratio - 1);
        cres.push_back(res);
        rep.add("c-ratio/beta=" + fmt(beta), res <= K * b,
                "residual " + fmt(static_cast<double>(res)));
    }
    {
        double ord = fitted_order(p.betas, cres);
        rep.add("c-ratio/order", ord >= 0.9, "fitted " + fmt(ord));
    }

    // First beta-order of f_{i,j} against the Poisson coefficients.
    for (int i = 1; i <= p.max_grade; ++i)
        for (int j = i; j <= p.max_grade; ++j) {
            std::string ij = std::to_string(i) + "," + std::to_string(j);
            std::vector<Float> worst(p.betas.size(), Float(0));
            bool ok = true;
            std::string witness;
            LaurentSeries f = f_series(P, i, j, p.N);
            for (size_t k = 0; k < p.betas.size(); ++k) {
                Float b(p.betas[k]);
                Float r0 = 1 / (1 - b);
                Float x0 = exp(logq / (2 * r0));
                for (int m = 1; m <= p.N; ++m) {
                    Float fm = f.coeff(m).eval_f(x0, r0);
                    Float target =
                        b * logq * poisson_coeff(i, j, m).eval_f(q0, Float(2)) *
                        qfac;
                    // Coefficients grow like q^m; the beta^2 tolerance is
                    // relative to that scale.
                    Float res = abs(fm - target) / pow(q0, m + 2);
                    worst[k] = std::max(worst[k], res);
                    if (res > K * b * b) {
                        ok = false;
                        witness = "m=" + std::to_string(m) + " beta=" +
                                  fmt(p.betas[k]) + " residual " +
                                  fmt(static_cast<double>(res));
                    }
                }
            }
            rep.add("f-first-order/" + ij, ok, witness);
            double ord = fitted_order(p.betas, worst);
            rep.add("f-order/" + ij, ord >= 1.8, "fitted " + fmt(ord));
        }
    return rep;
}

}  // namespace wqt
