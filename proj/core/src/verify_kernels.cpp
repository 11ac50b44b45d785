#include "wqt/structure.hpp"
#include "wqt/verify.hpp"

namespace wqt {

// f_{1,1}(zeta) * phi_{Lambda_k, Lambda_l}(zeta) collapses to the rational
// kernel pair_kernel(k,l).  Verified along two independent routes: the log
// coefficients mode by mode up to N, and a direct series expansion of the
// exponential against the factored kernel up to exp_order.
Report verify_kernels(const CaseParams& P, int N, int exp_order) {
    Report rep(std::string("kernels/") + case_name(P.which()));

    const int M = std::max(N, exp_order);
    std::vector<Scalar> f11(M + 1);
    for (int m = 1; m <= M; ++m) f11[m] = f_log_coeff(P, 1, 1, m).canonical();

    for (int k = 1; k <= 3; ++k)
        for (int l = 1; l <= 3; ++l) {
            std::string tag = "K" + std::to_string(k) + std::to_string(l);
            FactoredRational K = pair_kernel(P, k, l);
            rep.add(tag + ":shape", K.pref() == Scalar(1) && K.zpow() == 0,
                    K.to_string());

            std::vector<Scalar> lg(M + 1);
            for (int m = 1; m <= M; ++m)
                lg[m] = (f11[m] + phi_LL_log(P, k, l, m)).canonical();

            // Route 1: log coefficients.  log prod (1-c_f zeta)^{mu_f} has
            // coefficient -(1/m) sum_f mu_f c_f^m at zeta^m.
            bool modes = true;
            for (int m = 1; m <= N && modes; ++m) {
                Scalar rhs;
                for (const auto& [c, mult] : K.factors())
                    rhs -= Scalar(mult) * c.pow(m);
                modes = (lg[m] * Scalar(m) == rhs);
            }
            rep.add(tag + ":modes", modes);

            // Route 2: exponentiate the truncated log series directly.
            LaurentSeries logser(exp_order);
            for (int m = 1; m <= exp_order; ++m) logser.set_coeff(m, lg[m]);
            rep.add(tag + ":series", logser.exp() == K.expand_at_zero(exp_order));
        }
    return rep;
}

}  // namespace wqt
