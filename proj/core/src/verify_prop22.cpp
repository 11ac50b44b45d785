#include "wqt/contraction.hpp"
#include "wqt/theta.hpp"
#include "wqt/verify.hpp"

namespace wqt {

// Lambda_k(z1) Lambda_l(z2) = -zeta * T3(zeta) * Lambda_l(z2) Lambda_k(z1),
// zeta = z2/z1, where T3 is the product of three theta ratios with nome
// x^{2s}: arguments x^2, x^{2s-2r}, x^{2s+2r-2}.  The free-field exchange
// factor is phi_{k,l}(zeta)/phi_{l,k}(1/zeta) (the zero modes commute), so
// the correction, handled exactly like the screening exchange, must
// recombine to -zeta.
Report verify_prop22(const CaseParams& P, int N) {
    Report rep(std::string("prop22/") + case_name(P.which()));
    const ExponentFn R = ExponentFn::r();
    const ExponentFn s = P.s_param();
    const ExponentFn nome = s * 2;
    const ExponentFn args[3] = {ExponentFn(2), s * 2 - R * 2, s * 2 + R * 2 - ExponentFn(2)};

    for (int k = 1; k <= 3; ++k)
        for (int l = k; l <= 3; ++l) {
            std::string tag = "L" + std::to_string(k) + "L" + std::to_string(l);
            auto dlog = [&](int m) {
                Scalar t;
                for (const auto& a : args) t += theta_ratio_log_coeff(nome, a, m);
                if (m > 0) return phi_LL_log(P, k, l, m) - t;
                return -phi_LL_log(P, l, k, -m) - t;
            };

            bool sides_ok = true;
            FactoredRational corr;
            for (int side : {1, -1}) {
                std::string stag = tag + (side > 0 ? ":zeta" : ":inv");
                Scalar first = dlog(side).canonical();
                if (!first.den().empty()) {
                    rep.add(stag, false,
                            "mode-1 correction is not polynomial: " + first.to_string());
                    sides_ok = false;
                    continue;
                }
                FactoredRational half;
                bool integral = true;
                for (const auto& [alpha, coeff] : first.num().term_map()) {
                    if (denominator(coeff) != 1) {
                        integral = false;
                        break;
                    }
                    half *= FactoredRational::factor(Scalar::x_pow(alpha),
                                                     -static_cast<int>(numerator(coeff)));
                }
                if (!integral) {
                    rep.add(stag, false,
                            "non-integral factor multiplicity: " + first.to_string());
                    sides_ok = false;
                    continue;
                }
                bool all = true;
                for (int m = 2; m <= N && all; ++m) {
                    Scalar lhs = dlog(side * m) * Scalar(m);
                    Scalar want;
                    for (const auto& [alpha, coeff] : first.num().term_map())
                        want += Scalar(Rational(coeff)) * Scalar::x_pow(alpha * m);
                    all = (lhs == want);
                }
                rep.add(stag + ":modes", all);
                if (!all) sides_ok = false;
                corr *= (side > 0) ? half : half.arg_inverted();
            }
            if (!sides_ok) continue;

            FactoredRational want(Scalar(-1));
            want *= FactoredRational::zeta_pow(1);
            rep.add(tag + ":rational", corr == want,
                    corr == want ? "" : corr.to_string() + " vs " + want.to_string());
        }
    return rep;
}

}  // namespace wqt
