#include "wqt/structure.hpp"
#include "wqt/verify.hpp"

namespace wqt {

namespace {

// Coefficient of zeta^m in log of a factored rational with no zeta power.
Scalar log_coeff(const FactoredRational& K, int m) {
    Scalar acc;
    for (const auto& [c, mult] : K.factors()) acc -= Scalar(mult) * c.pow(m);
    return acc / Scalar(m);
}

Scalar xm(int e, int m) { return Scalar::x_pow(ExponentFn(e) * m); }

}  // namespace

Report verify_fusion_f(const CaseParams& P, int imax, int N) {
    Report rep(std::string("fusion-f/") + case_name(P.which()));

    std::map<std::tuple<int, int, int>, Scalar> fcache;
    auto f_log = [&](int i, int j, int m) -> const Scalar& {
        auto it = fcache.find({i, j, m});
        if (it == fcache.end())
            it = fcache.emplace(std::tuple{i, j, m}, f_log_coeff(P, i, j, m).canonical())
                     .first;
        return it->second;
    };

    std::vector<Scalar> d1(N + 1), d2(N + 1);
    for (int m = 1; m <= N; ++m) {
        d1[m] = log_coeff(delta_rational(1), m);
        d2[m] = log_coeff(delta_rational(2), m);
    }

    // f_{i,j} = f_{j,i} = prod_{k=1}^i f_{1,j}(x^{-i-1+2k} zeta), i <= j.
    for (int i = 1; i <= imax; ++i)
        for (int j = i; j <= imax; ++j) {
            bool sym = true, prod = true;
            for (int m = 1; m <= N && (sym || prod); ++m) {
                Scalar fij = f_log(i, j, m);
                sym = sym && (fij == f_log(j, i, m));
                Scalar acc;
                for (int k = 1; k <= i; ++k)
                    acc += f_log(1, j, m) * xm(-i - 1 + 2 * k, m);
                prod = prod && (fij == acc);
            }
            std::string ij = std::to_string(i) + "," + std::to_string(j);
            rep.add("fusion0:sym(" + ij + ")", sym);
            rep.add("fusion0:prod(" + ij + ")", prod);
        }

    // f_{1,i} = (prod Delta_1(x^{-i+2k} zeta))^{-1} prod f_{1,1}(x^{-i-1+2k} zeta).
    for (int i = 2; i <= imax; ++i) {
        bool ok = true;
        for (int m = 1; m <= N && ok; ++m) {
            Scalar acc;
            for (int k = 1; k <= i; ++k)
                acc += f_log(1, 1, m) * xm(-i - 1 + 2 * k, m);
            for (int k = 1; k <= i - 1; ++k) acc -= d1[m] * xm(-i + 2 * k, m);
            ok = (f_log(1, i, m) == acc);
        }
        rep.add("fusion5(i=" + std::to_string(i) + ")", ok);
    }

    // f_{1,i}(zeta) f_{1,j}(x^{+-(i+j)} zeta) =
    //   f_{1,i+j}(x^{+-j} zeta) Delta_1(x^{+-i} zeta).
    for (int i = 1; i <= imax; ++i)
        for (int j = 1; i + j <= imax; ++j)
            for (int sg : {1, -1}) {
                bool ok = true;
                for (int m = 1; m <= N && ok; ++m) {
                    Scalar lhs = f_log(1, i, m) +
                                 f_log(1, j, m) * xm(sg * (i + j), m);
                    Scalar rhs = f_log(1, i + j, m) * xm(sg * j, m) +
                                 d1[m] * xm(sg * i, m);
                    ok = (lhs == rhs);
                }
                rep.add("fusion2(" + std::to_string(i) + "," + std::to_string(j) +
                            (sg > 0 ? ",+)" : ",-)"),
                        ok);
            }

    // Delta_{i+1} = (prod Delta_1(x^{-i+2k}))^{-1} prod Delta_2(x^{-i-1+2k}),
    // checked exactly as rational functions.
    for (int i = 2; i + 1 <= imax + 1; ++i) {
        FactoredRational rhs;
        for (int k = 1; k <= i; ++k)
            rhs *= delta_rational(2).arg_scaled(xm(-i - 1 + 2 * k, 1));
        for (int k = 1; k <= i - 1; ++k)
            rhs = rhs / delta_rational(1).arg_scaled(xm(-i + 2 * k, 1));
        rep.add("fusion4(i=" + std::to_string(i) + ")", delta_rational(i + 1) == rhs);
    }

    return rep;
}

}  // namespace wqt
