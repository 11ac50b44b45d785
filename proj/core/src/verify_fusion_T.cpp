#include <algorithm>
#include <map>
#include <stdexcept>

#include "wqt/product.hpp"
#include "wqt/structure.hpp"
#include "wqt/verify.hpp"

namespace wqt {

namespace {

Monomial pinned(const Monomial& a, int e, const Monomial& b) {
    Monomial out = a.shifted(e);
    for (const auto& p : b.parts) out.parts.push_back(p);
    std::sort(out.parts.begin(), out.parts.end());
    return out;
}

}  // namespace

// Fusion of W-currents: the simple pole of f_{i,j} T_i T_j at
// z1 = x^{+-(i+j)} z2 has residue proportional to T_{i+j}, with coefficient
// -+ c(r,x) prod_{k<Min(i,j)} Delta_1(x^{2k+1}).  Checked as an operator
// identity (per oscillator content) for every ordered pair with
// i + j <= imax, plus the per-pattern fusion table rows for cases 2/3.
Report verify_fusion_T(const CaseParams& P, int imax) {
    Report rep(std::string("fusion-T/") + case_name(P.which()));

    std::vector<Current> T;
    for (int n = 0; n <= imax; ++n) T.push_back(build_T(P, n));

    for (int i = 1; i < imax; ++i)
        for (int j = 1; i + j <= imax; ++j)
            for (int sg : {1, -1}) {
                std::string name = "lemma/T" + std::to_string(i) + "T" +
                                   std::to_string(j) +
                                   (sg > 0 ? "/+" : "/-");
                std::map<OpContent, Scalar> acc;
                try {
                    for (const auto& t : current_product(P, T[i], T[j])) {
                        Scalar res = t.R.residue_limit(
                            Scalar::x_pow(ExponentFn(sg * (i + j))));
                        if (res.is_zero()) continue;
                        acc[op_content(P, pinned(t.a, sg * (i + j), t.b))] +=
                            t.weight * res;
                    }
                } catch (const std::exception& ex) {
                    rep.add(name, false, ex.what());
                    continue;
                }
                Scalar coef = -Scalar(sg) * c_coeff();
                for (int k = 1; k < std::min(i, j); ++k)
                    coef *= delta_value(1, 2 * k + 1);
                for (const auto& t : T[i + j].shifted(sg * i).terms)
                    acc[op_content(P, t.mono)] -= coef * t.weight;
                bool ok = true;
                for (const auto& [k, v] : acc) ok = ok && v.is_zero();
                rep.add(name, ok);
            }

    // The chain form: T_i as the residue of f_{i-1,1} T_{i-1}(w) T_1(x^{i-1}z)
    // at w = x^{-1}z, over c(r,x).
    for (int i = 2; i <= imax; ++i) {
        std::string name = "chain/T" + std::to_string(i);
        std::map<OpContent, Scalar> acc;
        try {
            for (const auto& t : current_product(P, T[i - 1], T[1])) {
                Scalar res =
                    t.R.residue_limit(Scalar::x_pow(ExponentFn(-i)));
                if (res.is_zero()) continue;
                // z1 = w = x^{-1}z, z2 = x^{i-1}z.
                acc[op_content(P, pinned(t.a, -i, t.b).shifted(i - 1))] +=
                    t.weight * res;
            }
        } catch (const std::exception& ex) {
            rep.add(name, false, ex.what());
            continue;
        }
        for (const auto& t : T[i].terms)
            acc[op_content(P, t.mono)] -= c_coeff() * t.weight;
        bool ok = true;
        for (const auto& [k, v] : acc) ok = ok && v.is_zero();
        rep.add(name, ok);
    }

    if (P.which() == CaseId::C1) return rep;

    // Per-pattern fusion table (Appendix rows).  Every pair of columns of
    // T_i, T_j fuses at z1 = x^{sg(i+j)} z2 either into a single column of
    // T_{i+j} -- with residue -sg c(r,x) prod Delta_1 times the ratio of the
    // d-weights -- or to zero.  Checked monomial by monomial, which is
    // strictly finer than the content-level lemma check above.
    auto dprod = [&](int n) {
        Scalar out(1);
        for (int k = 1; k < n; ++k) out *= delta_value(1, 2 * k + 1);
        return out;
    };
    for (int i = 1; i < imax; ++i)
        for (int j = 1; i + j <= imax; ++j)
            for (int sg : {1, -1}) {
                std::string name = "table/T" + std::to_string(i) + "T" +
                                   std::to_string(j) +
                                   (sg > 0 ? "/+" : "/-");
                std::map<Monomial, Scalar> want;
                Scalar coef = -Scalar(sg) * c_coeff() * dprod(std::min(i, j));
                for (const auto& t : T[i + j].shifted(sg * i).terms)
                    want.emplace(t.mono, coef * t.weight);
                bool ok = true;
                std::string witness;
                try {
                    std::map<Monomial, Scalar> got;
                    for (const auto& t : current_product(P, T[i], T[j])) {
                        Scalar res = t.R.residue_limit(
                            Scalar::x_pow(ExponentFn(sg * (i + j))));
                        if (res.is_zero()) continue;
                        got[pinned(t.a, sg * (i + j), t.b)] += t.weight * res;
                    }
                    for (const auto& [m, v] : want) got[m] -= v;
                    for (const auto& [m, v] : got)
                        if (!v.is_zero()) {
                            ok = false;
                            witness = m.to_string();
                            break;
                        }
                } catch (const std::exception& ex) {
                    ok = false;
                    witness = ex.what();
                }
                rep.add(name, ok, witness);
            }
    return rep;
}

}  // namespace wqt
