#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include "wqt/product.hpp"
#include "wqt/verify.hpp"

namespace wqt {

namespace {

// Coefficient of zeta^m in (iota_0 - iota_infty)(1 - c*zeta)^{-j}: the
// binomial binom(m+j-1, j-1) read as a polynomial in m, times c^m.  For j = 1
// this is the delta function, for j = 2 the N1 + delta combination.
Rational window_binom(int m, int j) {
    Rational out(1);
    for (int s = 1; s < j; ++s) out *= Rational(m + s) / Rational(s);
    return out;
}

std::optional<ExponentFn> mono_exp(const Scalar& c) {
    if (!c.den().empty() || c.num().terms() != 1) return std::nullopt;
    const auto& [e, k] = *c.num().term_map().begin();
    if (k != 1) return std::nullopt;
    return e;
}

}  // namespace

// Region independence: the commutator [T_i, T_j] is computed by the pole
// calculus of verify_quadratic from the single rational function R per
// pattern.  Here it is instead computed the pedestrian way: the product in
// one ordering expanded in z2/z1, the other ordering expanded in z1/z2, both
// to `order`, and subtracted coefficient by coefficient.  The result must
// match the sum over poles of the Taylor data pushed through the
// (1 - c*zeta)^{-k} windows, which is exactly what the delta decomposition
// aggregates.
Report verify_cross_check(const CaseParams& P, int ijmax, int order) {
    Report rep(std::string("cross-check/") + case_name(P.which()));
    std::vector<Current> tower;
    try {
        tower = derive_tower(P, ijmax - 1);
    } catch (const std::exception& ex) {
        rep.add("derived-tower", false, ex.what());
        return rep;
    }
    for (int i = 1; i <= ijmax - 1; ++i)
        for (int j = i; i + j <= ijmax; ++j) {
            auto pats = current_product(P, tower[i], tower[j]);
            std::map<std::pair<Monomial, Monomial>, FactoredRational> rev;
            for (auto& t : current_product(P, tower[j], tower[i]))
                rev.emplace(std::pair{t.a, t.b}, std::move(t.R));
            for (const auto& t : pats) {
                std::string name = "T" + std::to_string(i) + "T" +
                                   std::to_string(j) + "/" + t.a.to_string() +
                                   "|" + t.b.to_string();
                auto rit = rev.find({t.b, t.a});
                if (rit == rev.end()) {
                    rep.add(name, false, "no reverse-ordering pattern");
                    continue;
                }
                LaurentSeries lo = t.R.expand_at_zero(order);
                // Reverse ordering lives in z1/z2; its expansion around zero
                // is the expansion of this pattern around infinity.
                // Reversing puts the known window at [-order, -lo]; every
                // coefficient above -lo is exactly zero, so the window may be
                // widened to cover the comparison range.
                LaurentSeries hi = rit->second.expand_at_zero(order).reversed();
                if (hi.order() < order) hi = hi.padded(order);
                bool ok = true;
                std::string witness;
                for (int m = -order; m <= order && ok; ++m) {
                    Scalar want = lo.coeff(m) - hi.coeff(m);
                    Scalar got;
                    for (const auto& [c, mult] : t.R.factors()) {
                        if (mult >= 0) continue;
                        int k = -mult;
                        auto e = mono_exp(c);
                        if (!e) {
                            ok = false;
                            witness = "pole position not a monomial";
                            break;
                        }
                        auto h = t.R.taylor_at_point(c, k - 1);
                        Scalar cm = Scalar::x_pow(*e * m);
                        for (int tt = 0; tt < k; ++tt)
                            got += h[tt] * Scalar(window_binom(m, k - tt)) * cm;
                    }
                    if (ok && !(got == want)) {
                        ok = false;
                        witness = "m=" + std::to_string(m) + ": " +
                                  got.to_string() + " vs " + want.to_string();
                    }
                }
                rep.add(name, ok, witness);
            }
        }
    return rep;
}

}  // namespace wqt
