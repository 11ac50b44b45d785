#include "wqt/product.hpp"

#include <stdexcept>

namespace wqt {

namespace {

// {-i+1, -i+3, ..., i-1}
std::vector<int> grid(int i) {
    std::vector<int> g;
    for (int k = 1; k <= i; ++k) g.push_back(2 * k - i - 1);
    return g;
}

void check_on_grid(const Monomial& m, int i) {
    auto g = grid(i);
    if (m.parts.size() != g.size())
        throw std::logic_error("monomial off the standard grid");
    for (size_t k = 0; k < g.size(); ++k)
        if (m.parts[k].first != g[k])
            throw std::logic_error("monomial off the standard grid");
}

}  // namespace

FactoredRational product_prefactor(int i, int j) {
    int mn = std::min(i, j), mx = std::max(i, j);
    FactoredRational out;
    if (mn == 0) return out;
    FactoredRational d1inv = delta_rational(1).inverse();
    for (int u : grid(mn))
        for (int k = 1; k <= mx - 1; ++k) {
            int v = 2 * k - mx;
            out *= d1inv.arg_scaled(Scalar::x_pow(ExponentFn(u + v)));
        }
    return out;
}

std::vector<PatternTerm> current_product(const CaseParams& P, const Current& A,
                                         const Current& B) {
    std::vector<PatternTerm> out;
    FactoredRational pre = product_prefactor(A.grade, B.grade);
    for (const auto& ta : A.terms) {
        check_on_grid(ta.mono, A.grade);
        for (const auto& tb : B.terms) {
            check_on_grid(tb.mono, B.grade);
            FactoredRational R = pre;
            for (const auto& [alpha, ga] : ta.mono.parts)
                for (const auto& [beta, gb] : tb.mono.parts)
                    R *= pair_kernel(P, ga, gb)
                             .arg_scaled(Scalar::x_pow(ExponentFn(beta - alpha)));
            out.push_back({ta.weight * tb.weight, ta.mono, tb.mono, std::move(R)});
        }
    }
    return out;
}

std::vector<Current> derive_tower(const CaseParams& P, int imax) {
    std::vector<Current> tower;
    tower.push_back(build_T(P, 0));
    if (imax >= 1) tower.push_back(build_T(P, 1));
    Scalar cinv = c_coeff().inverse();
    for (int i = 1; i < imax; ++i) {
        // Coefficient of delta(x^{-(i+1)} z2/z1) in f_{1,i} T_1 T_i equals
        // c(r,x) T_{i+1}(x^{-1} z2); the pole is simple pattern by pattern.
        Scalar c = Scalar::x_pow(ExponentFn(-(i + 1)));
        std::map<Monomial, Scalar> acc;
        for (const auto& t : current_product(P, tower[1], tower[i])) {
            Scalar res = t.R.residue_limit(c);
            if (res.is_zero()) continue;
            Monomial m = t.a.shifted(-i);  // pinned to z2 and rescaled by x
            for (const auto& p : t.b.parts) m.parts.emplace_back(p.first + 1, p.second);
            std::sort(m.parts.begin(), m.parts.end());
            acc[m] += t.weight * res * cinv;
        }
        Current next;
        next.grade = i + 1;
        for (auto& [m, w] : acc)
            if (!w.is_zero()) next.terms.push_back({std::move(w), m});
        tower.push_back(std::move(next));
    }
    return tower;
}

}  // namespace wqt
