#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

#include "wqt/product.hpp"
#include "wqt/verify.hpp"

namespace wqt {

namespace {

Monomial pinned(const Monomial& a, int e, const Monomial& b) {
    Monomial out = a.shifted(e);
    for (const auto& p : b.parts) out.parts.push_back(p);
    std::sort(out.parts.begin(), out.parts.end());
    return out;
}

std::optional<ExponentFn> mono_exp(const Scalar& c) {
    if (!c.den().empty() || c.num().terms() != 1) return std::nullopt;
    const auto& [e, k] = *c.num().term_map().begin();
    if (k != 1) return std::nullopt;
    return e;
}

// Canonical shape of a pinned monomial: keep the shift multiset, reassign the
// label multiset in increasing order along the grid.  Both cases write their
// currents with labels increasing along the shift grid, so corresponding
// patterns agree in this shape even though the relabeling alone reverses the
// order of the isolated generators.
Monomial canon(Monomial m) {
    std::vector<int> labels;
    for (const auto& [sh, g] : m.parts) labels.push_back(g);
    std::sort(labels.begin(), labels.end());
    for (size_t k = 0; k < m.parts.size(); ++k) m.parts[k].second = labels[k];
    return m;
}

using DeltaData = std::map<std::pair<int, Monomial>, Scalar>;

// Delta supports and coefficients of the commutator [T_i, T_j], keyed by the
// canonical pinned monomial, with generators relabeled by sigma first.
DeltaData delta_data(const CaseParams& P, int i, int j, const int sigma[4]) {
    auto tower = derive_tower(P, i + j);
    DeltaData out;
    for (const auto& t : current_product(P, tower[i], tower[j])) {
        for (const auto& [c, mult] : t.R.factors()) {
            if (mult >= 0) continue;
            int k = -mult;
            auto e = mono_exp(c);
            if (!e || !e->is_integer()) continue;
            if (k > 2) throw std::logic_error("pole of order " + std::to_string(k));
            int E = static_cast<int>(e->as_integer());
            Monomial m = pinned(t.a, E, t.b);
            for (auto& [sh, g] : m.parts) g = sigma[g];
            auto h = t.R.taylor_at_point(c, k - 1);
            Scalar v = t.weight * h[k - 1];
            if (k == 2) v += t.weight * h[0];
            out[{E, canon(std::move(m))}] += v;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace

// The two sl(2|1) Dynkin diagrams give the same W-algebra: under the
// generator relabeling (1,2,3) -> (3,1,2) the case-2 quadratic-relation data
// (delta pole locations and coefficients, per canonical pinned pattern) must
// coincide exactly with the case-3 data.
Report verify_dynkin(int imax, int jmax) {
    Report rep("dynkin-equivalence");
    const int sigma2[4] = {0, 3, 1, 2};  // case-2 labels -> case-3 labels
    const int id[4] = {0, 1, 2, 3};
    CaseParams P2(CaseId::C2), P3(CaseId::C3);
    for (int i = 1; i <= imax; ++i)
        for (int j = i; j <= jmax; ++j) {
            std::string name =
                "T" + std::to_string(i) + "T" + std::to_string(j);
            DeltaData a, b;
            try {
                a = delta_data(P2, i, j, sigma2);
                b = delta_data(P3, i, j, id);
            } catch (const std::exception& ex) {
                rep.add(name, false, ex.what());
                continue;
            }
            bool ok = true;
            std::string witness;
            for (const auto& [key, v] : a) {
                auto it = b.find(key);
                if (it == b.end() || !(it->second == v)) {
                    ok = false;
                    witness = "e=" + std::to_string(key.first) + " " +
                              key.second.to_string();
                    break;
                }
            }
            if (ok && a.size() != b.size()) {
                ok = false;
                witness = "case-3 has extra delta supports";
            }
            rep.add(name, ok, witness);
        }
    return rep;
}

}  // namespace wqt
