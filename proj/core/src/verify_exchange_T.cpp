#include <algorithm>
#include <map>
#include <stdexcept>

#include "wqt/product.hpp"
#include "wqt/verify.hpp"

namespace wqt {

namespace {

Current one_term(int grade, Monomial m) {
    Current c;
    c.grade = grade;
    c.terms.push_back({Scalar(1), std::move(m)});
    return c;
}

struct RowSpec {
    std::string name;
    int k;        // generator of the grade-1 factor
    Monomial col; // grade-i column
    int grade;
    Scalar coeff; // zero => the commutator must vanish
    // Expected delta positions (x^{e}), checked only when positional is set:
    // the printed table is written for case 2; for case 3 the same
    // combinations carry the same +-coefficient pair at case-specific
    // positions.
    bool positional = false;
    int e_plus = 0, e_minus = 0;
};

}  // namespace

// Lemma-level exchange symmetry of the dressed products, plus the
// single-pattern commutators of Lambda_k with the current columns: each is a
// pure two-delta (or empty) distribution whose coefficients are c(r,x) times
// an explicit ratio of d-weights.
Report verify_exchange_T(const CaseParams& P, int imax) {
    Report rep(std::string("exchange-T/") + case_name(P.which()));

    std::vector<Current> T;
    for (int n = 0; n <= imax; ++n) T.push_back(build_T(P, n));

    for (int i = 1; i <= imax; ++i)
        for (int j = i; j <= imax; ++j) {
            std::string name =
                "lemma/T" + std::to_string(i) + "T" + std::to_string(j);
            std::map<std::pair<Monomial, Monomial>, FactoredRational> rev;
            for (auto& t : current_product(P, T[j], T[i]))
                rev.emplace(std::pair{t.a, t.b}, std::move(t.R));
            bool ok = true;
            for (const auto& t : current_product(P, T[i], T[j])) {
                auto it = rev.find({t.b, t.a});
                if (it == rev.end() || !(t.R == it->second.arg_inverted())) {
                    ok = false;
                    break;
                }
            }
            rep.add(name, ok);
        }

    if (P.which() == CaseId::C1) return rep;

    const bool c2 = (P.which() == CaseId::C2);
    Scalar c = c_coeff();
    auto d = d_coeff;
    // Column families: interior repeats the diagonal generator; dec(k, i)
    // carries isolated generator k; both(i) carries both isolated ones.
    auto interior = [&](int i) {
        return c2 ? lam3_column(i) : case3_column(false, false, i);
    };
    auto dec = [&](int k, int i) {
        return c2 ? lamk3_column(k, i) : case3_column(k == 1, k == 3, i);
    };
    auto both = [&](int i) {
        return c2 ? lam123_column(i) : case3_column(true, true, i);
    };
    // Diagonal and isolated generators: case 2 repeats 3 with (u, v) = (1, 2);
    // case 3 repeats 2 with (u, v) = (3, 1) under the relabeling.
    int diag = c2 ? 3 : 2, u = c2 ? 1 : 3, v = c2 ? 2 : 1;

    std::vector<RowSpec> rows;
    for (int i = 1; i <= imax; ++i) {
        std::string si = "/i=" + std::to_string(i);
        rows.push_back({"B:1a" + si, u, dec(u, i), i, Scalar()});
        rows.push_back({"B:1b" + si, v, dec(v, i), i, Scalar()});
        if (i >= 2) {
            rows.push_back({"B:1c" + si, u, both(i), i, Scalar()});
            rows.push_back({"B:1d" + si, v, both(i), i, Scalar()});
        }
        rows.push_back(
            {"B:2" + si, u, dec(v, i), i, c, c2, -i - 1, -i + 1});
        rows.push_back({"B:3a" + si, u, interior(i), i, c, c2, -i - 1, -i + 1});
        rows.push_back({"B:3b" + si, v, interior(i), i, c, c2, -i - 1, -i + 1});
        rows.push_back({"B:4" + si, diag, interior(i), i,
                        c * d(i + 1) / (d(1) * d(i)), c2, -i - 1, i + 1});
        rows.push_back({"B:5" + si, v, dec(u, i), i, c, c2, -i + 1, -i + 3});
        rows.push_back({"B:6a" + si, diag, dec(u, i), i,
                        c * d(i) / (d(1) * d(i - 1)), c2, -i + 1, i + 1});
        rows.push_back({"B:6b" + si, diag, dec(v, i), i,
                        c * d(i) / (d(1) * d(i - 1)), c2, -i + 1, i + 1});
        if (i >= 2)
            rows.push_back({"B:7" + si, diag, both(i), i,
                            c * d(i - 1) / (d(1) * d(i - 2)), c2, -i + 3,
                            i + 1});
    }

    for (const auto& r : rows) {
        Monomial lam;
        lam.add(r.k, 0);
        auto pats = current_product(P, one_term(1, lam), one_term(r.grade, r.col));
        bool ok = false;
        std::string witness;
        try {
            DeltaExpansion de = pats.at(0).R.delta_decompose();
            if (r.coeff.is_zero()) {
                ok = de.empty();
            } else if (de.size() == 2) {
                // Identify the +coeff / -coeff pair, positionally when the
                // printed table applies.
                const DeltaTerm *dp = &de[0], *dm = &de[1];
                if (r.positional) {
                    if (!(dp->c == Scalar::x_pow(ExponentFn(r.e_plus))))
                        std::swap(dp, dm);
                    ok = dp->c == Scalar::x_pow(ExponentFn(r.e_plus)) &&
                         dm->c == Scalar::x_pow(ExponentFn(r.e_minus)) &&
                         dp->coeff == r.coeff && dm->coeff == -r.coeff;
                } else {
                    if (!(dp->coeff == r.coeff)) std::swap(dp, dm);
                    ok = dp->coeff == r.coeff && dm->coeff == -r.coeff &&
                         !(dp->c == dm->c);
                }
            }
            if (!ok) {
                for (const auto& t : de)
                    witness += "[" + t.c.to_string() + ": " +
                               t.coeff.to_string() + "]";
                if (de.empty()) witness = "no delta terms";
            }
        } catch (const std::exception& ex) {
            witness = ex.what();
        }
        rep.add(r.name, ok, witness);
    }
    return rep;
}

}  // namespace wqt
