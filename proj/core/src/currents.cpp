#include "wqt/currents.hpp"

#include <algorithm>
#include <sstream>

namespace wqt {

void Monomial::add(int gen, int shift) {
    parts.emplace_back(shift, gen);
    std::sort(parts.begin(), parts.end());
}

Monomial Monomial::shifted(int a) const {
    Monomial out = *this;
    for (auto& [sh, g] : out.parts) sh += a;
    return out;
}

std::string Monomial::to_string() const {
    if (parts.empty()) return "1";
    std::ostringstream os;
    os << ":";
    for (const auto& [sh, g] : parts) {
        os << "L" << g << "(";
        if (sh != 0) os << "x^" << sh << " ";
        os << "z)";
    }
    os << ":";
    return os.str();
}

Current Current::shifted(int a) const {
    Current out = *this;
    for (auto& t : out.terms) t.mono = t.mono.shifted(a);
    return out;
}

OpContent OpContent::shifted(int a) const {
    OpContent out = *this;
    // Arguments z -> x^a z multiply the m-th mode coefficient by x^{-a*m};
    // zero modes carry no argument dependence.
    for (auto& s : out.modes) s = s.shifted(ExponentFn(-a));
    return out;
}

OpContent OpContent::merged(const OpContent& o) const {
    OpContent out = *this;
    for (int j = 0; j < 2; ++j) {
        out.zero[j] = out.zero[j] + o.zero[j];
        out.modes[j] = out.modes[j] + o.modes[j];
    }
    return out;
}

OpContent op_content(const CaseParams& P, const Monomial& m) {
    OpContent out;
    for (const auto& [sh, g] : m.parts)
        for (int j = 1; j <= 2; ++j) {
            out.zero[j - 1] = out.zero[j - 1] + P.lam0(g, j);
            out.modes[j - 1] =
                out.modes[j - 1] + P.lam_profile(g, j).shifted(ExponentFn(-sh));
        }
    return out;
}

bool currents_equal(const CaseParams& P, const Current& A, const Current& B) {
    std::map<OpContent, Scalar> acc;
    for (const auto& t : A.terms) acc[op_content(P, t.mono)] += t.weight;
    for (const auto& t : B.terms) acc[op_content(P, t.mono)] -= t.weight;
    for (const auto& [k, v] : acc)
        if (!v.is_zero()) return false;
    return true;
}

Scalar d_coeff(int j) {
    Scalar out(1);
    const ExponentFn R = ExponentFn::r();
    for (int l = 1; l <= j; ++l)
        out *= Scalar::qint(R - ExponentFn(l)) / Scalar::qint(l);
    return out;
}

Scalar c_coeff() {
    Sum xm;
    xm.add_term(ExponentFn(1), Rational(1));
    xm.add_term(ExponentFn(-1), Rational(-1));
    const ExponentFn R = ExponentFn::r();
    return Scalar::qint(R) * Scalar::qint(R - ExponentFn(1)) * Scalar(xm);
}

Monomial lam3_column(int i) {
    Monomial m;
    for (int l = 1; l <= i; ++l) m.add(3, -i + 2 * l - 1);
    return m;
}

Monomial lamk3_column(int k, int i) {
    Monomial m;
    m.add(k, -i + 1);
    for (int l = 1; l <= i - 1; ++l) m.add(3, -i + 2 * l + 1);
    return m;
}

Monomial lam123_column(int i) {
    Monomial m;
    m.add(1, -i + 1);
    m.add(2, -i + 3);
    for (int l = 1; l <= i - 2; ++l) m.add(3, -i + 2 * l + 3);
    return m;
}

Monomial case3_column(bool low1, bool high3, int i) {
    Monomial m;
    for (int l = 0; l < i; ++l) {
        int g = 2;
        if (l == 0 && low1) g = 1;
        if (l == i - 1 && high3) g = 3;
        m.add(g, -i + 1 + 2 * l);
    }
    return m;
}

namespace {

Current build_case2_T(int i) {
    Current out;
    out.grade = i;
    if (i >= 2) out.terms.push_back({d_coeff(i - 2), lam123_column(i)});
    out.terms.push_back({d_coeff(i - 1), lamk3_column(1, i)});
    out.terms.push_back({d_coeff(i - 1), lamk3_column(2, i)});
    out.terms.push_back({d_coeff(i), lam3_column(i)});
    return out;
}

// Case 3: the repeated generator is Lambda_2, the isolated ones Lambda_1 and
// Lambda_3, and every column carries its labels in increasing order along
// the shift grid.  This is the case-2 shape under the label swap 2 <-> 3
// followed by re-sorting each column; the two operations do not commute with
// each other, and this ordering is the one the residue construction
// (derive_tower) produces and the quadratic relations require.
Current build_case3_T(int i) {
    Current out;
    out.grade = i;
    if (i >= 2) out.terms.push_back({d_coeff(i - 2), case3_column(true, true, i)});
    out.terms.push_back({d_coeff(i - 1), case3_column(true, false, i)});
    out.terms.push_back({d_coeff(i - 1), case3_column(false, true, i)});
    out.terms.push_back({d_coeff(i), case3_column(false, false, i)});
    return out;
}

}  // namespace

Current build_T(const CaseParams& P, int i) {
    if (i == 0) {
        Current out;
        out.terms.push_back({Scalar(1), Monomial{}});
        return out;
    }
    if (i == 1) {
        // T_1 = g_1 Lambda_1 + g_2 Lambda_2 + g_3 Lambda_3 in every case.
        Current out;
        out.grade = 1;
        for (int k = 1; k <= 3; ++k) {
            Monomial m;
            m.add(k, 0);
            out.terms.push_back({P.g(k), m});
        }
        return out;
    }
    switch (P.which()) {
        case CaseId::C1: {
            Current out;
            out.grade = i;
            if (i == 2) {
                for (int k = 1; k <= 3; ++k)
                    for (int l = k + 1; l <= 3; ++l) {
                        Monomial m;
                        m.add(k, -1);
                        m.add(l, 1);
                        out.terms.push_back({Scalar(1), m});
                    }
            } else if (i == 3) {
                Monomial m;
                m.add(1, -2);
                m.add(2, 0);
                m.add(3, 2);
                out.terms.push_back({Scalar(1), m});
            }
            // i >= 4: zero current (no terms)
            return out;
        }
        case CaseId::C2:
            return build_case2_T(i);
        case CaseId::C3:
            return build_case3_T(i);
    }
    return Current{};
}

}  // namespace wqt
