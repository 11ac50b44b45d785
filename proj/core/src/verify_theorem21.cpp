#include "wqt/contraction.hpp"
#include "wqt/verify.hpp"

namespace wqt {

namespace {

Scalar xp(const ExponentFn& e, int m) { return Scalar::x_pow(e * m); }

}  // namespace

Report verify_theorem21(const CaseParams& P, int N) {
    Report rep(std::string("theorem21/") + case_name(P.which()));
    const ExponentFn R = ExponentFn::r();

    // Mutual locality, zero modes: sum_k lam0(i,k) A0(k,j) = log_x(q/p).
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 2; ++j) {
            ExponentFn acc;
            for (int k = 1; k <= 2; ++k) acc = acc + P.lam0(i, k) * P.A0(k, j);
            rep.expect_eq("locality0(" + std::to_string(i) + "," + std::to_string(j) + ")",
                          acc, P.qexp(i, j) - P.pexp(i, j));
        }

    // Mutual locality, oscillators: sum_k lam(i,k,m)A(k,j,m)s(j,-m) = q^m - p^m.
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int am = 1; am <= N; ++am)
                for (int m : {am, -am}) {
                    Scalar acc;
                    for (int k = 1; k <= 2; ++k)
                        acc += P.lam(i, k, m) * P.A(k, j, m) * P.s(j, -m);
                    Scalar want = xp(P.qexp(i, j), m) - xp(P.pexp(i, j), m);
                    rep.expect_eq("locality(" + std::to_string(i) + "," + std::to_string(j) +
                                      ",m=" + std::to_string(m) + ")",
                                  acc, want);
                }

    // Commutativity seed: the two normal-ordered Lambda S combinations match
    // boson by boson.
    for (int j = 1; j <= 2; ++j) {
        for (int k = 1; k <= 2; ++k) {
            ExponentFn lhs0 = P.lam0(j, k);
            ExponentFn rhs0 = P.lam0(j + 1, k);
            if (k == j) {
                lhs0 = lhs0 - P.qexp(j, j);
                rhs0 = rhs0 - P.qexp(j + 1, j);
            }
            rep.expect_eq("start1-zero(j=" + std::to_string(j) + ",k=" + std::to_string(k) + ")",
                          lhs0, rhs0);
            for (int am = 1; am <= N; ++am)
                for (int m : {am, -am}) {
                    Scalar lhs = P.lam(j, k, m);
                    Scalar rhs = P.lam(j + 1, k, m);
                    if (k == j) {
                        lhs += P.s(j, m) * xp(P.qexp(j, j), m);
                        rhs += P.s(j, m) * xp(P.qexp(j + 1, j), m);
                    }
                    rep.expect_eq("start1(j=" + std::to_string(j) + ",k=" + std::to_string(k) +
                                      ",m=" + std::to_string(m) + ")",
                                  lhs, rhs);
                }
        }
        // g_{j+1}/g_j ratio fixing the B_j current.
        Scalar lhs = P.g(j + 1) / P.g(j);
        Scalar qq = xp(P.qexp(j, j) - P.pexp(j, j), 1) - Scalar(1);
        Scalar qq1 = xp(P.qexp(j + 1, j) - P.pexp(j + 1, j), 1) - Scalar(1);
        Scalar rhs = -Scalar::x_pow((P.qexp(j + 1, j) - P.qexp(j, j)) * P.A0(j, j) /
                                    ExponentFn(2)) *
                     qq / qq1;
        rep.expect_eq("start2(j=" + std::to_string(j) + ")", lhs, rhs);
    }

    // Solved pole/zero positions relative to s = q_{1,1} (generic).
    {
        ExponentFn s = P.qexp(1, 1);
        ExponentFn a = P.A0(1, 2);
        rep.expect_eq("pq1:q22", P.qexp(2, 2), s + (a + ExponentFn(1)) * R);
        rep.expect_eq("pq1:q21", P.qexp(2, 1), s + R * 2);
        rep.expect_eq("pq1:q32", P.qexp(3, 2), s + (a + ExponentFn(3)) * R);
        rep.expect_eq("pq1:p21", P.pexp(2, 1), s + (a + ExponentFn(1)) * R * 2);
        rep.expect_eq("pq1:p22", P.pexp(2, 2), s + (ExponentFn(1) - a) * R);
        // Constant terms of the h q-difference equations.
        rep.expect_eq("pq2:a", P.qexp(2, 2) - P.pexp(2, 2) + (P.qexp(1, 1) - P.qexp(2, 1)) * a,
                      ExponentFn());
        rep.expect_eq("pq2:b", P.qexp(2, 1) - P.pexp(2, 1) + (P.qexp(3, 2) - P.qexp(2, 2)) * a,
                      ExponentFn());
        // Off-diagonal screening contraction: both orders, closed form.
        for (int m = 1; m <= N; ++m) {
            Scalar v12 = P.s(1, m) * P.A(1, 2, m) * P.s(2, -m);
            Scalar v21 = P.s(2, m) * P.A(2, 1, m) * P.s(1, -m);
            Scalar want = -(Scalar::qint(a * R * m) / Scalar::qint(R * m));
            rep.expect_eq("pq1:s12(m=" + std::to_string(m) + ")", v12, want);
            rep.expect_eq("pq1:s21(m=" + std::to_string(m) + ")", v21, want);
            // Symmetry of the two h functions (assume:varphiSS).
            rep.expect_eq("symh(m=" + std::to_string(m) + ")",
                          phi_SS_log(P, 1, 2, m), phi_SS_log(P, 2, 1, m));
        }
    }

    // h_{1,2}, h_{2,1} q-difference equations, coefficient by coefficient.
    for (int m = 1; m <= N; ++m) {
        Scalar H12 = phi_SS_log(P, 1, 2, m);
        Scalar H21 = phi_SS_log(P, 2, 1, m);
        Scalar inv_m = Scalar(1) / Scalar(m);
        rep.expect_eq("qdiff1a(m=" + std::to_string(m) + ")",
                      H12 * (xp(P.qexp(1, 1), m) - xp(P.qexp(2, 1), m)),
                      (xp(P.qexp(2, 2), m) - xp(P.pexp(2, 2), m)) * inv_m);
        rep.expect_eq("qdiff1b(m=" + std::to_string(m) + ")",
                      H12 * (xp(P.qexp(2, 2), -m) - xp(P.qexp(3, 2), -m)),
                      (xp(P.pexp(2, 1), -m) - xp(P.qexp(2, 1), -m)) * inv_m);
        rep.expect_eq("qdiff1c(m=" + std::to_string(m) + ")",
                      H21 * (xp(P.qexp(3, 2), m) - xp(P.qexp(2, 2), m)),
                      (xp(P.qexp(2, 1), m) - xp(P.pexp(2, 1), m)) * inv_m);
        rep.expect_eq("qdiff1d(m=" + std::to_string(m) + ")",
                      H21 * (xp(P.qexp(1, 1), -m) - xp(P.qexp(2, 1), -m)),
                      (xp(P.qexp(2, 2), -m) - xp(P.pexp(2, 2), -m)) * inv_m);
    }

    // h_{j,j} q-difference equation (positive-power branch) and its constant.
    for (int j = 1; j <= 2; ++j) {
        rep.expect_eq("pq6(j=" + std::to_string(j) + ")",
                      (P.qexp(j + 1, j) - P.qexp(j, j)) * (P.A0(j, j) - ExponentFn(1)) +
                          P.pexp(j + 1, j) - P.pexp(j, j),
                      ExponentFn());
        for (int m = 1; m <= N; ++m) {
            Scalar H = phi_SS_log(P, j, j, m);
            Scalar inv_m = Scalar(1) / Scalar(m);
            Scalar lhs = (xp(P.qexp(j, j), m) - xp(P.pexp(j, j), m)) * inv_m +
                         H * xp(P.qexp(j, j), m);
            Scalar rhs = (xp(P.qexp(j + 1, j), m) - xp(P.pexp(j + 1, j), m)) * inv_m +
                         H * xp(P.qexp(j + 1, j), m);
            rep.expect_eq("hjj(j=" + std::to_string(j) + ",m=" + std::to_string(m) + ")",
                          lhs, rhs);
        }
        // Solved forms: p,q5 for A_jj(0) != 1 and p,q5.5 otherwise.
        ExponentFn a0 = P.A0(j, j);
        if (a0 == ExponentFn(1)) {
            rep.expect_eq("pq55:p(j=" + std::to_string(j) + ")", P.pexp(j, j),
                          P.pexp(j + 1, j));
            for (int m = 1; m <= N; ++m)
                rep.expect_eq("pq55:ss(j=" + std::to_string(j) + ",m=" + std::to_string(m) + ")",
                              P.s(j, m) * P.s(j, -m), Scalar(-1));
        } else {
            rep.expect_eq("pq5:pjj(j=" + std::to_string(j) + ")",
                          P.pexp(j, j) - P.qexp(j, j), a0 * R);
            rep.expect_eq("pq5:pj1j(j=" + std::to_string(j) + ")",
                          P.pexp(j + 1, j) - P.qexp(j, j), (ExponentFn(2) - a0) * R);
            for (int m = 1; m <= N; ++m) {
                Scalar want = -(Scalar::qint(a0 * R * m / ExponentFn(2)) *
                                Scalar::qint((ExponentFn(2) - a0) * R * m)) /
                              (Scalar::qint((ExponentFn(2) - a0) * R * m / ExponentFn(2)) *
                               Scalar::qint(R * m));
                rep.expect_eq("pq5:ss(j=" + std::to_string(j) + ",m=" + std::to_string(m) + ")",
                              P.s(j, m) * P.s(j, -m), want);
            }
        }
    }

    // Coincident pairs carry no pole: q/p = 1 there by construction.
    rep.add("pq:coincide(1,2)", P.pq_coincide(1, 2) && P.qexp(1, 2) == P.pexp(1, 2));
    rep.add("pq:coincide(3,1)", P.pq_coincide(3, 1) && P.qexp(3, 1) == P.pexp(3, 1));

    return rep;
}

}  // namespace wqt
