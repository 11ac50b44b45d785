#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wqt/scalar.hpp"

namespace wqt {

/// The three parameter branches: case 1 realizes W_{q,t}(sl(3)); cases 2 and
/// 3 realize W_{q,t}(sl(2|1)) for the two inequivalent Dynkin diagrams.
enum class CaseId { C1 = 1, C2 = 2, C3 = 3 };

const char* case_name(CaseId c);

/// Single-entry perturbation of a parameter table.  Every verifier must
/// notice at least one of these going wrong; used by the self-check suite.
struct Mutation {
    enum class Kind {
        Lam0Offset,    // lambda_{i,j}(0) += offset
        QExpOffset,    // q_{i,j} exponent += offset
        PExpOffset,    // p_{i,j} exponent += offset
        A0Offset,      // A_{i,j}(0) += offset
        LambdaScale,   // lambda_{i,j}(m) *= factor (all m != 0)
        AScalePos,     // A_{1,2}(m) *= factor (m > 0)
        SScaleNeg,     // s_j(m) *= factor (m < 0), j = i field
        GScale,        // g_i *= factor
    };
    Kind kind;
    int i = 0, j = 0;
    ExponentFn offset;
    Rational factor{1};
    std::string label;
};

/// Exact parameter tables of the free-field construction, as rational
/// functions of the generic parameter r with x kept symbolic.
class CaseParams {
public:
    explicit CaseParams(CaseId c) : case_(c) {}
    CaseParams(CaseId c, Mutation mut) : case_(c), mut_(std::move(mut)) {}

    CaseId which() const { return case_; }
    bool mutated() const { return mut_.has_value(); }

    /// A_{i,j}(0), 1 <= i,j <= 2.
    ExponentFn A0(int i, int j) const;
    /// A_{i,j}(m), m != 0.
    Scalar A(int i, int j, int m) const;
    /// s_j(m), m != 0.
    Scalar s(int j, int m) const;
    /// lambda_{i,j}(0) as an exponent of x: the stored value e means the
    /// zero mode contributes x^{e * A...} through [a(0), Q] commutators.
    ExponentFn lam0(int i, int j) const;
    /// lambda_{i,j}(m), m != 0.
    Scalar lam(int i, int j, int m) const;
    /// m-independent shape of lambda_{i,j}(m): a Sum whose term c*x^e stands
    /// for c*x^{e*m}, with lambda_{i,j}(m) = s_j(m) * kappa(m) * shape(m) and
    /// kappa the common j-independent ratio of q-integers.  Two monomials of
    /// generators carry the same oscillator content iff their shifted
    /// profiles agree, which makes this the operator fingerprint.
    Sum lam_profile(int i, int j) const;
    /// g_i, normalized so that g_1 = 1.
    Scalar g(int i) const;

    /// Exponents of the pole/zero positions: q_{i,j} = x^{qexp(i,j)},
    /// p_{i,j} = x^{pexp(i,j)}.  For the coincident pairs (1,2) and (3,1)
    /// only the ratio p/q = 1 is meaningful; both exponents are stored as 0.
    ExponentFn qexp(int i, int j) const;
    ExponentFn pexp(int i, int j) const;

    /// True when p_{i,j} = q_{i,j} (no pole between Lambda_i and S_j).
    bool pq_coincide(int i, int j) const;

    /// s of Proposition 2.2 / the structure function: 3 for case 1,
    /// r+1 for cases 2 and 3.
    ExponentFn s_param() const;

    /// Perturbation battery for the self-check suite.
    static std::vector<Mutation> perturbations(CaseId c);

private:
    CaseId case_;
    std::optional<Mutation> mut_;
    // The oscillator tables are pure functions of their arguments but costly
    // to build; verifiers hit the same (i,j,m) thousands of times.
    mutable std::map<std::tuple<int, int, int>, Scalar> lam_cache_, a_cache_;
    mutable std::map<std::pair<int, int>, Scalar> s_cache_;
    mutable std::map<std::pair<int, int>, Sum> profile_cache_;
};

}  // namespace wqt
