#pragma once

#include <array>

#include "wqt/params.hpp"

namespace wqt {

/// Normal-ordered product of generators Lambda_g(x^shift * z), stored as a
/// sorted multiset of (shift, generator) parts.  The empty monomial is the
/// identity operator.
struct Monomial {
    std::vector<std::pair<int, int>> parts;  // (shift, gen), sorted

    void add(int gen, int shift);
    /// Shift every argument: z -> x^a z.
    Monomial shifted(int a) const;
    size_t size() const { return parts.size(); }
    bool operator==(const Monomial& o) const { return parts == o.parts; }
    bool operator<(const Monomial& o) const { return parts < o.parts; }
    std::string to_string() const;
};

struct WeightedMonomial {
    Scalar weight;
    Monomial mono;
};

/// A W-current: finite sum of weighted normal-ordered monomials whose parts
/// sit on the shift grid {-i+1, -i+3, ..., i-1}.
struct Current {
    int grade = 0;  // i: every monomial has exactly i parts on the grid
    std::vector<WeightedMonomial> terms;

    Current shifted(int a) const;
};

/// Oscillator content of a normal-ordered monomial: the total zero mode and
/// the total mode profile per boson (common j-dependent factor divided out;
/// see CaseParams::lam_profile).  Two monomials define the same operator iff
/// their contents agree, which is what the verifiers compare: distinct
/// multisets of generators can realize the same field.
struct OpContent {
    std::array<ExponentFn, 2> zero;
    std::array<Sum, 2> modes;
    auto operator<=>(const OpContent&) const = default;

    /// Content of the same monomial with every argument scaled by x^a.
    OpContent shifted(int a) const;
    /// Content of the juxtaposition :this * o:.
    OpContent merged(const OpContent& o) const;
};

OpContent op_content(const CaseParams& P, const Monomial& m);

/// Currents compared as operators (contents aggregated with weights).
bool currents_equal(const CaseParams& P, const Current& A, const Current& B);

/// d_j = prod_{l=1..j} [r-l]_x/[l]_x.
Scalar d_coeff(int j);
/// c(r,x) = [r]_x [r-1]_x (x - x^{-1}).
Scalar c_coeff();

/// Composite monomials (relative to the grade-i grid):
/// all-Lambda_3 column, Lambda_k then Lambda_3's, and the
/// Lambda_1 Lambda_2 Lambda_3... column.
Monomial lam3_column(int i);
Monomial lamk3_column(int k, int i);
Monomial lam123_column(int i);

/// Case-3 column on the grade-i grid: Lambda_2 repeated, optionally with
/// Lambda_1 at the bottom and/or Lambda_3 at the top of the grid.
Monomial case3_column(bool low1, bool high3, int i);

/// T_i for the given case.  Grade 0 is the identity current.  For case 1,
/// T_3 is the maximal normal-ordered column and T_i = 0 for i >= 4.
Current build_T(const CaseParams& P, int i);

}  // namespace wqt
