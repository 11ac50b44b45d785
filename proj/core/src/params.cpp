#include "wqt/params.hpp"

#include <stdexcept>

namespace wqt {

namespace {

const ExponentFn kR = ExponentFn::r();

// x^(e*m)
Scalar xp(const ExponentFn& e, long m = 1) { return Scalar::x_pow(e * m); }

// [e*m]_x
Scalar qi(const ExponentFn& e, long m) { return Scalar::qint(e * m); }

Scalar x_minus_xinv() {
    Sum s;
    s.add_term(ExponentFn(1), Rational(1));
    s.add_term(ExponentFn(-1), Rational(-1));
    return Scalar(s);
}

}  // namespace

const char* case_name(CaseId c) {
    switch (c) {
        case CaseId::C1: return "case1-sl3";
        case CaseId::C2: return "case2-sl21";
        case CaseId::C3: return "case3-sl21";
    }
    return "?";
}

ExponentFn CaseParams::A0(int i, int j) const {
    ExponentFn v;
    ExponentFn off_diag_1 = ExponentFn(Poly(std::vector<Rational>{Rational(1), Rational(-1)}),
                                       Poly::variable());  // (1-r)/r
    switch (case_) {
        case CaseId::C1:
            v = (i == j) ? (kR - ExponentFn(1)) * 2 / kR : off_diag_1;
            break;
        case CaseId::C2:
            if (i == j)
                v = (i == 1) ? (kR - ExponentFn(1)) * 2 / kR : ExponentFn(1);
            else
                v = off_diag_1;
            break;
        case CaseId::C3:
            v = (i == j) ? ExponentFn(1) : ExponentFn(-1) / kR;
            break;
    }
    if (mut_ && mut_->kind == Mutation::Kind::A0Offset && mut_->i == i && mut_->j == j)
        v = v + mut_->offset;
    return v;
}

Scalar CaseParams::A(int i, int j, int m) const {
    if (m == 0) throw std::logic_error("A(i,j,m): m must be nonzero");
    if (i == j) return Scalar(1);
    if (auto it = a_cache_.find({i, j, m}); it != a_cache_.end()) return it->second;
    // A_{2,1}(m) = A_{1,2}(-m)
    int mm = (i == 1) ? m : -m;
    Scalar v;
    switch (case_) {
        case CaseId::C1:
            v = -qi(ExponentFn(1), mm) / qi(ExponentFn(2), mm);
            break;
        case CaseId::C2:
            if (mm > 0)
                v = -qi(kR - ExponentFn(1), mm) / qi(kR, mm);
            else
                v = -qi(ExponentFn(1), mm) / qi(ExponentFn(2), mm);
            break;
        case CaseId::C3:
            v = -qi(ExponentFn(1), mm) / qi(kR, mm);
            break;
    }
    if (mut_ && mut_->kind == Mutation::Kind::AScalePos && mm > 0)
        v *= Scalar(Rational(mut_->factor));
    a_cache_.emplace(std::tuple{i, j, m}, v);
    return v;
}

Scalar CaseParams::s(int j, int m) const {
    if (m == 0) throw std::logic_error("s(j,m): m must be nonzero");
    if (auto it = s_cache_.find({j, m}); it != s_cache_.end()) return it->second;
    Scalar v(1);
    if (m < 0) {
        bool long_form = (case_ == CaseId::C1) || (case_ == CaseId::C2 && j == 1);
        if (long_form)
            v = -qi(kR - ExponentFn(1), m) * qi(ExponentFn(2), m) /
                (qi(kR, m) * qi(ExponentFn(1), m));
        else
            v = Scalar(-1);
        if (mut_ && mut_->kind == Mutation::Kind::SScaleNeg && mut_->i == j)
            v *= Scalar(Rational(mut_->factor));
    }
    s_cache_.emplace(std::pair{j, m}, v);
    return v;
}

ExponentFn CaseParams::lam0(int i, int j) const {
    ExponentFn v;
    if (case_ == CaseId::C1) {
        long c = (j < i) ? j : j - 3;
        v = kR * (2 * c) / ExponentFn(3);
    } else {
        ExponentFn num;
        if (i == 1 && j == 1)
            num = -kR;
        else if (j == 2 && i <= 2)
            num = (case_ == CaseId::C2) ? ExponentFn(1) - kR : ExponentFn(-1);
        else if (i == 3 && j == 2)
            num = (case_ == CaseId::C2) ? ExponentFn(2) : kR;
        else  // (2,1), (3,1)
            num = ExponentFn(1);
        v = kR * 2 * num / (kR + ExponentFn(1));
    }
    if (mut_ && mut_->kind == Mutation::Kind::Lam0Offset && mut_->i == i && mut_->j == j)
        v = v + mut_->offset;
    return v;
}

Scalar CaseParams::lam(int i, int j, int m) const {
    if (m == 0) throw std::logic_error("lam(i,j,m): m must be nonzero");
    if (auto it = lam_cache_.find({i, j, m}); it != lam_cache_.end()) return it->second;
    Scalar ratio;
    if (case_ == CaseId::C1) {
        Scalar tail = (j < i) ? xp(kR + ExponentFn(2), m) * qi(ExponentFn(j), m)
                              : xp(kR - ExponentFn(1), m) * qi(ExponentFn(j - 3), m);
        ratio = -qi(kR, m) / qi(ExponentFn(3), m) * x_minus_xinv() * tail;
    } else {
        Scalar tail;
        if (i == 1 && j == 1)
            tail = xp(kR - ExponentFn(1), m) * qi(kR, m);
        else if (j == 2 && i <= 2)
            tail = xp(kR - ExponentFn(1), m) *
                   (case_ == CaseId::C2 ? qi(kR - ExponentFn(1), m) : qi(ExponentFn(1), m));
        else if (i == 3 && j == 2)
            tail = -(xp(kR * 2, m) *
                     (case_ == CaseId::C2 ? qi(ExponentFn(2), m) : qi(kR, m)));
        else  // (2,1), (3,1)
            tail = -(xp(kR * 2, m) * qi(ExponentFn(1), m));
        ratio = qi(kR, m) / qi(kR + ExponentFn(1), m) * x_minus_xinv() * tail;
    }
    Scalar v = s(j, m) * ratio;
    if (mut_ && mut_->kind == Mutation::Kind::LambdaScale && mut_->i == i && mut_->j == j)
        v *= Scalar(Rational(mut_->factor));
    lam_cache_.emplace(std::tuple{i, j, m}, v);
    return v;
}

Sum CaseParams::lam_profile(int i, int j) const {
    if (auto it = profile_cache_.find({i, j}); it != profile_cache_.end())
        return it->second;
    // (x - x^-1) * tail of lam(), written out as the two-term character sum.
    ExponentFn hi, lo;
    Rational sign(1);
    if (case_ == CaseId::C1) {
        hi = (j < i) ? kR + ExponentFn(2 + j) : kR + ExponentFn(j - 4);
        lo = kR + ExponentFn(2 - j);
    } else if (i == 1 && j == 1) {
        hi = kR * 2 - ExponentFn(1);
        lo = ExponentFn(-1);
    } else if (j == 2 && i <= 2) {
        if (case_ == CaseId::C2) {
            hi = kR * 2 - ExponentFn(2);
            lo = ExponentFn(0);
        } else {
            hi = kR;
            lo = kR - ExponentFn(2);
        }
    } else if (i == 3 && j == 2) {
        sign = -1;
        if (case_ == CaseId::C2) {
            hi = kR * 2 + ExponentFn(2);
            lo = kR * 2 - ExponentFn(2);
        } else {
            hi = kR * 3;
            lo = kR;
        }
    } else {  // (2,1), (3,1)
        sign = -1;
        hi = kR * 2 + ExponentFn(1);
        lo = kR * 2 - ExponentFn(1);
    }
    Sum v;
    v.add_term(hi, sign);
    v.add_term(lo, -sign);
    if (mut_ && mut_->kind == Mutation::Kind::LambdaScale && mut_->i == i && mut_->j == j)
        v = v.scaled(mut_->factor);
    profile_cache_.emplace(std::pair{i, j}, v);
    return v;
}

Scalar CaseParams::g(int i) const {
    Scalar v(1);
    if ((case_ == CaseId::C2 && i == 3) || (case_ == CaseId::C3 && i == 2))
        v = Scalar::qint(kR - ExponentFn(1));
    if (mut_ && mut_->kind == Mutation::Kind::GScale && mut_->i == i)
        v *= Scalar(Rational(mut_->factor));
    return v;
}

ExponentFn CaseParams::qexp(int i, int j) const {
    ExponentFn v;
    if (!((i == 1 && j == 2) || (i == 3 && j == 1))) {
        if (case_ == CaseId::C3) {
            if (i == j)
                v = (kR - ExponentFn(1)) * (i - 1);
            else  // i == j+1
                v = kR + ExponentFn(1) + (kR - ExponentFn(1)) * j;
        } else {
            v = (i == j) ? ExponentFn(i - 1) : kR * 2 + ExponentFn(j - 1);
        }
    }
    if (mut_ && mut_->kind == Mutation::Kind::QExpOffset && mut_->i == i && mut_->j == j)
        v = v + mut_->offset;
    return v;
}

ExponentFn CaseParams::pexp(int i, int j) const {
    ExponentFn v;
    if (!((i == 1 && j == 2) || (i == 3 && j == 1))) {
        switch (case_) {
            case CaseId::C1:
                v = (i == j) ? kR * 2 + ExponentFn(i - 3) : ExponentFn(j + 1);
                break;
            case CaseId::C2:
                v = (i == j) ? kR * 2 + ExponentFn(i - 3)
                             : kR * (2 * j - 2) + ExponentFn(5 - 3 * j);
                break;
            case CaseId::C3:
                // p_{i,i} = p_{i+1,i} = x^{3r-5+(3-r)j'} with j' the column
                v = kR * (3 - j) + ExponentFn(3 * j - 5);
                break;
        }
    }
    if (mut_ && mut_->kind == Mutation::Kind::PExpOffset && mut_->i == i && mut_->j == j)
        v = v + mut_->offset;
    return v;
}

bool CaseParams::pq_coincide(int i, int j) const {
    return (i == 1 && j == 2) || (i == 3 && j == 1);
}

ExponentFn CaseParams::s_param() const {
    return case_ == CaseId::C1 ? ExponentFn(3) : kR + ExponentFn(1);
}

std::vector<Mutation> CaseParams::perturbations(CaseId c) {
    std::vector<Mutation> out;
    auto add = [&](Mutation m) { out.push_back(std::move(m)); };
    using K = Mutation::Kind;
    add({K::Lam0Offset, 1, 1, ExponentFn(1), Rational(1), "lam0(1,1)+1"});
    add({K::Lam0Offset, 3, 2, ExponentFn(Rational(1, 2)), Rational(1), "lam0(3,2)+1/2"});
    add({K::QExpOffset, 1, 1, ExponentFn(1), Rational(1), "qexp(1,1)+1"});
    add({K::QExpOffset, 3, 2, ExponentFn(1), Rational(1), "qexp(3,2)+1"});
    add({K::PExpOffset, 2, 1, ExponentFn(1), Rational(1), "pexp(2,1)+1"});
    add({K::PExpOffset, 2, 2, ExponentFn(1), Rational(1), "pexp(2,2)+1"});
    add({K::A0Offset, 1, 2, ExponentFn(Rational(1, 7)), Rational(1), "A0(1,2)+1/7"});
    add({K::LambdaScale, 2, 1, ExponentFn(), Rational(2), "lam(2,1,m)*2"});
    add({K::LambdaScale, 1, 2, ExponentFn(), Rational(3, 2), "lam(1,2,m)*3/2"});
    add({K::AScalePos, 1, 2, ExponentFn(), Rational(2), "A12(m>0)*2"});
    add({K::SScaleNeg, 1, 0, ExponentFn(), Rational(2), "s1(m<0)*2"});
    add({K::GScale, 3, 0, ExponentFn(), Rational(2), "g3*2"});
    (void)c;
    return out;
}

}  // namespace wqt
