#include "wqt/scalar.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wqt {

Sum::Sum(Rational constant) {
    if (constant != 0) t_.emplace(ExponentFn(), std::move(constant));
}

Sum Sum::monomial(Rational coeff, const ExponentFn& e) {
    Sum s;
    if (coeff != 0) s.t_.emplace(e, std::move(coeff));
    return s;
}

void Sum::add_term(const ExponentFn& e, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

Sum Sum::operator-() const {
    Sum out = *this;
    for (auto& [e, c] : out.t_) c = -c;
    return out;
}

Sum Sum::operator+(const Sum& o) const {
    Sum out = *this;
    for (const auto& [e, c] : o.t_) out.add_term(e, c);
    return out;
}

Sum Sum::operator-(const Sum& o) const {
    Sum out = *this;
    for (const auto& [e, c] : o.t_) out.add_term(e, -c);
    return out;
}

Sum Sum::operator*(const Sum& o) const {
    Sum out;
    for (const auto& [e1, c1] : t_)
        for (const auto& [e2, c2] : o.t_) out.add_term(e1 + e2, c1 * c2);
    return out;
}

Sum Sum::scaled(const Rational& k) const {
    if (k == 0) return Sum();
    Sum out = *this;
    for (auto& [e, c] : out.t_) c *= k;
    return out;
}

Sum Sum::shifted(const ExponentFn& e) const {
    Sum out;
    for (const auto& [e1, c1] : t_) out.t_.emplace(e1 + e, c1);
    return out;
}

std::strong_ordering Sum::operator<=>(const Sum& o) const {
    auto i = t_.begin();
    auto j = o.t_.begin();
    for (; i != t_.end() && j != o.t_.end(); ++i, ++j) {
        if (auto c = i->first <=> j->first; c != 0) return c;
        if (i->second != j->second)
            return i->second < j->second ? std::strong_ordering::less
                                         : std::strong_ordering::greater;
    }
    if (i != t_.end()) return std::strong_ordering::greater;
    if (j != o.t_.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

std::pair<ExponentFn, Rational> Sum::leading() const {
    if (t_.empty()) throw std::logic_error("leading() of zero Sum");
    auto best = t_.begin();
    for (auto it = std::next(best); it != t_.end(); ++it)
        if (it->first.asym_cmp(best->first) > 0) best = it;
    return *best;
}

std::pair<ExponentFn, Rational> Sum::trailing() const {
    if (t_.empty()) throw std::logic_error("trailing() of zero Sum");
    auto best = t_.begin();
    for (auto it = std::next(best); it != t_.end(); ++it)
        if (it->first.asym_cmp(best->first) < 0) best = it;
    return *best;
}

std::optional<Sum> Sum::divided_by(const Sum& d) const {
    if (d.is_zero()) throw std::domain_error("Sum division by zero");
    if (is_zero()) return Sum();
    if (d.terms() == 1) {
        const auto& [e, c] = *d.t_.begin();
        return shifted(-e).scaled(Rational(1) / c);
    }
    // Greedy leading-term division.  When the quotient exists it is found in
    // exactly (#quotient terms) steps; otherwise the loop could wander (with
    // symbolic exponents there is no degree bound), so a tight cap makes
    // failure a cheap "no".  A missed exact division only costs canonicality,
    // never correctness.
    auto [dl_e, dl_c] = d.leading();
    // Remainder keyed by the asymptotic order, so the current leading term
    // is just rbegin().
    auto asym_less = [](const ExponentFn& a, const ExponentFn& b) {
        return a.asym_cmp(b) < 0;
    };
    std::map<ExponentFn, Rational, decltype(asym_less)> rem(t_.begin(), t_.end(),
                                                            asym_less);
    Sum q;
    size_t cap = 4 * (t_.size() + d.terms()) + 64;
    size_t maxrem = t_.size() + d.terms() + 16;
    while (!rem.empty()) {
        if (cap-- == 0 || rem.size() > maxrem) return std::nullopt;
        ExponentFn qe = rem.rbegin()->first - dl_e;
        Rational qc = rem.rbegin()->second / dl_c;
        q.add_term(qe, qc);
        for (const auto& [de, dc] : d.term_map()) {
            auto [it, fresh] = rem.emplace(de + qe, Rational(0));
            it->second -= dc * qc;
            if (it->second == 0) rem.erase(it);
        }
    }
    return q;
}

Float Sum::eval_f(const Float& x0, const Float& r0) const {
    auto poly_at = [&](const Poly& p) {
        Float acc = 0;
        for (int i = p.degree(); i >= 0; --i)
            acc = acc * r0 + static_cast<Float>(p.coeff(i));
        return acc;
    };
    Float out = 0;
    for (const auto& [e, c] : t_) {
        Float ev = poly_at(e.num());
        Float dv = poly_at(e.den());
        out += static_cast<Float>(c) * pow(x0, ev / dv);
    }
    return out;
}

std::string Sum::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : t_) {
        Rational k = c;
        if (!first) {
            os << (k < 0 ? " - " : " + ");
            if (k < 0) k = -k;
        } else if (k < 0) {
            os << "-";
            k = -k;
        }
        first = false;
        if (e.is_zero()) {
            os << k;
        } else {
            if (k != 1) os << k << "*";
            os << "x^(" << e.to_string() << ")";
        }
    }
    return os.str();
}

Scalar::Scalar(Rational q) : num_(Sum(std::move(q))) {}

Scalar::Scalar(Sum s) : num_(std::move(s)) {}

Scalar Scalar::x_pow(const ExponentFn& e) {
    return Scalar(Sum::monomial(Rational(1), e));
}

Scalar Scalar::qint(const ExponentFn& e) {
    if (e.is_zero()) return Scalar();
    Sum num;
    num.add_term(e, Rational(1));
    num.add_term(-e, Rational(-1));
    Sum den;
    den.add_term(ExponentFn(1), Rational(1));
    den.add_term(ExponentFn(-1), Rational(-1));
    Scalar out(std::move(num));
    out.den_.push_back(std::move(den));
    // Deliberately left unexpanded: [n] for integer n would divide out into
    // an n-term sum, and products of those dominate large-mode checks.
    out.simplify(false);
    return out;
}

bool Scalar::is_one() const { return *this == Scalar(1); }

Sum Scalar::den_expanded() const {
    Sum out{Rational(1)};
    for (const auto& f : den_) out = out * f;
    return out;
}

Scalar Scalar::operator-() const {
    Scalar out = *this;
    out.num_ = -out.num_;
    return out;
}

Scalar Scalar::operator+(const Scalar& o) const {
    // Split denominators into shared and private factors so repeated sums
    // over a common denominator do not square it.
    std::vector<Sum> shared, mine, theirs;
    std::set_intersection(den_.begin(), den_.end(), o.den_.begin(), o.den_.end(),
                          std::back_inserter(shared));
    std::set_difference(den_.begin(), den_.end(), o.den_.begin(), o.den_.end(),
                        std::back_inserter(mine));
    std::set_difference(o.den_.begin(), o.den_.end(), den_.begin(), den_.end(),
                        std::back_inserter(theirs));
    Sum a = num_;
    for (const auto& f : theirs) a = a * f;
    Sum b = o.num_;
    for (const auto& f : mine) b = b * f;
    Scalar out(a + b);
    out.den_ = shared;
    out.den_.insert(out.den_.end(), mine.begin(), mine.end());
    out.den_.insert(out.den_.end(), theirs.begin(), theirs.end());
    std::sort(out.den_.begin(), out.den_.end());
    out.simplify(false);
    return out;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    Scalar out(num_ * o.num_);
    out.den_ = den_;
    out.den_.insert(out.den_.end(), o.den_.begin(), o.den_.end());
    std::sort(out.den_.begin(), out.den_.end());
    out.simplify(false);
    return out;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar division by zero");
    Rational lc = num_.leading().second;
    Scalar out(den_expanded().scaled(Rational(1) / lc));
    if (num_.terms() > 1)
        out.den_.push_back(num_.scaled(Rational(1) / lc));
    else
        out.num_ = out.num_.shifted(-num_.leading().first);
    out.simplify(false);
    return out;
}

Scalar Scalar::operator/(const Scalar& o) const {
    Scalar out = *this * o.inverse();
    out.simplify(true);
    return out;
}

Scalar Scalar::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    Scalar acc(1);
    Scalar base = *this;
    for (; k > 0; k >>= 1) {
        if (k & 1) acc = acc * base;
        if (k > 1) base = base * base;
    }
    return acc;
}

Scalar Scalar::canonical() const {
    Scalar out = *this;
    out.simplify(true);
    return out;
}

bool Scalar::operator==(const Scalar& o) const {
    if (num_ == o.num_ && den_ == o.den_) return true;
    return (*this - o).is_zero();
}

Float Scalar::eval_f(const Float& x0, const Float& r0) const {
    Float out = num_.eval_f(x0, r0);
    for (const auto& f : den_) {
        Float dv = f.eval_f(x0, r0);
        if (dv == 0) throw std::domain_error("Scalar denominator vanishes");
        out /= dv;
    }
    return out;
}

double Scalar::eval_numeric(double x0, double r0) const {
    return static_cast<double>(eval_f(Float(x0), Float(r0)));
}

std::string Scalar::to_string() const {
    if (den_.empty()) return num_.to_string();
    std::ostringstream os;
    os << "(" << num_.to_string() << ")";
    for (const auto& f : den_) os << " / (" << f.to_string() << ")";
    return os.str();
}

void Scalar::simplify(bool attempt_cancel) {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (auto it = den_.begin(); it != den_.end();) {
        if (it->terms() == 1) {
            // A monomial factor always divides; fold it into the numerator.
            const auto& [e, c] = *it->term_map().begin();
            num_ = num_.shifted(-e).scaled(Rational(1) / c);
            it = den_.erase(it);
            continue;
        }
        // Exact-division attempts are only worthwhile where cancellation is
        // plausible (a division just introduced the factor); inside sums and
        // products the failed greedy runs dominate runtime while equality
        // stays exact without them.
        if (attempt_cancel && num_.terms() <= 256) {
            if (auto q = num_.divided_by(*it)) {
                num_ = std::move(*q);
                it = den_.erase(it);
                continue;
            }
        }
        ++it;
    }
    // Normalize each remaining factor to asymptotic leading coefficient 1,
    // pushing the constant into the numerator.
    for (auto& f : den_) {
        Rational lc = f.leading().second;
        if (lc != 1) {
            f = f.scaled(Rational(1) / lc);
            num_ = num_.scaled(Rational(1) / lc);
        }
    }
    std::sort(den_.begin(), den_.end());
}

}  // namespace wqt
