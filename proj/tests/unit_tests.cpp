#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "wqt/cache.hpp"
#include "wqt/currents.hpp"
#include "wqt/factored.hpp"
#include "wqt/report.hpp"
#include "wqt/series.hpp"
#include "wqt/structure.hpp"
#include "wqt/textio.hpp"

using namespace wqt;

static ExponentFn rvar() { return ExponentFn::r(); }

TEST_CASE("q-integer evaluation") {
    CHECK(Scalar::qint(2).eval_numeric(0.5, 2.0) == doctest::Approx(2.5));
    CHECK(Scalar::qint(1).is_one());
    // [n]_x at x = 1 formally: numeric limit check near 1.
    CHECK(Scalar::qint(5).eval_numeric(1.0 + 1e-8, 2.0) == doctest::Approx(5.0));
    // [e]_x with e = r at r = 3: (x^3 - x^-3)/(x - x^-1) = x^2 + 1 + x^-2.
    double x0 = 0.7;
    CHECK(Scalar::qint(rvar()).eval_numeric(x0, 3.0) ==
          doctest::Approx(x0 * x0 + 1 + 1 / (x0 * x0)));
}

TEST_CASE("scalar field arithmetic") {
    Scalar a = Scalar::qint(3), b = Scalar::qint(2);
    CHECK((a + b) * (a - b) == a * a - b * b);
    CHECK(a / b * b == a);
    CHECK((a * b.inverse()) * b == a);
    CHECK((a - a).is_zero());
    // Cancellation: a secretly polynomial quotient loses its denominator.
    Scalar q = (a * b) / b;
    CHECK(q.den().empty());
    CHECK(Scalar::x_pow(ExponentFn(2)) * Scalar::x_pow(ExponentFn(-2)) == Scalar(1));
}

TEST_CASE("c and d coefficients") {
    ExponentFn r = rvar();
    Scalar want = Scalar::qint(r) * Scalar::qint(r - ExponentFn(1)) *
                  (Scalar::x_pow(ExponentFn(1)) - Scalar::x_pow(ExponentFn(-1)));
    CHECK(c_coeff() == want);
    CHECK(d_coeff(0) == Scalar(1));
    CHECK(d_coeff(1) == Scalar::qint(r - ExponentFn(1)));
}

TEST_CASE("structure function log coefficient, frozen numeric oracle") {
    // -(1/m) [(r-1)m][rm][m][(s-1)m] / ([m][sm]) (x-x^-1)^2 at i=j=1, s=r+1.
    CaseParams P(CaseId::C2);
    double x0 = 0.7, r0 = 1.6, s0 = r0 + 1;
    auto br = [&](double n) {
        return (std::pow(x0, n) - std::pow(x0, -n)) / (x0 - 1 / x0);
    };
    for (int m = 1; m <= 4; ++m) {
        double want = -(1.0 / m) * br((r0 - 1) * m) * br(r0 * m) * br(m) *
                      br((s0 - 1) * m) / (br(m) * br(s0 * m)) *
                      std::pow(x0 - 1 / x0, 2);
        CHECK(f_log_coeff(P, 1, 1, m).eval_numeric(x0, r0) ==
              doctest::Approx(want).epsilon(1e-9));
    }
}

TEST_CASE("series exp and log are mutually inverse") {
    LaurentSeries s(8);
    s.set_coeff(1, Scalar::qint(2));
    s.set_coeff(3, -Scalar::qint(3));
    s.set_coeff(5, Scalar(Rational(7, 3)));
    CHECK(s.exp().log() == s);
    LaurentSeries e = s.exp();
    CHECK(e.coeff(0) == Scalar(1));
    CHECK(e.log().exp() == e);
}

TEST_CASE("factored rational expansions and residues") {
    Scalar c = Scalar::x_pow(ExponentFn(2));
    FactoredRational R = FactoredRational::factor(c, -1);  // 1/(1 - c*zeta)
    LaurentSeries lo = R.expand_at_zero(6);
    for (int m = 0; m <= 6; ++m) CHECK(lo.coeff(m) == c.pow(m));
    LaurentSeries hi = R.expand_at_infinity(6);
    for (int m = -6; m < 0; ++m) CHECK(hi.coeff(m) == -c.pow(m));
    CHECK(hi.coeff(0).is_zero());
    CHECK(R.residue_limit(c) == Scalar(1));
    CHECK(R.residue_limit(c * c).is_zero());
    // arg_inverted is an involution as a rational function.
    FactoredRational S = R * FactoredRational::factor(c.inverse(), 2);
    CHECK(S.arg_inverted().arg_inverted() == S);
}

TEST_CASE("delta decomposition of a two-pole kernel") {
    // R = (1-z)(1-abz) / ((1-az)(1-bz)) vanishes at neither end unless it is
    // balanced; this one is, with simple poles at 1/a and 1/b.
    Scalar a = Scalar::x_pow(ExponentFn(1)), b = Scalar::x_pow(ExponentFn(-3));
    FactoredRational R = FactoredRational::factor(Scalar(1)) *
                         FactoredRational::factor(a * b) *
                         FactoredRational::factor(a, -1) *
                         FactoredRational::factor(b, -1);
    DeltaExpansion D = R.delta_decompose();
    REQUIRE(D.size() == 2);
    for (const auto& t : D) {
        CHECK((t.c == a || t.c == b));
        CHECK(t.coeff == R.residue_limit(t.c));
    }
}

TEST_CASE("canonical text round-trip") {
    CaseParams P(CaseId::C2);
    std::vector<Scalar> samples = {
        Scalar(),
        Scalar(Rational(-7, 2)),
        Scalar::qint(3),
        c_coeff(),
        d_coeff(3),
        f_log_coeff(P, 1, 2, 3),
        delta_value(1, 3),
        Scalar::qint(rvar()) / (Scalar::qint(2) - Scalar::x_pow(rvar())),
    };
    for (const auto& s : samples) {
        CAPTURE(s.to_string());
        CHECK(parse_scalar(s.to_string()) == s);
    }
    ExponentFn e(Poly(std::vector<Rational>{Rational(1), Rational(-2), Rational(1, 3)}),
                 Poly(std::vector<Rational>{Rational(0), Rational(2)}));
    CHECK(parse_exponent(e.to_string()) == e);
    CHECK_THROWS_AS(parse_scalar("(1 + garbage)"), std::invalid_argument);
}

TEST_CASE("report JSON round-trip") {
    Report r("demo");
    r.add("alpha", true);
    r.add("beta", false, "got 0 want 1");
    Report back = Report::from_json_string(r.to_json_string());
    CHECK(back.section == r.section);
    REQUIRE(back.total() == 2);
    CHECK(back.checks[0].pass);
    CHECK_FALSE(back.checks[1].pass);
    CHECK(back.checks[1].witness == "got 0 want 1");
    CHECK(back.to_json_string() == r.to_json_string());
}

TEST_CASE("cache round-trip, collision guard, atomicity") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "wqt-cache-test";
    fs::remove_all(dir);
    Cache cache(dir.string());
    REQUIRE(cache.enabled());
    CHECK_FALSE(cache.get("missing").has_value());
    cache.put("key-a", "{\"v\":1}");
    auto got = cache.get("key-a");
    REQUIRE(got.has_value());
    CHECK(*got == "{\"v\":1}");
    cache.put("key-a", "{\"v\":2}");  // atomic replace
    CHECK(*cache.get("key-a") == "{\"v\":2}");
    // No temp files left behind, and entries self-identify their key, so a
    // hash collision reads as a miss rather than a wrong value.
    int tmp_files = 0;
    for (const auto& ent : fs::directory_iterator(dir)) {
        if (ent.path().extension() == ".tmp") ++tmp_files;
        std::ifstream in(ent.path());
        std::string first;
        std::getline(in, first);
        CHECK(first == "key-a");
    }
    CHECK(tmp_files == 0);
    CHECK(Cache::resolve_dir("flagged", true) == "flagged");
    CHECK(Cache::resolve_dir("flagged", false).empty());
    fs::remove_all(dir);
    Cache disabled("");
    CHECK_FALSE(disabled.enabled());
    CHECK_FALSE(disabled.get("key-a").has_value());
}

TEST_CASE("currents: shapes of low-degree towers") {
    for (CaseId c : {CaseId::C1, CaseId::C2, CaseId::C3}) {
        CaseParams P(c);
        Current t0 = build_T(P, 0);
        REQUIRE(t0.terms.size() == 1);
        CHECK(t0.terms[0].mono.size() == 0);
        Current t1 = build_T(P, 1);
        CHECK(t1.grade == 1);
        CHECK(t1.terms.size() == 3);
        Current t2 = build_T(P, 2);
        CHECK(t2.terms.size() == (c == CaseId::C1 ? 3 : 4));
        for (const auto& t : t2.terms)
            for (const auto& [shift, gen] : t.mono.parts)
                CHECK((shift == -1 || shift == 1));
    }
}
