// End-to-end acceptance battery: one line per criterion, timings printed for
// information only.  Exit status 0 iff every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "wqt/classical.hpp"
#include "wqt/verify.hpp"

using namespace wqt;

namespace {

int failures = 0;

void criterion(int n, const std::string& what,
               const std::function<Report()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    Report rep("criterion");
    try {
        rep = fn();
    } catch (const std::exception& e) {
        rep.add("exception", false, e.what());
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    bool pass = rep.ok();
    if (!pass) ++failures;
    std::printf("criterion %2d: %s  %s (%d/%d checks) [%.1fs]\n", n,
                pass ? "PASS" : "FAIL", what.c_str(),
                rep.total() - rep.failed(), rep.total(), secs);
    if (!pass) {
        std::fputs(rep.render_text(false).c_str(), stdout);
    }
    std::fflush(stdout);
}

Report merge_cases(const std::function<Report(CaseParams)>& fn,
                   std::vector<CaseId> cases = {CaseId::C1, CaseId::C2,
                                                CaseId::C3}) {
    Report out("");
    for (CaseId c : cases) out.merge(fn(CaseParams(c)));
    return out;
}

/// True when at least one verifier notices the mutation.  The cheap table
/// checks run first; the quadratic relation catches the rest.  A mutated
/// table may break the preconditions of the heavier machinery (repeated
/// poles, non-cancelling kernels); an exception is a detection too.
bool mutation_flagged(const CaseParams& P) {
    try {
        if (!verify_theorem21(P, 6).ok()) return true;
        if (!verify_screening(P, 6).ok()) return true;
        if (!verify_prop22(P, 6).ok()) return true;
        if (!verify_kernels(P, 6, 6).ok()) return true;
        if (!verify_quadratic(P, 1, 1).ok()) return true;
        if (P.which() == CaseId::C1 && !verify_truncation(6).ok()) return true;
    } catch (const std::exception&) {
        return true;
    }
    return false;
}

}  // namespace

int main() {
    criterion(1, "parameter-table constraints, cases 1-3, m <= 20",
              [] { return merge_cases([](CaseParams P) { return verify_theorem21(P, 20); }); });

    criterion(2, "contraction kernels vs closed forms, order 20, dual path",
              [] { return merge_cases([](CaseParams P) { return verify_kernels(P, 20, 8); }); });

    criterion(3, "screening exchange relations, order 20",
              [] { return merge_cases([](CaseParams P) { return verify_screening(P, 20); }); });

    criterion(4, "vertex-operator exchange vs theta ratios, m <= 20",
              [] { return merge_cases([](CaseParams P) { return verify_prop22(P, 20); }); });

    criterion(5, "quadratic relations, cases 2-3 grid + series cross-check", [] {
        Report out("");
        for (CaseId c : {CaseId::C2, CaseId::C3}) {
            CaseParams P(c);
            for (int i = 1; i <= 3; ++i)
                for (int j = i; j <= 3; ++j) out.merge(verify_quadratic(P, i, j));
            out.merge(verify_cross_check(P, 3, 12));
        }
        return out;
    });

    criterion(6, "case 2 vs case 3 agreement after relabeling, full grid",
              [] { return verify_dynkin(3, 3); });

    criterion(7, "case 1 quadratic relations and truncation", [] {
        Report out("");
        CaseParams P(CaseId::C1);
        for (auto [i, j] : {std::pair{1, 1}, {1, 2}, {2, 2}})
            out.merge(verify_quadratic(P, i, j));
        out.merge(verify_cross_check(P, 3, 12));
        out.merge(verify_truncation(20));
        return out;
    });

    criterion(8, "current fusion and exchange tables, chains to degree 6", [] {
        Report out("");
        for (CaseId c : {CaseId::C1, CaseId::C2, CaseId::C3}) {
            CaseParams P(c);
            out.merge(verify_fusion_T(P, 6));
            out.merge(verify_exchange_T(P, 3));
        }
        return out;
    });

    criterion(9, "classical limit ladder, q0 = 4, beta down to 1e-4",
              [] { return verify_classical_limit(PBParams{}); });

    criterion(10, "soundness: every table mutation is detected", [] {
        Report out("mutations");
        int count = 0;
        for (CaseId c : {CaseId::C1, CaseId::C2, CaseId::C3}) {
            for (const Mutation& mut : CaseParams::perturbations(c)) {
                ++count;
                bool flagged = mutation_flagged(CaseParams(c, mut));
                out.add("case" + std::to_string(int(c)) + "/" + mut.label,
                        flagged, flagged ? "" : "mutation went unnoticed");
            }
        }
        out.add("battery-size", count >= 10,
                "need >= 10 perturbations, have " + std::to_string(count));
        return out;
    });

    std::printf("%s: %d/10 criteria\n", failures == 0 ? "PASS" : "FAIL",
                10 - failures);
    return failures == 0 ? 0 : 1;
}
