// Acceptance gate: one line per criterion, exit 1 if any fails.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "ncfgl/verify.hpp"

using namespace ncfgl;

namespace {

int g_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void criterion(int idx, const std::string& name, bool ok, double secs, double budget) {
    bool pass = ok && secs <= budget;
    std::printf("%s  criterion %2d  %-38s  %6.2fs (budget %gs)%s\n", pass ? "PASS" : "FAIL", idx,
                name.c_str(), secs, budget, ok ? "" : "  [checks failed]");
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

// all checks whose name starts with one of the prefixes; requires at least one
bool prefix_ok(const std::vector<RelationReport>& rep, const std::vector<std::string>& prefixes,
               int& seen) {
    bool ok = true;
    seen = 0;
    for (const auto& r : rep) {
        bool match = false;
        for (const auto& p : prefixes)
            if (r.relation.rfind(p, 0) == 0) match = true;
        if (!match) continue;
        ++seen;
        if (!r.ok) {
            std::printf("      failed: %s\n      lhs: %s\n      rhs: %s\n", r.relation.c_str(),
                        r.lhs.c_str(), r.rhs.c_str());
            ok = false;
        }
    }
    return ok && seen > 0;
}

bool report_ok(const std::vector<RelationReport>& rep) {
    for (const auto& r : rep)
        if (!r.ok)
            std::printf("      failed: %s\n      lhs: %s\n      rhs: %s\n", r.relation.c_str(),
                        r.lhs.c_str(), r.rhs.c_str());
    return !rep.empty() && all_ok(rep);
}

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;
    FglEngine eng(10);

    {
        auto t0 = clock::now();
        auto figs = verify_figures(eng);
        double t = seconds_since(t0);
        int n_phi = 0, n_ups = 0, n_a = 0;
        bool ok_phi = prefix_ok(figs, {"phi["}, n_phi);
        bool ok_ups = prefix_ok(figs, {"Ups", "strictness"}, n_ups);
        bool ok_a = prefix_ok(figs, {"a["}, n_a);
        bool covered = size_t(n_phi + n_ups + n_a) == figs.size();
        criterion(1, "phi_k(Z_l) table", ok_phi && covered, t, 1.0);
        criterion(2, "braiding table incl. Ups[2,2] = 0", ok_ups && covered, t, 1.0);
        criterion(3, "group-law table and symmetries", ok_a && covered, t, 1.0);
    }
    {
        auto t0 = clock::now();
        bool ok = report_ok(verify_relation_suite(10, eng));
        criterion(4, "relation suite through weight 10", ok, seconds_since(t0), 30.0);
    }
    {
        auto t0 = clock::now();
        bool ok = report_ok(verify_commutators(eng));
        criterion(5, "generator commutator table", ok, seconds_since(t0), 5.0);
    }
    {
        auto t0 = clock::now();
        bool ok = report_ok(verify_vieta_chern(eng));
        criterion(6, "vieta coordinates and chern classes", ok, seconds_since(t0), 60.0);
    }
    {
        auto t0 = clock::now();
        bool ok = report_ok(verify_qsym(eng));
        criterion(7, "qsym product vs quasi-shuffle oracle", ok, seconds_since(t0), 10.0);
    }
    {
        auto t0 = clock::now();
        bool ok = report_ok(verify_hopf(8, eng));
        criterion(8, "hopf axioms, module and comodule", ok, seconds_since(t0), 30.0);
    }
    {
        auto t0 = clock::now();
        bool ok = report_ok(verify_braiding(8, eng));
        criterion(9, "braiding: YB, swap form, involution", ok, seconds_since(t0), 60.0);
    }
    {
        auto t0 = clock::now();
        bool ok = report_ok(verify_dims(10, 8, eng));
        criterion(10, "graded dimensions and freeness", ok, seconds_since(t0), 60.0);
    }
    {
        auto t0 = clock::now();
        bool ok = report_ok(verify_splitting(8));
        criterion(11, "splitting coefficients", ok, seconds_since(t0), 30.0);
    }
    {
        auto t0 = clock::now();
        auto a = reproduce_figures(eng);
        auto b = reproduce_figures(eng);
        setenv("NCFGL_THREADS", "1", 1);
        auto c = reproduce_figures(eng);
        setenv("NCFGL_THREADS", "8", 1);
        auto d = reproduce_figures(eng);
        bool ok = !a.empty() && a == b && a == c && a == d;
        criterion(12, "figure reproduction is deterministic", ok, seconds_since(t0), 120.0);
    }

    std::printf("%s: %d of 12 criteria failed\n", g_failures ? "FAIL" : "OK", g_failures);
    return g_failures ? 1 : 0;
}
