// Acceptance gate: one line per criterion, nonzero exit when any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "levi_analysis.hpp"
#include "verify_harness.hpp"

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& label) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion,
              label.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

bool strict(const symb::suite_result& r, double budget_seconds) {
  return r.pass && 100 * r.n_skipped_boundary < r.n_samples &&
         r.elapsed_seconds < budget_seconds;
}

std::string describe(const symb::suite_result& r) {
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "%s n=%zu violation=%.3g skipped=%zu elapsed=%.1fs",
                r.suite_name.c_str(), r.n_samples, r.max_violation,
                r.n_skipped_boundary, r.elapsed_seconds);
  return buf;
}

} // namespace

int main() {
  using clock = std::chrono::steady_clock;

  {
    const auto r = symb::run_suite("membership-9way-G", 1000000, 7);
    report(1, strict(r, 60.0), describe(r));
  }
  {
    const auto r = symb::run_suite("membership-9way-D1", 1000000, 7);
    report(2, strict(r, 60.0), describe(r));
  }
  {
    const auto r = symb::run_suite("roundtrip-F", 100000, 42);
    report(3, r.pass, describe(r));
  }
  {
    const auto a = symb::run_suite("diagram-omega1", 100000, 42);
    const auto b = symb::run_suite("diagram-d21", 100000, 42);
    report(4,
           a.pass && b.pass && a.max_violation <= 1e-10 &&
               b.max_violation <= 1e-10,
           describe(a) + " / " + describe(b));
  }
  {
    const auto r = symb::run_suite("levi-closed-form", 100000, 42);
    const symb::levi_report rep = symb::levi_value({0.5, 0.0}, 0.5);
    const bool oracle = std::abs(rep.levi_value - 0.375) <= 1e-12 &&
                        std::abs(rep.levi_value - rep.closed_form_value) <= 1e-12;
    report(5, r.pass && oracle, describe(r));
  }
  {
    const auto r = symb::run_suite("jacobian-det", 10000, 42);
    report(6, r.pass, describe(r));
  }
  {
    const auto a = symb::run_suite("q-invariance", 100000, 42);
    const auto b = symb::run_suite("orbit-path", 1000, 42);
    report(7, a.pass && b.pass, describe(a) + " / " + describe(b));
  }
  {
    const auto r = symb::run_suite("reindex-ab", 10000, 42);
    report(8, r.pass, describe(r));
  }
  {
    const auto r = symb::run_suite("so21-invariance", 100000, 42);
    report(9, r.pass, describe(r));
  }
  {
    const auto r = symb::run_suite("slit-plane", 100000, 42);
    report(10, r.pass, describe(r));
  }
  {
    const auto r = symb::run_suite("cr-residuals", 1000, 42);
    report(11, r.pass, describe(r));
  }
  {
    const auto t0 = clock::now();
    const auto first = symb::run_all(1.0, 42);
    const auto t1 = clock::now();
    const auto second = symb::run_all(1.0, 42);
    const auto t2 = clock::now();
    const double w1 = std::chrono::duration<double>(t1 - t0).count();
    const double w2 = std::chrono::duration<double>(t2 - t1).count();
    const bool reproducible =
        symb::certificate(first) == symb::certificate(second);
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "full registry twice, %.1fs and %.1fs, certificates %s",
                  w1, w2, reproducible ? "identical" : "DIFFER");
    report(12,
           symb::all_pass(first) && symb::all_pass(second) && reproducible &&
               w1 < 300.0 && w2 < 300.0,
           buf);
  }

  return g_failures == 0 ? 0 : 1;
}
