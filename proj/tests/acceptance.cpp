// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Each criterion is an exact-identity or table-reproduction check with a
// pinned level bound and wall-clock budget.

#include <cstdio>
#include <iostream>

#include "anfield/verify.hpp"

using namespace anfield;

namespace {

struct Criterion {
  int number;
  const char* description;
  double budget_seconds;
  SuiteReport (*run)();
};

bool report(const Criterion& c, const SuiteReport& r) {
  bool ok = r.pass && r.seconds < c.budget_seconds;
  std::printf("%s  criterion %2d: %s (%ld checks, %.2fs, budget %.0fs)\n",
              ok ? "PASS" : "FAIL", c.number, c.description, r.checked, r.seconds,
              c.budget_seconds);
  if (!r.pass)
    for (const auto& f : r.failures) std::printf("      %s\n", f.c_str());
  if (r.pass && !ok) std::printf("      exceeded the time budget\n");
  std::fflush(stdout);
  return ok;
}

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "Jones-Wenzl projectors n <= 8: symbolic idempotency, killed by all e_i",
       10.0, [] { return run_jw_suite(8); }},
      {2, "theta formula equals the closed theta network, labels <= 6, k <= 8",
       60.0, [] { return run_theta_oracle_suite(8, 6); }},
      {3, "6j formula equals the Gram-system diagram oracle, all tuples, k <= 6",
       300.0, [] { return run_sixj_oracle_suite(6); }},
      {4, "Biedenharn-Elliott pentagon, all tuples k <= 5, with fault injection",
       120.0, [] { return run_pentagon_suite(5); }},
      {5, "Verlinde formula recovers fusion rules in every modular case, k <= 8",
       60.0, [] { return run_verlinde_suite(8); }},
      {6, "S-matrix rank matches (k+1)/2 / full-rank prediction, k <= 9",
       60.0, [] { return run_rank_suite(9); }},
      {7, "T-matrix order matches the k+ell mod 4 conductor table, k <= 10, and A_2",
       30.0, [] { return run_conductor_suite(10); }},
      {8, "twist-based invertible subcategory equals the table, k <= 16",
       30.0, [] { return run_invertible_suite(16); }},
      {9, "sum of squared dimensions equals 2(k+2)/(2-s^4-s^-4), k <= 12",
       10.0, [] { return run_global_dim_suite(12); }},
      {10, "ribbon relation r(a,b,c) r(b,a,c) twist(a) twist(b) = twist(c), k <= 8",
       30.0, [] { return run_ribbon_suite(8); }},
      {11, "classification counts, A_2 identifications, Galois orbit partitions",
       10.0, [] { return run_counts_suite(10, 9); }},
  };
  bool all = true;
  for (const auto& c : criteria) all = report(c, c.run()) && all;
  std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAILED");
  return all ? 0 : 1;
}
