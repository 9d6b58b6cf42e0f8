#pragma once

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "anfield/classification.hpp"
#include "anfield/jw_symbolic.hpp"
#include "anfield/recoupling_oracle.hpp"
#include "anfield/threads.hpp"

namespace anfield {

struct SuiteReport {
  std::string name;
  bool pass = true;
  long checked = 0;
  double seconds = 0;
  std::vector<std::string> failures;

  void fail(const std::string& what) {
    pass = false;
    if (failures.size() < 32) failures.push_back(what);
  }
  void merge(const CheckReport& r) {
    checked += r.checked;
    if (!r.pass) {
      pass = false;
      for (const auto& f : r.failures)
        if (failures.size() < 32) failures.push_back(f);
    }
  }
};

namespace detail {

class SuiteTimer {
 public:
  explicit SuiteTimer(SuiteReport& rep) : rep_(rep), t0_(std::chrono::steady_clock::now()) {}
  ~SuiteTimer() {
    rep_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  SuiteReport& rep_;
  std::chrono::steady_clock::time_point t0_;
};

inline void progress(const std::string& what) { std::cerr << "  .. " << what << "\n"; }

}  // namespace detail

// criterion: symbolic Jones-Wenzl projectors up to nmax are idempotent,
// killed by every e_i on both sides, and have identity coefficient 1
inline SuiteReport run_jw_suite(long nmax = 8) {
  SuiteReport rep{"jones-wenzl"};
  detail::SuiteTimer timer(rep);
  IntPoly delta = IntPoly::variable();
  for (long n = 1; n <= nmax; ++n) {
    ClearedJW f = cleared_jones_wenzl((int)n);
    auto it = f.num.terms().find(PlanarDiagram::identity((int)n));
    if (it == f.num.terms().end() || !(it->second == f.den))
      rep.fail("jw(" + std::to_string(n) + "): identity coefficient is not 1");
    for (long i = 1; i < n; ++i) {
      auto ei = TLMorphism<IntPoly>::e_generator((int)n, (int)i, delta);
      if (!compose(ei, f.num).is_zero())
        rep.fail("jw(" + std::to_string(n) + "): e_" + std::to_string(i) + " o f != 0");
      if (!compose(f.num, ei).is_zero())
        rep.fail("jw(" + std::to_string(n) + "): f o e_" + std::to_string(i) + " != 0");
      rep.checked += 2;
    }
    if (!jw_idempotent(f)) rep.fail("jw(" + std::to_string(n) + "): not idempotent");
    rep.checked += 2;
  }
  return rep;
}

// criterion: the closed theta formula equals the diagrammatic theta network
// for every admissible triple with labels <= label_max, at every level
// k <= kmax and every monoidal parameter; the minus pivotal differs by the
// recorded sign (-1)^{(a+b+c)/2}
inline SuiteReport run_theta_oracle_suite(long kmax = 8, long label_max = 6) {
  SuiteReport rep{"theta-oracle"};
  detail::SuiteTimer timer(rep);
  struct Task {
    long k, m;
  };
  std::vector<Task> tasks;
  for (long k = 1; k <= kmax; ++k)
    for (long m : enumerate_monoidal(k)) tasks.push_back({k, m});
  std::vector<CheckReport> results(tasks.size());
  parallel_for(tasks.size(), [&](size_t i) {
    auto [k, m] = tasks[i];
    CategoryParams plus = CategoryParams::make(k, m, PivotalSign::plus);
    FusionData fdp(plus);
    FusionData fdm(CategoryParams::make(k, m, PivotalSign::minus));
    RecouplingOracle oracle(plus);
    CheckReport& out = results[i];
    long lim = std::min(k, label_max);
    for (long a = 0; a <= lim; ++a)
      for (long b = 0; b <= lim; ++b)
        for (long c = 0; c <= lim; ++c) {
          if (!admissible(k, a, b, c)) continue;
          CyclotomicNumber net = oracle.theta_net(a, b, c);
          ++out.checked;
          if (!(fdp.theta(a, b, c) == net)) {
            std::ostringstream os;
            os << "theta+ mismatch k=" << k << " m=" << m << " (" << a << "," << b << "," << c
               << ")";
            out.fail(os.str());
          }
          CyclotomicNumber expect = ((a + b + c) / 2) % 2 == 1 ? -net : net;
          if (!(fdm.theta(a, b, c) == expect)) {
            std::ostringstream os;
            os << "theta- mismatch k=" << k << " m=" << m << " (" << a << "," << b << "," << c
               << ")";
            out.fail(os.str());
          }
        }
  });
  for (const auto& r : results) rep.merge(r);
  return rep;
}

// criterion: the closed 6j formula equals the Gram-system oracle for every
// admissible label tuple at every k <= kmax, every monoidal parameter
inline SuiteReport run_sixj_oracle_suite(long kmax = 6) {
  SuiteReport rep{"sixj-oracle"};
  detail::SuiteTimer timer(rep);
  struct Task {
    long k, m;
  };
  std::vector<Task> tasks;
  for (long k = 1; k <= kmax; ++k)
    for (long m : enumerate_monoidal(k)) tasks.push_back({k, m});
  std::vector<CheckReport> results(tasks.size());
  parallel_for(tasks.size(), [&](size_t i) {
    auto [k, m] = tasks[i];
    detail::progress("sixj-oracle k=" + std::to_string(k) + " m=" + std::to_string(m));
    CategoryParams params = CategoryParams::make(k, m);
    FusionData fd(params);
    RecouplingOracle oracle(params);
    CheckReport& out = results[i];
    for (const auto& L : fd.all_six_j_labels()) {
      ++out.checked;
      try {
        if (!(oracle.six_j_oracle(L) == fd.six_j(L))) {
          std::ostringstream os;
          os << "6j mismatch k=" << k << " m=" << m << " " << L.str();
          out.fail(os.str());
        }
      } catch (const AnfieldError& e) {
        std::ostringstream os;
        os << "6j oracle error k=" << k << " m=" << m << " " << L.str() << ": " << e.what();
        out.fail(os.str());
      }
    }
  });
  for (const auto& r : results) rep.merge(r);
  return rep;
}

// criterion: the Biedenharn-Elliott identity holds for all label tuples at
// k <= kmax (all monoidal parameters), and an injected single-entry fault is
// detected
inline SuiteReport run_pentagon_suite(long kmax = 5) {
  SuiteReport rep{"pentagon"};
  detail::SuiteTimer timer(rep);
  struct Task {
    long k, m;
  };
  std::vector<Task> tasks;
  for (long k = 1; k <= kmax; ++k)
    for (long m : enumerate_monoidal(k)) tasks.push_back({k, m});
  std::vector<CheckReport> results(tasks.size());
  parallel_for(tasks.size(), [&](size_t i) {
    auto [k, m] = tasks[i];
    detail::progress("pentagon k=" + std::to_string(k) + " m=" + std::to_string(m));
    FusionData fd(CategoryParams::make(k, m));
    results[i] = pentagon_check(fd);
  });
  for (const auto& r : results) rep.merge(r);
  // fault injection: perturb one 6j entry by +1 and demand a counterexample
  FusionData fd(CategoryParams::make(2, 1));
  std::map<std::array<long, 6>, CyclotomicNumber> bad;
  bad[{1, 1, 0, 1, 1, 0}] =
      fd.six_j(1, 1, 0, 1, 1, 0) + CyclotomicNumber::one(fd.params().order());
  ++rep.checked;
  if (pentagon_check(fd, &bad).pass)
    rep.fail("pentagon fault injection was not detected");
  return rep;
}

// criterion: Verlinde recovers the fusion multiplicities from the S matrix
// in every modular case k <= kmax, and a perturbed S entry is detected
inline SuiteReport run_verlinde_suite(long kmax = 8) {
  SuiteReport rep{"verlinde"};
  detail::SuiteTimer timer(rep);
  struct Task {
    long k, ell;
  };
  std::vector<Task> tasks;
  for (long k = 1; k <= kmax; ++k)
    for (long ell : valid_ells(k)) {
      if (k % 2 == 1 && ell % 2 == 1) continue;  // non-modular
      tasks.push_back({k, ell});
    }
  std::vector<CheckReport> results(tasks.size());
  parallel_for(tasks.size(), [&](size_t i) {
    auto [k, ell] = tasks[i];
    ModularData md(BraidingParams::make(k, ell));
    results[i] = md.verlinde_check();
  });
  for (const auto& r : results) rep.merge(r);
  // fault injection
  ModularData md(BraidingParams::make(2, 1));
  CycloMatrix s = md.s_matrix();
  s[1][2] = s[1][2] + CyclotomicNumber::one(md.params().order());
  s[2][1] = s[1][2];
  ++rep.checked;
  if (md.verlinde_check(&s).pass) rep.fail("verlinde fault injection was not detected");
  return rep;
}

// criterion: exact S-matrix rank equals (k+1)/2 for k, ell both odd and
// k+1 otherwise, for all valid ell, k <= kmax
inline SuiteReport run_rank_suite(long kmax = 9) {
  SuiteReport rep{"modularity-rank"};
  detail::SuiteTimer timer(rep);
  struct Task {
    long k, ell;
  };
  std::vector<Task> tasks;
  for (long k = 1; k <= kmax; ++k)
    for (long ell : valid_ells(k)) tasks.push_back({k, ell});
  std::vector<CheckReport> results(tasks.size());
  parallel_for(tasks.size(), [&](size_t i) {
    auto [k, ell] = tasks[i];
    ModularData md(BraidingParams::make(k, ell));
    long want = (k % 2 == 1 && ell % 2 == 1) ? (k + 1) / 2 : k + 1;
    ++results[i].checked;
    if (md.modularity_rank() != want) {
      std::ostringstream os;
      os << "rank mismatch k=" << k << " ell=" << ell << ": got " << md.modularity_rank()
         << " want " << want;
      results[i].fail(os.str());
    }
    if (md.is_modular() != (want == k + 1)) results[i].fail("is_modular flag inconsistent");
  });
  for (const auto& r : results) rep.merge(r);
  return rep;
}

// criterion: exact T-matrix order matches the k+ell mod 4 table for
// 2 <= k <= kmax and equals (1, 2, 4, 4) for the four A_2 categories
inline SuiteReport run_conductor_suite(long kmax = 10) {
  SuiteReport rep{"conductor"};
  detail::SuiteTimer timer(rep);
  for (long k = 2; k <= kmax; ++k)
    for (long ell : valid_ells(k)) {
      ModularData md(BraidingParams::make(k, ell));
      long want = 0;
      switch ((k + ell) % 4) {
        case 0: want = k + 2; break;
        case 1: want = 4 * (k + 2); break;
        case 2: want = 2 * (k + 2); break;
        case 3: want = 4 * (k + 2); break;
      }
      ++rep.checked;
      if (md.conductor() != want) {
        std::ostringstream os;
        os << "conductor mismatch k=" << k << " ell=" << ell << ": got " << md.conductor()
           << " want " << want;
        rep.fail(os.str());
      }
    }
  const std::map<A2Name, long> a2_want{{A2Name::RepZ2, 1},
                                       {A2Name::sVec, 2},
                                       {A2Name::Sem, 4},
                                       {A2Name::SemBar, 4}};
  for (auto [name, want] : a2_want) {
    for (long ell : {a2_representatives(name).first, a2_representatives(name).second}) {
      ModularData md(BraidingParams::make(1, ell));
      ++rep.checked;
      if (md.conductor() != want)
        rep.fail("A2 conductor mismatch for " + to_string(name) + " at ell=" +
                 std::to_string(ell));
    }
  }
  return rep;
}

// criterion: the twist-based identification of the invertible subcategory
// agrees with the table for all valid (k, ell), k <= kmax
inline SuiteReport run_invertible_suite(long kmax = 16) {
  SuiteReport rep{"invertible-subcategory"};
  detail::SuiteTimer timer(rep);
  for (long k = 1; k <= kmax; ++k)
    for (long ell : valid_ells(k)) {
      ++rep.checked;
      if (invertible_subcategory_table(k, ell) != invertible_subcategory_twist(k, ell)) {
        std::ostringstream os;
        os << "invertible mismatch k=" << k << " ell=" << ell;
        rep.fail(os.str());
      }
    }
  return rep;
}

// criterion: sum of squared dimensions equals 2(k+2)/(2-s^4-s^{-4}) for all
// valid parameters, k <= kmax
inline SuiteReport run_global_dim_suite(long kmax = 12) {
  SuiteReport rep{"global-dimension"};
  detail::SuiteTimer timer(rep);
  for (long k = 1; k <= kmax; ++k)
    for (long m : enumerate_monoidal(k))
      for (PivotalSign piv : {PivotalSign::plus, PivotalSign::minus}) {
        FusionData fd(CategoryParams::make(k, m, piv));
        CyclotomicNumber sum = CyclotomicNumber::zero(fd.params().order());
        for (long n = 0; n <= k; ++n) {
          CyclotomicNumber d = fd.qdim(n);
          sum = sum + d * d;
        }
        ++rep.checked;
        if (!(sum == fd.global_dim())) {
          std::ostringstream os;
          os << "global dimension mismatch k=" << k << " m=" << m << " pivotal "
             << to_string(piv);
          rep.fail(os.str());
        }
      }
  return rep;
}

// criterion: r(a,b,c) r(b,a,c) = twist(c) / (twist(a) twist(b)) for all
// admissible triples and all valid ell, k <= kmax
inline SuiteReport run_ribbon_suite(long kmax = 8) {
  SuiteReport rep{"ribbon"};
  detail::SuiteTimer timer(rep);
  for (long k = 1; k <= kmax; ++k)
    for (long ell : valid_ells(k)) {
      ModularData md(BraidingParams::make(k, ell));
      for (long a = 0; a <= k; ++a)
        for (long b = 0; b <= k; ++b)
          for (long c : fuse(k, a, b)) {
            CyclotomicNumber lhs = md.r_coeff(a, b, c) * md.r_coeff(b, a, c) * md.twist(a) *
                                   md.twist(b);
            ++rep.checked;
            if (!(lhs == md.twist(c))) {
              std::ostringstream os;
              os << "ribbon mismatch k=" << k << " ell=" << ell << " (" << a << "," << b << ","
                 << c << ")";
              rep.fail(os.str());
            }
          }
    }
  return rep;
}

// criterion: phi(k+2) monoidal categories with a faithful complete
// invariant; braided monoidal classes of size 4 (k >= 2) and the four named
// A_2 categories at k = 1; Galois orbit partitions match the summary table
inline SuiteReport run_counts_suite(long kmax_classes = 10, long kmax_orbits = 9) {
  SuiteReport rep{"classification-counts"};
  detail::SuiteTimer timer(rep);
  for (long k = 1; k <= 30; ++k) {
    ++rep.checked;
    if ((long)enumerate_monoidal(k).size() != euler_phi(k + 2))
      rep.fail("monoidal count differs from phi(k+2) at k=" + std::to_string(k));
  }
  // faithful complete invariant
  for (long k = 1; k <= 12; ++k) {
    auto ms = enumerate_monoidal(k);
    for (size_t i = 0; i < ms.size(); ++i)
      for (size_t j = i + 1; j < ms.size(); ++j) {
        ++rep.checked;
        if (complete_invariant(k, ms[i]) == complete_invariant(k, ms[j]))
          rep.fail("complete invariant collision at k=" + std::to_string(k));
      }
  }
  // braided classes of size 4 for k >= 2
  for (long k = 2; k <= kmax_classes; ++k) {
    auto ells = valid_ells(k);
    for (long ell : ells) {
      long cls = 0;
      for (long e2 : ells)
        if (monoidal_equiv(k, ell, e2)) ++cls;
      ++rep.checked;
      if (cls != 4)
        rep.fail("monoidal class size != 4 at k=" + std::to_string(k) +
                 " ell=" + std::to_string(ell));
    }
  }
  // k=1: four named categories; paired representatives agree on invariants
  {
    auto named = enumerate_braided(1).named;
    ++rep.checked;
    if (named.size() != 4) rep.fail("A2 enumeration does not have four entries");
    for (auto& [name, reps] : named) {
      BraidingParams p1 = BraidingParams::make(1, reps.first);
      BraidingParams p2 = BraidingParams::make(1, reps.second);
      ModularData m1(p1), m2(p2);
      ++rep.checked;
      if (!(p1.delta == p2.delta) || !(m1.twist(1) == m2.twist(1)) ||
          m1.conductor() != m2.conductor())
        rep.fail("A2 identification inconsistent for " + to_string(name));
    }
  }
  // Galois orbits vs the summary table
  for (long k = 2; k <= kmax_orbits; ++k) {
    auto orbits = galois_orbits(k);
    ++rep.checked;
    if (k % 2 == 0) {
      if (orbits.size() != 1)
        rep.fail("expected a single Galois orbit at even k=" + std::to_string(k));
    } else {
      if (orbits.size() != 3) {
        rep.fail("expected three Galois orbits at odd k=" + std::to_string(k));
        continue;
      }
      for (const auto& orbit : orbits) {
        long cls0 = mod_pos(orbit.front(), orbit.front() % 2 == 0 ? 2 : 4);
        for (long ell : orbit) {
          long cls = mod_pos(ell, ell % 2 == 0 ? 2 : 4);
          if (cls != cls0 || (orbit.front() % 2) != (ell % 2)) {
            rep.fail("Galois orbit not a residue class at k=" + std::to_string(k));
            break;
          }
        }
      }
      // the three classes: even; 1 mod 4; 3 mod 4
      long evens = 0, one4 = 0, three4 = 0;
      for (const auto& orbit : orbits) {
        if (orbit.front() % 2 == 0) ++evens;
        else if (mod_pos(orbit.front(), 4) == 1) ++one4;
        else ++three4;
      }
      if (evens != 1 || one4 != 1 || three4 != 1)
        rep.fail("Galois orbit classes do not match the summary at k=" + std::to_string(k));
    }
  }
  return rep;
}

inline std::vector<SuiteReport> run_all_suites() {
  return {run_jw_suite(),       run_theta_oracle_suite(), run_sixj_oracle_suite(),
          run_pentagon_suite(), run_verlinde_suite(),     run_rank_suite(),
          run_conductor_suite(), run_invertible_suite(),  run_global_dim_suite(),
          run_ribbon_suite(),   run_counts_suite()};
}

}  // namespace anfield
