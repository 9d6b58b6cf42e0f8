// anfield: exact data and classification tables for the fusion categories
// with A_n fusion rules.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "anfield/json_io.hpp"
#include "anfield/jw_symbolic.hpp"
#include "anfield/verify.hpp"

using namespace anfield;

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  out += "\"";
  return out;
}

void emit_matrix_csv(std::ostream& os, const std::string& name, const CycloMatrix& m,
                     int digits) {
  os << "matrix,row,col,exact,re,im\n";
  for (size_t r = 0; r < m.size(); ++r)
    for (size_t c = 0; c < m[r].size(); ++c) {
      auto [re, im] = approx_complex(m[r][c], digits);
      os << name << "," << r << "," << c << "," << csv_escape(m[r][c].str()) << "," << re << ","
         << im << "\n";
    }
}

void print_value_line(std::ostream& os, const std::string& label, const CyclotomicNumber& v,
                      int digits) {
  auto [re, im] = approx_complex(v, digits);
  os << label << " = " << v.str() << "   ~ (" << re << ", " << im << ")\n";
}

int cmd_classify(long k, const std::string& format) {
  if (format == "json") {
    std::cout << classification_record(k).dump(2) << "\n";
    return 0;
  }
  std::cout << "A_" << (k + 1) << " fusion rules (k = " << k << ")\n";
  std::cout << "monoidal categories: m in";
  for (long m : enumerate_monoidal(k)) std::cout << " " << m;
  std::cout << "  (" << enumerate_monoidal(k).size() << " = phi(" << k + 2 << "))\n";
  auto braided = enumerate_braided(k);
  if (k == 1) {
    std::cout << "braided categories:\n";
    for (auto& [n, p] : braided.named)
      std::cout << "  " << to_string(n) << " = C^br_{1," << p.first << "} = C^br_{1," << p.second
                << "}\n";
  } else {
    std::cout << "braided categories: ell in";
    for (long ell : braided.ells) std::cout << " " << ell;
    std::cout << "\nmonoidal equivalence classes (ell1 = +-ell2 mod " << 2 * (k + 2) << "):\n";
    std::vector<bool> seen(4 * (k + 2), false);
    for (long ell : braided.ells) {
      if (seen[ell]) continue;
      std::cout << "  {";
      bool first = true;
      for (long e2 : braided.ells)
        if (monoidal_equiv(k, ell, e2)) {
          seen[e2] = true;
          std::cout << (first ? "" : ", ") << e2;
          first = false;
        }
      std::cout << "}\n";
    }
  }
  std::cout << "invertible subcategory by ell (table / twist):\n";
  for (long ell : valid_ells(k))
    std::cout << "  ell=" << ell << ": " << to_string(invertible_subcategory_table(k, ell))
              << " / " << to_string(invertible_subcategory_twist(k, ell)) << "\n";
  auto [tg, bg] = autoequivalence_groups(k);
  std::cout << "auto-equivalences: tensor " << to_string(tg) << ", braided " << to_string(bg)
            << "\n";
  std::cout << "algebra objects:\n";
  for (const auto& row : algebra_objects(k)) {
    std::cout << "  1";
    for (size_t i = 1; i < row.summands.size(); ++i) std::cout << " + f^(" << row.summands[i]
                                                               << ")";
    std::cout << "  ->  " << row.module_category << "-modules  [" << row.when
              << "; commutative: " << row.commutative << "]\n";
  }
  std::cout << "Drinfeld centres:\n";
  for (long m : enumerate_monoidal(k))
    std::cout << "  Z(C_{" << k << "," << m << "}) = " << drinfeld_centre(k, m).str() << "\n";
  std::cout << "Galois orbits of braidings:\n";
  for (const auto& orbit : galois_orbits(k)) {
    std::cout << "  {";
    for (size_t i = 0; i < orbit.size(); ++i) std::cout << (i ? ", " : "") << orbit[i];
    std::cout << "}\n";
  }
  auto d = pivotal_and_dagger_descriptors(k, enumerate_monoidal(k).front());
  std::cout << "pivotal structures: " << d.pivotal_count << " (both spherical)\n";
  std::cout << "dagger structures: " << d.dagger_base << "; family " << d.dagger_family << "\n";
  if (d.equivariantisation_depth)
    std::cout << "equivariantisation fusion graph depth: " << *d.equivariantisation_depth << "\n";
  return 0;
}

int cmd_data(long k, long ell, PivotalSign piv, const std::string& format, int digits) {
  BraidingParams bp = BraidingParams::make(k, ell, piv);
  if (format == "json") {
    std::cout << data_record(bp, digits).dump(2) << "\n";
    return 0;
  }
  ModularData md(bp);
  if (format == "csv") {
    std::cout << "key,value\n";
    std::cout << "k," << k << "\nell," << ell << "\npivotal," << to_string(piv) << "\nm," << bp.m
              << "\nconductor," << md.conductor() << "\nrank," << md.modularity_rank()
              << "\nis_modular," << (md.is_modular() ? 1 : 0) << "\ns,"
              << csv_escape(bp.s.str()) << "\ndelta," << csv_escape(bp.delta.str()) << "\n";
    emit_matrix_csv(std::cout, "S", md.s_matrix(), digits);
    emit_matrix_csv(std::cout, "T", md.t_matrix(), digits);
    return 0;
  }
  std::cout << "C^br_{" << k << "," << ell << "," << to_string(piv) << "}  (underlying m = "
            << bp.m << ")\n";
  print_value_line(std::cout, "s", bp.s, digits);
  print_value_line(std::cout, "delta", bp.delta, digits);
  for (long n = 0; n <= k; ++n)
    print_value_line(std::cout, "dim X_" + std::to_string(n), md.qdim(n), digits);
  print_value_line(std::cout, "global dim", md.global_dim(), digits);
  std::cout << "S matrix:\n";
  CycloMatrix s = md.s_matrix();
  for (long a = 0; a <= k; ++a) {
    for (long b = 0; b <= k; ++b) {
      auto [re, im] = approx_complex(s[a][b], digits);
      std::cout << "  (" << re << (im == "0" ? "" : ", " + im) << ")";
    }
    std::cout << "\n";
  }
  std::cout << "T diagonal:";
  for (long a = 0; a <= k; ++a) std::cout << " " << md.twist(a).str() << ";";
  std::cout << "\nconductor = " << md.conductor() << ", rank = " << md.modularity_rank()
            << ", modular = " << (md.is_modular() ? "yes" : "no") << "\n";
  return 0;
}

int cmd_sixj(long k, long m, const std::string& format, int digits) {
  FusionData fd(CategoryParams::make(k, m));
  fd.materialize_six_j_table();
  if (format == "json") {
    Json entries = Json::array();
    for (const auto& [key, val] : fd.table()) {
      entries.push_back(Json{{"a", key[0]},
                             {"b", key[1]},
                             {"e", key[2]},
                             {"c", key[3]},
                             {"d", key[4]},
                             {"f", key[5]},
                             {"value", to_json(val, digits)}});
    }
    std::cout << Json{{"k", k}, {"m", m}, {"six_j", entries}}.dump(2) << "\n";
    return 0;
  }
  if (format == "csv") {
    std::cout << "a,b,e,c,d,f,exact,re,im\n";
    for (const auto& [key, val] : fd.table()) {
      auto [re, im] = approx_complex(val, digits);
      std::cout << key[0] << "," << key[1] << "," << key[2] << "," << key[3] << "," << key[4]
                << "," << key[5] << "," << csv_escape(val.str()) << "," << re << "," << im
                << "\n";
    }
    return 0;
  }
  for (const auto& [key, val] : fd.table()) {
    auto [re, im] = approx_complex(val, digits);
    std::cout << "{" << key[0] << " " << key[1] << " " << key[2] << "; " << key[3] << " "
              << key[4] << " " << key[5] << "} = " << val.str() << "   ~ (" << re << ", " << im
              << ")\n";
  }
  return 0;
}

int cmd_theta(long k, long m, const std::string& format, int digits) {
  FusionData fd(CategoryParams::make(k, m));
  if (format == "csv") std::cout << "a,b,c,exact,re,im\n";
  Json entries = Json::array();
  for (long a = 0; a <= k; ++a)
    for (long b = 0; b <= k; ++b)
      for (long c = 0; c <= k; ++c) {
        if (!admissible(k, a, b, c)) continue;
        CyclotomicNumber v = fd.theta(a, b, c);
        if (format == "json") {
          entries.push_back(Json{{"a", a}, {"b", b}, {"c", c}, {"value", to_json(v, digits)}});
        } else {
          auto [re, im] = approx_complex(v, digits);
          if (format == "csv")
            std::cout << a << "," << b << "," << c << "," << csv_escape(v.str()) << "," << re
                      << "," << im << "\n";
          else
            std::cout << "theta(" << a << "," << b << "," << c << ") = " << v.str() << "   ~ ("
                      << re << ", " << im << ")\n";
        }
      }
  if (format == "json")
    std::cout << Json{{"k", k}, {"m", m}, {"theta", entries}}.dump(2) << "\n";
  return 0;
}

int cmd_jw(long n, const std::string& format) {
  ClearedJW f = cleared_jones_wenzl((int)n);
  // deterministic order
  std::map<PlanarDiagram, IntPoly> sorted(f.num.terms().begin(), f.num.terms().end());
  if (format == "json") {
    Json terms = Json::array();
    for (const auto& [d, c] : sorted) {
      Json pairs = Json::array();
      for (auto [a, b] : d.pair_list()) pairs.push_back(Json::array({a, b}));
      terms.push_back(Json{{"pairing", pairs},
                           {"coeff_num", c.to_laurent().str()},
                           {"coeff_den", f.den.to_laurent().str()}});
    }
    std::cout << Json{{"n", n}, {"loop_variable", "d"}, {"terms", terms}}.dump(2) << "\n";
    return 0;
  }
  std::cout << "f^(" << n << ") over common denominator " << f.den.to_laurent().str() << "\n";
  for (const auto& [d, c] : sorted) {
    std::cout << "  [";
    bool first = true;
    for (auto [a, b] : d.pair_list()) {
      std::cout << (first ? "" : " ") << "(" << a << "," << b << ")";
      first = false;
    }
    std::cout << "]  " << c.to_laurent().str() << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& suite, long kmax) {
  std::vector<SuiteReport> reports;
  if (suite == "jw") reports.push_back(run_jw_suite(kmax > 0 ? std::min(kmax + 1, 8L) : 8));
  else if (suite == "theta-oracle")
    reports.push_back(run_theta_oracle_suite(kmax > 0 ? kmax : 8));
  else if (suite == "sixj-oracle")
    reports.push_back(run_sixj_oracle_suite(kmax > 0 ? kmax : 6));
  else if (suite == "pentagon")
    reports.push_back(run_pentagon_suite(kmax > 0 ? kmax : 5));
  else if (suite == "verlinde")
    reports.push_back(run_verlinde_suite(kmax > 0 ? kmax : 8));
  else if (suite == "tables") {
    reports.push_back(run_rank_suite(kmax > 0 ? kmax : 9));
    reports.push_back(run_conductor_suite(kmax > 0 ? kmax : 10));
    reports.push_back(run_invertible_suite(kmax > 0 ? kmax : 16));
    reports.push_back(run_global_dim_suite(kmax > 0 ? kmax : 12));
    reports.push_back(run_ribbon_suite(kmax > 0 ? kmax : 8));
    reports.push_back(run_counts_suite());
  } else {
    std::cerr << "unknown suite '" << suite
              << "' (expected jw, theta-oracle, sixj-oracle, pentagon, verlinde, tables)\n";
    return 2;
  }
  bool all = true;
  for (const auto& r : reports) {
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  (" << r.checked
              << " checks, " << r.seconds << "s)\n";
    for (const auto& f : r.failures) std::cout << "      " << f << "\n";
    all = all && r.pass;
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact data for fusion categories with A_n fusion rules"};
  app.require_subcommand(1);

  long k = 0, ell = 0, m = 1, n = 1, kmax = 0;
  int digits = 12;
  std::string format = "text", pivotal = "+", suite;

  auto* classify = app.add_subcommand("classify", "classification record for one level k");
  classify->add_option("--k", k, "level k >= 1")->required();
  classify->add_option("--format", format, "json|text");

  auto* data = app.add_subcommand("data", "modular data of one braided category");
  data->add_option("--k", k, "level k >= 1")->required();
  data->add_option("--ell", ell, "braiding parameter mod 4(k+2)")->required();
  data->add_option("--pivotal", pivotal, "+ or -");
  data->add_option("--format", format, "json|csv|text");
  data->add_option("--digits", digits, "decimal digits in annotations");

  auto* sixj = app.add_subcommand("sixj", "full 6j table of one monoidal category");
  sixj->add_option("--k", k, "level k >= 1")->required();
  sixj->add_option("--m", m, "monoidal parameter coprime to k+2");
  sixj->add_option("--format", format, "json|csv|text");
  sixj->add_option("--digits", digits, "decimal digits in annotations");

  auto* theta = app.add_subcommand("theta", "theta symbols of one monoidal category");
  theta->add_option("--k", k, "level k >= 1")->required();
  theta->add_option("--m", m, "monoidal parameter coprime to k+2");
  theta->add_option("--format", format, "json|csv|text");
  theta->add_option("--digits", digits, "decimal digits in annotations");

  auto* jw = app.add_subcommand("jw", "symbolic Jones-Wenzl projector");
  jw->add_option("--n", n, "strand count n >= 0")->required();
  jw->add_option("--format", format, "json|text");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "jw|theta-oracle|sixj-oracle|pentagon|verlinde|tables")
      ->required();
  verify->add_option("--k-max", kmax, "override the level bound of the sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (classify->parsed()) return cmd_classify(k, format);
    if (data->parsed())
      return cmd_data(k, ell, pivotal == "-" ? PivotalSign::minus : PivotalSign::plus, format,
                      digits);
    if (sixj->parsed()) return cmd_sixj(k, m, format, digits);
    if (theta->parsed()) return cmd_theta(k, m, format, digits);
    if (jw->parsed()) return cmd_jw(n, format);
    if (verify->parsed()) return cmd_verify(suite, kmax);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const AnfieldError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
