#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "anfield/modular.hpp"

namespace anfield {

// the four braided fusion categories with A_2 fusion rules
enum class A2Name { RepZ2, sVec, Sem, SemBar };

inline std::string to_string(A2Name n) {
  switch (n) {
    case A2Name::RepZ2: return "Rep(Z/2Z)";
    case A2Name::sVec: return "sVec";
    case A2Name::Sem: return "Sem";
    case A2Name::SemBar: return "SemBar";
  }
  return "?";
}

// the two ell representatives of each named A_2 category
inline std::pair<long, long> a2_representatives(A2Name n) {
  switch (n) {
    case A2Name::RepZ2: return {7, 11};
    case A2Name::sVec: return {1, 5};
    case A2Name::Sem: return {4, 8};
    case A2Name::SemBar: return {2, 10};
  }
  throw DomainError("a2_representatives: bad name");
}

inline const std::vector<A2Name>& a2_names() {
  static const std::vector<A2Name> all{A2Name::RepZ2, A2Name::sVec, A2Name::Sem, A2Name::SemBar};
  return all;
}

// monoidal categories with A_{k+1} fusion rules: residues coprime to k+2
inline std::vector<long> enumerate_monoidal(long k) {
  if (k < 1) throw DomainError("enumerate_monoidal: k must be >= 1");
  std::vector<long> out;
  for (long m : units_mod(k + 2))
    if (m != 0 || k + 2 == 1) out.push_back(m);
  return out;
}

struct BraidedEnumeration {
  std::vector<long> ells;                                   // k >= 2: all valid residues
  std::vector<std::pair<A2Name, std::pair<long, long>>> named;  // k == 1
};

inline BraidedEnumeration enumerate_braided(long k) {
  if (k < 1) throw DomainError("enumerate_braided: k must be >= 1");
  BraidedEnumeration out;
  if (k == 1) {
    for (A2Name n : a2_names()) out.named.emplace_back(n, a2_representatives(n));
    return out;
  }
  out.ells = valid_ells(k);
  return out;
}

// braided C_{k,ell1} and C_{k,ell2} are monoidally equivalent iff
// ell1 == +-ell2 mod 2(k+2)
inline bool monoidal_equiv(long k, long ell1, long ell2) {
  long half = 2 * (k + 2);
  return mod_pos(ell1 - ell2, half) == 0 || mod_pos(ell1 + ell2, half) == 0;
}

// table of the maximal pointed subcategory, rows ell mod 4, columns k mod 4;
// dashes are unreachable because gcd(ell, k+2) = 1 forces ell odd for even k
inline A2Name invertible_subcategory_table(long k, long ell) {
  if (std::gcd(mod_pos(ell, k + 2), k + 2) != 1)
    throw DomainError("invertible_subcategory: invalid ell");
  static const std::optional<A2Name> table[4][4] = {
      // k mod 4:      0             1                2             3
      /* ell 0 */ {std::nullopt, A2Name::Sem, std::nullopt, A2Name::Sem},
      /* ell 1 */ {A2Name::RepZ2, A2Name::sVec, A2Name::sVec, A2Name::RepZ2},
      /* ell 2 */ {std::nullopt, A2Name::SemBar, std::nullopt, A2Name::SemBar},
      /* ell 3 */ {A2Name::RepZ2, A2Name::RepZ2, A2Name::sVec, A2Name::sVec},
  };
  auto cell = table[mod_pos(ell, 4)][mod_pos(k, 4)];
  if (!cell)
    throw AnfieldError("invertible_subcategory: unreachable table cell (coprimality)");
  return *cell;
}

// identification from first principles: the twist of X_k must match the
// twist of the nontrivial object of one of the four A_2 categories, with the
// + pivotal structure on both sides
inline A2Name invertible_subcategory_twist(long k, long ell) {
  ModularData md(BraidingParams::make(k, ell, PivotalSign::plus));
  CyclotomicNumber tw = md.twist(k);
  for (A2Name n : a2_names()) {
    ModularData a2(BraidingParams::make(1, a2_representatives(n).first, PivotalSign::plus));
    CyclotomicNumber tw2 = a2.twist(1);
    auto [x, y] = CyclotomicNumber::aligned(tw, tw2);
    if (x == y) return n;
  }
  throw AnfieldError("invertible_subcategory_twist: no A_2 twist matches");
}

enum class GroupName { Trivial, Z2 };

inline std::string to_string(GroupName g) { return g == GroupName::Z2 ? "Z/2Z" : "{e}"; }

// (tensor auto-equivalences, braided auto-equivalences)
inline std::pair<GroupName, GroupName> autoequivalence_groups(long k) {
  if (k < 1) throw DomainError("autoequivalence_groups: k must be >= 1");
  if (k <= 2) return {GroupName::Trivial, GroupName::Trivial};
  switch (mod_pos(k, 4)) {
    case 0: return {GroupName::Z2, GroupName::Trivial};
    case 1: return {GroupName::Trivial, GroupName::Trivial};
    case 2: return {GroupName::Z2, GroupName::Z2};
    default: return {GroupName::Trivial, GroupName::Trivial};
  }
}

struct AlgebraObjectRow {
  std::vector<long> summands;   // Jones-Wenzl labels, 0 denoting the unit
  std::string module_category;  // D/T/E name
  std::string when;             // applicability condition
  std::string commutative;      // commutativity condition in C^br_{k,ell}
};

inline std::vector<AlgebraObjectRow> algebra_objects(long k) {
  if (k < 1) throw DomainError("algebra_objects: k must be >= 1");
  std::vector<AlgebraObjectRow> rows;
  if (k % 2 == 0) {
    std::ostringstream mc;
    mc << "D_" << (k / 2 + 2);
    rows.push_back({{0, k}, mc.str(), "k even",
                    k % 4 == 0 ? "yes (k = 0 mod 4)" : "no (k = 2 mod 4)"});
  } else {
    std::ostringstream mc;
    mc << "T_" << ((k + 1) / 2);
    rows.push_back({{0, k}, mc.str(), "k, m both odd", "iff k*ell = 3 mod 4"});
  }
  if (k == 10) rows.push_back({{0, 6}, "E_6", "k = 10", "yes"});
  if (k == 16) rows.push_back({{0, 8, 16}, "E_7", "k = 16", "no"});
  if (k == 28) rows.push_back({{0, 10, 18, 28}, "E_8", "k = 28", "yes"});
  return rows;
}

// symbolic Drinfeld centre decomposition
struct CentreExpr {
  enum class Atom { Cbr, CbrRev, AdCbr, AdCbrRev, ZVecZ2 };
  struct Factor {
    Atom atom;
    long k = 0, m = 0;
  };
  std::vector<Factor> factors;  // Deligne product of the factors

  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& f : factors) {
      if (!first) os << " box ";
      first = false;
      switch (f.atom) {
        case Atom::Cbr: os << "C^br_{" << f.k << "," << f.m << "}"; break;
        case Atom::CbrRev: os << "C^br_{" << f.k << "," << f.m << "}^rev"; break;
        case Atom::AdCbr: os << "Ad(C^br_{" << f.k << "," << f.m << "})"; break;
        case Atom::AdCbrRev: os << "Ad(C^br_{" << f.k << "," << f.m << "})^rev"; break;
        case Atom::ZVecZ2: os << "Z(Vec(Z/2Z))"; break;
      }
    }
    return os.str();
  }
};

inline CentreExpr drinfeld_centre(long k, long m) {
  CategoryParams::make(k, m);  // validate
  CentreExpr e;
  if (k % 2 == 0 || m % 2 == 0) {
    e.factors.push_back({CentreExpr::Atom::Cbr, k, m});
    e.factors.push_back({CentreExpr::Atom::CbrRev, k, m});
  } else {
    e.factors.push_back({CentreExpr::Atom::AdCbr, k, m});
    e.factors.push_back({CentreExpr::Atom::AdCbrRev, k, m});
    e.factors.push_back({CentreExpr::Atom::ZVecZ2});
  }
  return e;
}

struct StructureDescriptors {
  int pivotal_count = 2;
  bool spherical = true;
  std::string dagger_base = "conjugate-linear reflection in a horizontal line";
  std::string dagger_family =
      "phi -> lambda^((n-m)/2) phi^dagger for lambda in R^x, on Hom(X^n -> X^m)";
  std::optional<long> equivariantisation_depth;  // k/2 + 1 for even k >= 4
};

inline StructureDescriptors pivotal_and_dagger_descriptors(long k, long m) {
  CategoryParams::make(k, m);  // validate
  StructureDescriptors d;
  if (k % 2 == 0 && k >= 4) d.equivariantisation_depth = k / 2 + 1;
  return d;
}

// the complete monoidal invariant q + q^{-1}
inline CyclotomicNumber complete_invariant(long k, long m) {
  return CategoryParams::make(k, m).delta;
}

}  // namespace anfield
