#pragma once

#include <json.hpp>

#include <string>

#include "anfield/classification.hpp"
#include "anfield/diagram.hpp"
#include "anfield/modular.hpp"

namespace anfield {

using Json = nlohmann::json;

inline Json json_integer(const BigInt& v) {
  if (v <= BigInt(INT64_MAX) && v >= BigInt(INT64_MIN))
    return Json((int64_t)v.convert_to<long long>());
  return Json(v.str());  // beyond 64-bit, emit the exact decimal string
}

// canonical form: {"order": N, "coeffs": [[num, den], ...], "approx": [re, im]}
inline Json to_json(const CyclotomicNumber& x, int digits = 12) {
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs())
    coeffs.push_back(Json::array({json_integer(rat_num(c)), json_integer(rat_den(c))}));
  auto [re, im] = approx_complex(x, digits);
  return Json{{"order", x.order()}, {"coeffs", coeffs},
              {"approx", Json::array({std::stod(re), std::stod(im)})}};
}

inline Json to_json(const CycloMatrix& m, int digits = 12) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(to_json(x, digits));
    rows.push_back(std::move(r));
  }
  return rows;
}

// pairing list in the counterclockwise boundary numbering
inline Json to_json(const PlanarDiagram& d) {
  Json pairs = Json::array();
  for (auto [a, b] : d.pair_list()) pairs.push_back(Json::array({a, b}));
  return Json{{"bottom", d.bottom_points()}, {"top", d.top_points()}, {"pairing", pairs}};
}

inline Json to_json(const CentreExpr& e) {
  Json factors = Json::array();
  for (const auto& f : e.factors) {
    switch (f.atom) {
      case CentreExpr::Atom::Cbr:
        factors.push_back(Json{{"atom", "Cbr"}, {"k", f.k}, {"m", f.m}});
        break;
      case CentreExpr::Atom::CbrRev:
        factors.push_back(Json{{"atom", "CbrRev"}, {"k", f.k}, {"m", f.m}});
        break;
      case CentreExpr::Atom::AdCbr:
        factors.push_back(Json{{"atom", "AdCbr"}, {"k", f.k}, {"m", f.m}});
        break;
      case CentreExpr::Atom::AdCbrRev:
        factors.push_back(Json{{"atom", "AdCbrRev"}, {"k", f.k}, {"m", f.m}});
        break;
      case CentreExpr::Atom::ZVecZ2:
        factors.push_back(Json{{"atom", "ZVecZ2"}});
        break;
    }
  }
  return Json{{"product", factors}, {"text", e.str()}};
}

// full data record of one braided category, the payload of `data`
inline Json data_record(const BraidingParams& bp, int digits = 12) {
  ModularData md(bp);
  Json dims = Json::array();
  for (long n = 0; n <= bp.k; ++n) dims.push_back(to_json(md.qdim(n), digits));
  return Json{{"k", bp.k},
              {"ell", bp.ell},
              {"pivotal", to_string(bp.pivotal)},
              {"m", bp.m},
              {"m_naive", bp.naive_m()},
              {"s2_sign_vs_naive_q", bp.s2_sign},
              {"s", to_json(bp.s, digits)},
              {"delta", to_json(bp.delta, digits)},
              {"dims", dims},
              {"global_dim", to_json(md.global_dim(), digits)},
              {"S", to_json(md.s_matrix(), digits)},
              {"T", to_json(md.t_matrix(), digits)},
              {"conductor", md.conductor()},
              {"rank", md.modularity_rank()},
              {"is_modular", md.is_modular()}};
}

inline Json classification_record(long k) {
  Json rec;
  rec["k"] = k;
  rec["monoidal"] = Json::array();
  for (long m : enumerate_monoidal(k)) {
    rec["monoidal"].push_back(
        Json{{"m", m}, {"invariant_delta", to_json(complete_invariant(k, m))}});
  }
  auto braided = enumerate_braided(k);
  if (k == 1) {
    Json named = Json::array();
    for (auto& [n, p] : braided.named)
      named.push_back(Json{{"name", to_string(n)}, {"ells", Json::array({p.first, p.second})}});
    rec["braided"] = named;
  } else {
    Json ells = Json::array();
    for (long ell : braided.ells) ells.push_back(ell);
    rec["braided"] = ells;
    // partition into monoidal-equivalence classes
    Json classes = Json::array();
    std::vector<bool> seen(4 * (k + 2), false);
    for (long ell : braided.ells) {
      if (seen[ell]) continue;
      Json cls = Json::array();
      for (long e2 : braided.ells)
        if (monoidal_equiv(k, ell, e2) && !seen[e2]) {
          seen[e2] = true;
          cls.push_back(e2);
        }
      classes.push_back(std::move(cls));
    }
    rec["monoidal_classes_of_braidings"] = classes;
  }
  Json inv = Json::array();
  for (long ell : valid_ells(k))
    inv.push_back(Json{{"ell", ell},
                       {"table", to_string(invertible_subcategory_table(k, ell))},
                       {"twist", to_string(invertible_subcategory_twist(k, ell))}});
  rec["invertible_subcategory"] = inv;
  auto [tg, bg] = autoequivalence_groups(k);
  rec["autoequivalences"] = Json{{"tensor", to_string(tg)}, {"braided", to_string(bg)}};
  Json algebras = Json::array();
  for (const auto& row : algebra_objects(k)) {
    Json summands = Json::array();
    for (long s : row.summands) summands.push_back(s);
    algebras.push_back(Json{{"summands", summands},
                            {"module_category", row.module_category},
                            {"when", row.when},
                            {"commutative", row.commutative}});
  }
  rec["algebra_objects"] = algebras;
  Json centres = Json::array();
  for (long m : enumerate_monoidal(k))
    centres.push_back(Json{{"m", m}, {"centre", to_json(drinfeld_centre(k, m))}});
  rec["drinfeld_centres"] = centres;
  Json orbits = Json::array();
  for (const auto& orbit : galois_orbits(k)) {
    Json o = Json::array();
    for (long ell : orbit) o.push_back(ell);
    orbits.push_back(std::move(o));
  }
  rec["galois_orbits"] = orbits;
  auto desc = pivotal_and_dagger_descriptors(k, enumerate_monoidal(k).front());
  Json d{{"pivotal_count", desc.pivotal_count},
         {"spherical", desc.spherical},
         {"dagger_base", desc.dagger_base},
         {"dagger_family", desc.dagger_family}};
  if (desc.equivariantisation_depth) d["equivariantisation_depth"] = *desc.equivariantisation_depth;
  rec["structures"] = d;
  return rec;
}

}  // namespace anfield
