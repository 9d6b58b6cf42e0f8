#pragma once

#include <deque>
#include <map>
#include <tuple>
#include <vector>

#include "anfield/cyclo_int.hpp"
#include "anfield/fusion.hpp"
#include "anfield/tl.hpp"

namespace anfield {

template <>
struct ScalarOps<CycInt> {
  static CycInt zero(const CycInt& like) { return CycInt(like.ord()); }
  static CycInt one(const CycInt& like) { return CycInt::from_int(1, like.order()); }
  static bool is_zero(const CycInt& x) { return x.is_zero(); }
};

// Morphism with integer cyclotomic coordinates over a positive rational
// integer denominator.
struct ClearedTL {
  TLMorphism<CycInt> num;
  BigInt den = 1;
};

// Diagrammatic evaluation of the recoupling data of C_{k,m,+}: trivalent
// vertices built from Jones-Wenzl projectors, theta networks, tetrahedral
// trace pairings, and the change-of-basis linear system whose solution is
// the 6j symbol.  Everything here is plain diagram composition with loop
// counting; no closed formulas enter.
class RecouplingOracle {
 public:
  explicit RecouplingOracle(const CategoryParams& p)
      : p_(p), order_(p.order()), iord_(detail::cyclo_int_order(order_)) {
    if (p.k > 8) throw DomainError("RecouplingOracle: guarded to k <= 8");
    CyclotomicNumber d = p_.delta;
    delta_ = CycInt::from_exact(d);
  }

  const CategoryParams& params() const { return p_; }

  // single wiring diagram of the trivalent vertex (x, y; z): z legs below,
  // x+y above, (x+y-z)/2 nested cups between the two bundles
  static PlanarDiagram vertex_wiring(long x, long y, long z) {
    long tx = (x + z - y) / 2, ty = (y + z - x) / 2, w = (x + y - z) / 2;
    PlanarDiagram d;
    d.set_raw((int)z, (int)(x + y));
    auto topc = [&](long j) { return (int)(z + x + y - 1 - j); };
    for (long i = 0; i < tx; ++i) d.link((int)i, topc(i));
    for (long i = 0; i < ty; ++i) d.link((int)(tx + i), topc(x + w + i));
    for (long r = 0; r < w; ++r) d.link(topc(x - 1 - r), topc(x + r));
    return d;
  }

  // closed theta network on (a, b, c), exact value
  CyclotomicNumber theta_net(long a, long b, long c) {
    if (!admissible(p_.k, a, b, c)) return CyclotomicNumber::zero(order_);
    const ClearedTL& fa = jw(a);
    const ClearedTL& fb = jw(b);
    const ClearedTL& fc = jw(c);
    auto d0 = TLMorphism<CycInt>::from_diagram(vertex_wiring(a, b, c), delta_);
    auto d0f = TLMorphism<CycInt>::from_diagram(flip_wiring(a, b, c), delta_);
    TLMorphism<CycInt> m = compose(d0f, compose(tensor(fa.num, fb.num), d0));
    m = compose(m, fc.num);
    CycInt tr = markov_trace(m);
    return tr.to_exact() * Rational(BigInt(1), fa.den * fb.den * fc.den);
  }

  // trace pairing of the H-basis diagram (horizontal edge f) against the
  // I-basis diagram (vertical edge e) on outer labels (a, b, c, d)
  CyclotomicNumber tet_net(long a, long b, long e, long c, long d, long f) {
    ClearedTL s = vertex(a, d, e);
    // left H-vertex: split the a bundle into (b, f)
    s.num = compose(tensor(TLMorphism<CycInt>::from_diagram(vertex_wiring(b, f, a), delta_),
                           TLMorphism<CycInt>::identity((int)d, delta_)),
                    s.num);
    apply_layer(s, tensor(jw(b).num, TLMorphism<CycInt>::identity((int)(f + d), delta_)),
                jw(b).den);
    apply_layer(s,
                tensor(TLMorphism<CycInt>::identity((int)b, delta_),
                       tensor(jw(f).num, TLMorphism<CycInt>::identity((int)d, delta_))),
                jw(f).den);
    // right H-vertex: merge (f, d) into c
    s.num = compose(tensor(TLMorphism<CycInt>::identity((int)b, delta_),
                           TLMorphism<CycInt>::from_diagram(flip_wiring(f, d, c), delta_)),
                    s.num);
    apply_layer(s, tensor(TLMorphism<CycInt>::identity((int)b, delta_), jw(c).num), jw(c).den);
    // top I-vertex: merge (b, c) into e
    s.num = compose(TLMorphism<CycInt>::from_diagram(flip_wiring(b, c, e), delta_), s.num);
    apply_layer(s, jw(e).num, jw(e).den);
    CycInt tr = markov_trace(s.num);
    return tr.to_exact() * Rational(BigInt(1), s.den);
  }

  // Gram pairing of I-basis diagrams with middle labels e, e2
  CyclotomicNumber gram_entry(long a, long b, long c, long d, long e, long e2) {
    ClearedTL m1 = vertex(b, c, e);
    m1.num = compose(TLMorphism<CycInt>::from_diagram(flip_wiring(b, c, e2), delta_), m1.num);
    apply_layer(m1, jw(e2).num, jw(e2).den);
    ClearedTL m2 = vertex(a, d, e2);
    m2.num = compose(TLMorphism<CycInt>::from_diagram(flip_wiring(a, d, e), delta_), m2.num);
    apply_layer(m2, jw(e).num, jw(e).den);
    CycInt tr = markov_trace(compose(m2.num, m1.num));
    return tr.to_exact() * Rational(BigInt(1), m1.den * m2.den);
  }

  // All change-of-basis coefficients of H_f in the I_e basis at fixed outer
  // labels, solved from the Gram system of trace pairings.
  std::map<long, CyclotomicNumber> six_j_column(long a, long b, long c, long d, long f) {
    std::vector<long> es;
    for (long e : fuse(p_.k, a, d))
      if (admissible(p_.k, b, c, e)) es.push_back(e);
    if (es.empty()) throw DomainError("six_j_column: empty middle-label space");
    size_t n = es.size();
    std::vector<std::vector<CyclotomicNumber>> g(n,
        std::vector<CyclotomicNumber>(n, CyclotomicNumber::zero(order_)));
    std::vector<CyclotomicNumber> rhs(n, CyclotomicNumber::zero(order_));
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j <= i; ++j) {
        g[i][j] = gram_entry(a, b, c, d, es[i], es[j]);
        g[j][i] = g[i][j];
      }
      rhs[i] = tet_net(a, b, es[i], c, d, f);
    }
    std::vector<CyclotomicNumber> x = solve_linear(g, rhs);
    std::map<long, CyclotomicNumber> out;
    for (size_t i = 0; i < n; ++i) out[es[i]] = x[i];
    return out;
  }

  CyclotomicNumber six_j_oracle(const SixJLabels& L) {
    if (!L.vertices_admissible(p_.k))
      throw DomainError("six_j_oracle: vertex triples not admissible");
    auto col = six_j_column(L.a, L.b, L.c, L.d, L.f);
    auto it = col.find(L.e);
    if (it == col.end()) throw AnfieldError("six_j_oracle: middle label missing");
    return it->second;
  }

 private:
  static PlanarDiagram flip_wiring(long x, long y, long z) {
    PlanarDiagram w = vertex_wiring(x, y, z);
    int nb = w.bottom_points(), nt = w.top_points();
    PlanarDiagram out;
    out.set_raw(nt, nb);
    auto remap = [&](int cidx) {
      if (cidx < nb) return nt + nb - 1 - cidx;
      return nb + nt - 1 - cidx;
    };
    for (auto [p, q] : w.pair_list()) out.link(remap(p), remap(q));
    return out;
  }

  static void reduce(ClearedTL& m) {
    if (m.den == 1) return;
    int64_t g64 = 0;
    for (const auto& [d, c] : m.num.terms()) {
      g64 = c.coord_gcd(g64);
      if (g64 == 1) return;
    }
    if (g64 == 0) {
      m.den = 1;  // zero morphism
      return;
    }
    BigInt g = boost::multiprecision::gcd(BigInt(g64), m.den);
    if (g <= 1) return;
    int64_t gi = (int64_t)g.convert_to<long long>();
    TLMorphism<CycInt> reduced(m.num.bottom_points(), m.num.top_points(), delta_of(m));
    for (const auto& [d, c] : m.num.terms()) {
      CycInt cc = c;
      cc.divide_coords(gi);
      reduced.add_term(d, cc);
    }
    m.num = reduced;
    m.den /= g;
  }

  static CycInt delta_of(const ClearedTL& m) { return m.num.loop_value(); }

  void apply_layer(ClearedTL& s, const TLMorphism<CycInt>& layer, const BigInt& layer_den) {
    s.num = compose(layer, s.num);
    s.den *= layer_den;
    reduce(s);
  }

  // cleared Jones-Wenzl at the cyclotomic loop value
  const ClearedTL& jw(long n) {
    while ((long)jw_.size() <= n) {
      if (jw_.empty()) {
        jw_.push_back({TLMorphism<CycInt>::identity(0, delta_), 1});
        jw_.push_back({TLMorphism<CycInt>::identity(1, delta_), 1});
        continue;
      }
      long m = (long)jw_.size() - 1;
      if (m + 1 > p_.k + 1)
        throw PoleError("jones_wenzl: bracket vanishes beyond level k+1");
      const ClearedTL& fm = jw_[m];
      auto ext = tensor(fm.num, TLMorphism<CycInt>::identity(1, delta_));
      auto em = TLMorphism<CycInt>::e_generator((int)m + 1, (int)m, delta_);
      auto corr = compose(compose(ext, em), ext);
      // f_{m+1} = ext/den - ([m]/[m+1]) corr/den^2
      //         = (ext den Norm - corr [m] cof) / (den^2 Norm)
      auto [cof, norm] = bracket_cofactor(m + 1);
      CycInt br_m = bracket_value(m);
      CycInt scale = CycInt::from_exact(
          CyclotomicNumber(Rational(fm.den), order_) * norm_to_cyclo(norm));
      ClearedTL next{ext * scale - corr * (br_m * cof), fm.den * fm.den * norm};
      reduce(next);
      jw_.push_back(std::move(next));
    }
    return jw_[n];
  }

  CyclotomicNumber norm_to_cyclo(const BigInt& n) const {
    return CyclotomicNumber(Rational(n), order_);
  }

  CycInt bracket_value(long t) {
    while ((long)br_.size() <= t) {
      if (br_.empty()) {
        br_.push_back(CycInt(iord_));
        br_.push_back(CycInt::from_int(1, order_));
        continue;
      }
      long m = (long)br_.size();
      br_.push_back(delta_ * br_[m - 1] - br_[m - 2]);
    }
    return br_[t];
  }

  // cofactor and norm of the bracket [t]: [t] * cof = norm in Z, norm > 0
  std::pair<CycInt, BigInt> bracket_cofactor(long t) {
    auto it = cof_.find(t);
    if (it != cof_.end()) return it->second;
    CyclotomicNumber val = bracket_value(t).to_exact();
    CyclotomicNumber cof = CyclotomicNumber::one(order_);
    for (long j : units_mod(order_)) {
      if (j <= 1) continue;
      cof = cof * val.galois_apply(j);
    }
    CyclotomicNumber norm = val * cof;
    if (!norm.is_rational()) throw AnfieldError("bracket_cofactor: norm not rational");
    Rational nr = norm.rational_part();
    if (rat_den(nr) != 1 || nr == 0) throw AnfieldError("bracket_cofactor: bad norm");
    BigInt n = rat_num(nr);
    if (n < 0) {
      n = -n;
      cof = -cof;
    }
    auto res = std::make_pair(CycInt::from_exact(cof), n);
    cof_.emplace(t, res);
    return res;
  }

  const ClearedTL& vertex(long x, long y, long z) {
    auto key = std::make_tuple(x, y, z);
    auto it = vertices_.find(key);
    if (it != vertices_.end()) return it->second;
    ClearedTL s{compose(TLMorphism<CycInt>::from_diagram(vertex_wiring(x, y, z), delta_),
                        jw(z).num),
                jw(z).den};
    apply_layer(s, tensor(jw(x).num, TLMorphism<CycInt>::identity((int)y, delta_)), jw(x).den);
    apply_layer(s, tensor(TLMorphism<CycInt>::identity((int)x, delta_), jw(y).num), jw(y).den);
    return vertices_.emplace(key, std::move(s)).first->second;
  }

  std::vector<CyclotomicNumber> solve_linear(std::vector<std::vector<CyclotomicNumber>> g,
                                             std::vector<CyclotomicNumber> rhs) {
    size_t n = rhs.size();
    for (size_t col = 0; col < n; ++col) {
      size_t piv = col;
      while (piv < n && g[piv][col].is_zero()) ++piv;
      if (piv == n) throw PoleError("six_j oracle: singular Gram matrix");
      std::swap(g[piv], g[col]);
      std::swap(rhs[piv], rhs[col]);
      CyclotomicNumber inv = g[col][col].inverse();
      for (size_t j = col; j < n; ++j) g[col][j] = g[col][j] * inv;
      rhs[col] = rhs[col] * inv;
      for (size_t r = 0; r < n; ++r) {
        if (r == col || g[r][col].is_zero()) continue;
        CyclotomicNumber f = g[r][col];
        for (size_t j = col; j < n; ++j) g[r][j] = g[r][j] - f * g[col][j];
        rhs[r] = rhs[r] - f * rhs[col];
      }
    }
    return rhs;
  }

  CategoryParams p_;
  long order_;
  const detail::CycloIntOrder& iord_;
  CycInt delta_{};
  std::deque<ClearedTL> jw_;
  std::deque<CycInt> br_;
  std::map<long, std::pair<CycInt, BigInt>> cof_;
  std::map<std::tuple<long, long, long>, ClearedTL> vertices_;
};

}  // namespace anfield
