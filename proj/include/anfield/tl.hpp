#pragma once

#include <deque>
#include <unordered_map>
#include <utility>
#include <vector>

#include "anfield/cyclotomic.hpp"
#include "anfield/diagram.hpp"
#include "anfield/rational_function.hpp"

namespace anfield {

template <class S>
struct ScalarOps;

template <>
struct ScalarOps<CyclotomicNumber> {
  static CyclotomicNumber zero(const CyclotomicNumber& like) {
    return CyclotomicNumber::zero(like.order());
  }
  static CyclotomicNumber one(const CyclotomicNumber& like) {
    return CyclotomicNumber::one(like.order());
  }
  static bool is_zero(const CyclotomicNumber& x) { return x.is_zero(); }
};

template <>
struct ScalarOps<RationalFunction> {
  static RationalFunction zero(const RationalFunction& like) {
    return RationalFunction::constant(0, like.num().var());
  }
  static RationalFunction one(const RationalFunction& like) {
    return RationalFunction::constant(1, like.num().var());
  }
  static bool is_zero(const RationalFunction& x) { return x.is_zero(); }
};

// Formal linear combination of planar diagrams with a fixed loop value.
// Loops created during composition are removed eagerly, each contributing a
// factor of delta, so terms stay in canonical loop-free form.
template <class S>
class TLMorphism {
 public:
  using TermMap = std::unordered_map<PlanarDiagram, S, DiagramHash>;

  TLMorphism(int nb, int nt, S delta) : nb_(nb), nt_(nt), delta_(std::move(delta)) {}

  static TLMorphism from_diagram(const PlanarDiagram& d, const S& delta) {
    TLMorphism m(d.bottom_points(), d.top_points(), delta);
    m.terms_.emplace(d, ScalarOps<S>::one(delta));
    return m;
  }

  static TLMorphism identity(int n, const S& delta) {
    return from_diagram(PlanarDiagram::identity(n), delta);
  }

  // e_i in TL_n, 1 <= i <= n-1: cap then cup on strands i, i+1 (1-based)
  static TLMorphism e_generator(int n, int i, const S& delta) {
    if (i < 1 || i >= n) throw DomainError("e_generator: index out of range");
    PlanarDiagram d;
    d.set_raw(n, n);
    for (int j = 0; j < n; ++j) {
      if (j == i - 1 || j == i) continue;
      d.link(j, n + n - 1 - j);
    }
    d.link(i - 1, i);                        // bottom cap
    d.link(n + n - 1 - (i - 1), n + n - 1 - i);  // top cup
    return from_diagram(d, delta);
  }

  int bottom_points() const { return nb_; }
  int top_points() const { return nt_; }
  const S& loop_value() const { return delta_; }
  const TermMap& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }

  void add_term(const PlanarDiagram& d, const S& c) {
    if (ScalarOps<S>::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(d, c);
    if (!inserted) {
      it->second = it->second + c;
      if (ScalarOps<S>::is_zero(it->second)) terms_.erase(it);
    }
  }

  friend TLMorphism operator+(const TLMorphism& a, const TLMorphism& b) {
    a.check_shape(b);
    TLMorphism out = a;
    for (const auto& [d, c] : b.terms_) out.add_term(d, c);
    return out;
  }

  friend TLMorphism operator-(const TLMorphism& a, const TLMorphism& b) {
    a.check_shape(b);
    TLMorphism out = a;
    for (const auto& [d, c] : b.terms_) out.add_term(d, -c);
    return out;
  }

  friend TLMorphism operator*(const TLMorphism& a, const S& s) {
    TLMorphism out(a.nb_, a.nt_, a.delta_);
    if (ScalarOps<S>::is_zero(s)) return out;
    for (const auto& [d, c] : a.terms_) out.add_term(d, c * s);
    return out;
  }

  friend bool operator==(const TLMorphism& a, const TLMorphism& b) {
    if (a.nb_ != b.nb_ || a.nt_ != b.nt_) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (const auto& [d, c] : a.terms_) {
      auto it = b.terms_.find(d);
      if (it == b.terms_.end() || !(it->second == c)) return false;
    }
    return true;
  }
  friend bool operator!=(const TLMorphism& a, const TLMorphism& b) { return !(a == b); }

  // f after g: stacks g's diagram below f's
  friend TLMorphism compose(const TLMorphism& f, const TLMorphism& g) {
    if (g.nt_ != f.nb_) throw DomainError("compose: arity mismatch");
    TLMorphism out(g.nb_, f.nt_, f.delta_);
    std::vector<S> dpow;  // delta^l cache
    dpow.push_back(ScalarOps<S>::one(f.delta_));
    for (const auto& [df, cf] : f.terms_) {
      for (const auto& [dg, cg] : g.terms_) {
        auto [d, loops] = stack_diagrams(df, dg);
        while ((int)dpow.size() <= loops) dpow.push_back(dpow.back() * f.delta_);
        out.add_term(d, cf * cg * dpow[loops]);
      }
    }
    return out;
  }

  // side-by-side placement, f on the left
  friend TLMorphism tensor(const TLMorphism& f, const TLMorphism& g) {
    TLMorphism out(f.nb_ + g.nb_, f.nt_ + g.nt_, f.delta_);
    for (const auto& [df, cf] : f.terms_)
      for (const auto& [dg, cg] : g.terms_)
        out.add_term(tensor_diagrams(df, dg, f.nb_ + g.nb_, f.nt_ + g.nt_), cf * cg);
    return out;
  }

  // reflection in a horizontal line (no coefficient conjugation)
  friend TLMorphism flip(const TLMorphism& a) {
    TLMorphism out(a.nt_, a.nb_, a.delta_);
    for (const auto& [d, c] : a.terms_) out.add_term(flip_diagram(d), c);
    return out;
  }

  // close bottom point i onto top point i around the right side
  friend S markov_trace(const TLMorphism& a) {
    if (a.nb_ != a.nt_) throw DomainError("markov_trace: arity mismatch");
    S total = ScalarOps<S>::zero(a.delta_);
    std::vector<S> dpow;
    dpow.push_back(ScalarOps<S>::one(a.delta_));
    for (const auto& [d, c] : a.terms_) {
      int loops = closure_loops(d);
      while ((int)dpow.size() <= loops) dpow.push_back(dpow.back() * a.delta_);
      total = total + c * dpow[loops];
    }
    return total;
  }

  friend TLMorphism partial_trace_right(const TLMorphism& a) {
    if (a.nb_ != a.nt_ || a.nb_ < 1) throw DomainError("partial_trace_right: arity mismatch");
    int n = a.nb_;
    TLMorphism out(n - 1, n - 1, a.delta_);
    for (const auto& [d, c] : a.terms_) {
      int rb = n - 1;  // circ of rightmost bottom
      int rt = n;      // circ of rightmost top
      PlanarDiagram nd;
      nd.set_raw(n - 1, n - 1);
      auto renum = [&](int p) { return p < n - 1 ? p : p - 2; };
      if (d.partner(rb) == rt) {
        for (int p = 0; p < 2 * n; ++p) {
          if (p == rb || p == rt) continue;
          int q = d.partner(p);
          if (p < q) nd.link(renum(p), renum(q));
        }
        out.add_term(nd, c * a.delta_);
      } else {
        int x = d.partner(rb), y = d.partner(rt);
        for (int p = 0; p < 2 * n; ++p) {
          if (p == rb || p == rt || p == x || p == y) continue;
          int q = d.partner(p);
          if (p < q) nd.link(renum(p), renum(q));
        }
        nd.link(renum(x), renum(y));
        out.add_term(nd, c);
      }
    }
    return out;
  }

  friend TLMorphism partial_trace_left(const TLMorphism& a) {
    if (a.nb_ != a.nt_ || a.nb_ < 1) throw DomainError("partial_trace_left: arity mismatch");
    int n = a.nb_;
    TLMorphism out(n - 1, n - 1, a.delta_);
    for (const auto& [d, c] : a.terms_) {
      int lb = 0;          // circ of leftmost bottom
      int lt = 2 * n - 1;  // circ of leftmost top
      PlanarDiagram nd;
      nd.set_raw(n - 1, n - 1);
      auto renum = [&](int p) { return p - 1; };
      if (d.partner(lb) == lt) {
        for (int p = 1; p < 2 * n - 1; ++p) {
          int q = d.partner(p);
          if (p < q && q < 2 * n - 1) nd.link(renum(p), renum(q));
        }
        out.add_term(nd, c * a.delta_);
      } else {
        int x = d.partner(lb), y = d.partner(lt);
        for (int p = 1; p < 2 * n - 1; ++p) {
          if (p == x || p == y) continue;
          int q = d.partner(p);
          if (p < q && q < 2 * n - 1) nd.link(renum(p), renum(q));
        }
        nd.link(renum(x), renum(y));
        out.add_term(nd, c);
      }
    }
    return out;
  }

  // scalar content of a (0,0) morphism
  S scalar_value() const {
    if (nb_ != 0 || nt_ != 0) throw DomainError("scalar_value: not a closed morphism");
    if (terms_.empty()) return ScalarOps<S>::zero(delta_);
    return terms_.begin()->second;
  }

 private:
  void check_shape(const TLMorphism& b) const {
    if (nb_ != b.nb_ || nt_ != b.nt_) throw DomainError("TLMorphism: arity mismatch");
  }

  static std::pair<PlanarDiagram, int> stack_diagrams(const PlanarDiagram& top,
                                                      const PlanarDiagram& bot) {
    int nb = bot.bottom_points();
    int mid = bot.top_points();
    int nt = top.top_points();
    PlanarDiagram out;
    out.set_raw(nb, nt);
    std::array<bool, PlanarDiagram::kMaxPoints> midvis{};
    std::array<bool, PlanarDiagram::kMaxPoints> endvis{};  // nb bottom then nt top

    // walk from a boundary endpoint to its partner endpoint
    // layer 0 = bot diagram, 1 = top diagram; c = circ index in that layer
    auto walk = [&](int layer, int c) -> std::pair<bool, int> {
      for (;;) {
        if (layer == 0) {
          int p = bot.partner(c);
          if (p < nb) return {true, p};  // bottom endpoint
          int j = nb + mid - 1 - p;      // mid index, left to right
          midvis[j] = true;
          layer = 1;
          c = j;
        } else {
          int p = top.partner(c);
          if (p >= mid) return {false, mid + nt - 1 - p};  // top endpoint (L->R)
          midvis[p] = true;
          layer = 0;
          c = nb + mid - 1 - p;
        }
      }
    };

    auto link_endpoints = [&](bool from_bottom, int a, bool to_bottom, int b) {
      int ca = from_bottom ? a : nb + nt - 1 - a;
      int cb = to_bottom ? b : nb + nt - 1 - b;
      out.link(ca, cb);
    };

    for (int i = 0; i < nb; ++i) {
      if (endvis[i]) continue;
      endvis[i] = true;
      auto [isb, e] = walk(0, i);
      if (isb) endvis[e] = true;
      else endvis[nb + e] = true;
      link_endpoints(true, i, isb, e);
    }
    for (int j = 0; j < nt; ++j) {
      if (endvis[nb + j]) continue;
      endvis[nb + j] = true;
      auto [isb, e] = walk(1, mid + nt - 1 - j);
      // e must be another top endpoint or an already-linked bottom one
      if (isb) endvis[e] = true;
      else endvis[nb + e] = true;
      link_endpoints(false, j, isb, e);
    }

    int loops = 0;
    for (int j = 0; j < mid; ++j) {
      if (midvis[j]) continue;
      ++loops;
      // traverse the cycle through alternating layers, starting upward
      int cur = j;
      int layer = 1;  // next hop through the top diagram
      for (;;) {
        midvis[cur] = true;
        if (layer == 1) {
          int p = top.partner(cur);
          cur = p;  // p < mid inside a cycle
          layer = 0;
        } else {
          int p = bot.partner(nb + mid - 1 - cur);
          cur = nb + mid - 1 - p;
          layer = 1;
        }
        if (cur == j && layer == 1) break;
      }
    }
    return {out, loops};
  }

  static PlanarDiagram tensor_diagrams(const PlanarDiagram& f, const PlanarDiagram& g, int nb,
                                       int nt) {
    PlanarDiagram out;
    out.set_raw(nb, nt);
    int fb = f.bottom_points(), ft = f.top_points();
    int gb = g.bottom_points(), gt = g.top_points();
    auto fmap = [&](int c) {
      return c < fb ? c : nb + nt - 1 - (fb + ft - 1 - c);  // top L->R index preserved
    };
    auto gmap = [&](int c) {
      return c < gb ? fb + c : nb + nt - 1 - (ft + (gb + gt - 1 - c));
    };
    for (auto [a, b] : f.pair_list()) out.link(fmap(a), fmap(b));
    for (auto [a, b] : g.pair_list()) out.link(gmap(a), gmap(b));
    return out;
  }

  static PlanarDiagram flip_diagram(const PlanarDiagram& d) {
    int nb = d.bottom_points(), nt = d.top_points();
    PlanarDiagram out;
    out.set_raw(nt, nb);
    auto remap = [&](int c) {
      if (c < nb) return nt + nb - 1 - c;  // bottom i -> new top at L->R i
      return nb + nt - 1 - c;              // top L->R j -> new bottom j
    };
    for (auto [a, b] : d.pair_list()) out.link(remap(a), remap(b));
    return out;
  }

  static int closure_loops(const PlanarDiagram& d) {
    int n = d.bottom_points();
    std::array<bool, PlanarDiagram::kMaxPoints> vis{};
    int loops = 0;
    for (int start = 0; start < 2 * n; ++start) {
      if (vis[start]) continue;
      ++loops;
      int cur = start;
      bool via_pair = true;  // alternate pairing link / closure arc
      for (;;) {
        vis[cur] = true;
        cur = via_pair ? d.partner(cur) : 2 * n - 1 - cur;
        via_pair = !via_pair;
        if (cur == start && via_pair) break;
      }
    }
    return loops;
  }

  int nb_, nt_;
  S delta_;
  TermMap terms_;
};

// Chebyshev-valued brackets and cached Jones-Wenzl projectors for a fixed
// loop value; [1] = 1, [2] = delta, so [n] is the q-convention bracket.
template <class S>
class TLContext {
 public:
  explicit TLContext(S delta) : delta_(std::move(delta)) {
    brackets_.push_back(ScalarOps<S>::zero(delta_));
    brackets_.push_back(ScalarOps<S>::one(delta_));
  }

  const S& delta() const { return delta_; }

  const S& bracket(int n) {
    while ((int)brackets_.size() <= n)
      brackets_.push_back(delta_ * brackets_[brackets_.size() - 1] -
                          brackets_[brackets_.size() - 2]);
    return brackets_[n];
  }

  // loop value of the closed f^(n): Delta_n = [n+1]
  const S& chebyshev(int n) { return bracket(n + 1); }

  const TLMorphism<S>& jones_wenzl(int n) {
    if (n < 0) throw DomainError("jones_wenzl: n must be nonnegative");
    if (jw_.empty()) {
      jw_.push_back(TLMorphism<S>::identity(0, delta_));
      jw_.push_back(TLMorphism<S>::identity(1, delta_));
    }
    while ((int)jw_.size() <= n) {
      int m = (int)jw_.size() - 1;  // have f^(m), build f^(m+1)
      if (ScalarOps<S>::is_zero(bracket(m + 1)))
        throw PoleError("jones_wenzl: bracket [" + std::to_string(m + 1) +
                        "] vanishes at this loop value");
      TLMorphism<S> ext = tensor(jw_[m], TLMorphism<S>::identity(1, delta_));
      TLMorphism<S> em = TLMorphism<S>::e_generator(m + 1, m, delta_);
      TLMorphism<S> corr = compose(compose(ext, em), ext);
      S coef = bracket(m) / bracket(m + 1);
      jw_.push_back(ext - corr * coef);
    }
    return jw_[n];
  }

 private:
  S delta_;
  std::deque<S> brackets_;
  std::deque<TLMorphism<S>> jw_;
};

// Composition tree for closed-network evaluation.
template <class S>
struct Network {
  enum class Kind { leaf, compose, tensor };
  Kind kind = Kind::leaf;
  std::vector<Network> children;
  std::vector<TLMorphism<S>> morphism;  // single element for leaves

  static Network leaf(TLMorphism<S> m) {
    Network n;
    n.kind = Kind::leaf;
    n.morphism.push_back(std::move(m));
    return n;
  }
  static Network seq(std::vector<Network> cs) {  // first child applied last
    Network n;
    n.kind = Kind::compose;
    n.children = std::move(cs);
    return n;
  }
  static Network side_by_side(std::vector<Network> cs) {
    Network n;
    n.kind = Kind::tensor;
    n.children = std::move(cs);
    return n;
  }
};

template <class S>
TLMorphism<S> evaluate_network(const Network<S>& n) {
  switch (n.kind) {
    case Network<S>::Kind::leaf:
      return n.morphism.front();
    case Network<S>::Kind::compose: {
      if (n.children.empty()) throw DomainError("evaluate_network: empty composition");
      TLMorphism<S> acc = evaluate_network(n.children.back());
      for (auto it = n.children.rbegin() + 1; it != n.children.rend(); ++it)
        acc = compose(evaluate_network(*it), acc);
      return acc;
    }
    case Network<S>::Kind::tensor: {
      if (n.children.empty()) throw DomainError("evaluate_network: empty tensor");
      TLMorphism<S> acc = evaluate_network(n.children.front());
      for (size_t i = 1; i < n.children.size(); ++i)
        acc = tensor(acc, evaluate_network(n.children[i]));
      return acc;
    }
  }
  throw AnfieldError("evaluate_network: unreachable");
}

// Exact scalar of a network composing to arity (0, 0).
template <class S>
S evaluate_closed_network(const Network<S>& n) {
  TLMorphism<S> m = evaluate_network(n);
  return m.scalar_value();
}

}  // namespace anfield
