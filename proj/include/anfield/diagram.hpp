#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "anfield/rational.hpp"

namespace anfield {

// Non-crossing perfect matching on the boundary of a rectangle with nb
// points on the bottom edge and nt on the top.  Boundary points are numbered
// counterclockwise from the bottom-left: bottom 0..nb-1 left to right, then
// top nb..nb+nt-1 right to left.  With that numbering planarity is exactly
// the circular non-crossing condition.
class PlanarDiagram {
 public:
  static constexpr int kMaxPoints = 40;

  PlanarDiagram() : nb_(0), nt_(0) { pair_.fill(0); }

  PlanarDiagram(int nb, int nt, const std::vector<std::pair<int, int>>& pairs)
      : PlanarDiagram() {
    nb_ = (uint8_t)nb;
    nt_ = (uint8_t)nt;
    int n = nb + nt;
    if (n > kMaxPoints) throw DomainError("PlanarDiagram: too many boundary points");
    if (n % 2 != 0) throw DomainError("PlanarDiagram: odd number of boundary points");
    std::array<int8_t, kMaxPoints> seen;
    seen.fill(0);
    if ((int)pairs.size() * 2 != n) throw DomainError("PlanarDiagram: not a perfect matching");
    for (auto [a, b] : pairs) {
      if (a < 0 || b < 0 || a >= n || b >= n || a == b || seen[a] || seen[b])
        throw DomainError("PlanarDiagram: invalid pairing");
      seen[a] = seen[b] = 1;
      pair_[a] = (uint8_t)b;
      pair_[b] = (uint8_t)a;
    }
    if (!non_crossing()) throw DomainError("PlanarDiagram: crossing pairing");
  }

  static PlanarDiagram identity(int n) {
    PlanarDiagram d;
    d.nb_ = (uint8_t)n;
    d.nt_ = (uint8_t)n;
    for (int i = 0; i < n; ++i) {
      d.pair_[d.bottom_circ(i)] = (uint8_t)d.top_circ(i);
      d.pair_[d.top_circ(i)] = (uint8_t)d.bottom_circ(i);
    }
    return d;
  }

  static PlanarDiagram cup() {  // Hom(0 -> 2)
    PlanarDiagram d;
    d.nb_ = 0;
    d.nt_ = 2;
    d.pair_[0] = 1;
    d.pair_[1] = 0;
    return d;
  }

  static PlanarDiagram cap() {  // Hom(2 -> 0)
    PlanarDiagram d;
    d.nb_ = 2;
    d.nt_ = 0;
    d.pair_[0] = 1;
    d.pair_[1] = 0;
    return d;
  }

  int bottom_points() const { return nb_; }
  int top_points() const { return nt_; }
  int total_points() const { return nb_ + nt_; }

  // circular index of bottom point i (left to right)
  int bottom_circ(int i) const { return i; }
  // circular index of top point j (left to right)
  int top_circ(int j) const { return nb_ + nt_ - 1 - j; }

  int partner(int circ) const { return pair_[circ]; }

  bool non_crossing() const {
    // parenthesis matching around the circle
    std::array<uint8_t, kMaxPoints> stack;
    int sp = 0;
    int n = total_points();
    for (int i = 0; i < n; ++i) {
      if (pair_[i] > i) {
        stack[sp++] = (uint8_t)i;
      } else {
        if (sp == 0 || stack[--sp] != pair_[i]) return false;
      }
    }
    return sp == 0;
  }

  friend bool operator==(const PlanarDiagram& a, const PlanarDiagram& b) {
    if (a.nb_ != b.nb_ || a.nt_ != b.nt_) return false;
    return std::memcmp(a.pair_.data(), b.pair_.data(), a.total_points()) == 0;
  }
  friend bool operator!=(const PlanarDiagram& a, const PlanarDiagram& b) { return !(a == b); }

  friend bool operator<(const PlanarDiagram& a, const PlanarDiagram& b) {
    if (a.nb_ != b.nb_) return a.nb_ < b.nb_;
    if (a.nt_ != b.nt_) return a.nt_ < b.nt_;
    return std::memcmp(a.pair_.data(), b.pair_.data(), a.total_points()) < 0;
  }

  size_t hash() const {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&](uint8_t v) {
      h ^= v;
      h *= 1099511628211ull;
    };
    mix(nb_);
    mix(nt_);
    for (int i = 0; i < total_points(); ++i) mix(pair_[i]);
    return (size_t)h;
  }

  // sorted pair list in the circular numbering
  std::vector<std::pair<int, int>> pair_list() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < total_points(); ++i)
      if (pair_[i] > i) out.emplace_back(i, pair_[i]);
    return out;
  }

  // direct access for composition internals
  void set_raw(int nb, int nt) {
    nb_ = (uint8_t)nb;
    nt_ = (uint8_t)nt;
  }
  void link(int a, int b) {
    pair_[a] = (uint8_t)b;
    pair_[b] = (uint8_t)a;
  }

 private:
  uint8_t nb_, nt_;
  std::array<uint8_t, kMaxPoints> pair_;
};

struct DiagramHash {
  size_t operator()(const PlanarDiagram& d) const { return d.hash(); }
};

inline BigInt catalan_number(int n) {
  BigInt num = 1, den = 1;
  for (int i = 0; i < n; ++i) {
    num *= BigInt(2 * n - i);
    den *= BigInt(i + 1);
  }
  return num / den / BigInt(n + 1);
}

namespace detail {

// All non-crossing matchings of an ordered point list: match the first point
// to one at odd distance, then recurse independently inside and outside.
inline std::vector<std::vector<std::pair<int, int>>> enumerate_circular(
    const std::vector<int>& points) {
  std::vector<std::vector<std::pair<int, int>>> out;
  if (points.empty()) {
    out.emplace_back();
    return out;
  }
  int first = points[0];
  for (size_t j = 1; j < points.size(); j += 2) {
    std::vector<int> inside(points.begin() + 1, points.begin() + j);
    std::vector<int> outside(points.begin() + j + 1, points.end());
    auto inner = enumerate_circular(inside);
    auto outer = enumerate_circular(outside);
    for (const auto& a : inner) {
      for (const auto& b : outer) {
        std::vector<std::pair<int, int>> m;
        m.reserve(1 + a.size() + b.size());
        m.emplace_back(first, points[j]);
        m.insert(m.end(), a.begin(), a.end());
        m.insert(m.end(), b.begin(), b.end());
        out.push_back(std::move(m));
      }
    }
  }
  return out;
}

}  // namespace detail

// All planar diagrams in Hom(nb -> nt); cached.  The count for nb = nt = n
// is the Catalan number C_n.
inline const std::vector<PlanarDiagram>& all_diagrams(int nb, int nt) {
  static std::map<std::pair<int, int>, std::vector<PlanarDiagram>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(nb, nt);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<PlanarDiagram> result;
  if ((nb + nt) % 2 == 0) {
    std::vector<int> points(nb + nt);
    for (int i = 0; i < nb + nt; ++i) points[i] = i;
    for (auto& pairs : detail::enumerate_circular(points)) result.emplace_back(nb, nt, pairs);
  }
  return cache.emplace(key, std::move(result)).first->second;
}

}  // namespace anfield
