#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "garside/braid.hpp"

#ifndef GARSIDE_CURVE_STRAND_CAP
#define GARSIDE_CURVE_STRAND_CAP 12
#endif

namespace garside {

/// Largest n accepted by the curve model (compile-time configurable).
inline constexpr int kCurveStrandCap = GARSIDE_CURVE_STRAND_CAP;
static_assert(kCurveStrandCap >= 2 && kCurveStrandCap <= kMaxStrands);

/// Round curve enclosing punctures lo..hi (1-based, inclusive).
struct Interval {
  int lo = 1;
  int hi = 2;
  int size() const { return hi - lo + 1; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool disjoint(const Interval& o) const { return hi < o.lo || o.hi < lo; }
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// A standard curve system: round intervals, pairwise disjoint or nested.
struct StandardDescription {
  int n = 2;
  std::vector<Interval> rounds;  // sorted, duplicate-free

  StandardDescription() = default;
  StandardDescription(int strands, std::vector<Interval> rs) : n(strands), rounds(std::move(rs)) {
    std::sort(rounds.begin(), rounds.end());
    validate();
  }

  void validate() const {
    if (n < 2 || n > kCurveStrandCap)
      throw InvalidArgument("curve model supports 2 <= n <= " + std::to_string(kCurveStrandCap));
    for (std::size_t i = 0; i < rounds.size(); ++i) {
      const Interval& r = rounds[i];
      if (r.lo < 1 || r.hi > n || r.size() < 2 || r.size() > n - 1)
        throw InvalidArgument("invalid interval " + std::to_string(r.lo) + "-" + std::to_string(r.hi));
      for (std::size_t j = 0; j < i; ++j) {
        const Interval& s = rounds[j];
        if (s == r) throw InvalidArgument("duplicate interval");
        if (!s.disjoint(r) && !s.contains(r) && !r.contains(s))
          throw InvalidArgument("intervals must be disjoint or nested");
      }
    }
  }

  bool empty() const { return rounds.empty(); }

  bool is_nested() const {
    for (std::size_t i = 0; i < rounds.size(); ++i)
      for (std::size_t j = 0; j < rounds.size(); ++j)
        if (i != j && rounds[i].contains(rounds[j])) return true;
    return false;
  }

  /// Intervals not contained in any other interval.
  StandardDescription outermost() const {
    std::vector<Interval> out;
    for (const Interval& r : rounds) {
      bool inner = false;
      for (const Interval& s : rounds)
        if (s != r && s.contains(r)) inner = true;
      if (!inner) out.push_back(r);
    }
    return StandardDescription(n, out);
  }

  /// Composition of an unnested description (uncovered punctures give parts of 1).
  std::vector<int> composition() const {
    if (is_nested()) throw InvalidArgument("nested description has no composition");
    std::vector<int> parts;
    int p = 1;
    for (const Interval& r : rounds) {
      for (; p < r.lo; ++p) parts.push_back(1);
      parts.push_back(r.size());
      p = r.hi + 1;
    }
    for (; p <= n; ++p) parts.push_back(1);
    return parts;
  }

  static StandardDescription from_composition(const std::vector<int>& parts) {
    int n = 0;
    std::vector<Interval> rs;
    for (int k : parts) {
      if (k < 1) throw InvalidArgument("composition parts must be positive");
      if (k >= 2) rs.push_back({n + 1, n + k});
      n += k;
    }
    return StandardDescription(n, rs);
  }

  std::string to_string() const {
    std::string s = "std(";
    for (std::size_t i = 0; i < rounds.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(rounds[i].lo) + "-" + std::to_string(rounds[i].hi);
    }
    return s + ")";
  }

  friend bool operator==(const StandardDescription&, const StandardDescription&) = default;
  friend bool operator<(const StandardDescription& a, const StandardDescription& b) {
    if (a.n != b.n) return a.n < b.n;
    return a.rounds < b.rounds;
  }
};

/// Dynnikov-style integer coordinates. D_n sits inside D_{n+2}; a curve is n
/// pairs (x_p, y_p) and sigma_i updates pairs i and i+1.
namespace dynnikov {

using Coords = std::vector<std::int64_t>;  // x1, y1, x2, y2, ...

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("curve coordinate overflow");
  return r;
}
inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("curve coordinate overflow");
  return r;
}
inline std::int64_t pos(std::int64_t a) { return a > 0 ? a : 0; }
inline std::int64_t neg(std::int64_t a) { return a < 0 ? a : 0; }

inline void apply(Coords& c, int i, int sign) {
  std::int64_t& x1 = c[2 * (i - 1)];
  std::int64_t& y1 = c[2 * (i - 1) + 1];
  std::int64_t& x2 = c[2 * i];
  std::int64_t& y2 = c[2 * i + 1];
  std::int64_t nx1, ny1, nx2, ny2;
  if (sign > 0) {
    const std::int64_t z = add(sub(sub(x1, neg(y1)), x2), pos(y2));
    nx1 = add(add(x1, pos(y1)), pos(sub(pos(y2), z)));
    ny1 = sub(y2, pos(z));
    nx2 = add(add(x2, neg(y2)), neg(add(neg(y1), z)));
    ny2 = add(y1, pos(z));
  } else {
    const std::int64_t z = sub(sub(add(x1, neg(y1)), x2), pos(y2));
    nx1 = sub(sub(x1, pos(y1)), pos(add(pos(y2), z)));
    ny1 = add(y2, neg(z));
    nx2 = sub(sub(x2, neg(y2)), neg(sub(neg(y1), z)));
    ny2 = sub(y1, neg(z));
  }
  x1 = nx1, y1 = ny1, x2 = nx2, y2 = ny2;
}

inline Coords round_curve(int n, const Interval& r) {
  Coords c(2 * static_cast<std::size_t>(n), 0);
  c[2 * (r.lo - 1) + 1] = -1;
  c[2 * (r.hi - 1) + 1] = 1;
  return c;
}

}  // namespace dynnikov

namespace detail {

/// Per-n table from round-curve coordinates to intervals, built once.
inline const std::map<dynnikov::Coords, Interval>& round_table(int n) {
  static const auto tables = [] {
    std::array<std::map<dynnikov::Coords, Interval>, kCurveStrandCap + 1> t;
    for (int m = 2; m <= kCurveStrandCap; ++m)
      for (int lo = 1; lo <= m; ++lo)
        for (int hi = lo + 1; hi <= m; ++hi)
          if (hi - lo + 1 <= m - 1) t[m].emplace(dynnikov::round_curve(m, {lo, hi}), Interval{lo, hi});
    return t;
  }();
  return tables[n];
}

inline std::uint32_t swap_bits(std::uint32_t m, int i) {
  const std::uint32_t a = (m >> (i - 1)) & 1u, b = (m >> i) & 1u;
  if (a != b) m ^= (1u << (i - 1)) | (1u << i);
  return m;
}

inline std::uint32_t interval_mask(const Interval& r) {
  std::uint32_t m = 0;
  for (int p = r.lo; p <= r.hi; ++p) m |= 1u << (p - 1);
  return m;
}

}  // namespace detail

/// An essential multicurve in D_n. Every value arises as g * S for a standard
/// system S and a braid g; both are retained as a witness, so validity
/// (essential, pairwise disjoint, pairwise non-isotopic) holds by
/// construction. Equality only looks at the isotopy classes.
class CurveSystem {
 public:
  struct Component {
    dynnikov::Coords coords;
    std::uint32_t enclosed = 0;  // punctures inside, by current position
    Interval source;             // the round curve it came from
  };

  CurveSystem() = default;

  int n() const { return n_; }
  std::size_t component_count() const { return comps_.size(); }
  const std::vector<Component>& components() const { return comps_; }

  /// Sorted coordinate vectors, one per component.
  std::vector<dynnikov::Coords> coords() const {
    std::vector<dynnikov::Coords> out;
    for (const Component& c : comps_) out.push_back(c.coords);
    return out;
  }

  /// g with *this = g * source().
  const CanonicalForm& witness() const { return witness_; }
  StandardDescription source() const {
    std::vector<Interval> rs;
    for (const Component& c : comps_) rs.push_back(c.source);
    return StandardDescription(n_, rs);
  }

  /// Sub-multicurve made of the selected components.
  CurveSystem subsystem(const std::vector<std::size_t>& which) const {
    CurveSystem s;
    s.n_ = n_;
    s.witness_ = witness_;
    for (std::size_t i : which) s.comps_.push_back(comps_.at(i));
    s.normalize();
    return s;
  }

  CurveSystem component(std::size_t i) const { return subsystem({i}); }

  /// Components not enclosed by another component.
  CurveSystem outermost() const {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < comps_.size(); ++i) {
      bool inner = false;
      for (std::size_t j = 0; j < comps_.size(); ++j)
        if (j != i && (comps_[i].enclosed & ~comps_[j].enclosed) == 0) inner = true;
      if (!inner) keep.push_back(i);
    }
    return subsystem(keep);
  }

  bool is_nested() const { return outermost().component_count() != comps_.size(); }

  /// Components of *this that are not in `other`.
  CurveSystem minus(const CurveSystem& other) const {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < comps_.size(); ++i) {
      bool found = false;
      for (const Component& o : other.comps_)
        if (o.coords == comps_[i].coords) found = true;
      if (!found) keep.push_back(i);
    }
    return subsystem(keep);
  }

  bool contains_all(const CurveSystem& other) const {
    for (const Component& o : other.comps_) {
      bool found = false;
      for (const Component& c : comps_)
        if (o.coords == c.coords) found = true;
      if (!found) return false;
    }
    return true;
  }

  /// Structural validity re-check (essential, distinct, disjoint-or-nested supports).
  bool is_valid() const {
    if (n_ < 2 || n_ > kCurveStrandCap) return false;
    for (std::size_t i = 0; i < comps_.size(); ++i) {
      const Component& c = comps_[i];
      const int k = __builtin_popcount(c.enclosed);
      if (k < 2 || k > n_ - 1) return false;
      if (std::all_of(c.coords.begin(), c.coords.end(), [](std::int64_t v) { return v == 0; })) return false;
      for (std::size_t j = 0; j < i; ++j) {
        const std::uint32_t a = c.enclosed, b = comps_[j].enclosed;
        if (c.coords == comps_[j].coords) return false;
        if ((a & b) != 0 && (a & ~b) != 0 && (b & ~a) != 0) return false;
      }
    }
    return true;
  }

  friend bool operator==(const CurveSystem& a, const CurveSystem& b) {
    if (a.n_ != b.n_ || a.comps_.size() != b.comps_.size()) return false;
    for (std::size_t i = 0; i < a.comps_.size(); ++i)
      if (a.comps_[i].coords != b.comps_[i].coords) return false;
    return true;
  }

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(n_);
    for (const Component& c : comps_)
      for (std::int64_t v : c.coords) h = h * 1099511628211ull + static_cast<std::size_t>(v);
    return h;
  }

  friend CurveSystem standard_curves(const StandardDescription& d);
  friend CurveSystem act(const BraidWord& w, const CurveSystem& c);
  friend CurveSystem act(const CanonicalForm& a, const CurveSystem& c);

 private:
  void normalize() {
    std::sort(comps_.begin(), comps_.end(),
              [](const Component& a, const Component& b) { return a.coords < b.coords; });
  }

  void apply_letter(int i, int sign) {
    for (Component& c : comps_) {
      dynnikov::apply(c.coords, i, sign);
      c.enclosed = detail::swap_bits(c.enclosed, i);
    }
  }

  int n_ = 2;
  std::vector<Component> comps_;
  CanonicalForm witness_;
};

inline CurveSystem standard_curves(const StandardDescription& d) {
  d.validate();
  if (d.empty()) throw InvalidArgument("a curve system needs at least one curve");
  CurveSystem s;
  s.n_ = d.n;
  s.witness_ = identity_braid(d.n);
  for (const Interval& r : d.rounds)
    s.comps_.push_back({dynnikov::round_curve(d.n, r), detail::interval_mask(r), r});
  s.normalize();
  return s;
}

inline CurveSystem act(const BraidWord& w, const CurveSystem& c) {
  if (w.n != c.n_) throw DimensionMismatch("braid and curve system on different strand counts");
  CurveSystem out = c;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.apply_letter(it->index, it->sign);
  out.witness_ = left_normal_form(w) * c.witness_;
  out.normalize();
  return out;
}

inline CurveSystem act(const CanonicalForm& a, const CurveSystem& c) {
  if (a.n != c.n_) throw DimensionMismatch("braid and curve system on different strand counts");
  // Delta^2 is central and acts trivially, so only the parity of u matters.
  const CanonicalForm reduced{a.n, a.u % 2, a.factors};
  const BraidWord w = reduced.to_word();
  CurveSystem out = c;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.apply_letter(it->index, it->sign);
  out.witness_ = a * c.witness_;
  out.normalize();
  return out;
}

/// The description if every component is a round curve, else nullopt.
inline std::optional<StandardDescription> is_standard(const CurveSystem& c) {
  const auto& table = detail::round_table(c.n());
  std::vector<Interval> rs;
  for (const auto& comp : c.components()) {
    const auto it = table.find(comp.coords);
    if (it == table.end()) return std::nullopt;
    rs.push_back(it->second);
  }
  return StandardDescription(c.n(), rs);
}

}  // namespace garside

template <>
struct std::hash<garside::CurveSystem> {
  std::size_t operator()(const garside::CurveSystem& c) const { return c.hash(); }
};
