#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "garside/curve.hpp"
#include "garside/lattice.hpp"
#include "garside/tube.hpp"

namespace garside {

enum class StandardizerMethod { Descent, Bfs };

struct StandardizerOptions {
  StandardizerMethod method = StandardizerMethod::Descent;
  int max_bfs_depth = 64;
  std::size_t max_bfs_states = 2'000'000;
};

/// Minimality checks for one unnested layer with standard image C_n.
struct LayerCheck {
  Composition composition;
  PositiveBraid standardizer;  // the layer's own minimal standardizer
  bool meet_trivial = false;   // P meet_L delta_n = 1
  bool starting_set = false;   // S(delta_n P) = S(delta_n)
  bool np_form = false;        // P^{-1}(delta_n P) is in np-form
  bool agrees() const { return (meet_trivial && starting_set) == np_form; }
  bool minimal() const { return meet_trivial && starting_set; }
};

struct MinimalityCertificate {
  std::string method;
  std::vector<LayerCheck> layers;  // outermost first
  std::size_t descent_steps = 0;
  int bfs_depth = -1;              // depth reached by BFS, -1 if unused
  int bfs_depth_cap = -1;
  bool holds() const {
    for (const LayerCheck& l : layers)
      if (!l.minimal() || !l.agrees()) return false;
    return true;
  }
};

struct StandardizerResult {
  PositiveBraid minimal;
  StandardDescription image;
  MinimalityCertificate certificate;
};

namespace detail {

/// S(X) for a positive braid X.
inline GeneratorSet starting_set(const CanonicalForm& x) {
  return left_head(x).starting_set();
}

inline LayerCheck check_layer(const PositiveBraid& p, const Composition& c) {
  LayerCheck chk;
  chk.composition = c;
  chk.standardizer = p;
  const PermutationBraid d = delta_comp_simple(c);
  const CanonicalForm dc = from_simple(d);
  chk.meet_trivial = PermutationBraid::meet_left(left_head(p), d).is_identity();
  const CanonicalForm dp = dc * p;
  chk.starting_set = starting_set(dp) == d.starting_set();
  chk.np_form = meet(p, dp, Side::L).is_identity();
  return chk;
}

inline Composition swap_parts(const Composition& c, int i) {
  Composition m = c;
  std::swap(m.parts[i - 1], m.parts[i]);
  return m;
}

/// Minimal standardizer of an unnested system by exact descent: start from a
/// standardizer Delta^{2k} g^{-1} and strip left divisors that map the current
/// standard image to another standard system until none is left.
inline PositiveBraid descend(const CurveSystem& layer, Composition& comp, std::size_t& steps) {
  const CanonicalForm ginv = inverse(layer.witness());
  std::int64_t k = ginv.u < 0 ? -ginv.u : 0;
  k += k % 2;
  CanonicalForm q = delta_power(layer.n(), k) * ginv;
  comp = Composition(layer.source().composition());
  for (;;) {
    const PermutationBraid h = left_head(q);
    const PermutationBraid a = PermutationBraid::meet_left(h, delta_comp_simple(comp));
    if (!a.is_identity()) {
      q = inverse(from_simple(a)) * q;
      ++steps;
      continue;
    }
    bool moved = false;
    for (int i = 1; i < comp.k() && !moved; ++i) {
      const Composition m = swap_parts(comp, i);
      const PermutationBraid x = cable_simple(PermutationBraid::generator(comp.k(), i), m);
      if (PermutationBraid::meet_left(x, h) == x) {
        q = inverse(from_simple(x)) * q;
        comp = m;
        moved = true;
        ++steps;
      }
    }
    if (!moved) return q;
  }
}

/// Splits a system into unnested layers, outermost first.
inline std::vector<CurveSystem> layers_of(const CurveSystem& c) {
  std::vector<CurveSystem> out;
  CurveSystem rest = c;
  while (rest.component_count() > 0) {
    CurveSystem outer = rest.outermost();
    rest = rest.minus(outer);
    out.push_back(std::move(outer));
  }
  return out;
}

inline void check_curve_cap(const CurveSystem& c) {
  if (c.n() > kCurveStrandCap) throw InvalidArgument("strand count above the curve cap");
  if (c.component_count() == 0) throw InvalidArgument("empty curve system");
}

}  // namespace detail

/// BFS over curve states (edges: left multiplication by sigma_i); the first
/// standard state found gives the shortest, hence minimal, standardizer.
inline StandardizerResult minimal_standardizer_bfs(const CurveSystem& c, int max_depth = 64,
                                                   std::size_t max_states = 2'000'000) {
  detail::check_curve_cap(c);
  using State = std::vector<dynnikov::Coords>;
  struct Node {
    State state;
    std::size_t parent;
    int letter;
    int depth;
  };
  const auto& table = detail::round_table(c.n());
  auto standard = [&](const State& s) {
    for (const auto& x : s)
      if (!table.count(x)) return false;
    return true;
  };
  std::vector<Node> nodes;
  std::set<State> seen;
  State start = c.coords();
  std::sort(start.begin(), start.end());
  nodes.push_back({start, 0, 0, 0});
  seen.insert(start);
  std::size_t found = standard(start) ? 0 : SIZE_MAX;
  for (std::size_t head = 0; found == SIZE_MAX; ++head) {
    if (head == nodes.size()) throw InvalidArgument("curve orbit exhausted without a standard state");
    if (nodes[head].depth >= max_depth)
      throw DepthLimitExceeded("no standard state within depth " + std::to_string(max_depth));
    for (int i = 1; i < c.n() && found == SIZE_MAX; ++i) {
      State next = nodes[head].state;
      for (auto& x : next) dynnikov::apply(x, i, 1);
      std::sort(next.begin(), next.end());
      if (!seen.insert(next).second) continue;
      nodes.push_back({next, head, i, nodes[head].depth + 1});
      if (nodes.size() > max_states) throw CapExceeded("standardizer BFS state cap reached");
      if (standard(next)) found = nodes.size() - 1;
    }
  }
  std::vector<int> word;  // applied first to last
  for (std::size_t v = found; v != 0; v = nodes[v].parent) word.push_back(nodes[v].letter);
  // P = sigma_{last} ... sigma_{first}; `word` is already in that order.
  const PositiveBraid p = positive_braid(c.n(), word);
  StandardizerResult r{p, *is_standard(act(p, c)), {}};
  r.certificate.method = "bfs";
  r.certificate.bfs_depth = nodes[found].depth;
  r.certificate.bfs_depth_cap = max_depth;
  return r;
}

/// Product P_l ... P_1 of minimal standardizers of the parts, each taken
/// after the previous ones were applied. Parts must be listed outermost
/// first and partition `c`.
inline PositiveBraid standardize_componentwise(const CurveSystem& c, const std::vector<CurveSystem>& parts,
                                               MinimalityCertificate* cert = nullptr);

/// The <=_R-minimal element of St(C).
inline StandardizerResult minimal_standardizer(const CurveSystem& c, const StandardizerOptions& opt = {}) {
  detail::check_curve_cap(c);
  if (opt.method == StandardizerMethod::Bfs) return minimal_standardizer_bfs(c, opt.max_bfs_depth, opt.max_bfs_states);
  StandardizerResult r;
  r.certificate.method = "descent";
  r.minimal = standardize_componentwise(c, detail::layers_of(c), &r.certificate);
  r.image = *is_standard(act(r.minimal, c));
  return r;
}

inline PositiveBraid standardize_componentwise(const CurveSystem& c, const std::vector<CurveSystem>& parts,
                                               MinimalityCertificate* cert) {
  detail::check_curve_cap(c);
  CurveSystem rest = c;
  for (const CurveSystem& part : parts) {
    if (part.n() != c.n()) throw DimensionMismatch("part lives on a different strand count");
    if (part.component_count() == 0) throw InvalidArgument("empty part");
    if (!rest.contains_all(part)) throw InvalidArgument("parts must partition the system without overlap");
    if (!rest.outermost().contains_all(part))
      throw InvalidArgument("parts are not ordered outermost first");
    rest = rest.minus(part);
  }
  if (rest.component_count() != 0) throw InvalidArgument("parts do not cover the system");

  PositiveBraid p = identity_braid(c.n());
  for (const CurveSystem& part : parts) {
    const CurveSystem moved = act(p, part);
    Composition comp;
    std::size_t steps = 0;
    const PositiveBraid pi = detail::descend(moved, comp, steps);
    if (cert) {
      cert->descent_steps += steps;
      cert->layers.push_back(detail::check_layer(pi, comp));
    }
    p = pi * p;
  }
  return p;
}

/// Minimality test for P against C. For unnested P*C this is the pair of
/// conditions P meet_L delta_n = 1 and S(delta_n P) = S(delta_n); nested
/// images are checked layer by layer.
inline MinimalityCertificate verify_minimal_certificate(const PositiveBraid& p, const CurveSystem& c) {
  detail::check_curve_cap(c);
  if (p.u < 0) throw InvalidArgument("standardizers are positive braids");
  if (!is_standard(act(p, c))) throw InvalidArgument("P*C is not standard");
  MinimalityCertificate cert;
  cert.method = "verify";
  CurveSystem rest = c;
  CanonicalForm remaining = p;
  CanonicalForm applied = identity_braid(c.n());
  while (rest.component_count() > 0) {
    const CurveSystem outer = rest.outermost();
    rest = rest.minus(outer);
    if (rest.component_count() == 0) {
      const auto image = is_standard(act(remaining, act(applied, outer)));
      cert.layers.push_back(detail::check_layer(remaining, Composition(image->composition())));
      break;
    }
    // Peel off the outermost layer's own minimal standardizer and recurse.
    Composition comp;
    std::size_t steps = 0;
    const PositiveBraid pi = detail::descend(act(applied, outer), comp, steps);
    LayerCheck chk = detail::check_layer(pi, comp);
    const CanonicalForm quotient = remaining * inverse(pi);
    if (quotient.u < 0) chk.meet_trivial = chk.starting_set = chk.np_form = false;
    cert.layers.push_back(chk);
    if (quotient.u < 0) break;
    remaining = quotient;
    applied = pi * applied;
  }
  return cert;
}

inline bool verify_minimal(const PositiveBraid& p, const CurveSystem& c) {
  const MinimalityCertificate cert = verify_minimal_certificate(p, c);
  for (const LayerCheck& l : cert.layers)
    if (!l.minimal()) return false;
  return true;
}

}  // namespace garside
