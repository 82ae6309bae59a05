#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "garside/braid.hpp"
#include "garside/curve.hpp"

namespace garside {

/// Ordered k-tuple (n_1..n_k) of positive integers.
struct Composition {
  std::vector<int> parts;

  Composition() = default;
  explicit Composition(std::vector<int> ps) : parts(std::move(ps)) { validate(); }

  void validate() const {
    if (parts.empty()) throw InvalidArgument("composition needs at least one part");
    for (int p : parts)
      if (p < 1) throw InvalidArgument("composition parts must be positive");
    check_strands(n());
  }

  int k() const { return static_cast<int>(parts.size()); }
  int n() const { return std::accumulate(parts.begin(), parts.end(), 0); }

  /// N_i = n_1 + ... + n_i, with N_0 = 0.
  int prefix(int i) const { return std::accumulate(parts.begin(), parts.begin() + i, 0); }

  Composition reversed() const { return Composition({parts.rbegin(), parts.rend()}); }

  /// True when C_n has at least one curve (some part >= 2 and k > 1).
  bool has_curves() const { return k() > 1 && *std::max_element(parts.begin(), parts.end()) >= 2; }

  /// Round intervals of the parts of size >= 2.
  StandardDescription description() const {
    if (!has_curves()) throw InvalidArgument("composition " + to_string() + " has no curves");
    return StandardDescription::from_composition(parts);
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
    return s + ")";
  }

  friend bool operator==(const Composition&, const Composition&) = default;
};

namespace detail {

/// <A0>_m for a simple A0 whose right end carries composition m.
inline PermutationBraid cable_simple(const PermutationBraid& a0, const Composition& m) {
  std::vector<int> left(m.k());
  for (int j = 1; j <= m.k(); ++j) left[a0.theta(j) - 1] = m.parts[j - 1];
  std::vector<int> lprefix(m.k() + 1, 0);
  for (int i = 0; i < m.k(); ++i) lprefix[i + 1] = lprefix[i] + left[i];
  std::vector<int> theta;
  theta.reserve(m.n());
  for (int j = 1; j <= m.k(); ++j)
    for (int o = 0; o < m.parts[j - 1]; ++o) theta.push_back(lprefix[a0.theta(j) - 1] + o + 1);
  return PermutationBraid::from_theta(theta);
}

}  // namespace detail

/// alpha_0 * n: the tube widths at the left end.
inline Composition act_on_composition(const CanonicalForm& a0, const Composition& c) {
  if (a0.n != c.k()) throw DimensionMismatch("braid index differs from the number of parts");
  const std::vector<int> theta = induced_permutation(a0);
  std::vector<int> out(c.k());
  for (int j = 1; j <= c.k(); ++j) out[theta[j - 1] - 1] = c.parts[j - 1];
  return Composition(out);
}

inline Composition act_on_composition(const PermutationBraid& a0, const Composition& c) {
  return act_on_composition(from_simple(a0), c);
}

/// <alpha_0>_n: each strand of alpha_0 replaced by n_i parallel strands.
inline CanonicalForm cable(const CanonicalForm& a0, const Composition& c) {
  if (a0.n != c.k()) throw DimensionMismatch("braid index differs from the number of parts");
  const int n = c.n();
  CanonicalForm r = identity_braid(n);
  Composition cur = c;
  for (auto it = a0.factors.rbegin(); it != a0.factors.rend(); ++it) {
    r = from_simple(detail::cable_simple(*it, cur)) * r;
    cur = act_on_composition(*it, cur);
  }
  const PermutationBraid d = PermutationBraid::delta(a0.n);
  for (std::int64_t t = 0; t < (a0.u < 0 ? -a0.u : a0.u); ++t) {
    if (a0.u > 0)
      r = from_simple(detail::cable_simple(d, cur)) * r;
    else
      r = inverse(from_simple(detail::cable_simple(d, cur.reversed()))) * r;
    cur = cur.reversed();
  }
  return r;
}

/// Block-diagonal sum alpha_1 + ... + alpha_k.
inline CanonicalForm direct_sum(const std::vector<CanonicalForm>& blocks) {
  if (blocks.empty()) throw InvalidArgument("direct sum of no blocks");
  int n = 0;
  for (const CanonicalForm& b : blocks) n += b.n;
  check_strands(n);
  BraidWord w;
  w.n = n;
  int offset = 0;
  for (const CanonicalForm& b : blocks) {
    for (const Letter& l : b.to_word().letters) w.letters.push_back({l.index + offset, l.sign});
    offset += b.n;
  }
  return left_normal_form(w);
}

/// delta_n = Delta_{n_1} + ... + Delta_{n_k} as a simple element.
inline PermutationBraid delta_comp_simple(const Composition& c) {
  std::vector<int> theta;
  int base = 0;
  for (int p : c.parts) {
    for (int o = p; o >= 1; --o) theta.push_back(base + o);
    base += p;
  }
  return PermutationBraid::from_theta(theta);
}

inline PositiveBraid delta_comp(const Composition& c) { return from_simple(delta_comp_simple(c)); }

/// alpha = <exterior>_composition (interiors[0] + ... + interiors[k-1]).
struct TubeDecomposition {
  Composition composition;
  CanonicalForm exterior;
  std::vector<CanonicalForm> interiors;
};

inline CanonicalForm recombine(const TubeDecomposition& d) {
  return cable(d.exterior, d.composition) * direct_sum(d.interiors);
}

/// Inverse of recombine for braids that carry the tubes of c to the tubes
/// of (exterior * c). Throws NotTubular otherwise.
inline TubeDecomposition detube(const CanonicalForm& b, const Composition& c) {
  if (b.n != c.n()) throw DimensionMismatch("composition does not match the strand count");
  const BraidWord w = b.to_word();
  TubeDecomposition d;
  d.composition = c;
  std::vector<int> reps;
  for (int i = 1; i <= c.k(); ++i) reps.push_back(c.prefix(i));
  d.exterior = left_normal_form(delete_strands(w, reps));
  if (c.has_curves()) {
    const StandardDescription here = c.description();
    const StandardDescription there = act_on_composition(d.exterior, c).description();
    if (!(act(b, standard_curves(here)) == standard_curves(there)))
      throw NotTubular("braid does not preserve the tube system " + c.to_string());
  }
  for (int i = 1; i <= c.k(); ++i) {
    std::vector<int> block;
    for (int p = c.prefix(i - 1) + 1; p <= c.prefix(i); ++p) block.push_back(p);
    d.interiors.push_back(left_normal_form(delete_strands(w, block)));
  }
  if (!(recombine(d) == b)) throw NotTubular("tube recombination failed for " + c.to_string());
  return d;
}

}  // namespace garside
