#pragma once

#include <algorithm>
#include <utility>

#include "garside/braid.hpp"

namespace garside {

enum class Side { L, R };

namespace detail {

inline void require_positive(const CanonicalForm& p, const char* what) {
  if (p.u < 0) throw InvalidArgument(std::string(what) + " expects a positive braid");
}

inline void same_n(const CanonicalForm& a, const CanonicalForm& b) {
  if (a.n != b.n) throw DimensionMismatch("braids on different strand counts");
}

/// s_L of a positive braid.
inline PermutationBraid left_head(const CanonicalForm& p) {
  if (p.u > 0) return PermutationBraid::delta(p.n);
  if (p.factors.empty()) return PermutationBraid::identity(p.n);
  return p.factors.front();
}

inline CanonicalForm meet_left(CanonicalForm p, CanonicalForm q) {
  CanonicalForm m = identity_braid(p.n);
  for (;;) {
    const PermutationBraid h = PermutationBraid::meet_left(left_head(p), left_head(q));
    if (h.is_identity()) return m;
    const CanonicalForm hc = from_simple(h), hinv = inverse(hc);
    m = m * hc;
    p = hinv * p;
    q = hinv * q;
  }
}

}  // namespace detail

/// Greatest common divisor: prefix order for L, suffix order for R.
inline PositiveBraid meet(const PositiveBraid& p, const PositiveBraid& q, Side side) {
  detail::same_n(p, q);
  detail::require_positive(p, "meet");
  detail::require_positive(q, "meet");
  if (side == Side::L) return detail::meet_left(p, q);
  return reverse(detail::meet_left(reverse(p), reverse(q)));
}

/// Least common multiple with respect to the chosen order.
inline PositiveBraid join(const PositiveBraid& p, const PositiveBraid& q, Side side) {
  detail::same_n(p, q);
  detail::require_positive(p, "join");
  detail::require_positive(q, "join");
  const std::int64_t k = std::max(p.sup(), q.sup());
  const CanonicalForm dk = delta_power(p.n, k);
  if (side == Side::L) {
    // Delta^k = M Y with Y the largest common suffix of P^{-1}Delta^k and Q^{-1}Delta^k.
    const CanonicalForm y = meet(inverse(p) * dk, inverse(q) * dk, Side::R);
    return dk * inverse(y);
  }
  const CanonicalForm y = meet(dk * inverse(p), dk * inverse(q), Side::L);
  return inverse(y) * dk;
}

/// Maximal simple prefix (L) or suffix (R).
inline PermutationBraid head(const PositiveBraid& p, Side side) {
  detail::require_positive(p, "head");
  if (side == Side::L) return detail::left_head(p);
  if (p.u > 0) return PermutationBraid::delta(p.n);
  const RightCanonicalForm r = right_normal_form(p);
  if (r.u > 0) return PermutationBraid::delta(p.n);
  if (r.factors.empty()) return PermutationBraid::identity(p.n);
  return r.factors.back();
}

/// a <=_L b iff a^{-1} b is positive; a <=_R b iff b a^{-1} is positive.
inline bool divides(const CanonicalForm& a, const CanonicalForm& b, Side side) {
  detail::same_n(a, b);
  const CanonicalForm q = side == Side::L ? inverse(a) * b : b * inverse(a);
  return q.u >= 0;
}

/// alpha = P^{-1} Q with P meet_L Q = 1.
inline std::pair<PositiveBraid, PositiveBraid> np_form(const CanonicalForm& a) {
  if (a.u >= 0) return {identity_braid(a.n), a};
  const CanonicalForm p0 = delta_power(a.n, -a.u);
  const CanonicalForm q0{a.n, 0, a.factors};
  const CanonicalForm minv = inverse(meet(p0, q0, Side::L));
  return {minv * p0, minv * q0};
}

/// alpha = P Q^{-1} with P meet_R Q = 1.
inline std::pair<PositiveBraid, PositiveBraid> pn_form(const CanonicalForm& a) {
  if (a.u >= 0) return {a, identity_braid(a.n)};
  const CanonicalForm p0 = tau_power(CanonicalForm{a.n, 0, a.factors}, a.u);
  const CanonicalForm q0 = delta_power(a.n, -a.u);
  const CanonicalForm minv = inverse(meet(p0, q0, Side::R));
  return {p0 * minv, q0 * minv};
}

}  // namespace garside
