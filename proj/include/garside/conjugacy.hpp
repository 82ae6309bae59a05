#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "garside/braid.hpp"
#include "garside/lattice.hpp"

namespace garside {

/// beta = gamma alpha gamma^{-1}.
struct ConjugacyCertificate {
  CanonicalForm representative;
  CanonicalForm conjugator;
  CanonicalForm origin;

  bool holds() const { return representative == conjugate(conjugator, origin); }
};

/// Reduced fraction with positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t p, std::int64_t q) : num(p), den(q) {
    if (q == 0) throw InvalidArgument("zero denominator");
    if (den < 0) num = -num, den = -den;
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) num /= g, den /= g;
  }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  std::string to_string() const { return std::to_string(num) + "/" + std::to_string(den); }
};

/// One conjugation step: result = conjugator * input * conjugator^{-1}.
struct Step {
  CanonicalForm result;
  CanonicalForm conjugator;
};

/// The <=_R-minimal inf-increasing conjugator tau^{-u}(Delta A_1^{-1}); Delta
/// when a is a power of Delta.
inline PermutationBraid cycling0_conjugator(const CanonicalForm& a) {
  if (a.factors.empty()) return PermutationBraid::delta(a.n);
  return a.factors.front().left_complement().tau_power(a.u);
}

inline Step cycling0_step(const CanonicalForm& a) {
  const CanonicalForm g = from_simple(cycling0_conjugator(a));
  return {conjugate(g, a), g};
}

/// c(alpha) = Delta^u A_2 ... A_m tau^{-u}(A_1), conjugator tau^{-u}(A_1)^{-1}.
inline Step cycling_step(const CanonicalForm& a) {
  if (a.factors.empty()) return {a, identity_braid(a.n)};
  const CanonicalForm g = inverse(from_simple(a.factors.front().tau_power(a.u)));
  CanonicalForm r{a.n, a.u, {}};
  r.factors.assign(a.factors.begin() + 1, a.factors.end());
  r = multiply(r, from_simple(a.factors.front().tau_power(a.u)));
  return {r, g};
}

/// d(alpha) = A_m alpha A_m^{-1}.
inline Step decycling_step(const CanonicalForm& a) {
  if (a.factors.empty()) return {a, identity_braid(a.n)};
  const CanonicalForm g = from_simple(a.factors.back());
  return {conjugate(g, a), g};
}

inline CanonicalForm cycling(const CanonicalForm& a) { return cycling_step(a).result; }
inline CanonicalForm cycling0(const CanonicalForm& a) { return cycling0_step(a).result; }
inline CanonicalForm decycling(const CanonicalForm& a) { return decycling_step(a).result; }

namespace detail {

using StepFn = Step (*)(const CanonicalForm&);

/// Iterates `step` until an element repeats; returns the first repeated
/// element (the entry point of the cycle) with the accumulated conjugator.
inline Step enter_cycle(const CanonicalForm& a, StepFn step) {
  std::unordered_map<CanonicalForm, std::size_t> index;
  std::vector<Step> trail{{a, identity_braid(a.n)}};
  index.emplace(a, 0);
  for (;;) {
    const Step s = step(trail.back().result);
    const auto it = index.find(s.result);
    if (it != index.end()) return trail[it->second];
    index.emplace(s.result, trail.size());
    trail.push_back({s.result, s.conjugator * trail.back().conjugator});
  }
}

/// Iterates `step` while `better` keeps improving; returns once an orbit
/// closes without improvement.
inline Step climb(const CanonicalForm& a, StepFn step,
                  const std::function<bool(const CanonicalForm&, const CanonicalForm&)>& better) {
  Step cur{a, identity_braid(a.n)};
  std::unordered_set<CanonicalForm> seen{a};
  for (;;) {
    const Step s = step(cur.result);
    const CanonicalForm g = s.conjugator * cur.conjugator;
    if (better(s.result, cur.result)) {
      seen.clear();
      seen.insert(s.result);
      cur = {s.result, g};
      continue;
    }
    if (!seen.insert(s.result).second) return cur;
    cur = {s.result, g};
  }
}

/// True iff iterating `step` from a returns to a.
inline bool on_cycle(const CanonicalForm& a, StepFn step) {
  std::unordered_set<CanonicalForm> seen{a};
  CanonicalForm x = a;
  for (;;) {
    x = step(x).result;
    if (x == a) return true;
    if (!seen.insert(x).second) return false;
  }
}

}  // namespace detail

/// A super summit element conjugate to a, with conjugator.
inline ConjugacyCertificate sss_representative(const CanonicalForm& a) {
  const Step up = detail::climb(a, &cycling_step,
                                [](const CanonicalForm& x, const CanonicalForm& y) { return x.inf() > y.inf(); });
  const Step down = detail::climb(up.result, &decycling_step,
                                  [](const CanonicalForm& x, const CanonicalForm& y) { return x.sup() < y.sup(); });
  return {down.result, down.conjugator * up.conjugator, a};
}

struct SummitInvariants {
  std::int64_t inf_s = 0;
  std::int64_t sup_s = 0;
};

inline SummitInvariants summit_invariants(const CanonicalForm& a) {
  const CanonicalForm s = sss_representative(a).representative;
  return {s.inf(), s.sup()};
}

inline ConjugacyCertificate uss_representative(const CanonicalForm& a) {
  const ConjugacyCertificate s = sss_representative(a);
  const Step u = detail::enter_cycle(s.representative, &cycling_step);
  return {u.result, u.conjugator * s.conjugator, a};
}

inline ConjugacyCertificate uss_d_representative(const CanonicalForm& a) {
  const ConjugacyCertificate s = sss_representative(a);
  const Step u = detail::enter_cycle(s.representative, &decycling_step);
  return {u.result, u.conjugator * s.conjugator, a};
}

/// An element periodic under both cycling and decycling.
inline ConjugacyCertificate reduced_sss_representative(const CanonicalForm& a) {
  ConjugacyCertificate cur = uss_representative(a);
  for (int round = 0; round < 1000; ++round) {
    const Step d = detail::enter_cycle(cur.representative, &decycling_step);
    cur = {d.result, d.conjugator * cur.conjugator, a};
    if (detail::on_cycle(cur.representative, &cycling_step)) return cur;
    const Step c = detail::enter_cycle(cur.representative, &cycling_step);
    cur = {c.result, c.conjugator * cur.conjugator, a};
    if (detail::on_cycle(cur.representative, &decycling_step)) return cur;
  }
  throw ResourceLimit("reduced super summit search did not settle");
}

inline bool in_super_summit_set(const CanonicalForm& b) {
  const SummitInvariants s = summit_invariants(b);
  return b.inf() == s.inf_s && b.sup() == s.sup_s;
}

inline bool uss_membership(const CanonicalForm& b) {
  return in_super_summit_set(b) && detail::on_cycle(b, &cycling0_step);
}

inline bool uss_d_membership(const CanonicalForm& b) {
  return in_super_summit_set(b) && detail::on_cycle(b, &decycling_step);
}

inline bool reduced_sss_membership(const CanonicalForm& b) {
  return uss_membership(b) && detail::on_cycle(b, &decycling_step);
}

/// Whole ultra summit set by closure under conjugation by simple elements
/// and tau, each element paired with a conjugator from a.
inline std::vector<ConjugacyCertificate> enumerate_uss_certified(const CanonicalForm& a,
                                                                 std::size_t cap = 100000) {
  const ConjugacyCertificate root = uss_representative(a);
  const std::int64_t inf_s = root.representative.inf(), sup_s = root.representative.sup();
  const std::vector<PermutationBraid> simples = PermutationBraid::all(a.n);
  std::vector<CanonicalForm> fwd, inv;
  for (const PermutationBraid& s : simples) {
    fwd.push_back(from_simple(s));
    inv.push_back(inverse(fwd.back()));
  }
  const CanonicalForm delta_inv = delta_power(a.n, -1);

  std::unordered_set<CanonicalForm> seen{root.representative};
  std::vector<ConjugacyCertificate> queue{root};
  auto consider = [&](const CanonicalForm& y, const CanonicalForm& step, const CanonicalForm& from) {
    if (y.inf() != inf_s || y.sup() != sup_s) return;
    if (seen.count(y) || !detail::on_cycle(y, &cycling0_step)) return;
    seen.insert(y);
    queue.push_back({y, step * from, a});
    if (seen.size() > cap) throw CapExceeded("ultra summit set larger than cap " + std::to_string(cap));
  };
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const CanonicalForm x = queue[head].representative;
    const CanonicalForm g = queue[head].conjugator;
    consider(tau(x), delta_inv, g);
    for (std::size_t i = 0; i < simples.size(); ++i) consider(fwd[i] * x * inv[i], fwd[i], g);
  }
  std::sort(queue.begin(), queue.end(), [](const ConjugacyCertificate& p, const ConjugacyCertificate& q) {
    return p.representative < q.representative;
  });
  return queue;
}

inline std::vector<CanonicalForm> enumerate_uss(const CanonicalForm& a, std::size_t cap = 100000) {
  std::vector<CanonicalForm> out;
  for (const ConjugacyCertificate& c : enumerate_uss_certified(a, cap)) out.push_back(c.representative);
  return out;
}

struct TranslationNumbers {
  Rational t_inf;
  Rational t_sup;
};

/// Exact translation numbers: the denominators are at most n(n-1)/2, so the
/// extremes of inf_s(a^q)/q and sup_s(a^q)/q over that range are attained.
inline TranslationNumbers translation_numbers(const CanonicalForm& a) {
  const std::int64_t qmax = std::max<std::int64_t>(1, static_cast<std::int64_t>(a.n) * (a.n - 1) / 2);
  TranslationNumbers t;
  CanonicalForm p = identity_braid(a.n);
  for (std::int64_t q = 1; q <= qmax; ++q) {
    p = p * a;
    const SummitInvariants s = summit_invariants(p);
    const Rational lo(s.inf_s, q), hi(s.sup_s, q);
    if (q == 1 || lo > t.t_inf) t.t_inf = lo;
    if (q == 1 || hi < t.t_sup) t.t_sup = hi;
  }
  return t;
}

/// T_b = A_{m-1} ... A_0 over one full c_0-period of b.
inline PositiveBraid cycling_commutator(const CanonicalForm& b) {
  if (!uss_membership(b)) throw InvalidArgument("cycling commutator needs an ultra summit element");
  CanonicalForm t = identity_braid(b.n), x = b;
  do {
    const Step s = cycling0_step(x);
    t = s.conjugator * t;
    x = s.result;
  } while (!(x == b));
  return t;
}

}  // namespace garside
