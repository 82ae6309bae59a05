#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "garside/conjugacy.hpp"
#include "garside/curve.hpp"
#include "garside/standardizer.hpp"
#include "garside/tube.hpp"

namespace garside {

/// alpha^p = Delta^{2m}.
struct Periodic {
  int p = 1;
  std::int64_t m = 0;
};

struct Reduced {
  std::int64_t q = 1;                   // power of alpha that was examined
  StandardDescription reduction;        // invariant under the representative
  ConjugacyCertificate certificate;     // representative = gamma alpha^q gamma^{-1}
  TubeDecomposition tubes;              // of the representative along the outermost layer
  CurveSystem pulled_back;              // gamma^{-1} * reduction, invariant under alpha^q
  bool invariant_under_alpha = false;   // whether alpha itself preserves pulled_back
};

struct Undecided {
  std::vector<std::int64_t> powers;
  std::vector<CanonicalForm> representatives;
};

using ClassificationResult = std::variant<Periodic, Reduced, Undecided>;

inline std::optional<Periodic> is_periodic(const CanonicalForm& a) {
  const int first = a.n > 1 ? a.n - 1 : 1;
  CanonicalForm x = power(a, first);
  for (int p = first; p <= std::max(a.n, 1); ++p) {
    if (p > first) x = x * a;
    if (x.factors.empty() && x.u % 2 == 0) return Periodic{p, x.u / 2};
  }
  return std::nullopt;
}

namespace detail {

/// Every composition of n with at least one curve, in lexicographic order.
inline std::vector<Composition> curve_compositions(int n) {
  std::vector<Composition> out;
  for (std::uint32_t cuts = 0; cuts < (1u << (n - 1)); ++cuts) {
    std::vector<int> parts;
    int len = 1;
    for (int i = 1; i < n; ++i) {
      if (cuts & (1u << (i - 1))) parts.push_back(len), len = 1;
      else ++len;
    }
    parts.push_back(len);
    Composition c(parts);
    if (c.has_curves()) out.push_back(c);
  }
  return out;
}

}  // namespace detail

/// Unnested standard systems preserved by b. Nested invariant systems always
/// contain an invariant unnested outer layer, so nothing is lost.
inline std::vector<StandardDescription> invariant_standard_systems(const CanonicalForm& b) {
  std::vector<StandardDescription> out;
  if (b.n < 3) return out;
  if (b.n > kCurveStrandCap) throw InvalidArgument("strand count above the curve cap");
  // Image of every round curve, if it is round again.
  std::map<Interval, std::optional<Interval>> image;
  for (int lo = 1; lo <= b.n; ++lo)
    for (int hi = lo + 1; hi <= b.n; ++hi) {
      if (hi - lo + 1 > b.n - 1) continue;
      const auto s = is_standard(act(b, standard_curves(StandardDescription(b.n, {{lo, hi}}))));
      image[{lo, hi}] = s ? std::optional<Interval>(s->rounds.front()) : std::nullopt;
    }
  for (const Composition& c : detail::curve_compositions(b.n)) {
    const StandardDescription d = c.description();
    bool ok = true;
    for (const Interval& r : d.rounds) {
      const auto& im = image[r];
      if (!im || !std::binary_search(d.rounds.begin(), d.rounds.end(), *im)) ok = false;
    }
    if (ok) out.push_back(d);
  }
  return out;
}

/// An invariant standard system of b with the most components (ties broken
/// lexicographically), or nullopt when b has none.
inline std::optional<StandardDescription> find_standard_reduction(const CanonicalForm& b) {
  std::optional<StandardDescription> best;
  for (const StandardDescription& d : invariant_standard_systems(b))
    if (!best || d.rounds.size() > best->rounds.size() ||
        (d.rounds.size() == best->rounds.size() && d < *best))
      best = d;
  return best;
}

struct ClassifyOptions {
  std::optional<std::int64_t> max_power;
};

inline std::int64_t default_max_power(int n) {
  return std::max<std::int64_t>(n, static_cast<std::int64_t>(n) * (n - 1) / 2 - 1);
}

inline ClassificationResult classify(const CanonicalForm& a, const ClassifyOptions& opt = {}) {
  if (auto p = is_periodic(a)) return *p;
  const std::int64_t qmax = opt.max_power.value_or(default_max_power(a.n));
  Undecided undecided;
  CanonicalForm aq = identity_braid(a.n);
  for (std::int64_t q = 1; q <= qmax; ++q) {
    aq = aq * a;
    const ConjugacyCertificate cert = reduced_sss_representative(aq);
    undecided.powers.push_back(q);
    undecided.representatives.push_back(cert.representative);
    const auto red = find_standard_reduction(cert.representative);
    if (!red) continue;
    Reduced r;
    r.q = q;
    r.reduction = *red;
    r.certificate = cert;
    r.tubes = detube(cert.representative, Composition(red->composition()));
    r.pulled_back = act(inverse(cert.conjugator), standard_curves(*red));
    r.invariant_under_alpha = act(a, r.pulled_back) == r.pulled_back;
    return r;
  }
  return undecided;
}

enum class SplitVerdict { Split, NotSplit, Undecided };

struct SplitResult {
  SplitVerdict verdict = SplitVerdict::Undecided;
  std::optional<CanonicalForm> conjugator;   // gamma with gamma a gamma^{-1} block diagonal
  std::optional<Composition> composition;    // the blocks
  std::size_t examined = 0;                  // braids scanned
};

namespace detail {

/// Some invariant unnested standard system of b with trivial exterior.
inline std::optional<Composition> split_blocks(const CanonicalForm& b) {
  for (const StandardDescription& d : invariant_standard_systems(b)) {
    const Composition c(d.composition());
    const TubeDecomposition t = detube(b, c);
    if (t.exterior.is_identity()) return c;
  }
  return std::nullopt;
}

}  // namespace detail

/// Whether a is conjugate into a proper block subgroup. Exact for positive
/// input; general input scans the ultra summit set.
inline SplitResult is_split(const CanonicalForm& a, std::size_t cap = 100000) {
  SplitResult r;
  if (a.is_identity()) {
    r.verdict = SplitVerdict::Split;
    r.conjugator = identity_braid(a.n);
    return r;
  }
  if (a.n < 3) {
    r.verdict = SplitVerdict::NotSplit;
    return r;
  }
  if (a.is_positive()) {
    r.examined = 1;
    if (auto c = detail::split_blocks(a)) {
      r.verdict = SplitVerdict::Split;
      r.conjugator = identity_braid(a.n);
      r.composition = c;
    } else {
      r.verdict = SplitVerdict::NotSplit;
    }
    return r;
  }
  std::vector<ConjugacyCertificate> uss;
  try {
    uss = enumerate_uss_certified(a, cap);
  } catch (const CapExceeded&) {
    r.verdict = SplitVerdict::Undecided;
    return r;
  }
  for (const ConjugacyCertificate& b : uss) {
    ++r.examined;
    if (auto c = detail::split_blocks(b.representative)) {
      r.verdict = SplitVerdict::Split;
      r.composition = c;
      r.conjugator = b.conjugator;
      return r;
    }
  }
  r.verdict = SplitVerdict::NotSplit;
  return r;
}

struct ExtComponent {
  CanonicalForm exterior;
  PositiveBraid standardizer;
  StandardDescription image;
  TubeDecomposition tubes;
};

/// Exterior braid of a relative to an invariant unnested system: conjugate by
/// the minimal standardizer of the system and detube.
inline ExtComponent ext_component(const CanonicalForm& a, const CurveSystem& system) {
  if (system.n() != a.n) throw DimensionMismatch("system and braid on different strand counts");
  if (system.is_nested()) throw InvalidArgument("ext_component expects an unnested system");
  if (!(act(a, system) == system)) throw InvalidArgument("system is not invariant under the braid");
  ExtComponent e;
  const StandardizerResult st = minimal_standardizer(system);
  e.standardizer = st.minimal;
  e.image = st.image;
  e.tubes = detube(conjugate(st.minimal, a), Composition(st.image.composition()));
  e.exterior = e.tubes.exterior;
  return e;
}

inline ExtComponent ext_component(const CanonicalForm& a, const StandardDescription& d) {
  return ext_component(a, standard_curves(d));
}

}  // namespace garside
