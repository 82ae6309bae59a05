// Acceptance checks: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "garside/garside.hpp"
#include "test_support.hpp"

using namespace garside;
using garside::testing::Rng;
using garside::testing::uniform;

namespace {

struct Outcome {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (!ok) {
      ++failures;
      if (notes.size() < 5) notes.push_back(what);
    }
  }
};

CanonicalForm word(int n, std::vector<int> w) { return left_normal_form(BraidWord::from_ints(n, std::move(w))); }

std::set<CanonicalForm> uss_set(const CanonicalForm& a) {
  const auto v = enumerate_uss(a);
  return {v.begin(), v.end()};
}

// Split braid in B_4 whose summit set holds a braid without standard curves.
Outcome criterion1() {
  Outcome o;
  const CanonicalForm alpha = word(4, {-1, 2});
  const CanonicalForm beta = word(4, {-2, -1, 2, 3});
  const SummitInvariants s = summit_invariants(alpha);
  o.check(s.inf_s == -1, "inf_s(alpha) = " + std::to_string(s.inf_s));
  o.check(s.sup_s == 1, "sup_s(alpha) = " + std::to_string(s.sup_s));
  o.check(beta == conjugate(inverse(positive_braid(4, {3, 2})), alpha), "beta is the stated conjugate");
  o.check(in_super_summit_set(beta), "beta in super summit set");
  o.check(!find_standard_reduction(beta).has_value(), "beta has a standard reduction system");
  const SplitResult split = is_split(alpha);
  o.check(split.verdict == SplitVerdict::Split, "alpha not reported split");
  if (split.conjugator && split.composition) {
    const CanonicalForm b = conjugate(*split.conjugator, alpha);
    o.check(detube(b, *split.composition).exterior.is_identity(), "split witness does not detube to identity");
  }
  return o;
}

// Reducible B_6 braid with periodic exterior.
Outcome criterion2() {
  Outcome o;
  const CanonicalForm alpha = positive_braid(6, {2, 1, 3, 2, 4, 5, 3, 4, 3});
  const CanonicalForm beta = positive_braid(6, {4, 1, 3, 2, 4, 5, 4, 3, 2});
  o.check(beta == conjugate(inverse(word(6, {2, -4})), alpha), "beta is the stated conjugate");
  o.check(uss_membership(beta), "beta in ultra summit set");
  o.check(uss_d_membership(beta), "beta closed under decycling");
  o.check(uss_set(alpha).count(beta) == 1, "beta in the enumerated USS of alpha");
  const SummitInvariants s = summit_invariants(alpha);
  o.check(s.inf_s == 0 && s.sup_s == 1, "summit invariants (0, 1)");
  o.check(!find_standard_reduction(beta).has_value(), "beta has a standard reduction system");
  const ClassificationResult r = classify(alpha);
  const Reduced* red = std::get_if<Reduced>(&r);
  o.check(red && red->q < 6, "classify(alpha) is Reduced at q < 6");
  if (red) {
    o.check(act(power(alpha, red->q), red->pulled_back) == red->pulled_back, "pulled back system invariant");
    o.check(red->certificate.holds(), "conjugacy certificate");
  }
  return o;
}

// B_7 braid whose powers are single-factor summit elements.
Outcome criterion3() {
  Outcome o;
  const CanonicalForm alpha = positive_braid(7, {1, 2, 3, 4, 3, 2, 1, 5, 4, 6, 5, 4});
  const CanonicalForm beta = positive_braid(7, {1, 2, 3, 2, 1, 4, 3, 5, 6, 5, 4, 3});
  o.check(beta == conjugate(inverse(positive_braid(7, {3, 4, 5})), alpha), "beta is the stated conjugate");
  o.check(beta.factors.size() == 1 && beta.u == 0, "beta is a single permutation braid");
  const PermutationBraid b = beta.factors.front();
  o.check(generator_list(b.starting_set()) == std::vector<int>{1, 3, 6}, "S(B) = {1,3,6}");
  o.check(generator_list(b.finishing_set()) == std::vector<int>{1, 3, 4, 6}, "F(B) = {1,3,4,6}");
  for (int q = 1; q <= 3; ++q) {
    const CanonicalForm bq = power(beta, q);
    const std::string tag = " for q=" + std::to_string(q);
    o.check(bq.u == 0 && bq.factors == std::vector<PermutationBraid>(q, b), "normal form B^q" + tag);
    o.check(cycling(bq) == bq, "c fixes beta^q" + tag);
    o.check(decycling(bq) == bq, "d fixes beta^q" + tag);
    o.check(!find_standard_reduction(bq).has_value(), "beta^q has no standard reduction" + tag);
  }
  const TranslationNumbers t = translation_numbers(alpha);
  o.check(t.t_inf == Rational(0, 1) && t.t_sup == Rational(1, 1),
          "translation numbers " + t.t_inf.to_string() + ", " + t.t_sup.to_string());
  return o;
}

// Standardizer laws on random curve systems.
Outcome criterion4() {
  Outcome o;
  Rng rng(4001);
  std::size_t systems = 0, bfs_compared = 0;
  while (systems < 520) {
    const int n = uniform(rng, 3, 6);
    const StandardDescription s = testing::random_description(rng, n);
    const CanonicalForm w = testing::random_braid(rng, n, 12);
    const CurveSystem c = act(inverse(w), standard_curves(s));
    ++systems;
    const StandardizerResult r = minimal_standardizer(c);
    const std::string tag = " [" + s.to_string() + " / " + w.to_string() + "]";

    // (a) minimality verified independently.
    o.check(verify_minimal(r.minimal, c), "verify_minimal" + tag);
    o.check(r.certificate.holds(), "descent certificate" + tag);

    // (b) lattice closure for P, Q built from standard-preserving left factors.
    const Composition outer(r.image.outermost().composition());
    auto random_member = [&]() {
      for (;;) {
        CanonicalForm x;
        if (uniform(rng, 0, 1)) {
          TubeDecomposition d;
          d.composition = outer;
          d.exterior = testing::random_braid(rng, outer.k(), 4, true);
          for (int p : outer.parts) d.interiors.push_back(delta_power(p, uniform(rng, 0, 2)));
          x = recombine(d);
        } else {
          x = testing::random_braid(rng, n, 6, true);
        }
        const CanonicalForm p = x * r.minimal;
        if (is_standard(act(p, c))) return p;
      }
    };
    const CanonicalForm p = random_member(), q = random_member();
    o.check(divides(r.minimal, p, Side::R), "minimal standardizer right-divides a member" + tag);
    o.check(is_standard(act(meet(p, q, Side::R), c)).has_value(), "meet_R closure" + tag);
    o.check(is_standard(act(join(p, q, Side::R), c)).has_value(), "join_R closure" + tag);

    // (d) curve-by-curve product agrees with the layered minimum and with BFS.
    std::vector<CurveSystem> parts;
    CurveSystem rest = c;
    while (rest.component_count() > 0) {
      const CurveSystem layer = rest.outermost();
      for (std::size_t i = 0; i < layer.component_count(); ++i) parts.push_back(layer.component(i));
      rest = rest.minus(layer);
    }
    o.check(standardize_componentwise(c, parts) == r.minimal, "componentwise product" + tag);
    if (r.minimal.canonical_length() <= 3) {
      try {
        const PositiveBraid b = minimal_standardizer_bfs(c, 24, 400000).minimal;
        ++bfs_compared;
        o.check(b == r.minimal, "BFS oracle" + tag);
      } catch (const ResourceLimit&) {
      }
    }
  }

  // (c) standard curves disjoint from a single curve stay standard.
  std::size_t single = 0;
  while (single < 200) {
    const int n = uniform(rng, 3, 6);
    const StandardDescription pair = testing::random_description(rng, n);
    if (pair.rounds.size() < 2) continue;
    const Interval moved = pair.rounds[0], fixed = pair.rounds[1];
    // g maps the round curve `fixed` to another round curve, so C' = g*fixed is
    // standard while C = g*moved is an arbitrary curve disjoint from it.
    const Composition comp(StandardDescription(n, {fixed}).composition());
    const CanonicalForm g = recombine(testing::random_tubular(rng, comp, 8));
    const CurveSystem cp = act(g, standard_curves(StandardDescription(n, {fixed})));
    const CurveSystem cc = act(g, standard_curves(StandardDescription(n, {moved})));
    if (!is_standard(cp)) {
      o.check(false, "construction produced a non-standard C'");
      continue;
    }
    ++single;
    const PositiveBraid p = minimal_standardizer(cc).minimal;
    o.check(is_standard(act(p, cp)).has_value(), "P*C' standard for C' = " + is_standard(cp)->to_string());
  }
  o.notes.insert(o.notes.begin(), std::to_string(systems) + " systems, " + std::to_string(bfs_compared) +
                                      " BFS comparisons, " + std::to_string(single) + " disjoint pairs");
  return o;
}

// Standardizer conjugation keeps summit data of reducible braids.
Outcome criterion5() {
  Outcome o;
  Rng rng(5002);
  std::size_t braids = 0;
  while (braids < 220) {
    const int n = uniform(rng, 3, 6);
    const Composition comp = testing::random_curve_composition(rng, n);
    const CanonicalForm alpha0 = recombine(testing::random_tubular(rng, comp, 6, true));
    const CanonicalForm w = testing::random_braid(rng, n, 10);
    const CanonicalForm alpha = conjugate(w, alpha0);
    if (is_periodic(alpha)) continue;
    ++braids;
    const CurveSystem red = act(w, standard_curves(comp.description()));
    const std::string tag = " [" + comp.to_string() + " " + alpha.to_string() + "]";
    o.check(act(alpha, red) == red, "reduction system invariant" + tag);

    auto check_at = [&](const CanonicalForm& x, const CanonicalForm& gamma, int level) {
      const CurveSystem rx = act(gamma, red);
      const PositiveBraid p = minimal_standardizer(rx).minimal;
      const CanonicalForm y = conjugate(p, x);
      o.check(x.inf() <= y.inf() && y.sup() <= x.sup(), "inf/sup bounds" + tag);
      if (level >= 1) o.check(in_super_summit_set(y), "super summit preserved" + tag);
      if (level >= 2) o.check(uss_membership(y), "ultra summit preserved" + tag);
    };
    check_at(alpha, identity_braid(n), 0);
    const ConjugacyCertificate s = sss_representative(alpha);
    check_at(s.representative, s.conjugator, 1);
    const ConjugacyCertificate u = uss_representative(alpha);
    check_at(u.representative, u.conjugator, 2);
  }
  o.notes.insert(o.notes.begin(), std::to_string(braids) + " braids");
  return o;
}

// Garside core: rewriting, lattice laws, minimal raising conjugator.
Outcome criterion6() {
  Outcome o;
  Rng rng(6003);
  // Relation rewriting: equivalent words share a normal form.
  for (int t = 0; t < 10000; ++t) {
    const int n = uniform(rng, 3, 7);
    BraidWord w = testing::random_word(rng, n, uniform(rng, 1, 20));
    const CanonicalForm before = left_normal_form(w);
    auto& L = w.letters;
    for (int step = 0; step < 12; ++step) {
      const int kind = uniform(rng, 0, 3);
      const std::size_t at = L.empty() ? 0 : static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(L.size()) - 1));
      if (kind == 0) {  // insert s s^-1
        const int g = uniform(rng, 1, n - 1), e = uniform(rng, 0, 1) ? 1 : -1;
        L.insert(L.begin() + at, {{g, e}, {g, -e}});
      } else if (kind == 1 && at + 1 < L.size()) {  // cancel a free pair
        if (L[at].index == L[at + 1].index && L[at].sign == -L[at + 1].sign) L.erase(L.begin() + at, L.begin() + at + 2);
      } else if (kind == 2 && at + 1 < L.size()) {  // far commutation
        if (std::abs(L[at].index - L[at + 1].index) >= 2) std::swap(L[at], L[at + 1]);
      } else if (kind == 3 && at + 2 < L.size()) {  // braid relation, either sign
        const Letter a = L[at], b = L[at + 1], c = L[at + 2];
        if (a.index == c.index && a.sign == b.sign && b.sign == c.sign && std::abs(a.index - b.index) == 1) {
          L[at] = b;
          L[at + 1] = a;
          L[at + 2] = b;
        }
      }
    }
    o.check(left_normal_form(w) == before, "rewritten word changed normal form");
    // A single sign flip changes the exponent sum, hence the element.
    if (!L.empty()) {
      BraidWord v = w;
      v.letters[uniform(rng, 0, static_cast<int>(v.letters.size()) - 1)].sign *= -1;
      o.check(!(left_normal_form(v) == before), "sign flip kept the normal form");
    }
  }

  // Lattice axioms on positive braids.
  for (int t = 0; t < 1500; ++t) {
    const int n = uniform(rng, 3, 5);
    const CanonicalForm p = testing::random_braid(rng, n, 8, true), q = testing::random_braid(rng, n, 8, true),
                        r = testing::random_braid(rng, n, 8, true);
    for (Side side : {Side::L, Side::R}) {
      const CanonicalForm m = meet(p, q, side), j = join(p, q, side);
      o.check(divides(m, p, side) && divides(m, q, side), "meet divides");
      o.check(divides(p, j, side) && divides(q, j, side), "join is a multiple");
      o.check(m == meet(q, p, side) && j == join(q, p, side), "commutativity");
      o.check(meet(meet(p, q, side), r, side) == meet(p, meet(q, r, side), side), "meet associativity");
      o.check(join(join(p, q, side), r, side) == join(p, join(q, r, side), side), "join associativity");
      o.check(meet(p, join(p, q, side), side) == p && join(p, meet(p, q, side), side) == p, "absorption");
      // Greatest common divisor: any common divisor built from p divides the meet.
      const CanonicalForm x = meet(p, r, side);
      if (divides(x, q, side)) o.check(divides(x, m, side), "meet is greatest");
      const CanonicalForm y = join(p, r, side);
      if (divides(q, y, side)) o.check(divides(j, y, side), "join is least");
    }
  }

  // Minimal inf-increasing conjugator against brute force over all simples.
  const std::vector<PermutationBraid> simples = PermutationBraid::all(4);
  int tested = 0;
  while (tested < 1000) {
    const CanonicalForm a = testing::random_braid(rng, 4, 14);
    if (a.factors.empty()) continue;
    ++tested;
    std::vector<CanonicalForm> raising;
    for (const PermutationBraid& s : simples) {
      const CanonicalForm x = from_simple(s);
      if ((x * a).inf() > a.inf()) raising.push_back(x);
    }
    const CanonicalForm c0 = from_simple(cycling0_conjugator(a));
    bool minimal = !raising.empty();
    for (const CanonicalForm& x : raising) minimal = minimal && divides(c0, x, Side::R);
    const bool member = std::find(raising.begin(), raising.end(), c0) != raising.end();
    o.check(member && minimal, "cycling0 conjugator is not the minimal raising simple for " + a.to_string());
  }
  return o;
}

// Cycling commutators of reducible braids with a higher exterior inf_s.
Outcome criterion7() {
  Outcome o;
  Rng rng(7004);
  std::size_t braids = 0, elements = 0;
  std::size_t attempts = 0;
  while (braids < 110 && attempts < 20000) {
    ++attempts;
    const int n = uniform(rng, 3, 5);
    const Composition comp = testing::random_curve_composition(rng, n);
    if (comp.k() > 3) continue;
    // Periodic, non-central exteriors are irreducible, so the tube curves form R_ext.
    TubeDecomposition d;
    d.composition = comp;
    if (comp.k() == 2) {
      d.exterior = generator_braid(2, 1);
      d.exterior = power(d.exterior, uniform(rng, -2, 3));
    } else if (uniform(rng, 0, 1)) {
      const int e = uniform(rng, -4, 4);
      if (e % 3 == 0) continue;
      d.exterior = power(positive_braid(3, {1, 2}), e);
    } else {
      d.exterior = delta_power(3, 2 * uniform(rng, -1, 1) + 1);
    }
    if (!(act_on_composition(d.exterior, comp) == comp)) continue;
    // Interiors get extra negative Delta factors to pull inf_s(alpha) down.
    for (int p : comp.parts)
      d.interiors.push_back(p > 1 ? testing::random_braid(rng, p, 5) * delta_power(p, -uniform(rng, 1, 2))
                                  : identity_braid(1));
    const CanonicalForm alpha = conjugate(testing::random_braid(rng, n, 6), recombine(d));
    if (is_periodic(alpha)) continue;
    if (summit_invariants(d.exterior).inf_s <= summit_invariants(alpha).inf_s) continue;
    std::vector<CanonicalForm> uss;
    try {
      uss = enumerate_uss(alpha, 20000);
    } catch (const CapExceeded&) {
      continue;
    }
    ++braids;
    for (const CanonicalForm& beta : uss) {
      ++elements;
      const PositiveBraid t = cycling_commutator(beta);
      o.check(!t.is_identity() && t * beta == beta * t, "T_beta nontrivial and commuting");
      o.check(is_split(t).verdict == SplitVerdict::Split, "T_beta not split for beta = " + beta.to_string());
    }
  }
  o.check(braids >= 100, "only " + std::to_string(braids) + " qualifying braids constructed");
  o.notes.insert(o.notes.begin(), std::to_string(braids) + " braids, " + std::to_string(elements) + " USS elements");
  return o;
}

// Right join example and the two-curve standardizer in D_4.
Outcome criterion8() {
  Outcome o;
  const CanonicalForm s1 = generator_braid(4, 1), s3 = generator_braid(4, 3);
  const CanonicalForm s13 = positive_braid(4, {1, 3});
  o.check(join(s1, s3, Side::R) == s13, "s1 join_R s3 = s1 s3");
  const PositiveBraid expected = positive_braid(4, {2, 1, 3});
  const CurveSystem c = act(inverse(expected), standard_curves(StandardDescription(4, {{1, 2}, {3, 4}})));
  o.check(c.component_count() == 2 && !is_standard(c), "two non-standard curves");
  const StandardizerResult r = minimal_standardizer(c);
  o.check(r.minimal == expected, "minimal standardizer is s2 s1 s3, got " + r.minimal.to_string());
  o.check(divides(s13, r.minimal, Side::R) && !(r.minimal == s13), "strict right domination of s1 s3");
  // Each curve alone is standardized by a single generator.
  for (std::size_t i = 0; i < 2; ++i) {
    const PositiveBraid pi = minimal_standardizer(c.component(i)).minimal;
    o.check(pi.canonical_length() == 1 && pi.factors.front().length() == 1, "single-curve standardizer is a generator");
  }
  // Curve-by-curve in the order "s1 first" gives s2 s3 s1 = s2 s1 s3.
  for (std::size_t first = 0; first < 2; ++first) {
    const PositiveBraid p = standardize_componentwise(c, {c.component(first), c.component(1 - first)});
    o.check(p == expected, "componentwise product");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},
      {5, criterion5}, {6, criterion6}, {7, criterion7}, {8, criterion8}};
  int failed = 0;
  for (const auto& [id, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const bool pass = o.failures == 0;
    failed += !pass;
    std::printf("%s criterion %d: %zu checks, %zu failures", pass ? "PASS" : "FAIL", id, o.cases, o.failures);
    for (const std::string& note : o.notes) std::printf("; %s", note.c_str());
    std::printf("\n");
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
