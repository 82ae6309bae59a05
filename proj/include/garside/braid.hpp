#pragma once

#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "garside/error.hpp"
#include "garside/permutation_braid.hpp"

namespace garside {

/// sigma_index^sign with 1 <= index <= n-1 and sign = +1 or -1.
struct Letter {
  int index = 1;
  int sign = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A word in the Artin generators; the empty word is the identity.
struct BraidWord {
  int n = 1;
  std::vector<Letter> letters;

  BraidWord() = default;
  explicit BraidWord(int strands, std::vector<Letter> ls = {}) : n(strands), letters(std::move(ls)) {
    validate();
  }

  /// Shorthand: nonzero integers, positive for sigma_i and negative for its inverse.
  static BraidWord from_ints(int strands, const std::vector<int>& xs) {
    std::vector<Letter> ls;
    ls.reserve(xs.size());
    for (int x : xs) {
      if (x == 0) throw InvalidArgument("zero is not a generator");
      ls.push_back({x > 0 ? x : -x, x > 0 ? 1 : -1});
    }
    return BraidWord(strands, std::move(ls));
  }

  void validate() const {
    check_strands(n);
    for (const Letter& l : letters) {
      if (l.index < 1 || l.index >= n)
        throw InvalidArgument("generator s" + std::to_string(l.index) + " out of range for n=" +
                              std::to_string(n));
      if (l.sign != 1 && l.sign != -1) throw InvalidArgument("letter sign must be +1 or -1");
    }
  }

  BraidWord inverse() const {
    BraidWord w;
    w.n = n;
    w.letters.assign(letters.rbegin(), letters.rend());
    for (Letter& l : w.letters) l.sign = -l.sign;
    return w;
  }

  BraidWord operator*(const BraidWord& o) const {
    if (n != o.n) throw DimensionMismatch("words on different strand counts");
    BraidWord w = *this;
    w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
    return w;
  }

  bool is_positive() const {
    for (const Letter& l : letters)
      if (l.sign < 0) return false;
    return true;
  }

  std::string to_string() const {
    std::string s;
    for (const Letter& l : letters) {
      if (!s.empty()) s += ' ';
      s += 's' + std::to_string(l.index);
      if (l.sign < 0) s += "^-1";
    }
    return s;
  }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

namespace detail {
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("Delta exponent overflow");
  return r;
}
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("Delta exponent overflow");
  return r;
}
}  // namespace detail

/// Delta^u A_1 ... A_m. Left-weighted in a CanonicalForm, right-weighted in a
/// RightCanonicalForm; the storage is the same.
template <bool Left>
struct GreedyForm {
  int n = 1;
  std::int64_t u = 0;
  std::vector<PermutationBraid> factors;

  std::int64_t inf() const { return u; }
  std::int64_t sup() const { return detail::checked_add(u, static_cast<std::int64_t>(factors.size())); }
  std::size_t canonical_length() const { return factors.size(); }
  bool is_delta_power() const { return factors.empty(); }
  bool is_identity() const { return u == 0 && factors.empty(); }
  bool is_positive() const { return u >= 0; }

  /// Word realization: Delta^u expanded, then the factors.
  BraidWord to_word() const {
    BraidWord w;
    w.n = n;
    const std::vector<int> d = PermutationBraid::delta(n).word();
    const std::int64_t reps = u < 0 ? -u : u;
    for (std::int64_t k = 0; k < reps; ++k) {
      if (u > 0)
        for (int i : d) w.letters.push_back({i, 1});
      else
        for (auto it = d.rbegin(); it != d.rend(); ++it) w.letters.push_back({*it, -1});
    }
    for (const PermutationBraid& a : factors)
      for (int i : a.word()) w.letters.push_back({i, 1});
    return w;
  }

  /// "D^u (s1 s2) (s3)", accepted back by the parser.
  std::string to_string() const {
    std::ostringstream os;
    os << "D^" << u;
    for (const PermutationBraid& a : factors) {
      os << " (";
      bool first = true;
      for (int i : a.word()) {
        os << (first ? "" : " ") << 's' << i;
        first = false;
      }
      os << ')';
    }
    return os.str();
  }

  std::size_t hash() const {
    std::size_t h = std::hash<std::int64_t>{}(u) ^ (static_cast<std::size_t>(n) << 48);
    for (const PermutationBraid& a : factors) h = h * 0x9E3779B97F4A7C15ull + a.hash();
    return h;
  }

  friend bool operator==(const GreedyForm& a, const GreedyForm& b) {
    return a.n == b.n && a.u == b.u && a.factors == b.factors;
  }
  friend bool operator<(const GreedyForm& a, const GreedyForm& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.u != b.u) return a.u < b.u;
    return a.factors < b.factors;
  }
};

using CanonicalForm = GreedyForm<true>;
using RightCanonicalForm = GreedyForm<false>;
/// Role alias: a CanonicalForm with u >= 0.
using PositiveBraid = CanonicalForm;

namespace detail {

/// Incremental left-greedy normalizer. Holds Delta^u F_1..F_m with the
/// factors kept left-weighted after every append.
class Normalizer {
 public:
  explicit Normalizer(int n) : n_(n) { check_strands(n); }
  explicit Normalizer(const CanonicalForm& c) : n_(c.n), u_(c.u), f_(c.factors) {}

  void append_delta_power(std::int64_t k) {
    if (k == 0) return;
    u_ = checked_add(u_, k);
    if (k % 2 != 0)
      for (PermutationBraid& a : f_) a = a.tau();
  }

  void append_simple(const PermutationBraid& a) {
    if (a.n() != n_) throw DimensionMismatch("factor on wrong strand count");
    if (a.is_identity()) return;
    f_.push_back(a);
    for (std::size_t j = f_.size() - 1; j > 0; --j)
      if (!PermutationBraid::left_weight(f_[j - 1], f_[j])) break;
    // One backward pass is enough in theory; the sweep below is a cheap guard.
    for (bool moved = true; moved;) {
      moved = false;
      for (std::size_t j = f_.size() - 1; j > 0; --j)
        moved |= PermutationBraid::left_weight(f_[j - 1], f_[j]);
    }
    tidy();
  }

  void append_simple_inverse(const PermutationBraid& a) {
    if (a.is_identity()) return;
    append_delta_power(-1);
    append_simple(a.left_complement());
  }

  void append_letter(const Letter& l) {
    const PermutationBraid g = PermutationBraid::generator(n_, l.index);
    if (l.sign > 0)
      append_simple(g);
    else
      append_simple_inverse(g);
  }

  void append(const CanonicalForm& b) {
    if (b.n != n_) throw DimensionMismatch("braids on different strand counts");
    append_delta_power(b.u);
    for (const PermutationBraid& a : b.factors) append_simple(a);
  }

  CanonicalForm result() const { return CanonicalForm{n_, u_, f_}; }

 private:
  void tidy() {
    std::size_t lead = 0;
    while (lead < f_.size() && f_[lead].is_delta()) ++lead;
    if (lead > 0) {
      u_ = checked_add(u_, static_cast<std::int64_t>(lead));
      f_.erase(f_.begin(), f_.begin() + static_cast<std::ptrdiff_t>(lead));
      // The absorbed Deltas sat left of every remaining factor, so nothing moves.
    }
    while (!f_.empty() && f_.back().is_identity()) f_.pop_back();
  }

  int n_;
  std::int64_t u_ = 0;
  std::vector<PermutationBraid> f_;
};

}  // namespace detail

inline CanonicalForm identity_braid(int n) {
  check_strands(n);
  return CanonicalForm{n, 0, {}};
}

inline CanonicalForm delta_power(int n, std::int64_t k) {
  check_strands(n);
  return CanonicalForm{n, k, {}};
}

inline CanonicalForm from_simple(const PermutationBraid& a) {
  detail::Normalizer nz(a.n());
  nz.append_simple(a);
  return nz.result();
}

inline CanonicalForm left_normal_form(const BraidWord& w) {
  w.validate();
  detail::Normalizer nz(w.n);
  for (const Letter& l : w.letters) nz.append_letter(l);
  return nz.result();
}

inline CanonicalForm generator_braid(int n, int i, int sign = 1) {
  return left_normal_form(BraidWord(n, {{i, sign}}));
}

/// Positive word given as 1-based generator indices.
inline CanonicalForm positive_braid(int n, const std::vector<int>& word) {
  return left_normal_form(BraidWord::from_ints(n, word));
}

inline CanonicalForm multiply(const CanonicalForm& a, const CanonicalForm& b) {
  if (a.n != b.n) throw DimensionMismatch("braids on different strand counts");
  CanonicalForm start{a.n, detail::checked_add(a.u, b.u), a.factors};
  if (b.u % 2 != 0)
    for (PermutationBraid& f : start.factors) f = f.tau();
  detail::Normalizer nz(start);
  for (const PermutationBraid& f : b.factors) nz.append_simple(f);
  return nz.result();
}

inline CanonicalForm operator*(const CanonicalForm& a, const CanonicalForm& b) { return multiply(a, b); }

inline CanonicalForm inverse(const CanonicalForm& a) {
  detail::Normalizer nz(a.n);
  for (auto it = a.factors.rbegin(); it != a.factors.rend(); ++it) nz.append_simple_inverse(*it);
  if (a.u == std::numeric_limits<std::int64_t>::min()) throw OverflowError("Delta exponent overflow");
  nz.append_delta_power(-a.u);
  return nz.result();
}

inline CanonicalForm tau_power(const CanonicalForm& a, std::int64_t k) {
  CanonicalForm r = a;
  if (k % 2 != 0)
    for (PermutationBraid& f : r.factors) f = f.tau();
  return r;
}

inline CanonicalForm tau(const CanonicalForm& a) { return tau_power(a, 1); }

inline CanonicalForm power(const CanonicalForm& a, std::int64_t k) {
  if (k < 0) return power(inverse(a), -k);
  CanonicalForm result = identity_braid(a.n), base = a;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

/// gamma alpha gamma^{-1}.
inline CanonicalForm conjugate(const CanonicalForm& gamma, const CanonicalForm& alpha) {
  return gamma * alpha * inverse(gamma);
}

/// Image under the anti-automorphism that reverses words.
inline CanonicalForm reverse(const CanonicalForm& a) {
  detail::Normalizer nz(a.n);
  nz.append_delta_power(a.u);
  for (auto it = a.factors.rbegin(); it != a.factors.rend(); ++it) nz.append_simple(it->reverse().tau_power(a.u));
  return nz.result();
}

inline RightCanonicalForm right_normal_form(const CanonicalForm& a) {
  const CanonicalForm r = reverse(a);
  RightCanonicalForm out{a.n, r.u, {}};
  for (auto it = r.factors.rbegin(); it != r.factors.rend(); ++it)
    out.factors.push_back(it->reverse().tau_power(r.u));
  return out;
}

inline RightCanonicalForm right_normal_form(const BraidWord& w) { return right_normal_form(left_normal_form(w)); }

inline CanonicalForm to_left(const RightCanonicalForm& r) {
  detail::Normalizer nz(r.n);
  nz.append_delta_power(r.u);
  for (const PermutationBraid& f : r.factors) nz.append_simple(f);
  return nz.result();
}

/// Left-weightedness of a factor list (F(A_i) contains S(A_{i+1})).
inline bool is_left_weighted(const std::vector<PermutationBraid>& fs) {
  for (std::size_t i = 0; i + 1 < fs.size(); ++i)
    if ((fs[i + 1].starting_set() & ~fs[i].finishing_set()) != 0) return false;
  return true;
}

inline bool is_right_weighted(const std::vector<PermutationBraid>& fs) {
  for (std::size_t i = 0; i + 1 < fs.size(); ++i)
    if ((fs[i].finishing_set() & ~fs[i + 1].starting_set()) != 0) return false;
  return true;
}

/// Underlying permutation theta (1-based image table), theta_{ab} = theta_a o theta_b.
inline std::vector<int> induced_permutation(const BraidWord& w) {
  std::vector<int> t(w.n);
  for (int i = 0; i < w.n; ++i) t[i] = i + 1;
  // theta_w = theta_{l1} o ... o theta_{lk}; compose from the right.
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    for (int& v : t)
      if (v == it->index) v = it->index + 1;
      else if (v == it->index + 1) v = it->index;
  return t;
}

inline std::vector<int> induced_permutation(const CanonicalForm& a) {
  std::vector<int> t(a.n);
  for (int i = 0; i < a.n; ++i) t[i] = i + 1;
  for (auto it = a.factors.rbegin(); it != a.factors.rend(); ++it)
    for (int& v : t) v = it->theta(v);
  if (a.u % 2 != 0)
    for (int& v : t) v = a.n + 1 - v;
  return t;
}

/// Forgets every strand whose position at the right end of the word is not
/// in `keep` (1-based) and renumbers the rest.
inline BraidWord delete_strands(const BraidWord& w, const std::vector<int>& keep) {
  w.validate();
  if (keep.empty()) throw InvalidArgument("delete_strands needs at least one kept strand");
  std::vector<char> kept(w.n, 0);
  for (int k : keep) {
    if (k < 1 || k > w.n) throw InvalidArgument("kept strand out of range");
    kept[k - 1] = 1;
  }
  BraidWord out;
  out.n = 0;
  for (char c : kept) out.n += c;
  std::vector<Letter> rev;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    const int i = it->index;
    std::swap(kept[i - 1], kept[i]);
    if (kept[i - 1] && kept[i]) {
      int rank = 1;
      for (int p = 0; p < i - 1; ++p) rank += kept[p];
      rev.push_back({rank, it->sign});
    }
  }
  out.letters.assign(rev.rbegin(), rev.rend());
  return out;
}

inline CanonicalForm delete_strands(const CanonicalForm& a, const std::vector<int>& keep) {
  return left_normal_form(delete_strands(a.to_word(), keep));
}

}  // namespace garside

template <bool L>
struct std::hash<garside::GreedyForm<L>> {
  std::size_t operator()(const garside::GreedyForm<L>& a) const { return a.hash(); }
};
