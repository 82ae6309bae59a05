#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "garside/error.hpp"

namespace garside {

/// Largest strand count supported by the algebraic core.
inline constexpr int kMaxStrands = 32;

/// Bit set of generator indices; generator i (1-based) lives in bit i-1.
using GeneratorSet = std::uint32_t;

inline GeneratorSet generator_bit(int i) { return GeneratorSet{1} << (i - 1); }

inline std::vector<int> generator_list(GeneratorSet s) {
  std::vector<int> out;
  for (int i = 1; s != 0; ++i, s >>= 1)
    if (s & 1u) out.push_back(i);
  return out;
}

inline void check_strands(int n) {
  if (n < 1 || n > kMaxStrands)
    throw InvalidArgument("strand count " + std::to_string(n) + " outside [1, " +
                          std::to_string(kMaxStrands) + "]");
}

/// A simple element of the Garside structure of B_n, stored as the
/// permutation theta of {1..n} (kept 0-based internally) together with its
/// inverse. Composition follows word order: theta_{AB} = theta_A o theta_B.
class PermutationBraid {
 public:
  using Table = std::array<std::uint8_t, kMaxStrands>;

  PermutationBraid() : PermutationBraid(1) {}

  explicit PermutationBraid(int n) : n_(static_cast<std::uint8_t>(n)) {
    check_strands(n);
    for (int i = 0; i < kMaxStrands; ++i) theta_[i] = inv_[i] = static_cast<std::uint8_t>(i);
  }

  /// Builds from a 1-based image table theta(1..n); throws unless bijective.
  static PermutationBraid from_theta(const std::vector<int>& theta) {
    const int n = static_cast<int>(theta.size());
    PermutationBraid p(n);
    std::array<bool, kMaxStrands> seen{};
    for (int i = 0; i < n; ++i) {
      const int v = theta[i] - 1;
      if (v < 0 || v >= n || seen[v]) throw InvalidArgument("permutation is not a bijection");
      seen[v] = true;
      p.theta_[i] = static_cast<std::uint8_t>(v);
      p.inv_[v] = static_cast<std::uint8_t>(i);
    }
    return p;
  }

  static PermutationBraid identity(int n) { return PermutationBraid(n); }

  static PermutationBraid delta(int n) {
    PermutationBraid p(n);
    for (int i = 0; i < n; ++i) p.theta_[i] = p.inv_[i] = static_cast<std::uint8_t>(n - 1 - i);
    return p;
  }

  static PermutationBraid generator(int n, int i) {
    PermutationBraid p(n);
    p.check_gen(i);
    p.swap_positions(i);
    return p;
  }

  int n() const { return n_; }

  /// theta(i) for 1-based i, 1-based result.
  int theta(int i) const { return theta_[i - 1] + 1; }
  int theta_inv(int i) const { return inv_[i - 1] + 1; }

  std::vector<int> theta_table() const {
    std::vector<int> t(n_);
    for (int i = 0; i < n_; ++i) t[i] = theta_[i] + 1;
    return t;
  }

  GeneratorSet starting_set() const {
    GeneratorSet s = 0;
    for (int i = 0; i + 1 < n_; ++i)
      if (inv_[i] > inv_[i + 1]) s |= GeneratorSet{1} << i;
    return s;
  }

  GeneratorSet finishing_set() const {
    GeneratorSet s = 0;
    for (int i = 0; i + 1 < n_; ++i)
      if (theta_[i] > theta_[i + 1]) s |= GeneratorSet{1} << i;
    return s;
  }

  /// Number of inversions, i.e. the length of any positive word.
  int length() const {
    int c = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (theta_[i] > theta_[j]) ++c;
    return c;
  }

  bool is_identity() const {
    for (int i = 0; i < n_; ++i)
      if (theta_[i] != i) return false;
    return true;
  }

  bool is_delta() const {
    for (int i = 0; i < n_; ++i)
      if (theta_[i] != n_ - 1 - i) return false;
    return true;
  }

  /// this * sigma_i (requires i not in F, otherwise the result is not simple).
  PermutationBraid times_generator(int i) const {
    check_gen(i);
    if (finishing_set() & generator_bit(i)) throw InvalidArgument("product is not simple");
    PermutationBraid p = *this;
    p.swap_positions(i);
    return p;
  }

  /// sigma_i^{-1} * this (requires i in S).
  PermutationBraid left_divide_generator(int i) const {
    check_gen(i);
    if (!(starting_set() & generator_bit(i))) throw InvalidArgument("generator is not a left divisor");
    PermutationBraid p = *this;
    p.swap_values(i);
    return p;
  }

  /// tau(A) = Delta^{-1} A Delta.
  PermutationBraid tau() const {
    PermutationBraid p(n_);
    for (int i = 0; i < n_; ++i) {
      p.theta_[i] = static_cast<std::uint8_t>(n_ - 1 - theta_[n_ - 1 - i]);
      p.inv_[p.theta_[i]] = static_cast<std::uint8_t>(i);
    }
    return p;
  }

  PermutationBraid tau_power(std::int64_t k) const { return (k % 2 != 0) ? tau() : *this; }

  /// The simple Y with A Y = Delta.
  PermutationBraid right_complement() const {
    PermutationBraid p(n_);
    for (int i = 0; i < n_; ++i) p.set(i, inv_[n_ - 1 - i]);
    return p;
  }

  /// The simple X with X A = Delta.
  PermutationBraid left_complement() const {
    PermutationBraid p(n_);
    for (int i = 0; i < n_; ++i) p.set(i, static_cast<std::uint8_t>(n_ - 1 - inv_[i]));
    return p;
  }

  /// Image under the word-reversing anti-automorphism.
  PermutationBraid reverse() const {
    PermutationBraid p = *this;
    std::swap(p.theta_, p.inv_);
    return p;
  }

  /// Left-greedy positive word (1-based generator indices).
  std::vector<int> word() const {
    std::vector<int> out;
    PermutationBraid x = *this;
    for (;;) {
      GeneratorSet s = x.starting_set();
      if (s == 0) break;
      int i = 1;
      while (!(s & 1u)) s >>= 1, ++i;
      out.push_back(i);
      x.swap_values(i);
    }
    return out;
  }

  /// Product when it is known to stay simple (strands cross at most once).
  static PermutationBraid compose(const PermutationBraid& a, const PermutationBraid& b) {
    if (a.n_ != b.n_) throw DimensionMismatch("permutation braids on different strand counts");
    PermutationBraid p(a.n_);
    for (int i = 0; i < a.n_; ++i) p.set(i, a.theta_[b.theta_[i]]);
    if (p.length() != a.length() + b.length()) throw InvalidArgument("product is not simple");
    return p;
  }

  /// Left gcd of two simple elements.
  static PermutationBraid meet_left(PermutationBraid a, PermutationBraid b) {
    if (a.n_ != b.n_) throw DimensionMismatch("permutation braids on different strand counts");
    PermutationBraid m(a.n_);
    for (;;) {
      const GeneratorSet common = a.starting_set() & b.starting_set();
      if (common == 0) return m;
      int i = 1;
      for (GeneratorSet s = common; !(s & 1u); s >>= 1) ++i;
      m.swap_positions(i);
      a.swap_values(i);
      b.swap_values(i);
    }
  }

  static PermutationBraid meet_right(const PermutationBraid& a, const PermutationBraid& b) {
    return meet_left(a.reverse(), b.reverse()).reverse();
  }

  /// Makes (a, b) left-weighted in place, preserving the product a b.
  /// Returns true if anything moved.
  static bool left_weight(PermutationBraid& a, PermutationBraid& b) {
    bool moved = false;
    for (;;) {
      const GeneratorSet bad = b.starting_set() & ~a.finishing_set();
      if (bad == 0) return moved;
      int i = 1;
      for (GeneratorSet s = bad; !(s & 1u); s >>= 1) ++i;
      a.swap_positions(i);
      b.swap_values(i);
      moved = true;
    }
  }

  friend bool operator==(const PermutationBraid& a, const PermutationBraid& b) {
    if (a.n_ != b.n_) return false;
    return std::equal(a.theta_.begin(), a.theta_.begin() + a.n_, b.theta_.begin());
  }
  friend bool operator<(const PermutationBraid& a, const PermutationBraid& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return std::lexicographical_compare(a.theta_.begin(), a.theta_.begin() + a.n_,
                                        b.theta_.begin(), b.theta_.begin() + b.n_);
  }

  std::size_t hash() const {
    std::size_t h = n_;
    for (int i = 0; i < n_; ++i) h = h * 1315423911u + theta_[i] + 1;
    return h;
  }

  /// All n! permutation braids in lexicographic theta order.
  static std::vector<PermutationBraid> all(int n) {
    check_strands(n);
    std::vector<int> t(n);
    for (int i = 0; i < n; ++i) t[i] = i + 1;
    std::vector<PermutationBraid> out;
    do out.push_back(from_theta(t));
    while (std::next_permutation(t.begin(), t.end()));
    return out;
  }

 private:
  void check_gen(int i) const {
    if (i < 1 || i >= n_)
      throw InvalidArgument("generator index " + std::to_string(i) + " out of range for n=" +
                            std::to_string(n_));
  }
  void set(int pos, std::uint8_t val) {
    theta_[pos] = val;
    inv_[val] = static_cast<std::uint8_t>(pos);
  }
  void swap_positions(int i) {
    std::swap(theta_[i - 1], theta_[i]);
    inv_[theta_[i - 1]] = static_cast<std::uint8_t>(i - 1);
    inv_[theta_[i]] = static_cast<std::uint8_t>(i);
  }
  void swap_values(int i) {
    std::swap(inv_[i - 1], inv_[i]);
    theta_[inv_[i - 1]] = static_cast<std::uint8_t>(i - 1);
    theta_[inv_[i]] = static_cast<std::uint8_t>(i);
  }

  std::uint8_t n_;
  Table theta_{};
  Table inv_{};
};

}  // namespace garside

template <>
struct std::hash<garside::PermutationBraid> {
  std::size_t operator()(const garside::PermutationBraid& p) const { return p.hash(); }
};
