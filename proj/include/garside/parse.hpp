#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "garside/braid.hpp"
#include "garside/curve.hpp"

namespace garside {

/// Upper bound on the flattened length of a parsed expression.
inline constexpr std::size_t kMaxParsedLetters = 10'000'000;

namespace detail {

class Parser {
 public:
  Parser(std::string_view text, int n) : s_(text), n_(n) { check_strands(n); }

  BraidWord braid_all() {
    BraidWord w = braid_until("");
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return w;
  }

  CurveSystem curve_all() {
    CurveSystem c = curve();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input after curve specification");
    return c;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool keyword(std::string_view kw) {
    skip_ws();
    if (s_.substr(pos_, kw.size()) == kw) {
      pos_ += kw.size();
      return true;
    }
    return false;
  }

  std::int64_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string_view digits = s_.substr(start, pos_ - start);
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    std::int64_t v = 0;
    const auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || p != digits.data() + digits.size() || digits.empty() || digits == "-") {
      pos_ = start;
      fail("expected an integer");
    }
    return v;
  }

  void grow(BraidWord& w, const std::vector<Letter>& piece, std::int64_t times) {
    if (times < 0) throw InvalidArgument("negative repeat");
    if (!piece.empty() && static_cast<std::uint64_t>(times) > (kMaxParsedLetters - w.letters.size()) / piece.size())
      fail("expression expands beyond " + std::to_string(kMaxParsedLetters) + " letters");
    for (std::int64_t t = 0; t < times; ++t) w.letters.insert(w.letters.end(), piece.begin(), piece.end());
  }

  /// word := term+, stopping at `stop` characters or end of input.
  BraidWord braid_until(std::string_view stop) {
    BraidWord w;
    w.n = n_;
    for (;;) {
      skip_ws();
      if (pos_ == s_.size() || stop.find(s_[pos_]) != std::string_view::npos) return w;
      std::vector<Letter> atom = this->atom();
      std::int64_t e = 1;
      if (peek('^')) {
        ++pos_;
        e = integer();
      }
      if (e < 0) {
        std::vector<Letter> inv(atom.rbegin(), atom.rend());
        for (Letter& l : inv) l.sign = -l.sign;
        atom.swap(inv);
        if (e == INT64_MIN) fail("exponent out of range");
        e = -e;
      }
      grow(w, atom, e);
    }
  }

  std::vector<Letter> atom() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ >= s_.size()) fail("expected a term");
    const char c = s_[pos_];
    if (c == 's') {
      ++pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected a generator index");
      const std::int64_t i = integer();
      if (i < 1 || i >= n_) {
        pos_ = start;
        fail("generator s" + std::to_string(i) + " out of range for n=" + std::to_string(n_));
      }
      return {{static_cast<int>(i), 1}};
    }
    if (c == 'D') {
      ++pos_;
      std::vector<Letter> out;
      for (int i : PermutationBraid::delta(n_).word()) out.push_back({i, 1});
      return out;
    }
    if (c == '(') {
      ++pos_;
      BraidWord inner = braid_until(")");
      expect(')');
      return inner.letters;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  /// curvespec := 'std(' interval (',' interval)* ')' | 'act(' word (';'|',') curvespec ')'
  CurveSystem curve() {
    skip_ws();
    const std::size_t start = pos_;
    if (keyword("std")) {
      expect('(');
      std::vector<Interval> rs;
      do {
        const std::size_t at = pos_;
        const std::int64_t lo = integer();
        expect('-');
        const std::int64_t hi = integer();
        if (lo < 1 || hi > n_ || lo >= hi || hi - lo + 1 > n_ - 1) {
          pos_ = at;
          fail("invalid interval " + std::to_string(lo) + "-" + std::to_string(hi));
        }
        rs.push_back({static_cast<int>(lo), static_cast<int>(hi)});
      } while (peek(',') && (++pos_, true));
      expect(')');
      try {
        return standard_curves(StandardDescription(n_, rs));
      } catch (const InvalidArgument& e) {
        throw ParseError(e.what(), start);
      }
    }
    if (keyword("act")) {
      expect('(');
      // ',' is accepted as well as ';' since neither occurs inside a word.
      const BraidWord w = braid_until(";,");
      if (peek(','))
        ++pos_;
      else
        expect(';');
      const CurveSystem inner = curve();
      expect(')');
      return act(w, inner);
    }
    fail("expected 'std(' or 'act('");
  }

  std::string_view s_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// word := term+ ; term := atom ('^' INT)? ; atom := 's' INT | 'D' | '(' word ')'.
/// Blank input is the identity.
inline BraidWord parse_braid(std::string_view text, int n) { return detail::Parser(text, n).braid_all(); }

inline CanonicalForm parse_canonical(std::string_view text, int n) { return left_normal_form(parse_braid(text, n)); }

inline CurveSystem parse_curve(std::string_view text, int n) {
  if (n < 2 || n > kCurveStrandCap)
    throw InvalidArgument("curve model supports 2 <= n <= " + std::to_string(kCurveStrandCap));
  return detail::Parser(text, n).curve_all();
}

}  // namespace garside
