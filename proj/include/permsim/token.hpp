#pragma once

#include "permsim/matrix.hpp"

#include <string>
#include <vector>

namespace permsim {

/// An opaque comparable matrix entry. Equality is exact (textual); the total
/// order sorts numeric tokens by value with a textual tiebreak, and numeric
/// tokens before non-numeric ones, which are ordered lexicographically.
/// No epsilon grouping: "5.0" and "5.00" are distinct tokens with equal value.
class ValueToken {
 public:
  ValueToken() = default;
  explicit ValueToken(std::string text);
  explicit ValueToken(long long v);

  const std::string& text() const { return text_; }
  bool numeric() const { return numeric_; }

  /// -1, 0, +1 under the deterministic total order.
  static int compare(const ValueToken& a, const ValueToken& b);

  friend bool operator==(const ValueToken& a, const ValueToken& b) { return a.text_ == b.text_; }
  friend bool operator!=(const ValueToken& a, const ValueToken& b) { return !(a == b); }
  friend bool operator<(const ValueToken& a, const ValueToken& b) { return compare(a, b) < 0; }

 private:
  std::string text_;
  bool numeric_ = false;
  // Normalized exact decimal: sign, significant digits, base-10 exponent of
  // the leading digit. Empty digits encode zero.
  int sign_ = 0;
  std::string digits_;
  long long exp10_ = 0;
};

/// Square array of tokens, row-major.
class TokenGrid {
 public:
  TokenGrid() = default;
  explicit TokenGrid(Index n) : n_(n), v_(static_cast<std::size_t>(n * n)) {}

  Index rows() const { return n_; }
  Index cols() const { return n_; }
  ValueToken& operator()(Index i, Index j) { return v_[static_cast<std::size_t>(i * n_ + j)]; }
  const ValueToken& operator()(Index i, Index j) const { return v_[static_cast<std::size_t>(i * n_ + j)]; }

  static TokenGrid from_symbols(const SymbolMatrix& m);

  friend bool operator==(const TokenGrid& a, const TokenGrid& b) { return a.n_ == b.n_ && a.v_ == b.v_; }

 private:
  Index n_ = 0;
  std::vector<ValueToken> v_;
};

}  // namespace permsim
