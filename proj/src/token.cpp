#include "permsim/token.hpp"

#include <cctype>
#include <cstdlib>

namespace permsim {
namespace {

// Parses [sign] digits [. digits] [eE [sign] digits] with at least one digit
// in the mantissa. Returns false for anything else.
bool parse_decimal(const std::string& s, int& sign, std::string& digits, long long& exp10) {
  std::size_t pos = 0;
  const std::size_t n = s.size();
  if (n == 0) return false;
  sign = 1;
  if (s[pos] == '+' || s[pos] == '-') {
    if (s[pos] == '-') sign = -1;
    ++pos;
  }
  std::string intpart, fracpart;
  while (pos < n && std::isdigit(static_cast<unsigned char>(s[pos]))) intpart.push_back(s[pos++]);
  if (pos < n && s[pos] == '.') {
    ++pos;
    while (pos < n && std::isdigit(static_cast<unsigned char>(s[pos]))) fracpart.push_back(s[pos++]);
  }
  if (intpart.empty() && fracpart.empty()) return false;
  long long e = 0;
  if (pos < n && (s[pos] == 'e' || s[pos] == 'E')) {
    ++pos;
    int esign = 1;
    if (pos < n && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') esign = -1;
      ++pos;
    }
    if (pos >= n || !std::isdigit(static_cast<unsigned char>(s[pos]))) return false;
    long long ev = 0;
    while (pos < n && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      ev = ev * 10 + (s[pos] - '0');
      if (ev > 1'000'000'000) return false;  // absurd exponents are not numbers we accept
      ++pos;
    }
    e = esign * ev;
  }
  if (pos != n) return false;

  // Normalize: significant digits with exp10 = power of the leading digit.
  std::string all = intpart + fracpart;
  long long lead = static_cast<long long>(intpart.size()) - 1 + e;
  std::size_t first = all.find_first_not_of('0');
  if (first == std::string::npos) {
    sign = 0;
    digits.clear();
    exp10 = 0;
    return true;
  }
  lead -= static_cast<long long>(first);
  all.erase(0, first);
  std::size_t last = all.find_last_not_of('0');
  all.erase(last + 1);
  digits = all;
  exp10 = lead;
  return true;
}

int compare_magnitude(const std::string& da, long long ea, const std::string& db, long long eb) {
  if (ea != eb) return ea < eb ? -1 : 1;
  // Same leading power: compare digit strings padded on the right.
  const std::size_t len = std::max(da.size(), db.size());
  for (std::size_t k = 0; k < len; ++k) {
    const char ca = k < da.size() ? da[k] : '0';
    const char cb = k < db.size() ? db[k] : '0';
    if (ca != cb) return ca < cb ? -1 : 1;
  }
  return 0;
}

}  // namespace

ValueToken::ValueToken(std::string text) : text_(std::move(text)) {
  numeric_ = parse_decimal(text_, sign_, digits_, exp10_);
}

ValueToken::ValueToken(long long v) : ValueToken(std::to_string(v)) {}

int ValueToken::compare(const ValueToken& a, const ValueToken& b) {
  if (a.numeric_ != b.numeric_) return a.numeric_ ? -1 : 1;  // numbers sort before strings
  if (a.numeric_) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
    if (a.sign_ != 0) {
      const int mag = compare_magnitude(a.digits_, a.exp10_, b.digits_, b.exp10_);
      if (mag != 0) return a.sign_ > 0 ? mag : -mag;
    }
    // Equal values: textual tiebreak keeps the order total over distinct tokens.
  }
  if (a.text_ != b.text_) return a.text_ < b.text_ ? -1 : 1;
  return 0;
}

TokenGrid TokenGrid::from_symbols(const SymbolMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("TokenGrid: matrix not square");
  TokenGrid g(m.rows());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) g(i, j) = ValueToken(static_cast<long long>(m(i, j)));
  return g;
}

}  // namespace permsim
