#pragma once

#include "permsim/matrix.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

namespace permsim {

/// One inner-product term: the first factor comes from the row vector, the
/// second from the column vector. Comparison is lexicographic on
/// (first, second).
struct Term {
  SymbolId first = 0;
  SymbolId second = 0;
  friend auto operator<=>(const Term&, const Term&) = default;
};

/// A materialized canonical string. Two species exist:
///  - inner-product strings (from squaring): diag_part holds the one or two
///    terms involving diagonal symbols, offdiag_part the remaining terms in
///    ascending order;
///  - sandwich strings (from diagonal multiplication): a single three-factor
///    sequence stored in factors.
struct CanonicalString {
  std::vector<Term> diag_part;
  std::vector<Term> offdiag_part;
  std::vector<SymbolId> factors;  // non-empty only for sandwich strings
  bool diag_flag = false;         // location class of a sandwich string

  bool sandwich() const { return !factors.empty(); }
  bool diagonal_location() const { return sandwich() ? diag_flag : diag_part.size() == 1; }

  /// Lexicographic: diag_part first, then offdiag_part, terms as
  /// (first, second) pairs; sandwich strings compare factor-by-factor.
  static int compare(const CanonicalString& a, const CanonicalString& b);
  friend bool operator==(const CanonicalString& a, const CanonicalString& b) { return compare(a, b) == 0; }
  friend bool operator<(const CanonicalString& a, const CanonicalString& b) { return compare(a, b) < 0; }
};

/// Deduplicating store for canonical strings. Inner-product strings keep the
/// one or two diagonal-involving terms verbatim followed by the run-length
/// encoded sorted off-diagonal terms; equality on a hash hit is verified
/// against the stored encoding, so collisions cannot corrupt identities.
/// Symbols are packed as 32-bit pairs, which callers guarantee by densifying
/// ids first.
class StringPool {
 public:
  enum class Species : std::uint8_t { sqr_diag, sqr_offdiag, sandwich };

  struct Run {
    std::uint64_t term;
    std::uint32_t count;
    friend bool operator==(const Run&, const Run&) = default;
  };

  /// Interns an inner-product string. head = diagonal-involving terms
  /// (packed), runs = RLE of the sorted off-diagonal terms.
  std::int32_t intern_sqr(std::span<const std::uint64_t> head, std::span<const Run> runs, bool diag_location);
  /// Interns a three-factor sandwich string.
  std::int32_t intern_sandwich(std::span<const std::uint64_t> factors, bool diag_location);

  Index size() const { return static_cast<Index>(entries_.size()); }
  bool diag_location(std::int32_t id) const { return entries_[static_cast<std::size_t>(id)].diag; }
  Species species(std::int32_t id) const { return entries_[static_cast<std::size_t>(id)].species; }

  /// Lexicographic order on the underlying term sequences; only strings of
  /// the same species and location class are comparable in practice.
  int compare(std::int32_t a, std::int32_t b) const;

  /// True when some term sequence was interned at both a diagonal and an
  /// off-diagonal location (violates the squaring output contract).
  bool has_class_conflict() const { return class_conflict_; }

  std::span<const std::uint64_t> head(std::int32_t id) const;
  std::span<const Run> runs(std::int32_t id) const;

 private:
  struct Entry {
    std::uint32_t head_off, head_len;
    std::uint32_t runs_off, runs_len;
    Species species;
    bool diag;
  };
  std::int32_t intern(std::span<const std::uint64_t> head, std::span<const Run> runs, Species species, bool diag);

  std::vector<std::uint64_t> heads_;
  std::vector<Run> runs_;
  std::vector<Entry> entries_;
  std::unordered_map<std::uint64_t, std::vector<std::int32_t>> index_;
  bool class_conflict_ = false;
};

/// Square array of canonical strings, stored as intern ids into a shared
/// pool. dense_to_orig maps the densified symbol alphabet used inside the
/// pool back to the caller's original ids.
struct StringArray {
  Index n = 0;
  Eigen::Matrix<std::int32_t, Eigen::Dynamic, Eigen::Dynamic> id;
  std::shared_ptr<StringPool> pool;
  std::vector<SymbolId> dense_to_orig;

  /// Materializes the string at (i, j) in terms of the original symbol ids.
  CanonicalString at(Index i, Index j) const;

  Index distinct_count() const;
};

}  // namespace permsim
