#include "permsim/strings.hpp"

#include "permsim/mixes.hpp"

#include <algorithm>

namespace permsim {
namespace {

std::uint64_t hash_sequence(std::uint8_t species, std::span<const std::uint64_t> head,
                            std::span<const StringPool::Run> runs) {
  std::uint64_t h = splitmix64(0x243f6a8885a308d3ull ^ species);
  for (std::uint64_t v : head) h = splitmix64(h ^ v);
  for (const auto& r : runs) h = splitmix64(splitmix64(h ^ r.term) ^ r.count);
  return h;
}

// Lexicographic comparison of two run-length encoded sequences of equal
// expanded length.
int compare_runs(std::span<const StringPool::Run> a, std::span<const StringPool::Run> b) {
  std::size_t ia = 0, ib = 0;
  std::uint64_t ra = 0, rb = 0;  // already consumed from the current runs
  while (ia < a.size() && ib < b.size()) {
    if (a[ia].term != b[ib].term) return a[ia].term < b[ib].term ? -1 : 1;
    const std::uint64_t ca = a[ia].count - ra;
    const std::uint64_t cb = b[ib].count - rb;
    const std::uint64_t step = std::min(ca, cb);
    ra += step;
    rb += step;
    if (ra == a[ia].count) {
      ++ia;
      ra = 0;
    }
    if (rb == b[ib].count) {
      ++ib;
      rb = 0;
    }
  }
  if (ia < a.size()) return 1;
  if (ib < b.size()) return -1;
  return 0;
}

}  // namespace

int CanonicalString::compare(const CanonicalString& a, const CanonicalString& b) {
  if (a.sandwich() || b.sandwich()) {
    const auto c = a.factors <=> b.factors;
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  auto c = a.diag_part <=> b.diag_part;
  if (c != 0) return c < 0 ? -1 : 1;
  c = a.offdiag_part <=> b.offdiag_part;
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

std::int32_t StringPool::intern(std::span<const std::uint64_t> head, std::span<const Run> runs, Species species,
                                bool diag) {
  const std::uint64_t h = hash_sequence(static_cast<std::uint8_t>(species), head, runs);
  auto& bucket = index_[h];
  for (std::int32_t cand : bucket) {
    const Entry& e = entries_[static_cast<std::size_t>(cand)];
    if (e.species != species || e.head_len != head.size() || e.runs_len != runs.size()) continue;
    if (!std::equal(head.begin(), head.end(), heads_.begin() + e.head_off)) continue;
    if (!std::equal(runs.begin(), runs.end(), runs_.begin() + e.runs_off)) continue;
    // String identity is the term sequence alone. A location-class mismatch
    // is flagged so substitution can reject the array.
    if (e.diag != diag) class_conflict_ = true;
    return cand;
  }
  Entry e;
  e.head_off = static_cast<std::uint32_t>(heads_.size());
  e.head_len = static_cast<std::uint32_t>(head.size());
  e.runs_off = static_cast<std::uint32_t>(runs_.size());
  e.runs_len = static_cast<std::uint32_t>(runs.size());
  e.species = species;
  e.diag = diag;
  heads_.insert(heads_.end(), head.begin(), head.end());
  runs_.insert(runs_.end(), runs.begin(), runs.end());
  const auto id = static_cast<std::int32_t>(entries_.size());
  entries_.push_back(e);
  bucket.push_back(id);
  return id;
}

std::int32_t StringPool::intern_sqr(std::span<const std::uint64_t> head, std::span<const Run> runs,
                                    bool diag_location) {
  return intern(head, runs, diag_location ? Species::sqr_diag : Species::sqr_offdiag, diag_location);
}

std::int32_t StringPool::intern_sandwich(std::span<const std::uint64_t> factors, bool diag_location) {
  return intern(factors, {}, Species::sandwich, diag_location);
}

std::span<const std::uint64_t> StringPool::head(std::int32_t id) const {
  const Entry& e = entries_[static_cast<std::size_t>(id)];
  return {heads_.data() + e.head_off, e.head_len};
}

std::span<const StringPool::Run> StringPool::runs(std::int32_t id) const {
  const Entry& e = entries_[static_cast<std::size_t>(id)];
  return {runs_.data() + e.runs_off, e.runs_len};
}

int StringPool::compare(std::int32_t a, std::int32_t b) const {
  if (a == b) return 0;
  const auto ha = head(a), hb = head(b);
  const std::size_t len = std::min(ha.size(), hb.size());
  for (std::size_t k = 0; k < len; ++k)
    if (ha[k] != hb[k]) return ha[k] < hb[k] ? -1 : 1;
  if (ha.size() != hb.size()) return ha.size() < hb.size() ? -1 : 1;
  return compare_runs(runs(a), runs(b));
}

CanonicalString StringArray::at(Index i, Index j) const {
  CanonicalString out;
  const std::int32_t sid = id(i, j);
  const auto h = pool->head(sid);
  if (pool->species(sid) == StringPool::Species::sandwich) {
    out.factors.assign(h.begin(), h.end());
    out.diag_flag = pool->diag_location(sid);
    return out;
  }
  const auto orig = [this](std::uint64_t dense) { return dense_to_orig[static_cast<std::size_t>(dense) - 1]; };
  for (std::uint64_t t : h)
    out.diag_part.push_back({orig(t >> 32), orig(t & 0xffffffffull)});
  for (const auto& r : pool->runs(sid)) {
    const Term term{orig(r.term >> 32), orig(r.term & 0xffffffffull)};
    for (std::uint32_t c = 0; c < r.count; ++c) out.offdiag_part.push_back(term);
  }
  return out;
}

Index StringArray::distinct_count() const {
  std::vector<char> seen(static_cast<std::size_t>(pool->size()), 0);
  Index count = 0;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      auto& s = seen[static_cast<std::size_t>(id(i, j))];
      if (!s) {
        s = 1;
        ++count;
      }
    }
  return count;
}

}  // namespace permsim
