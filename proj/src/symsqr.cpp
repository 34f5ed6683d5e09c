#include "permsim/symsqr.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <thread>

namespace permsim {
namespace {

int thread_count() {
  if (const char* env = std::getenv("PERMSIM_THREADS")) {
    const int t = std::atoi(env);
    if (t > 1) return t;
  }
  return 1;
}

// Order-preserving densification so terms pack into 32-bit halves.
struct DenseMap {
  std::vector<SymbolId> sorted;  // dense id = position + 1
  std::uint64_t dense(SymbolId v) const {
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    return static_cast<std::uint64_t>(it - sorted.begin()) + 1;
  }
};

DenseMap densify(std::initializer_list<const SymbolMatrix*> mats) {
  DenseMap map;
  for (const SymbolMatrix* m : mats)
    for (Index i = 0; i < m->rows(); ++i)
      for (Index j = 0; j < m->cols(); ++j) map.sorted.push_back((*m)(i, j));
  std::sort(map.sorted.begin(), map.sorted.end());
  map.sorted.erase(std::unique(map.sorted.begin(), map.sorted.end()), map.sorted.end());
  if (map.sorted.size() >= (1ull << 32)) throw std::invalid_argument("sym_sqr: symbol alphabet too large");
  if (!map.sorted.empty() && map.sorted.front() < 1) throw std::invalid_argument("sym_sqr: symbol ids must be >= 1");
  return map;
}

void require_squarable(const SymbolMatrix& m) {
  if (!is_symmetric(m)) throw std::invalid_argument("sym_sqr: input not symmetric");
  if (!is_diag_distinct(m)) throw std::invalid_argument("sym_sqr: diagonal symbols not distinct from off-diagonal");
}

using Run = StringPool::Run;

void rle(const std::vector<std::uint64_t>& sorted_terms, std::vector<Run>& out) {
  out.clear();
  for (std::size_t k = 0; k < sorted_terms.size();) {
    std::size_t e = k + 1;
    while (e < sorted_terms.size() && sorted_terms[e] == sorted_terms[k]) ++e;
    out.push_back({sorted_terms[k], static_cast<std::uint32_t>(e - k)});
    k = e;
  }
}

int compare_encoded(std::span<const std::uint64_t> ha, std::span<const Run> ra, std::span<const std::uint64_t> hb,
                    std::span<const Run> rb) {
  const std::size_t len = std::min(ha.size(), hb.size());
  for (std::size_t k = 0; k < len; ++k)
    if (ha[k] != hb[k]) return ha[k] < hb[k] ? -1 : 1;
  if (ha.size() != hb.size()) return ha.size() < hb.size() ? -1 : 1;
  std::size_t ia = 0, ib = 0;
  std::uint64_t ca = 0, cb = 0;
  while (ia < ra.size() && ib < rb.size()) {
    if (ra[ia].term != rb[ib].term) return ra[ia].term < rb[ib].term ? -1 : 1;
    const std::uint64_t step = std::min<std::uint64_t>(ra[ia].count - ca, rb[ib].count - cb);
    ca += step;
    cb += step;
    if (ca == ra[ia].count) ++ia, ca = 0;
    if (cb == rb[ib].count) ++ib, cb = 0;
  }
  if (ia < ra.size()) return 1;
  if (ib < rb.size()) return -1;
  return 0;
}

// Scratch for one location's canonical string.
struct Scratch {
  std::vector<std::uint64_t> head, terms;
  std::vector<Run> runs;
};

// Canonical inner product string of row i times column j of the densified
// matrix, encoded as head terms + RLE off-diagonal terms.
void build_string(const DenseMatrix<std::uint64_t>& d, Index i, Index j, Scratch& s) {
  const Index n = d.rows();
  s.head.clear();
  s.terms.clear();
  if (i == j) {
    s.head.push_back((d(i, i) << 32) | d(i, i));
  } else {
    s.head.push_back((d(i, i) << 32) | d(i, j));
    s.head.push_back((d(i, j) << 32) | d(j, j));
  }
  for (Index k = 0; k < n; ++k) {
    if (k == i || k == j) continue;
    s.terms.push_back((d(i, k) << 32) | d(k, j));
  }
  std::sort(s.terms.begin(), s.terms.end());
  rle(s.terms, s.runs);
}

StringArray make_array(Index n, std::shared_ptr<StringPool> pool, const DenseMap& map) {
  StringArray arr;
  arr.n = n;
  arr.id.resize(n, n);
  arr.pool = std::move(pool);
  arr.dense_to_orig = map.sorted;
  return arr;
}

void sqr_into(const DenseMatrix<std::uint64_t>& d, StringArray& out, std::mutex& pool_mutex) {
  const Index n = d.rows();
  const int threads = thread_count();
  auto worker = [&](Index begin, Index stride) {
    Scratch a, b;
    for (Index i = begin; i < n; i += stride) {
      for (Index j = i; j < n; ++j) {
        build_string(d, i, j, a);
        std::int32_t sid;
        if (i == j) {
          std::scoped_lock lock(pool_mutex);
          sid = out.pool->intern_sqr(a.head, a.runs, true);
        } else {
          build_string(d, j, i, b);
          const bool keep_a = compare_encoded(a.head, a.runs, b.head, b.runs) <= 0;
          const Scratch& lessor = keep_a ? a : b;
          std::scoped_lock lock(pool_mutex);
          sid = out.pool->intern_sqr(lessor.head, lessor.runs, false);
        }
        out.id(i, j) = sid;
        out.id(j, i) = sid;
      }
    }
  };
  if (threads <= 1) {
    worker(0, 1);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker, Index{t}, Index{threads});
  for (auto& th : pool) th.join();
}

DenseMatrix<std::uint64_t> apply_dense(const SymbolMatrix& m, const DenseMap& map) {
  DenseMatrix<std::uint64_t> d(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) d(i, j) = map.dense(m(i, j));
  return d;
}

}  // namespace

CanonicalString canonical_string(std::span<const SymbolId> row, std::span<const SymbolId> col, Index i, Index j) {
  if (row.size() != col.size()) throw std::invalid_argument("canonical_string: length mismatch");
  const Index n = static_cast<Index>(row.size());
  CanonicalString out;
  const bool has_i = i >= 0 && i < n;
  const bool has_j = j >= 0 && j < n;
  if (has_i && has_j && i == j) {
    out.diag_part.push_back({row[static_cast<std::size_t>(i)], col[static_cast<std::size_t>(i)]});
  } else {
    if (has_i) out.diag_part.push_back({row[static_cast<std::size_t>(i)], col[static_cast<std::size_t>(i)]});
    if (has_j) out.diag_part.push_back({row[static_cast<std::size_t>(j)], col[static_cast<std::size_t>(j)]});
  }
  for (Index k = 0; k < n; ++k) {
    if ((has_i && k == i) || (has_j && k == j)) continue;
    out.offdiag_part.push_back({row[static_cast<std::size_t>(k)], col[static_cast<std::size_t>(k)]});
  }
  std::sort(out.offdiag_part.begin(), out.offdiag_part.end());
  return out;
}

StringArray sym_sqr(const SymbolMatrix& m) {
  require_squarable(m);
  const DenseMap map = densify({&m});
  StringArray out = make_array(m.rows(), std::make_shared<StringPool>(), map);
  std::mutex mu;
  sqr_into(apply_dense(m, map), out, mu);
  return out;
}

std::pair<StringArray, StringArray> sym_sqr_pair(const SymbolMatrix& a, const SymbolMatrix& b) {
  require_squarable(a);
  require_squarable(b);
  if (a.rows() != b.rows()) throw std::invalid_argument("sym_sqr_pair: dimension mismatch");
  const DenseMap map = densify({&a, &b});
  auto pool = std::make_shared<StringPool>();
  StringArray oa = make_array(a.rows(), pool, map);
  StringArray ob = make_array(b.rows(), pool, map);
  std::mutex mu;
  sqr_into(apply_dense(a, map), oa, mu);
  sqr_into(apply_dense(b, map), ob, mu);
  return {std::move(oa), std::move(ob)};
}

namespace {

void mult_into(const SymbolVector& d1, const SymbolMatrix& m, const SymbolVector& d2, StringArray& out) {
  const Index n = m.rows();
  std::uint64_t factors[3];
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      factors[0] = static_cast<std::uint64_t>(d1(i));
      factors[1] = static_cast<std::uint64_t>(m(i, j));
      factors[2] = static_cast<std::uint64_t>(d2(j));
      out.id(i, j) = out.pool->intern_sandwich({factors, 3}, i == j);
    }
}

void require_mult(const SymbolVector& d1, const SymbolMatrix& m, const SymbolVector& d2) {
  if (m.rows() != m.cols()) throw std::invalid_argument("sym_mult: matrix not square");
  if (d1.size() != m.rows() || d2.size() != m.cols()) throw std::invalid_argument("sym_mult: dimension mismatch");
}

}  // namespace

StringArray sym_mult(const SymbolVector& d1, const SymbolMatrix& m, const SymbolVector& d2) {
  require_mult(d1, m, d2);
  StringArray out;
  out.n = m.rows();
  out.id.resize(out.n, out.n);
  out.pool = std::make_shared<StringPool>();
  mult_into(d1, m, d2, out);
  return out;
}

std::pair<StringArray, StringArray> sym_mult_pair(const SymbolVector& da1, const SymbolMatrix& a,
                                                  const SymbolVector& da2, const SymbolVector& db1,
                                                  const SymbolMatrix& b, const SymbolVector& db2) {
  require_mult(da1, a, da2);
  require_mult(db1, b, db2);
  if (a.rows() != b.rows()) throw std::invalid_argument("sym_mult_pair: dimension mismatch");
  auto pool = std::make_shared<StringPool>();
  StringArray oa, ob;
  for (StringArray* o : {&oa, &ob}) {
    o->n = a.rows();
    o->id.resize(o->n, o->n);
    o->pool = pool;
  }
  mult_into(da1, a, da2, oa);
  mult_into(db1, b, db2, ob);
  return {std::move(oa), std::move(ob)};
}

namespace {

struct Assignment {
  std::vector<SymbolId> id_of;  // indexed by pool string id
};

Assignment assign_ids(const StringPool& pool, const std::vector<std::int32_t>& used, Index dim, DiagOffset mode) {
  if (pool.has_class_conflict())
    throw std::invalid_argument("sym_sub: a string appears both on and off the diagonal");
  std::vector<std::int32_t> offdiag, diag;
  for (std::int32_t sid : used) (pool.diag_location(sid) ? diag : offdiag).push_back(sid);
  const auto by_content = [&pool](std::int32_t x, std::int32_t y) { return pool.compare(x, y) < 0; };
  std::sort(offdiag.begin(), offdiag.end(), by_content);
  std::sort(diag.begin(), diag.end(), by_content);

  const auto n1 = static_cast<SymbolId>(offdiag.size());
  const auto n2 = static_cast<SymbolId>(diag.size());
  SymbolId base = n1;
  if (mode == DiagOffset::spd) {
    const auto d = static_cast<SymbolId>(dim);
    const SymbolId dd = d * d;
    if (n1 > 0 && dd > (std::numeric_limits<SymbolId>::max() - n2) / n1)
      throw internal_error("sym_sub: spd diagonal offset overflows the id range");
    base = dd * n1;
  }
  Assignment a;
  a.id_of.assign(static_cast<std::size_t>(pool.size()), 0);
  for (SymbolId k = 0; k < n1; ++k) a.id_of[static_cast<std::size_t>(offdiag[static_cast<std::size_t>(k)])] = k + 1;
  for (SymbolId k = 0; k < n2; ++k) a.id_of[static_cast<std::size_t>(diag[static_cast<std::size_t>(k)])] = base + k + 1;
  return a;
}

std::vector<std::int32_t> used_ids(std::initializer_list<const StringArray*> arrays) {
  std::vector<std::int32_t> used;
  std::vector<char> seen;
  for (const StringArray* arr : arrays) {
    seen.resize(std::max(seen.size(), static_cast<std::size_t>(arr->pool->size())), 0);
    for (Index i = 0; i < arr->n; ++i)
      for (Index j = 0; j < arr->n; ++j) {
        const std::int32_t sid = arr->id(i, j);
        if (!seen[static_cast<std::size_t>(sid)]) {
          seen[static_cast<std::size_t>(sid)] = 1;
          used.push_back(sid);
        }
      }
  }
  return used;
}

SymbolMatrix apply_assignment(const StringArray& arr, const Assignment& a) {
  SymbolMatrix out(arr.n, arr.n);
  for (Index i = 0; i < arr.n; ++i)
    for (Index j = 0; j < arr.n; ++j) out(i, j) = a.id_of[static_cast<std::size_t>(arr.id(i, j))];
  return out;
}

}  // namespace

SymbolMatrix sym_sub(const StringArray& s, DiagOffset mode) {
  const Assignment a = assign_ids(*s.pool, used_ids({&s}), s.n, mode);
  return apply_assignment(s, a);
}

std::pair<SymbolMatrix, SymbolMatrix> sym_sub_pair(const StringArray& a, const StringArray& b, DiagOffset mode) {
  if (a.pool != b.pool) throw std::invalid_argument("sym_sub_pair: arrays must share a pool");
  if (a.n != b.n) throw std::invalid_argument("sym_sub_pair: dimension mismatch");
  const Assignment asg = assign_ids(*a.pool, used_ids({&a, &b}), a.n, mode);
  return {apply_assignment(a, asg), apply_assignment(b, asg)};
}

}  // namespace permsim
