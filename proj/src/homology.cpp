#include "bpol/homology.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace bpol {

namespace {

// ---------------------------------------------------------------------
// Field arithmetic
// ---------------------------------------------------------------------

struct GfOps {
  using Elem = std::int64_t;
  std::int64_t p;

  Elem from_int(long long v) const {
    Elem r = v % p;
    return r < 0 ? r + p : r;
  }
  bool is_zero(Elem a) const { return a == 0; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<__int128>(a) * b % p);
  }
  Elem add(Elem a, Elem b) const {
    Elem c = a + b;
    return c >= p ? c - p : c;
  }
  Elem inv(Elem a) const {
    // Fermat; p is prime.
    Elem r = 1, base = a;
    std::int64_t e = p - 2;
    while (e > 0) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
};

struct RatOps {
  using Elem = mpq_class;

  Elem from_int(long long v) const { return Elem(static_cast<long>(v)); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem inv(const Elem& a) const { return 1 / a; }
};

// ---------------------------------------------------------------------
// Sparse rank: left-looking elimination. Each adopted pivot column is
// already reduced against earlier pivots, so a single forward pass over
// pivots in creation order reduces any new column completely. Columns are
// processed sparsest first and pivot rows chosen by row count, keeping the
// elimination on structural nonzeros cheap.
// ---------------------------------------------------------------------

template <class Ops>
class SparseEliminator {
 public:
  using Elem = typename Ops::Elem;
  using Column = std::vector<std::pair<int, Elem>>;  // sorted by row

  explicit SparseEliminator(Ops ops, std::vector<int> row_counts)
      : ops_(ops), row_counts_(std::move(row_counts)) {}

  int rank(std::vector<Column> columns) {
    std::sort(columns.begin(), columns.end(),
              [](const Column& a, const Column& b) { return a.size() < b.size(); });
    int rank = 0;
    for (Column& col : columns) {
      reduce(col);
      if (col.empty()) continue;
      adopt(std::move(col));
      ++rank;
    }
    return rank;
  }

 private:
  void axpy(Column& col, const Elem& factor, const Column& pivot) {
    Column out;
    out.reserve(col.size() + pivot.size());
    auto ic = col.begin();
    for (const auto& [row, val] : pivot) {
      while (ic != col.end() && ic->first < row) out.push_back(*ic++);
      Elem add = ops_.mul(factor, val);
      if (ic != col.end() && ic->first == row) {
        Elem s = ops_.add(ic->second, add);
        if (!ops_.is_zero(s)) out.push_back({row, s});
        ++ic;
      } else if (!ops_.is_zero(add)) {
        out.push_back({row, add});
      }
    }
    out.insert(out.end(), ic, col.end());
    col = std::move(out);
  }

  void reduce(Column& col) {
    for (std::size_t k = 0; k < pivots_.size() && !col.empty(); ++k) {
      int prow = pivot_rows_[k];
      auto it = std::lower_bound(col.begin(), col.end(), prow,
                                 [](const auto& t, int r) { return t.first < r; });
      if (it == col.end() || it->first != prow) continue;
      axpy(col, ops_.neg(it->second), pivots_[k]);
    }
  }

  void adopt(Column col) {
    // Pivot at the structurally lightest row, ties by index.
    int best = 0;
    for (std::size_t k = 1; k < col.size(); ++k)
      if (row_counts_[col[k].first] < row_counts_[col[best].first]) best = static_cast<int>(k);
    int prow = col[best].first;
    Elem inv = ops_.inv(col[best].second);
    for (auto& [row, val] : col) val = ops_.mul(val, inv);
    pivot_rows_.push_back(prow);
    pivots_.push_back(std::move(col));
  }

  Ops ops_;
  std::vector<int> row_counts_;
  std::vector<int> pivot_rows_;
  std::vector<Column> pivots_;
};

struct IntColumn {
  std::vector<std::pair<int, long long>> entries;  // sorted by row
};

template <class Ops>
int rank_with(Ops ops, int rows, const std::vector<IntColumn>& cols) {
  std::vector<int> row_counts(rows, 0);
  for (const IntColumn& c : cols)
    for (const auto& [row, val] : c.entries) {
      (void)val;
      ++row_counts[row];
    }
  using Column = typename SparseEliminator<Ops>::Column;
  std::vector<Column> columns;
  columns.reserve(cols.size());
  for (const IntColumn& c : cols) {
    Column col;
    col.reserve(c.entries.size());
    for (const auto& [row, val] : c.entries) {
      auto e = ops.from_int(val);
      if (!ops.is_zero(e)) col.push_back({row, e});
    }
    columns.push_back(std::move(col));
  }
  SparseEliminator<Ops> elim(ops, std::move(row_counts));
  return elim.rank(std::move(columns));
}

int rank_dispatch(const FieldSpec& field, int rows, const std::vector<IntColumn>& cols) {
  if (field.kind == FieldSpec::Kind::gf) {
    if (field.prime < 2) throw std::invalid_argument("field characteristic must be a prime");
    return rank_with(GfOps{field.prime}, rows, cols);
  }
  return rank_with(RatOps{}, rows, cols);
}

// ---------------------------------------------------------------------
// Dense exponent vectors for degree comparisons and join closures
// ---------------------------------------------------------------------

using Dense = std::vector<int>;

int var_axis(const RingSpec& ring, Var v) {
  if (ring.kind == RingSpec::Kind::single) return v.i - 1;
  return (v.i - 1) * ring.d + (v.j - 1);
}

Dense to_dense(const RingSpec& ring, const Monomial& m) {
  Dense out(ring.var_count(), 0);
  for (const auto& [v, e] : m.terms()) out[var_axis(ring, v)] += e;
  return out;
}

Monomial from_dense(const RingSpec& ring, const Dense& deg) {
  std::vector<Monomial::Term> terms;
  for (int a = 0; a < static_cast<int>(deg.size()); ++a) {
    if (deg[a] == 0) continue;
    Var v = ring.kind == RingSpec::Kind::single ? single_var(a + 1)
                                                : grid_var(a / ring.d + 1, a % ring.d + 1);
    terms.push_back({v, deg[a]});
  }
  return Monomial::from_terms(std::move(terms));
}

bool leq(const Dense& a, const Dense& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

Dense join(const Dense& a, const Dense& b) {
  Dense out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = std::max(a[k], b[k]);
  return out;
}

// Closure of the base under pairwise joins (joining against base elements
// suffices since every join is an iterated base join).
std::vector<Dense> join_closure(const std::vector<Dense>& base) {
  std::set<Dense> closed(base.begin(), base.end());
  std::vector<Dense> work(closed.begin(), closed.end());
  while (!work.empty()) {
    Dense a = std::move(work.back());
    work.pop_back();
    for (const Dense& b : base) {
      Dense c = join(a, b);
      if (closed.insert(c).second) work.push_back(c);
    }
  }
  return {closed.begin(), closed.end()};
}

}  // namespace

// ---------------------------------------------------------------------
// Certification
// ---------------------------------------------------------------------

namespace {

// Dimensions and differential ranks of the strand at b. An entry survives
// iff its source basis element does: the target degree divides the source
// degree, which divides b.
std::pair<std::vector<int>, std::vector<int>> strand_at(
    const FreeComplex& P, const std::vector<std::vector<Dense>>& level_degs,
    const Dense& b, const FieldSpec& field) {
  std::vector<std::vector<char>> in_strand(P.levels.size());
  std::vector<int> dims(P.levels.size(), 0);
  for (std::size_t q = 0; q < P.levels.size(); ++q) {
    in_strand[q].resize(P.levels[q].size());
    for (std::size_t k = 0; k < P.levels[q].size(); ++k) {
      in_strand[q][k] = leq(level_degs[q][k], b);
      dims[q] += in_strand[q][k];
    }
  }
  std::vector<int> ranks(P.levels.size() + 1, 0);
  for (std::size_t q = 0; q < P.diffs.size(); ++q) {
    std::vector<IntColumn> cols(P.levels[q + 1].size());
    bool any = false;
    for (const DiffEntry& e : P.diffs[q]) {
      if (!in_strand[q + 1][e.col]) continue;
      cols[e.col].entries.push_back({e.row, e.sign});
      any = true;
    }
    if (!any) continue;
    for (IntColumn& c : cols) std::sort(c.entries.begin(), c.entries.end());
    ranks[q + 1] = rank_dispatch(field, static_cast<int>(P.levels[q].size()), cols);
  }
  return {std::move(dims), std::move(ranks)};
}

}  // namespace

std::vector<int> StrandSlice::homology() const {
  std::vector<int> h(dims.size());
  for (std::size_t q = 0; q < dims.size(); ++q)
    h[q] = dims[q] - ranks[q] - (q + 1 < ranks.size() ? ranks[q + 1] : 0);
  return h;
}

StrandSlice strand(const FreeComplex& P, const Monomial& degree, const FieldSpec& field) {
  std::vector<std::vector<Dense>> level_degs(P.levels.size());
  for (std::size_t q = 0; q < P.levels.size(); ++q)
    for (const BasisElement& b : P.levels[q])
      level_degs[q].push_back(to_dense(P.ring, b.degree));
  auto [dims, ranks] = strand_at(P, level_degs, to_dense(P.ring, degree), field);
  return StrandSlice{std::move(dims), std::move(ranks)};
}

std::string CertificationReport::summary() const {
  std::ostringstream os;
  os << "grading " << (grading_ok ? "ok" : "FAIL") << ", d^2 " << (d2_ok ? "ok" : "FAIL")
     << ", strands " << (exact ? "exact" : "NOT EXACT") << ", H0 "
     << (h0_ok ? "ok" : "FAIL") << ", " << (minimal ? "minimal" : "NOT MINIMAL") << " ("
     << lattice_size << " lattice degrees)";
  if (!failures.empty()) {
    os << "; first failure at level " << failures.front().level << ", degree "
       << to_string(failures.front().degree) << ", h = " << failures.front().homology_dim;
  }
  return os.str();
}

CertificationReport certify_resolution(const FreeComplex& P, const MonomialIdeal& J,
                                       const FieldSpec& field) {
  CertificationReport report;
  report.grading_ok = grading_consistent(P);
  report.d2_ok = report.grading_ok && composes_to_zero(P);
  report.minimal = unit_entry_count(P) == 0;
  if (!report.grading_ok) return report;

  const RingSpec& ring = P.ring;
  std::vector<std::vector<Dense>> level_degs(P.levels.size());
  std::vector<Dense> base;
  for (std::size_t q = 0; q < P.levels.size(); ++q)
    for (const BasisElement& b : P.levels[q]) {
      level_degs[q].push_back(to_dense(ring, b.degree));
      base.push_back(level_degs[q].back());
    }
  std::vector<Dense> lattice = join_closure(base);
  report.lattice_size = lattice.size();

  report.exact = true;
  report.h0_ok = true;
  for (const Dense& b : lattice) {
    auto [dims, ranks] = strand_at(P, level_degs, b, field);
    for (std::size_t q = 0; q < P.levels.size(); ++q) {
      int h = dims[q] - ranks[q] - ranks[q + 1];
      int expected = 0;
      if (q == 0) expected = contains(J, from_dense(ring, b)) ? 0 : 1;
      if (h != expected) {
        report.failures.push_back(
            StrandFailure{static_cast<int>(q), from_dense(ring, b), h});
        (q == 0 ? report.h0_ok : report.exact) = false;
      }
    }
  }
  return report;
}

FreeComplex taylor_complex(const MonomialIdeal& J) {
  const std::vector<Monomial>& gens = J.gens;
  int t = static_cast<int>(gens.size());
  if (t > 20) throw std::invalid_argument("Taylor complex bounded at 20 generators");
  FreeComplex T;
  T.ring = J.ring;
  // Level q carries the q-element subsets in ascending bitmask order.
  std::vector<std::vector<std::uint32_t>> subsets(t + 1);
  std::vector<Monomial> lcms(std::size_t{1} << t);
  lcms[0] = Monomial::unit();
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << t); ++mask) {
    if (mask) {
      std::uint32_t low = mask & (~mask + 1);
      int g = std::countr_zero(low);
      lcms[mask] = lcm_of(lcms[mask ^ low], gens[g]);
    }
    subsets[std::popcount(mask)].push_back(mask);
  }
  std::vector<std::unordered_map<std::uint32_t, int>> index(t + 1);
  for (int q = 0; q <= t; ++q) {
    std::vector<BasisElement> level;
    for (std::uint32_t mask : subsets[q]) {
      index[q][mask] = static_cast<int>(level.size());
      level.push_back(BasisElement{lcms[mask], std::nullopt});
    }
    T.levels.push_back(std::move(level));
  }
  for (int q = 1; q <= t; ++q) {
    std::vector<DiffEntry> diff;
    for (std::uint32_t mask : subsets[q]) {
      int col = index[q][mask];
      int pos = 0;
      for (int g = 0; g < t; ++g) {
        if (!(mask >> g & 1)) continue;
        ++pos;
        std::uint32_t sub = mask ^ (std::uint32_t{1} << g);
        diff.push_back(DiffEntry{index[q - 1][sub], col, pos % 2 == 1 ? 1 : -1,
                                 div_exact(lcms[mask], lcms[sub])});
      }
    }
    T.diffs.push_back(std::move(diff));
  }
  return T;
}

// ---------------------------------------------------------------------
// Betti tables
// ---------------------------------------------------------------------

void BettiTable::add(int q, const Monomial& degree, int count) {
  if (count != 0) entries.push_back({q, degree, count});
}

void BettiTable::normalize() {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
    return lex_compare(std::get<1>(a), std::get<1>(b)) > 0;
  });
  std::vector<std::tuple<int, Monomial, int>> merged;
  for (auto& e : entries) {
    if (!merged.empty() && std::get<0>(merged.back()) == std::get<0>(e) &&
        std::get<1>(merged.back()) == std::get<1>(e))
      std::get<2>(merged.back()) += std::get<2>(e);
    else
      merged.push_back(e);
  }
  entries = std::move(merged);
}

std::map<std::pair<int, int>, int> BettiTable::z_graded() const {
  std::map<std::pair<int, int>, int> out;
  for (const auto& [q, deg, c] : entries) out[{q, deg.degree()}] += c;
  return out;
}

std::vector<int> BettiTable::ranks() const {
  std::vector<int> out;
  for (const auto& [q, deg, c] : entries) {
    (void)deg;
    if (static_cast<int>(out.size()) <= q) out.resize(q + 1, 0);
    out[q] += c;
  }
  return out;
}

std::string BettiTable::to_text() const {
  std::ostringstream os;
  os << "q  degree  rank\n";
  for (const auto& [q, deg, c] : entries)
    os << q << "  " << to_string(deg) << "  " << c << '\n';
  return os.str();
}

BettiTable betti_oracle(const MonomialIdeal& J, const FieldSpec& field, int max_gens) {
  int t = static_cast<int>(J.gens.size());
  if (t > max_gens)
    throw std::invalid_argument("Betti oracle bounded at " + std::to_string(max_gens) +
                                " generators, got " + std::to_string(t));
  BettiTable table;
  if (t == 0) return table;

  std::vector<Dense> gens;
  for (const Monomial& g : J.gens) gens.push_back(to_dense(J.ring, g));

  // lcm of every generator subset, interned.
  std::map<Dense, int> ids;
  std::vector<Dense> degs;
  auto intern = [&](const Dense& d) {
    auto [it, fresh] = ids.try_emplace(d, static_cast<int>(degs.size()));
    if (fresh) degs.push_back(d);
    return it->second;
  };
  std::vector<std::int32_t> lcm_id(std::size_t{1} << t);
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << t); ++mask) {
    std::uint32_t low = mask & (~mask + 1);
    int g = std::countr_zero(low);
    std::uint32_t rest = mask ^ low;
    lcm_id[mask] = intern(rest == 0 ? gens[g] : join(degs[lcm_id[rest]], gens[g]));
  }
  std::vector<std::vector<std::uint32_t>> buckets(degs.size());
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << t); ++mask)
    buckets[lcm_id[mask]].push_back(mask);

  // Per lattice degree: the complex of subsets with that exact lcm and the
  // 0/±1 differential surviving the coefficient-field reduction.
  for (std::size_t id = 0; id < buckets.size(); ++id) {
    std::vector<std::vector<std::uint32_t>> by_level(t + 1);
    for (std::uint32_t mask : buckets[id]) by_level[std::popcount(mask)].push_back(mask);
    std::vector<std::unordered_map<std::uint32_t, int>> index(t + 2);
    for (int l = 0; l <= t; ++l)
      for (std::uint32_t mask : by_level[l]) {
        int next = static_cast<int>(index[l].size());
        index[l][mask] = next;
      }
    std::vector<int> ranks(t + 2, 0);
    for (int l = 1; l <= t; ++l) {
      if (by_level[l].empty()) continue;
      std::vector<IntColumn> cols;
      cols.reserve(by_level[l].size());
      bool any = false;
      for (std::uint32_t mask : by_level[l]) {
        IntColumn col;
        int pos = 0;
        for (int g = 0; g < t; ++g) {
          if (!(mask >> g & 1)) continue;
          ++pos;
          std::uint32_t sub = mask ^ (std::uint32_t{1} << g);
          if (sub == 0 || lcm_id[sub] != static_cast<std::int32_t>(id)) continue;
          col.entries.push_back({index[l - 1].at(sub), pos % 2 == 1 ? 1 : -1});
          any = true;
        }
        std::sort(col.entries.begin(), col.entries.end());
        cols.push_back(std::move(col));
      }
      if (any)
        ranks[l] = rank_dispatch(field, static_cast<int>(by_level[l - 1].size()), cols);
    }
    Monomial degree = from_dense(J.ring, degs[id]);
    for (int l = 1; l <= t; ++l) {
      int h = static_cast<int>(by_level[l].size()) - ranks[l] - ranks[l + 1];
      if (h != 0) table.add(l - 1, degree, h);
    }
  }
  table.normalize();
  return table;
}

BettiTable betti_from_complex(const FreeComplex& P) {
  BettiTable table;
  for (std::size_t q = 1; q < P.levels.size(); ++q)
    for (const BasisElement& b : P.levels[q])
      table.add(static_cast<int>(q) - 1, b.degree, 1);
  table.normalize();
  return table;
}

bool betti_equal(const BorelIdeal& I, const FieldSpec& field) {
  BettiTable a = betti_oracle(I.ideal, field);
  BettiTable b = betti_oracle(bpol_ideal(I), field);
  return a.z_graded() == b.z_graded();
}

bool LcmLattice::contains(const Monomial& m) const {
  return std::find(elements.begin(), elements.end(), m) != elements.end();
}

LcmLattice lcm_lattice(const MonomialIdeal& J) {
  std::vector<Dense> gens;
  for (const Monomial& g : J.gens) gens.push_back(to_dense(J.ring, g));
  LcmLattice lattice;
  for (const Dense& d : join_closure(gens)) lattice.elements.push_back(from_dense(J.ring, d));
  std::sort(lattice.elements.begin(), lattice.elements.end(), LexGreater{});
  return lattice;
}

int dense_rank(std::vector<std::vector<long long>> mat, const FieldSpec& field) {
  if (mat.empty()) return 0;
  if (field.kind == FieldSpec::Kind::gf) {
    GfOps ops{field.prime};
    int rows = static_cast<int>(mat.size()), cols = static_cast<int>(mat[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
      int pivot = -1;
      for (int r = rank; r < rows; ++r)
        if (!ops.is_zero(ops.from_int(mat[r][c]))) {
          pivot = r;
          break;
        }
      if (pivot < 0) continue;
      std::swap(mat[rank], mat[pivot]);
      auto inv = ops.inv(ops.from_int(mat[rank][c]));
      for (int cc = 0; cc < cols; ++cc)
        mat[rank][cc] = ops.mul(ops.from_int(mat[rank][cc]), inv);
      for (int r = 0; r < rows; ++r) {
        if (r == rank) continue;
        auto f = ops.from_int(mat[r][c]);
        if (ops.is_zero(f)) continue;
        for (int cc = 0; cc < cols; ++cc)
          mat[r][cc] = ops.add(ops.from_int(mat[r][cc]), ops.mul(ops.neg(f), mat[rank][cc]));
      }
      ++rank;
    }
    return rank;
  }
  // Rational path: fraction elimination on mpq.
  int rows = static_cast<int>(mat.size()), cols = static_cast<int>(mat[0].size());
  std::vector<std::vector<mpq_class>> m(rows, std::vector<mpq_class>(cols));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m[r][c] = static_cast<long>(mat[r][c]);
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (sgn(m[r][c]) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    mpq_class inv = 1 / m[rank][c];
    for (int cc = 0; cc < cols; ++cc) m[rank][cc] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || sgn(m[r][c]) == 0) continue;
      mpq_class f = m[r][c];
      for (int cc = 0; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

int sparse_rank(int rows, int cols,
                const std::vector<std::tuple<int, int, long long>>& entries,
                const FieldSpec& field) {
  std::vector<IntColumn> columns(cols);
  for (const auto& [r, c, v] : entries) columns[c].entries.push_back({r, v});
  for (IntColumn& c : columns) std::sort(c.entries.begin(), c.entries.end());
  return rank_dispatch(field, rows, columns);
}

}  // namespace bpol
