#include "bpol/resolution.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace bpol {

namespace {

// Prefix exponent sums: forced[i] = 1 + sum_{l <= i} a_l is the forced
// column for row i.
int forced_column(const Monomial& m, int i) {
  int s = 0;
  for (const auto& [v, e] : m.terms())
    if (v.i <= i) s += e;
  return 1 + s;
}

}  // namespace

bool is_admissible(const Monomial& m, const std::vector<std::pair<int, int>>& positions) {
  if (m.is_unit() || !m.single_indexed()) return false;
  int top = nu(m);
  int prev = 0;
  for (const auto& [i, j] : positions) {
    if (i <= prev || i >= top) return false;
    if (j != forced_column(m, i)) return false;
    prev = i;
  }
  return true;
}

AdmissiblePair make_admissible_pair(const BorelIdeal& I, const Monomial& m,
                                    const std::vector<int>& rows) {
  if (std::find(I.gens().begin(), I.gens().end(), m) == I.gens().end())
    throw std::invalid_argument(to_string(m) + " is not a minimal generator");
  std::vector<std::pair<int, int>> positions;
  positions.reserve(rows.size());
  for (int i : rows) positions.push_back({i, forced_column(m, i)});
  if (!is_admissible(m, positions))
    throw std::invalid_argument("rows do not give an admissible pair for " + to_string(m));
  return AdmissiblePair{m, bpol_monomial(m, I.maxdeg), std::move(positions)};
}

std::vector<std::vector<AdmissiblePair>> enumerate_admissible(const BorelIdeal& I) {
  std::vector<std::vector<AdmissiblePair>> by_q;
  for (const Monomial& m : I.gens()) {
    int top = nu(m);
    Monomial mt = bpol_monomial(m, I.maxdeg);
    // Subsets of {1..top-1} in lexicographic sequence order, grouped by size.
    std::vector<std::vector<std::vector<int>>> subsets_by_size(top);
    std::vector<int> current;
    auto extend = [&](auto&& self, int next) -> void {
      subsets_by_size[current.size()].push_back(current);
      for (int i = next; i < top; ++i) {
        current.push_back(i);
        self(self, i + 1);
        current.pop_back();
      }
    };
    extend(extend, 1);
    for (std::size_t q = 0; q < subsets_by_size.size(); ++q) {
      if (by_q.size() <= q) by_q.resize(q + 1);
      for (const std::vector<int>& rows : subsets_by_size[q]) {
        std::vector<std::pair<int, int>> positions;
        for (int i : rows) positions.push_back({i, forced_column(m, i)});
        by_q[q].push_back(AdmissiblePair{m, mt, std::move(positions)});
      }
    }
  }
  return by_q;
}

std::vector<int> b_set(const BorelIdeal& I, const AdmissiblePair& pair) {
  std::vector<int> out;
  for (int r = 1; r <= pair.q(); ++r) {
    std::vector<std::pair<int, int>> rest = pair.positions;
    rest.erase(rest.begin() + (r - 1));
    Monomial swapped = bracket_move(I, pair.m, pair.positions[r - 1].first);
    if (is_admissible(swapped, rest)) out.push_back(r);
  }
  return out;
}

namespace {

struct PairKey {
  Monomial m;
  std::vector<std::pair<int, int>> positions;
  bool operator<(const PairKey& o) const {
    auto c = lex_compare(m, o.m);
    if (c != 0) return c > 0;  // descending lex, matching the level order
    return positions < o.positions;
  }
};

using PairIndex = std::map<PairKey, int>;

PairIndex index_level(const std::vector<AdmissiblePair>& level) {
  PairIndex idx;
  for (std::size_t k = 0; k < level.size(); ++k)
    idx[PairKey{level[k].m, level[k].positions}] = static_cast<int>(k);
  return idx;
}

}  // namespace

FreeComplex build_p_complex(const BorelIdeal& I) {
  auto by_q = enumerate_admissible(I);
  FreeComplex P;
  P.ring = RingSpec::grid(I.ring().n, I.maxdeg);
  P.levels.push_back({BasisElement{Monomial::unit(), std::nullopt}});
  for (const auto& level : by_q) {
    std::vector<BasisElement> basis;
    basis.reserve(level.size());
    for (const AdmissiblePair& p : level) basis.push_back(BasisElement{x_of(p), p});
    P.levels.push_back(std::move(basis));
  }

  // Augmentation: e({}, m~) |-> m~.
  std::vector<DiffEntry> aug;
  for (std::size_t k = 0; k < by_q[0].size(); ++k)
    aug.push_back(DiffEntry{0, static_cast<int>(k), 1, by_q[0][k].mt});
  P.diffs.push_back(std::move(aug));

  for (std::size_t q = 1; q < by_q.size(); ++q) {
    PairIndex below = index_level(by_q[q - 1]);
    std::vector<DiffEntry> diff;
    for (std::size_t c = 0; c < by_q[q].size(); ++c) {
      const AdmissiblePair& p = by_q[q][c];
      std::vector<int> B = b_set(I, p);
      for (int r = 1; r <= p.q(); ++r) {
        auto [i, j] = p.positions[r - 1];
        std::vector<std::pair<int, int>> rest = p.positions;
        rest.erase(rest.begin() + (r - 1));
        int sign = (r % 2 == 0) ? 1 : -1;
        Monomial xij = Monomial::variable(grid_var(i, j));
        diff.push_back(DiffEntry{below.at(PairKey{p.m, rest}), static_cast<int>(c),
                                 sign, xij});
        if (std::find(B.begin(), B.end(), r) != B.end()) {
          Monomial swapped = bracket_move(I, p.m, i);
          Monomial swapped_t = bpol_monomial(swapped, I.maxdeg);
          Monomial coeff = div_exact(mul(xij, p.mt), swapped_t);
          diff.push_back(DiffEntry{below.at(PairKey{swapped, rest}),
                                   static_cast<int>(c), -sign, coeff});
        }
      }
    }
    P.diffs.push_back(std::move(diff));
  }
  return P;
}

SplitDifferential split_differential(const FreeComplex& P) {
  SplitDifferential split;
  split.delta.resize(P.diffs.size());
  split.delta_prime.resize(P.diffs.size());
  // Augmentation level: delta = 0 and delta' = -m~.
  for (const DiffEntry& e : P.diffs[0])
    split.delta_prime[0].push_back(DiffEntry{e.row, e.col, -e.sign, e.mono});
  for (std::size_t q = 1; q < P.diffs.size(); ++q) {
    for (const DiffEntry& e : P.diffs[q]) {
      const AdmissiblePair& src = *P.levels[q + 1][e.col].pair;
      const AdmissiblePair& dst = *P.levels[q][e.row].pair;
      if (src.m == dst.m)
        split.delta[q].push_back(e);
      else
        split.delta_prime[q].push_back(DiffEntry{e.row, e.col, -e.sign, e.mono});
    }
  }
  return split;
}

FreeComplex specialize_complex(const FreeComplex& P, const SpecializationMap& phi) {
  if (P.ring != phi.source)
    throw std::invalid_argument("specialization map does not match the complex ring");
  FreeComplex out;
  out.ring = phi.target;
  out.levels.reserve(P.levels.size());
  for (const auto& level : P.levels) {
    std::vector<BasisElement> basis;
    basis.reserve(level.size());
    for (const BasisElement& b : level)
      basis.push_back(BasisElement{b.degree.is_unit() ? Monomial::unit()
                                                      : specialize(b.degree, phi),
                                   b.pair});
    out.levels.push_back(std::move(basis));
  }
  out.diffs.reserve(P.diffs.size());
  for (const auto& diff : P.diffs) {
    std::vector<DiffEntry> entries;
    entries.reserve(diff.size());
    for (const DiffEntry& e : diff)
      entries.push_back(DiffEntry{e.row, e.col, e.sign,
                                  e.mono.is_unit() ? Monomial::unit()
                                                   : specialize(e.mono, phi)});
    out.diffs.push_back(std::move(entries));
  }
  return out;
}

bool grading_consistent(const FreeComplex& P) {
  for (std::size_t q = 0; q < P.diffs.size(); ++q) {
    if (q + 1 >= P.levels.size()) return P.diffs[q].empty();
    for (const DiffEntry& e : P.diffs[q]) {
      const Monomial& src = P.levels[q + 1][e.col].degree;
      const Monomial& dst = P.levels[q][e.row].degree;
      if (!divides(dst, src) || div_exact(src, dst) != e.mono) return false;
    }
  }
  return true;
}

bool composes_to_zero(const FreeComplex& P) {
  // With consistent grading all contributions to a fixed (source, target)
  // slot carry the same monomial, so integer sums of signs suffice.
  if (!grading_consistent(P)) return false;
  for (std::size_t q = 1; q < P.diffs.size(); ++q) {
    std::vector<std::vector<std::pair<int, int>>> lower_by_col(P.levels[q].size());
    for (const DiffEntry& e : P.diffs[q - 1])
      lower_by_col[e.col].push_back({e.row, e.sign});
    std::map<std::pair<int, int>, long long> sums;
    for (const DiffEntry& e : P.diffs[q])
      for (const auto& [row2, sign2] : lower_by_col[e.row])
        sums[{e.col, row2}] += static_cast<long long>(e.sign) * sign2;
    for (const auto& [key, value] : sums)
      if (value != 0) return false;
  }
  return true;
}

int unit_entry_count(const FreeComplex& P) {
  int count = 0;
  for (const auto& diff : P.diffs)
    for (const DiffEntry& e : diff)
      if (e.mono.is_unit()) ++count;
  return count;
}

std::vector<int> rank_vector(const FreeComplex& P) {
  std::vector<int> out;
  for (std::size_t q = 1; q < P.levels.size(); ++q)
    out.push_back(static_cast<int>(P.levels[q].size()));
  return out;
}

Monomial x_of(const AdmissiblePair& pair) {
  Monomial out = pair.mt;
  for (const auto& [i, j] : pair.positions)
    out = mul(out, Monomial::variable(grid_var(i, j)));
  return out;
}

std::vector<std::pair<int, int>> removable_positions(const AdmissiblePair& pair) {
  std::vector<std::pair<int, int>> out;
  for (const auto& block : removable_blocks(pair))
    out.insert(out.end(), block.begin(), block.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::pair<int, int>>> removable_blocks(const AdmissiblePair& pair) {
  Monomial x = x_of(pair);
  std::vector<int> columns;
  for (const auto& [i, j] : pair.positions)
    if (columns.empty() || columns.back() != j) columns.push_back(j);
  std::vector<std::vector<std::pair<int, int>>> blocks;
  for (int j : columns) {
    std::vector<std::pair<int, int>> block;
    for (const auto& [v, e] : x.terms()) {
      (void)e;
      if (v.j == j) block.push_back({v.i, v.j});
    }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  return blocks;
}

PairPoset admissible_pair_poset(const BorelIdeal& I) {
  FreeComplex P = build_p_complex(I);
  PairPoset poset;
  std::vector<std::vector<int>> global_id(P.levels.size());
  for (std::size_t q = 1; q < P.levels.size(); ++q) {
    global_id[q].resize(P.levels[q].size());
    for (std::size_t k = 0; k < P.levels[q].size(); ++k) {
      global_id[q][k] = poset.size();
      poset.elements.push_back(*P.levels[q][k].pair);
      poset.level_of.push_back(static_cast<int>(q) - 1);
    }
  }
  poset.covers.assign(poset.elements.size(), {});
  for (std::size_t q = 1; q < P.diffs.size(); ++q)
    for (const DiffEntry& e : P.diffs[q])
      poset.covers[global_id[q + 1][e.col]].push_back(global_id[q][e.row]);
  for (auto& c : poset.covers) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }
  // Reflexive-transitive closure by increasing level.
  poset.order_ideal_of.assign(poset.elements.size(), {});
  for (int v = 0; v < poset.size(); ++v) {
    std::vector<char> in_ideal(poset.elements.size(), 0);
    std::vector<int> stack{v};
    in_ideal[v] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : poset.covers[u])
        if (!in_ideal[w]) {
          in_ideal[w] = 1;
          stack.push_back(w);
        }
    }
    for (int w = 0; w < poset.size(); ++w)
      if (in_ideal[w]) poset.order_ideal_of[v].push_back(w);
  }
  return poset;
}

std::vector<std::string> stair_diagram(const AdmissiblePair& pair) {
  int rows = nu(pair.m);
  int cols = std::max(pair.m.degree(), 1);
  std::vector<std::string> grid(rows, std::string(cols, '.'));
  for (const auto& [v, e] : pair.mt.terms()) {
    (void)e;
    grid[v.i - 1][v.j - 1] = 'B';
  }
  for (const auto& [i, j] : pair.positions) grid[i - 1][j - 1] = 'W';
  return grid;
}

}  // namespace bpol
