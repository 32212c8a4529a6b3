#include "bpol/morse.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace bpol {

namespace {

int top_index(CellMask subset) { return 31 - std::countl_zero(subset); }

std::vector<int> member_list(CellMask subset) {
  std::vector<int> out;
  for (int g = 0; g < 32; ++g)
    if (subset >> g & 1) out.push_back(g);
  return out;
}

// 1-based position of g among the ascending members of subset.
int member_position(CellMask subset, int g) {
  return std::popcount(subset & ((CellMask{1} << g) - 1)) + 1;
}

}  // namespace

MorseAnalysis::MorseAnalysis(const BorelIdeal& I, int max_gens) : ideal_(I) {
  t_ = static_cast<int>(I.gens().size());
  if (t_ > max_gens)
    throw std::invalid_argument("generator count " + std::to_string(t_) +
                                " exceeds the subset-enumeration bound " +
                                std::to_string(max_gens));
  if (I.ring().n * I.maxdeg > 32)
    throw std::invalid_argument("grid too large for packed subsets");

  // Descending lex = sqsubset-ascending, so the canonical generator order
  // serves directly.
  gens_m_ = I.gens();
  int d = I.maxdeg;
  std::unordered_map<Monomial, int, MonomialHash> index_of;
  for (int g = 0; g < t_; ++g) {
    gens_t_.push_back(bpol_monomial(gens_m_[g], d));
    index_of[gens_m_[g]] = g;
  }
  gen_bits_.resize(t_);
  for (int g = 0; g < t_; ++g) {
    std::uint32_t bits = 0;
    for (const auto& [v, e] : gens_t_[g].terms()) {
      (void)e;
      bits |= std::uint32_t{1} << ((v.i - 1) * d + (v.j - 1));
    }
    gen_bits_[g] = bits;
  }
  bracket_.resize(t_);
  for (int g = 0; g < t_; ++g) {
    int top = nu(gens_m_[g]);
    for (int i = 1; i < top; ++i)
      bracket_[g].push_back(index_of.at(bracket_move(ideal_, gens_m_[g], i)));
  }

  std::size_t count = std::size_t{1} << t_;
  lcm_bits_.assign(count, 0);
  for (std::size_t s = 1; s < count; ++s) {
    std::uint32_t low = s & (~s + 1);
    lcm_bits_[s] = lcm_bits_[s ^ low] | gen_bits_[std::countr_zero(low)];
  }

  matched_lower_.assign(count, -1);
  for (std::size_t s = 1; s < count; ++s) {
    auto un = u_and_n(static_cast<CellMask>(s));
    if (un && !(s >> un->second & 1)) matched_lower_[s] = un->second;
  }
  occurrences_.assign(count, 0);
  for (std::size_t s = 1; s < count; ++s) {
    if (matched_lower_[s] < 0) continue;
    CellMask upper = static_cast<CellMask>(s) | (CellMask{1} << matched_lower_[s]);
    edges_.push_back(MatchingEdge{upper, static_cast<CellMask>(s), matched_lower_[s]});
    ++occurrences_[s];
    ++occurrences_[upper];
  }

  for (std::size_t s = 1; s < count; ++s)
    if (occurrences_[s] == 0) critical_.push_back(static_cast<CellMask>(s));
  // Align with the admissible-pair level order: by q, then by the top
  // generator (descending lex = ascending index), then by row sets.
  std::sort(critical_.begin(), critical_.end(), [this](CellMask a, CellMask b) {
    int ka = std::popcount(a), kb = std::popcount(b);
    if (ka != kb) return ka < kb;
    int ta = top_index(a), tb = top_index(b);
    if (ta != tb) return ta < tb;
    return bracket_rows(a) < bracket_rows(b);
  });
}

Monomial MorseAnalysis::subset_lcm(CellMask subset) const {
  std::vector<Monomial::Term> terms;
  int d = ideal_.maxdeg;
  std::uint32_t bits = lcm_bits_[subset];
  while (bits) {
    int b = std::countr_zero(bits);
    bits &= bits - 1;
    terms.push_back({grid_var(b / d + 1, b % d + 1), 1});
  }
  return Monomial::from_terms(std::move(terms));
}

std::vector<int> MorseAnalysis::prec_order(CellMask subset) const {
  if (subset == 0) throw std::invalid_argument("empty subset");
  int top = top_index(subset);
  std::uint32_t lcm = lcm_bits_[subset];
  // Divisor brackets of the top generator come first.
  std::vector<char> in_front(t_, 0);
  for (int g : bracket_[top])
    if ((gen_bits_[g] | lcm) == lcm) in_front[g] = 1;
  std::vector<int> order;
  order.reserve(t_);
  for (int g = 0; g < t_; ++g)
    if (in_front[g]) order.push_back(g);
  for (int g = 0; g < t_; ++g)
    if (!in_front[g]) order.push_back(g);
  return order;
}

std::optional<std::pair<int, int>> MorseAnalysis::u_and_n(CellMask subset) const {
  std::vector<int> order = prec_order(subset);
  std::vector<int> rank(t_);
  for (int r = 0; r < t_; ++r) rank[order[r]] = r;
  std::vector<int> members = member_list(subset);
  std::sort(members.begin(), members.end(),
            [&rank](int a, int b) { return rank[a] < rank[b]; });
  int k = static_cast<int>(members.size());

  int best = -1;
  std::uint32_t tail_lcm = gen_bits_[members[k - 1]];
  for (int l = 1; l < k; ++l) {
    tail_lcm |= gen_bits_[members[k - 1 - l]];
    int threshold = rank[members[k - 1 - l]];
    for (int g = 0; g < t_; ++g)
      if (rank[g] < threshold && (gen_bits_[g] | tail_lcm) == tail_lcm) {
        best = l;
        break;
      }
  }
  if (best < 0) return std::nullopt;

  std::uint32_t lcm_u = 0;
  for (int l = 0; l <= best; ++l) lcm_u |= gen_bits_[members[k - 1 - l]];
  int chosen = -1;
  for (int g : order)
    if ((gen_bits_[g] | lcm_u) == lcm_u) {
      chosen = g;
      break;
    }
  return std::make_pair(best, chosen);
}

std::vector<CellMask> MorseAnalysis::out_edges(CellMask v) const {
  std::vector<CellMask> out;
  if (matched_lower_[v] >= 0) out.push_back(v | (CellMask{1} << matched_lower_[v]));
  if (std::popcount(v) >= 2) {
    for (int g = 0; g < t_; ++g) {
      if (!(v >> g & 1)) continue;
      CellMask w = v ^ (CellMask{1} << g);
      if (matched_lower_[w] == g) continue;  // reversed edge of the matching
      out.push_back(w);
    }
  }
  return out;
}

MatchingReport MorseAnalysis::verify_matching() const {
  MatchingReport report;
  report.edge_count = edges_.size();
  report.matching_ok = true;
  for (std::size_t s = 1; s < occurrences_.size(); ++s)
    if (occurrences_[s] > 1) {
      report.matching_ok = false;
      report.detail = "subset " + cell_name(static_cast<CellMask>(s)) +
                      " occurs in two matching edges";
      break;
    }
  // Cycle search over the matching-reversed face digraph.
  std::size_t count = std::size_t{1} << t_;
  std::vector<char> color(count, 0);  // 0 unseen, 1 active, 2 done
  report.acyclic = true;
  for (std::size_t root = 1; root < count && report.acyclic; ++root) {
    if (color[root]) continue;
    std::vector<std::pair<CellMask, std::size_t>> stack{{static_cast<CellMask>(root), 0}};
    color[root] = 1;
    while (!stack.empty() && report.acyclic) {
      auto& [v, next] = stack.back();
      std::vector<CellMask> outs = out_edges(v);
      if (next >= outs.size()) {
        color[v] = 2;
        stack.pop_back();
        continue;
      }
      CellMask w = outs[next++];
      if (color[w] == 1) {
        report.acyclic = false;
        report.detail = "directed cycle through " + cell_name(w);
      } else if (color[w] == 0) {
        color[w] = 1;
        stack.push_back({w, 0});
      }
    }
  }
  return report;
}

bool MorseAnalysis::is_critical(CellMask subset) const {
  return subset != 0 && occurrences_[subset] == 0;
}

std::vector<int> MorseAnalysis::f_vector() const {
  std::vector<int> out;
  for (CellMask c : critical_) {
    int dim = std::popcount(c) - 1;
    if (static_cast<int>(out.size()) <= dim) out.resize(dim + 1, 0);
    ++out[dim];
  }
  return out;
}

std::vector<int> MorseAnalysis::bracket_rows(CellMask subset) const {
  int top = top_index(subset);
  CellMask rest = subset ^ (CellMask{1} << top);
  std::vector<int> rows;
  for (int i = 1; i <= static_cast<int>(bracket_[top].size()); ++i)
    if (rest >> bracket_[top][i - 1] & 1) rows.push_back(i);
  return rows;
}

AdmissiblePair MorseAnalysis::pair_of_cell(CellMask subset) const {
  if (subset == 0) throw std::invalid_argument("empty subset");
  int top = top_index(subset);
  std::vector<int> rows = bracket_rows(subset);
  CellMask rebuilt = CellMask{1} << top;
  for (int i : rows) rebuilt |= CellMask{1} << bracket_[top][i - 1];
  if (rebuilt != subset ||
      static_cast<int>(rows.size()) != std::popcount(subset) - 1)
    throw std::logic_error("cell " + cell_name(subset) +
                           " does not decompose as brackets of its top generator");
  return make_admissible_pair(ideal_, gens_m_[top], rows);
}

CellMask MorseAnalysis::cell_of_pair(const AdmissiblePair& pair) const {
  auto it = std::find(gens_m_.begin(), gens_m_.end(), pair.m);
  if (it == gens_m_.end())
    throw std::invalid_argument("pair generator is not in the ideal");
  int top = static_cast<int>(it - gens_m_.begin());
  CellMask cell = CellMask{1} << top;
  for (const auto& [i, j] : pair.positions) {
    (void)j;
    cell |= CellMask{1} << bracket_[top][i - 1];
  }
  return cell;
}

std::vector<std::vector<CellMask>> MorseAnalysis::gradient_paths(CellMask sigma,
                                                                 CellMask tau) const {
  if (!is_critical(sigma) || !is_critical(tau))
    throw std::invalid_argument("gradient paths connect critical cells");
  if (std::popcount(tau) + 1 != std::popcount(sigma))
    throw std::invalid_argument("target must sit one dimension below the source");
  CellMask start = sigma ^ (CellMask{1} << top_index(sigma));

  // Path counts to tau, memoized over the acyclic digraph.
  std::unordered_map<CellMask, long long> count;
  std::vector<std::pair<CellMask, bool>> stack{{start, false}};
  while (!stack.empty()) {
    auto [v, expanded] = stack.back();
    stack.pop_back();
    if (count.count(v)) continue;
    if (expanded) {
      long long c = v == tau ? 1 : 0;
      for (CellMask w : out_edges(v)) c += count.at(w);
      count[v] = std::min<long long>(c, 1 << 20);
      continue;
    }
    stack.push_back({v, true});
    for (CellMask w : out_edges(v))
      if (!count.count(w)) stack.push_back({w, false});
  }

  std::vector<std::vector<CellMask>> paths;
  if (count.at(start) == 0) return paths;
  std::vector<CellMask> prefix{start};
  auto dfs = [&](auto&& self, CellMask v) -> void {
    if (static_cast<long long>(paths.size()) >= 4096)
      throw std::logic_error("gradient path explosion");
    if (v == tau) paths.push_back(prefix);
    for (CellMask w : out_edges(v)) {
      if (count.at(w) == 0) continue;
      prefix.push_back(w);
      self(self, w);
      prefix.pop_back();
    }
  };
  dfs(dfs, start);
  return paths;
}

int MorseAnalysis::path_sign(const std::vector<CellMask>& path) const {
  int sign = 1;
  for (std::size_t s = 1; s < path.size(); ++s) {
    CellMask a = path[s - 1], b = path[s];
    int g = std::countr_zero(a ^ b);
    if (std::popcount(a) > std::popcount(b)) {
      // face step: [a : b]
      sign *= member_position(a, g) % 2 == 0 ? 1 : -1;
    } else {
      // reversed matching edge: -[b : a]
      sign *= member_position(b, g) % 2 == 0 ? -1 : 1;
    }
  }
  return sign;
}

FreeComplex MorseAnalysis::build_q_complex() const {
  auto by_q = enumerate_admissible(ideal_);
  FreeComplex Q;
  Q.ring = RingSpec::grid(ideal_.ring().n, ideal_.maxdeg);
  Q.levels.push_back({BasisElement{Monomial::unit(), std::nullopt}});

  std::unordered_map<CellMask, std::pair<int, int>> slot;  // cell -> (level, index)
  std::vector<std::vector<CellMask>> cells_by_level;
  for (std::size_t q = 0; q < by_q.size(); ++q) {
    std::vector<BasisElement> level;
    std::vector<CellMask> cells;
    for (std::size_t k = 0; k < by_q[q].size(); ++k) {
      CellMask cell = cell_of_pair(by_q[q][k]);
      if (!is_critical(cell))
        throw std::logic_error("admissible pair maps to a non-critical cell " +
                               cell_name(cell));
      slot[cell] = {static_cast<int>(q) + 1, static_cast<int>(k)};
      cells.push_back(cell);
      level.push_back(BasisElement{subset_lcm(cell), by_q[q][k]});
    }
    cells_by_level.push_back(std::move(cells));
    Q.levels.push_back(std::move(level));
  }
  if (critical_.size() != slot.size())
    throw std::logic_error("critical cells and admissible pairs do not biject");

  std::vector<DiffEntry> aug;
  for (std::size_t k = 0; k < cells_by_level[0].size(); ++k)
    aug.push_back(DiffEntry{0, static_cast<int>(k), 1,
                            subset_lcm(cells_by_level[0][k])});
  Q.diffs.push_back(std::move(aug));

  for (std::size_t q = 1; q < cells_by_level.size(); ++q) {
    std::vector<DiffEntry> diff;
    for (std::size_t c = 0; c < cells_by_level[q].size(); ++c) {
      CellMask sigma = cells_by_level[q][c];
      Monomial sigma_lcm = subset_lcm(sigma);
      // Facet terms: dropping a non-top member keeps the cell critical.
      std::vector<int> members = member_list(sigma);
      for (std::size_t r = 1; r < members.size(); ++r) {
        CellMask facet = sigma ^ (CellMask{1} << members[r - 1]);
        auto [lvl, row] = slot.at(facet);
        if (lvl != static_cast<int>(q))
          throw std::logic_error("facet lands on the wrong level");
        diff.push_back(DiffEntry{row, static_cast<int>(c), r % 2 == 0 ? 1 : -1,
                                 div_exact(sigma_lcm, subset_lcm(facet))});
      }
      // Gradient-path terms from sigma minus its top generator.
      int qq = std::popcount(sigma) - 1;
      for (CellMask tau : cells_by_level[q - 1]) {
        auto paths = gradient_paths(sigma, tau);
        if (paths.empty()) continue;
        int msum = 0;
        for (const auto& p : paths) msum += path_sign(p);
        int coeff = -(qq % 2 == 0 ? 1 : -1) * msum;
        if (coeff == 0) continue;
        auto [lvl, row] = slot.at(tau);
        (void)lvl;
        diff.push_back(DiffEntry{row, static_cast<int>(c), coeff,
                                 div_exact(sigma_lcm, subset_lcm(tau))});
      }
    }
    Q.diffs.push_back(std::move(diff));
  }
  return Q;
}

FacePosetReport MorseAnalysis::check_face_poset() const {
  FacePosetReport report;
  report.f_vector = f_vector();
  FreeComplex Q = build_q_complex();

  // Incidence coefficients between critical cells, accumulated per slot.
  std::vector<std::map<std::pair<int, int>, int>> incidence(Q.diffs.size());
  for (std::size_t q = 1; q < Q.diffs.size(); ++q)
    for (const DiffEntry& e : Q.diffs[q]) incidence[q][{e.row, e.col}] += e.sign;

  report.incidence_ok = true;
  for (std::size_t q = 1; q < Q.diffs.size(); ++q)
    for (const auto& [slot, value] : incidence[q])
      if (value < -1 || value > 1) {
        report.incidence_ok = false;
        report.detail = "incidence coefficient " + std::to_string(value);
      }

  report.diamond_ok = true;
  for (std::size_t upper = 2; upper + 1 < Q.levels.size(); ++upper) {
    // Cells of dimension upper-? : level upper+1 vs level upper-1.
    for (std::size_t c = 0; c < Q.levels[upper + 1].size(); ++c) {
      std::vector<int> mids;
      for (const auto& [slot, value] : incidence[upper])
        if (slot.second == static_cast<int>(c) && value != 0) mids.push_back(slot.first);
      for (std::size_t tau = 0; tau < Q.levels[upper - 1].size(); ++tau) {
        int between = 0;
        for (int mid : mids) {
          auto it = incidence[upper - 1].find({static_cast<int>(tau), mid});
          if (it != incidence[upper - 1].end() && it->second != 0) ++between;
        }
        if (between != 0 && between != 2) {
          report.diamond_ok = false;
          report.detail = "found " + std::to_string(between) + " cells between a pair";
        }
      }
    }
  }
  return report;
}

std::string MorseAnalysis::cell_name(CellMask subset) const {
  std::ostringstream os;
  bool first = true;
  for (int g : member_list(subset)) {
    if (!first) os << ',';
    first = false;
    os << g;
  }
  return os.str();
}

std::optional<CellMask> MorseAnalysis::cell_by_name(const std::string& name) const {
  CellMask cell = 0;
  std::istringstream in(name);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      int g = std::stoi(part);
      if (g < 0 || g >= t_) return std::nullopt;
      cell |= CellMask{1} << g;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  return cell ? std::optional<CellMask>(cell) : std::nullopt;
}

}  // namespace bpol
