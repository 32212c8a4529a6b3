// Admissible pairs, the graded free complex with the two-part differential,
// its specializations, the removable-position combinatorics, the pair poset
// and stair diagrams.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bpol/ideal.hpp"
#include "bpol/polarize.hpp"
#include "bpol/ring.hpp"

namespace bpol {

// A generator m of I together with a staircase-compatible position set
// F = {(i_1,j_1) < ... < (i_q,j_q)}: the rows satisfy i_1 < ... < i_q < nu(m)
// and every column is forced, j_r = 1 + sum_{l <= i_r} a_l.
struct AdmissiblePair {
  Monomial m;   // generator in the single ring
  Monomial mt;  // its polarization
  std::vector<std::pair<int, int>> positions;

  int q() const { return static_cast<int>(positions.size()); }
  bool operator==(const AdmissiblePair&) const = default;
};

// Checks conditions (a) and (b) above for a candidate position set.
bool is_admissible(const Monomial& m, const std::vector<std::pair<int, int>>& positions);

// Builds the pair from the row set alone (columns are forced). Validates
// that m is a minimal generator and that the rows satisfy condition (a).
AdmissiblePair make_admissible_pair(const BorelIdeal& I, const Monomial& m,
                                    const std::vector<int>& rows);

// All admissible pairs grouped by q, each group ordered by (m descending
// lex, position sequence lex). Group q has sum_m C(nu(m)-1, q) members.
std::vector<std::vector<AdmissiblePair>> enumerate_admissible(const BorelIdeal& I);

// B(F, m~): the 1-based indices r for which dropping (i_r, j_r) and passing
// to the bracket generator stays admissible. Always contains q.
std::vector<int> b_set(const BorelIdeal& I, const AdmissiblePair& pair);

struct BasisElement {
  Monomial degree;
  std::optional<AdmissiblePair> pair;
};

struct DiffEntry {
  int row = 0;   // target basis index in the level below
  int col = 0;   // source basis index
  int sign = 1;  // +1 or -1
  Monomial mono;
};

// Chain complex of graded free modules with signed-monomial matrices.
// levels[0] is the rank-one module in degree 0; diffs[q] maps level q+1
// to level q.
struct FreeComplex {
  RingSpec ring;
  std::vector<std::vector<BasisElement>> levels;
  std::vector<std::vector<DiffEntry>> diffs;
};

// The minimal free complex on admissible pairs: level q+1 has basis
// e(F, m~) with #F = q, and
//   d e(F, m~) = sum_r (-1)^r x_{i_r,j_r} e(F_r, m~)
//              - sum_{r in B} (-1)^r (x_{i_r,j_r} m~ / m~_<i_r>) e(F_r, m~_<i_r>),
//   d e({}, m~) = m~.
FreeComplex build_p_complex(const BorelIdeal& I);

// d = delta - delta_prime: delta keeps the generator, delta_prime carries
// the B(F, m~) terms (and the augmentation level: delta = 0, delta' = -m~).
struct SplitDifferential {
  std::vector<std::vector<DiffEntry>> delta;
  std::vector<std::vector<DiffEntry>> delta_prime;
};
SplitDifferential split_differential(const FreeComplex& P);

// Applies the ring map to every entry monomial and basis degree.
FreeComplex specialize_complex(const FreeComplex& P, const SpecializationMap& phi);

// Every entry monomial equals deg(source)/deg(target).
bool grading_consistent(const FreeComplex& P);
// Symbolic check that consecutive differentials compose to zero.
bool composes_to_zero(const FreeComplex& P);
// Number of entries whose monomial is a unit (minimality means zero).
int unit_entry_count(const FreeComplex& P);
std::vector<int> rank_vector(const FreeComplex& P);  // ranks of levels 1, 2, ...

// x(F, m~) = m~ * prod x_{i_r, j_r}; injective on admissible pairs.
Monomial x_of(const AdmissiblePair& pair);

// All grid positions of x(F, m~) in the columns touched by F, and the same
// set partitioned by column (each block has at least two members).
std::vector<std::pair<int, int>> removable_positions(const AdmissiblePair& pair);
std::vector<std::vector<std::pair<int, int>>> removable_blocks(const AdmissiblePair& pair);

// The admissible pairs of I ordered by iterated differential support;
// elements carry their level (q) and the cover lists read off build_p.
struct PairPoset {
  std::vector<AdmissiblePair> elements;
  std::vector<int> level_of;                // q of each element
  std::vector<std::vector<int>> covers;     // element -> covered elements
  std::vector<std::vector<int>> order_ideal_of;  // reflexive-transitive down-sets

  int size() const { return static_cast<int>(elements.size()); }
};
PairPoset admissible_pair_poset(const BorelIdeal& I);

// Text grid of the pair: rows 1..nu(m), columns 1..deg(m); 'B' marks the
// support of m~, 'W' the positions of F, '.' the rest.
std::vector<std::string> stair_diagram(const AdmissiblePair& pair);

}  // namespace bpol
