// Discrete Morse machinery on the Taylor simplex of the polarized ideal:
// the canonical acyclic matching, critical cells, gradient paths with
// signs, the induced minimal complex and the face poset of the supporting
// CW complex.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bpol/ideal.hpp"
#include "bpol/resolution.hpp"

namespace bpol {

// Generator subsets are bitmasks over G(I~) listed in the total order
// `sqsubset` (ascending = descending lex on the underlying generators of I,
// so index 0 is the lex-largest generator).
using CellMask = std::uint32_t;

struct MatchingEdge {
  CellMask upper = 0;  // sigma together with the inserted generator
  CellMask lower = 0;
  int added = 0;       // index of the inserted generator
};

struct MatchingReport {
  bool matching_ok = false;
  bool acyclic = false;
  std::size_t edge_count = 0;
  std::string detail;
  bool ok() const { return matching_ok && acyclic; }
};

struct FacePosetReport {
  std::vector<int> f_vector;  // cell counts by dimension
  bool diamond_ok = false;    // exactly two cells between any incident
                              // pair two dimensions apart
  bool incidence_ok = false;  // all incidence coefficients in {-1, 0, 1}
  std::string detail;
  bool ok() const { return diamond_ok && incidence_ok; }
};

class MorseAnalysis {
 public:
  // Enumerates 2^t subsets; refuses more than max_gens generators.
  explicit MorseAnalysis(const BorelIdeal& I, int max_gens = 16);

  int gen_count() const { return t_; }
  const BorelIdeal& ideal() const { return ideal_; }
  // Generators of I in sqsubset-ascending order, and their polarizations.
  const std::vector<Monomial>& generators() const { return gens_m_; }
  const std::vector<Monomial>& polarized_generators() const { return gens_t_; }

  Monomial subset_lcm(CellMask subset) const;

  // The order prec_sigma on all generator indices: the divisor brackets of
  // the subset's top generator first, then the rest, both sqsubset-sorted.
  std::vector<int> prec_order(CellMask subset) const;

  // (u, n_sigma); absent when no admissible l exists (u = -infinity).
  std::optional<std::pair<int, int>> u_and_n(CellMask subset) const;

  const std::vector<MatchingEdge>& matching() const { return edges_; }
  MatchingReport verify_matching() const;

  bool is_critical(CellMask subset) const;
  // Critical subsets ordered to match the admissible-pair levels of the
  // companion complex (by q, then generator order, then position sets).
  const std::vector<CellMask>& critical_cells() const { return critical_; }
  std::vector<int> f_vector() const;

  // The bijection with admissible pairs (throws std::logic_error if the
  // given subset does not decompose as brackets of its top generator).
  AdmissiblePair pair_of_cell(CellMask subset) const;
  CellMask cell_of_pair(const AdmissiblePair& pair) const;

  // All directed paths from sigma minus its top generator down to tau in
  // the matching-reversed face digraph. Both cells must be critical with
  // #tau = #sigma - 1.
  std::vector<std::vector<CellMask>> gradient_paths(CellMask sigma, CellMask tau) const;
  int path_sign(const std::vector<CellMask>& path) const;

  // The induced complex: facet terms plus gradient-path terms, with basis
  // aligned to the admissible-pair complex for entrywise comparison.
  FreeComplex build_q_complex() const;

  FacePosetReport check_face_poset() const;

  std::string cell_name(CellMask subset) const;  // sorted index list "0,2,5"
  std::optional<CellMask> cell_by_name(const std::string& name) const;

 private:
  std::vector<CellMask> out_edges(CellMask v) const;
  std::vector<int> bracket_rows(CellMask subset) const;

  BorelIdeal ideal_;
  int t_ = 0;
  std::vector<Monomial> gens_m_;
  std::vector<Monomial> gens_t_;
  std::vector<std::vector<int>> bracket_;   // bracket_[g][i-1] for 1 <= i < nu
  // Polarized generators are squarefree over the n x d grid, so subsets and
  // their lcms pack into grid bitmasks.
  std::vector<std::uint32_t> gen_bits_;
  std::vector<std::uint32_t> lcm_bits_;     // per subset
  std::vector<int> matched_lower_;          // inserted generator or -1
  std::vector<MatchingEdge> edges_;
  std::vector<char> occurrences_;           // edge incidences per subset
  std::vector<CellMask> critical_;
};

}  // namespace bpol
