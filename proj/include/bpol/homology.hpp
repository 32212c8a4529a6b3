// Independent certification by exact sparse linear algebra: multigraded
// strand exactness, the Taylor-complex Betti oracle, polarization
// certificates and lcm-lattices.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "bpol/ideal.hpp"
#include "bpol/resolution.hpp"

namespace bpol {

// Coefficient field: GF(p) with p = 32003 by default, or exact rationals.
struct FieldSpec {
  enum class Kind { gf, rationals };
  Kind kind = Kind::gf;
  std::int64_t prime = 32003;

  static FieldSpec gf(std::int64_t p = 32003) { return {Kind::gf, p}; }
  static FieldSpec rationals() { return {Kind::rationals, 0}; }
};

// Dimensions of the homology of one multigraded strand.
struct StrandFailure {
  int level = 0;
  Monomial degree;
  int homology_dim = 0;
};

struct CertificationReport {
  bool grading_ok = false;
  bool d2_ok = false;
  bool exact = false;       // H_q = 0 for q >= 1 at every lattice degree
  bool h0_ok = false;       // H_0 matches membership in the ideal
  bool minimal = false;     // no unit entries
  std::size_t lattice_size = 0;
  std::vector<StrandFailure> failures;

  bool resolution_ok() const { return grading_ok && d2_ok && exact && h0_ok; }
  bool ok() const { return resolution_ok() && minimal; }
  std::string summary() const;
};

// The finite vector-space complex cut out of P at one multidegree: basis
// elements whose degree divides it, with the sign matrices over the field.
struct StrandSlice {
  std::vector<int> dims;   // per level
  std::vector<int> ranks;  // ranks[q] = rank of the map out of level q
  std::vector<int> homology() const;
};
StrandSlice strand(const FreeComplex& P, const Monomial& degree,
                   const FieldSpec& field = {});

// Certifies that P resolves (ring of J)/J: checks grading, the chain
// condition, strand exactness at every join of basis degrees, the correct
// H_0, and minimality.
CertificationReport certify_resolution(const FreeComplex& P, const MonomialIdeal& J,
                                       const FieldSpec& field = {});

// The Taylor complex on the generators of J: level q has the q-subsets
// with degree lcm and the alternating-sign simplicial differential.
FreeComplex taylor_complex(const MonomialIdeal& J);

// Multigraded Betti numbers of an ideal: (q, multidegree) -> rank.
struct BettiTable {
  std::vector<std::tuple<int, Monomial, int>> entries;

  void add(int q, const Monomial& degree, int count);
  void normalize();
  std::map<std::pair<int, int>, int> z_graded() const;  // (q, total degree)
  std::vector<int> ranks() const;                       // summed over degrees
  bool operator==(const BettiTable&) const = default;
  std::string to_text() const;
};

// Tor computed from Taylor strands at every lcm-lattice degree with the
// positive-degree entries killed. Guarded at 22 generators.
BettiTable betti_oracle(const MonomialIdeal& J, const FieldSpec& field = {},
                        int max_gens = 22);

// Rank table of a built complex (level q+1 counts as homological degree q).
BettiTable betti_from_complex(const FreeComplex& P);

// Polarization certificate: Z-graded Betti tables of I and of bpol(I) agree.
bool betti_equal(const BorelIdeal& I, const FieldSpec& field = {});

// Joins of all nonempty generator subsets, ordered descending lex.
struct LcmLattice {
  std::vector<Monomial> elements;
  bool contains(const Monomial& m) const;
  std::size_t size() const { return elements.size(); }
};
LcmLattice lcm_lattice(const MonomialIdeal& J);

// Exact rank primitives (the dense one is the textbook cross-check).
int dense_rank(std::vector<std::vector<long long>> mat, const FieldSpec& field);
int sparse_rank(int rows, int cols,
                const std::vector<std::tuple<int, int, long long>>& entries,
                const FieldSpec& field);

}  // namespace bpol
