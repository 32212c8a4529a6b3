// Monomial ideals, Borel-fixed recognition and closure, the Eliahou-Kervaire
// decomposition, exchange moves, the lex filtration and monomial colon ideals.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bpol/ring.hpp"

namespace bpol {

// A monomial ideal given by its minimal generators, kept in descending
// lexicographic order. The zero ideal has no generators; the unit ideal is
// represented by the single generator 1 (it only arises from colon
// computations, never from parsed input).
struct MonomialIdeal {
  RingSpec ring;
  std::vector<Monomial> gens;
};

// Minimalizes, sorts descending lex and validates the generators against
// the ring. Throws std::invalid_argument on a unit generator.
MonomialIdeal make_ideal(RingSpec ring, std::vector<Monomial> gens);

std::vector<Monomial> minimal_generators(std::vector<Monomial> gens);

bool is_zero_ideal(const MonomialIdeal& I);
bool is_unit_ideal(const MonomialIdeal& I);
// Membership: divisible by some generator.
bool contains(const MonomialIdeal& I, const Monomial& m);

int max_generator_degree(const MonomialIdeal& I);

// m in G(I), x_i | m and j < i imply (x_j/x_i) m in I.
bool is_borel_fixed(const MonomialIdeal& I);
// Weaker: only the exchange away from nu(m) is required.
bool is_stable(const MonomialIdeal& I);
// Squarefree analogue; throws on a non-squarefree generator.
bool is_sq_strongly_stable(const MonomialIdeal& I);

// A Borel fixed ideal together with the degree bound carried by every
// construction downstream (deg m <= maxdeg for all generators).
struct BorelIdeal {
  MonomialIdeal ideal;
  int maxdeg = 0;

  const RingSpec& ring() const { return ideal.ring; }
  const std::vector<Monomial>& gens() const { return ideal.gens; }
};

// Validates and wraps; throws std::invalid_argument if not Borel fixed.
BorelIdeal make_borel(MonomialIdeal I);

// Smallest Borel fixed ideal containing the seeds (worklist saturation
// under all exchange moves, then minimalization).
BorelIdeal borel_closure(RingSpec ring, const std::vector<Monomial>& seeds);

// g(m): the unique minimal generator m_1 in the factorization m = m_1 m_2
// with nu(m_1) <= mu(m_2); found as the unique prefix of the alpha
// expression lying in G(I). Throws if m lies outside the ideal.
Monomial ek_generator(const MonomialIdeal& I, const Monomial& m);

// The exchange move (x_i/x_k) m with k the smallest support index above i.
// Requires 1 <= i < nu(m).
Monomial borel_move(const Monomial& m, int i);

// m_<i> = g(borel_move(m, i)) for i < nu(m), and m itself otherwise.
// Requires m in G(I).
Monomial bracket_move(const BorelIdeal& I, const Monomial& m, int i);

// Prefix ideals (m_1 .. m_r) of the descending-lex generator order; every
// prefix is certified Borel fixed (std::logic_error on failure).
std::vector<MonomialIdeal> lex_filtration(const BorelIdeal& I);

// (J : m), minimalized. The unit ideal results when m lies in J.
MonomialIdeal colon_ideal(const MonomialIdeal& J, const Monomial& m);

// True when every prefix colon (m_1..m_{k-1}) : m_k along the given order
// is generated by variables. The order must be a permutation of G(J).
bool has_linear_quotients(const MonomialIdeal& J, const std::vector<Monomial>& order);

// Text format: one monomial per line, '#' comments, blank lines ignored.
// The ring is inferred (n = max row index, d = max column index) unless
// given explicitly.
MonomialIdeal parse_ideal_text(const std::string& text,
                               std::optional<RingSpec> ring = std::nullopt);
std::string ideal_to_text(const MonomialIdeal& I);

}  // namespace bpol
