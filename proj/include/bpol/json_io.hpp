// Structured (JSON) serialization of ideals, complexes and reports.
#pragma once

#include <string>

#include "bpol/homology.hpp"
#include "bpol/ideal.hpp"
#include "bpol/resolution.hpp"

namespace bpol {

std::string ring_to_json(const RingSpec& ring);

std::string ideal_to_json(const MonomialIdeal& I);
MonomialIdeal ideal_from_json(const std::string& text);

// Self-describing complex document: ring, levels (id, degree, pair) and
// differentials (row, col, sign, monomial), plus the ideal it claims to
// resolve.
std::string complex_to_json(const FreeComplex& P, const MonomialIdeal& resolves,
                            const std::string& config_echo = "");
struct ComplexDocument {
  FreeComplex complex;
  MonomialIdeal resolves;
};
ComplexDocument complex_from_json(const std::string& text);

std::string betti_to_json(const BettiTable& table);

}  // namespace bpol
