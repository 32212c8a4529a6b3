// Seeded random Borel ideals for property tests and the acceptance suite.
#pragma once

#include <cstdint>
#include <vector>

#include "bpol/ideal.hpp"

namespace bpol {

struct CorpusOptions {
  int count = 50;
  int min_vars = 2;
  int max_vars = 5;
  int max_degree = 5;
  int max_seeds = 3;
  // Closures with more generators are redrawn, keeping the Taylor-strand
  // oracle tractable.
  int max_gens = 18;
};

// Borel closures of random seed monomials; deterministic in the seed, with
// duplicate ideals skipped.
std::vector<BorelIdeal> generate_corpus(std::uint64_t seed, const CorpusOptions& opts = {});

}  // namespace bpol
