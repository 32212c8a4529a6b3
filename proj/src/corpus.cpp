#include "bpol/corpus.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace bpol {

std::vector<BorelIdeal> generate_corpus(std::uint64_t seed, const CorpusOptions& opts) {
  std::mt19937_64 rng(seed);
  std::vector<BorelIdeal> corpus;
  std::set<std::string> seen;
  int attempts = 0;
  while (static_cast<int>(corpus.size()) < opts.count) {
    if (++attempts > opts.count * 200)
      throw std::runtime_error("corpus generation stalled; relax the options");
    int n = std::uniform_int_distribution<int>(opts.min_vars, opts.max_vars)(rng);
    int seeds = std::uniform_int_distribution<int>(1, opts.max_seeds)(rng);
    std::vector<Monomial> monomials;
    for (int s = 0; s < seeds; ++s) {
      int degree = std::uniform_int_distribution<int>(1, opts.max_degree)(rng);
      std::vector<Monomial::Term> terms;
      for (int k = 0; k < degree; ++k) {
        int i = std::uniform_int_distribution<int>(1, n)(rng);
        terms.push_back({single_var(i), 1});
      }
      monomials.push_back(Monomial::from_terms(std::move(terms)));
    }
    BorelIdeal I = borel_closure(RingSpec::single(n), monomials);
    if (static_cast<int>(I.gens().size()) > opts.max_gens) continue;
    std::string key = std::to_string(n) + "|" + ideal_to_text(I.ideal);
    if (!seen.insert(key).second) continue;
    corpus.push_back(std::move(I));
  }
  return corpus;
}

}  // namespace bpol
