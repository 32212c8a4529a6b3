#include "bpol/polarize.hpp"

#include <stdexcept>

namespace bpol {

long long GammaSequence::at(std::size_t i) const {
  if (a.empty()) return 0;
  return i < a.size() ? a[i] : a.back();
}

GammaSequence make_gamma(std::vector<long long> a) {
  if (a.empty()) a.push_back(0);
  if (a.front() != 0) throw std::invalid_argument("gamma sequence must start with a_0 = 0");
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i] < a[i - 1])
      throw std::invalid_argument("gamma sequence must be non-decreasing");
  return GammaSequence{std::move(a)};
}

GammaSequence zero_gamma() { return GammaSequence{{0}}; }

GammaSequence squarefree_gamma(int len) {
  GammaSequence g;
  for (long long i = 0; i < std::max(len, 1); ++i) g.a.push_back(i);
  return g;
}

Monomial bpol_monomial(const Monomial& m, int d) {
  std::vector<int> alpha = alpha_expression(m);
  if (static_cast<int>(alpha.size()) > d)
    throw std::invalid_argument("degree of " + to_string(m) +
                                " exceeds the column bound " + std::to_string(d));
  std::vector<Monomial::Term> terms;
  terms.reserve(alpha.size());
  for (std::size_t pos = 0; pos < alpha.size(); ++pos)
    terms.push_back({grid_var(alpha[pos], static_cast<int>(pos) + 1), 1});
  return Monomial::from_terms(std::move(terms));
}

MonomialIdeal bpol_ideal(const BorelIdeal& I) { return bpol_ideal(I.ideal, I.maxdeg); }

MonomialIdeal bpol_ideal(const MonomialIdeal& I, int d) {
  if (I.ring.kind != RingSpec::Kind::single)
    throw std::invalid_argument("polarization input must live in a single ring");
  if (max_generator_degree(I) > d)
    throw std::invalid_argument("column bound below the maximal generator degree");
  std::vector<Monomial> gens;
  gens.reserve(I.gens.size());
  for (const Monomial& g : I.gens) gens.push_back(bpol_monomial(g, d));
  return make_ideal(RingSpec::grid(I.ring.n, d), std::move(gens));
}

Monomial sq_monomial(const Monomial& m) {
  return gamma_monomial(m, squarefree_gamma(m.degree()));
}

MonomialIdeal sq_ideal(const MonomialIdeal& I) {
  if (I.ring.kind != RingSpec::Kind::single)
    throw std::invalid_argument("squarefree operator input must live in a single ring");
  int d = max_generator_degree(I);
  std::vector<Monomial> gens;
  for (const Monomial& g : I.gens) gens.push_back(sq_monomial(g));
  return make_ideal(RingSpec::single(I.ring.n + std::max(d - 1, 0)), std::move(gens));
}

Monomial gamma_monomial(const Monomial& m, const GammaSequence& a) {
  std::vector<int> alpha = alpha_expression(m);
  std::vector<Monomial::Term> terms;
  terms.reserve(alpha.size());
  for (std::size_t pos = 0; pos < alpha.size(); ++pos)
    terms.push_back({single_var(alpha[pos] + static_cast<int>(a.at(pos))), 1});
  return Monomial::from_terms(std::move(terms));
}

MonomialIdeal gamma_ideal(const MonomialIdeal& I, const GammaSequence& a) {
  if (I.ring.kind != RingSpec::Kind::single)
    throw std::invalid_argument("gamma operator input must live in a single ring");
  int d = max_generator_degree(I);
  std::vector<Monomial> gens;
  for (const Monomial& g : I.gens) gens.push_back(gamma_monomial(g, a));
  int N = I.ring.n + static_cast<int>(a.at(std::max(d - 1, 0)));
  return make_ideal(RingSpec::single(N), std::move(gens));
}

SpecializationMap theta_map(const RingSpec& grid) {
  return theta_a_map(grid, zero_gamma());
}

SpecializationMap theta_a_map(const RingSpec& grid, GammaSequence a) {
  if (grid.kind != RingSpec::Kind::grid)
    throw std::invalid_argument("specialization source must be a grid ring");
  int N = grid.n + static_cast<int>(a.at(grid.d - 1));
  SpecializationMap phi;
  phi.kind = a.a.size() <= 1 ? SpecializationMap::Kind::theta : SpecializationMap::Kind::theta_a;
  phi.a = std::move(a);
  phi.source = grid;
  phi.target = RingSpec::single(N);
  return phi;
}

SpecializationMap theta_prime_map(const RingSpec& grid) {
  return theta_a_map(grid, squarefree_gamma(grid.d));
}

Monomial specialize(const Monomial& m, const SpecializationMap& phi) {
  std::vector<Monomial::Term> terms;
  for (const auto& [v, e] : m.terms()) {
    if (v.j < 1) throw std::invalid_argument("specialization needs grid variables");
    terms.push_back({single_var(v.i + static_cast<int>(phi.a.at(v.j - 1))), e});
  }
  return Monomial::from_terms(std::move(terms));
}

}  // namespace bpol
