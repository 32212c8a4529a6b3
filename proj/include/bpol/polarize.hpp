// The alternative polarization, the squarefree and gamma shift operators,
// and the specialization maps collapsing the grid ring back to S or T.
#pragma once

#include <vector>

#include "bpol/ideal.hpp"
#include "bpol/ring.hpp"

namespace bpol {

// Non-decreasing shift offsets a_0 = 0 <= a_1 <= a_2 <= ...
struct GammaSequence {
  std::vector<long long> a;

  long long at(std::size_t i) const;  // a_i, extending by the last value
};

GammaSequence make_gamma(std::vector<long long> a);
GammaSequence zero_gamma();                 // identity operator
GammaSequence squarefree_gamma(int len);    // a_i = i for i < len

// prod x_{alpha_i} |-> prod x_{alpha_i, i} in the grid ring with d columns.
// Requires deg(m) <= d.
Monomial bpol_monomial(const Monomial& m, int d);

// Generator-wise polarization into the n x d grid ring, d = maxdeg.
MonomialIdeal bpol_ideal(const BorelIdeal& I);
// General version (also used for stable non-Borel inputs, where the result
// need not be a polarization).
MonomialIdeal bpol_ideal(const MonomialIdeal& I, int d);

// prod x_{alpha_i} |-> prod x_{alpha_i + i - 1} in T = k[x_1..x_N].
Monomial sq_monomial(const Monomial& m);
MonomialIdeal sq_ideal(const MonomialIdeal& I);  // N = n + maxdeg - 1

// prod x_{alpha_i} |-> prod x_{alpha_i + a_{i-1}}.
Monomial gamma_monomial(const Monomial& m, const GammaSequence& a);
MonomialIdeal gamma_ideal(const MonomialIdeal& I, const GammaSequence& a);

// Ring map collapsing the grid: x_{i,j} |-> x_{i + a_{j-1}} (theta is the
// case a = 0, landing in S itself).
struct SpecializationMap {
  enum class Kind { theta, theta_a };
  Kind kind = Kind::theta;
  GammaSequence a;
  RingSpec source;  // grid ring
  RingSpec target;  // single ring with n + a_{d-1} variables
};

SpecializationMap theta_map(const RingSpec& grid);
SpecializationMap theta_a_map(const RingSpec& grid, GammaSequence a);
SpecializationMap theta_prime_map(const RingSpec& grid);  // a_i = i

// Image monomial; exponents accumulate.
Monomial specialize(const Monomial& m, const SpecializationMap& phi);

}  // namespace bpol
