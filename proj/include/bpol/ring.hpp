// Exact monomial arithmetic over singly and doubly indexed polynomial rings.
#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bpol {

// Describes the ambient polynomial ring: k[x_1..x_n] (single) or the grid
// ring k[x_{i,j} : 1 <= i <= n, 1 <= j <= d].
struct RingSpec {
  enum class Kind { single, grid };
  Kind kind = Kind::single;
  int n = 0;
  int d = 0;  // number of columns; 0 for single rings

  static RingSpec single(int n);
  static RingSpec grid(int n, int d);

  int var_count() const { return kind == Kind::single ? n : n * d; }
  bool operator==(const RingSpec&) const = default;
};

// Variable index. Singly indexed variables carry j == 0; grid variables
// carry j >= 1. Ordered lexicographically by (i, j).
struct Var {
  int i = 0;
  int j = 0;
  auto operator<=>(const Var&) const = default;
};

Var single_var(int i);
Var grid_var(int i, int j);

// Monomial as a sparse exponent vector, doubling as a multidegree.
// Invariant: terms sorted by variable, all stored exponents positive.
// The unit monomial is the empty map.
class Monomial {
 public:
  using Term = std::pair<Var, int>;

  Monomial() = default;
  static Monomial unit() { return Monomial(); }
  static Monomial variable(Var v, int exp = 1);
  // Normalizes: sorts, merges duplicates, drops zero exponents.
  static Monomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_unit() const { return terms_.empty(); }
  int exponent(Var v) const;
  int degree() const;
  bool is_squarefree() const;
  bool single_indexed() const;  // all variables carry j == 0
  bool grid_indexed() const;    // all variables carry j >= 1

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<Term> terms_;
};

Monomial mul(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);
// Throws std::invalid_argument unless b divides a.
Monomial div_exact(const Monomial& a, const Monomial& b);
Monomial lcm_of(const Monomial& a, const Monomial& b);
Monomial lcm_of(std::span<const Monomial> ms);

// Lexicographic order with x_1 > x_2 > ... (grid variables ordered by
// (i, j)): the monomial with the larger exponent at the earliest differing
// variable is the greater one. Total on monomials of any degree.
std::strong_ordering lex_compare(const Monomial& a, const Monomial& b);

struct LexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return lex_compare(a, b) > 0;
  }
};
struct LexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return lex_compare(a, b) < 0;
  }
};

// The expression m = x_{a_1} ... x_{a_e} with a_1 <= ... <= a_e.
// Requires a singly indexed monomial; the unit yields an empty sequence.
std::vector<int> alpha_expression(const Monomial& m);

// Largest / smallest variable index with positive exponent.
// Throw std::invalid_argument on the unit monomial or grid input.
int nu(const Monomial& m);
int mu(const Monomial& m);

// Text syntax: `x1^2*x3*x4`, `x[1,1]*x[3,3]`, `1`. Whitespace ignored.
Monomial parse_monomial(std::string_view text);
std::string to_string(const Monomial& m);

// Checks that every variable of m exists in the ring; throws otherwise.
void require_in_ring(const Monomial& m, const RingSpec& ring);

std::size_t hash_value(const Monomial& m);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return hash_value(m); }
};

}  // namespace bpol
