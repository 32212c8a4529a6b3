#include "bpol/ideal.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace bpol {

std::vector<Monomial> minimal_generators(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const Monomial& m : gens) {
    bool redundant = false;
    for (const Monomial& g : out)
      if (divides(g, m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), LexGreater{});
  return out;
}

MonomialIdeal make_ideal(RingSpec ring, std::vector<Monomial> gens) {
  for (const Monomial& m : gens) {
    if (m.is_unit()) throw std::invalid_argument("unit generator in ideal input");
    require_in_ring(m, ring);
  }
  return MonomialIdeal{ring, minimal_generators(std::move(gens))};
}

bool is_zero_ideal(const MonomialIdeal& I) { return I.gens.empty(); }

bool is_unit_ideal(const MonomialIdeal& I) {
  return I.gens.size() == 1 && I.gens.front().is_unit();
}

bool contains(const MonomialIdeal& I, const Monomial& m) {
  for (const Monomial& g : I.gens)
    if (divides(g, m)) return true;
  return false;
}

int max_generator_degree(const MonomialIdeal& I) {
  int d = 0;
  for (const Monomial& g : I.gens) d = std::max(d, g.degree());
  return d;
}

bool is_borel_fixed(const MonomialIdeal& I) {
  for (const Monomial& m : I.gens) {
    if (!m.single_indexed()) throw std::invalid_argument("Borel test needs a single ring");
    for (const auto& [v, e] : m.terms()) {
      (void)e;
      for (int j = 1; j < v.i; ++j) {
        Monomial moved = mul(div_exact(m, Monomial::variable(v)),
                             Monomial::variable(single_var(j)));
        if (!contains(I, moved)) return false;
      }
    }
  }
  return true;
}

bool is_stable(const MonomialIdeal& I) {
  for (const Monomial& m : I.gens) {
    int top = nu(m);
    for (int j = 1; j < top; ++j) {
      Monomial moved = mul(div_exact(m, Monomial::variable(single_var(top))),
                           Monomial::variable(single_var(j)));
      if (!contains(I, moved)) return false;
    }
  }
  return true;
}

bool is_sq_strongly_stable(const MonomialIdeal& I) {
  for (const Monomial& m : I.gens) {
    if (!m.is_squarefree())
      throw std::invalid_argument("squarefree strong stability needs squarefree generators");
    for (const auto& [v, e] : m.terms()) {
      (void)e;
      for (int j = 1; j < v.i; ++j) {
        Var w = single_var(j);
        if (m.exponent(w) > 0) continue;
        Monomial moved = mul(div_exact(m, Monomial::variable(v)), Monomial::variable(w));
        if (!contains(I, moved)) return false;
      }
    }
  }
  return true;
}

BorelIdeal make_borel(MonomialIdeal I) {
  if (is_zero_ideal(I)) throw std::invalid_argument("the zero ideal is not Borel fixed here");
  if (!is_borel_fixed(I))
    throw std::invalid_argument("ideal is not Borel fixed: " + ideal_to_text(I));
  int d = max_generator_degree(I);
  return BorelIdeal{std::move(I), d};
}

BorelIdeal borel_closure(RingSpec ring, const std::vector<Monomial>& seeds) {
  if (seeds.empty()) throw std::invalid_argument("borel closure needs at least one seed");
  std::unordered_set<Monomial, MonomialHash> seen;
  std::vector<Monomial> work;
  for (const Monomial& s : seeds) {
    if (s.is_unit()) throw std::invalid_argument("unit seed in borel closure");
    require_in_ring(s, ring);
    if (!s.single_indexed()) throw std::invalid_argument("borel closure needs a single ring");
    work.push_back(s);
  }
  while (!work.empty()) {
    Monomial m = std::move(work.back());
    work.pop_back();
    if (!seen.insert(m).second) continue;
    for (const auto& [v, e] : m.terms()) {
      (void)e;
      for (int j = 1; j < v.i; ++j) {
        work.push_back(mul(div_exact(m, Monomial::variable(v)),
                           Monomial::variable(single_var(j))));
      }
    }
  }
  MonomialIdeal I =
      make_ideal(ring, std::vector<Monomial>(seen.begin(), seen.end()));
  if (!is_borel_fixed(I)) throw std::logic_error("borel closure failed to saturate");
  int d = max_generator_degree(I);
  return BorelIdeal{std::move(I), d};
}

Monomial ek_generator(const MonomialIdeal& I, const Monomial& m) {
  std::unordered_set<Monomial, MonomialHash> gens(I.gens.begin(), I.gens.end());
  std::vector<int> alpha = alpha_expression(m);
  Monomial prefix;
  std::optional<Monomial> found;
  for (int a : alpha) {
    prefix = mul(prefix, Monomial::variable(single_var(a)));
    if (gens.count(prefix)) {
      if (found) throw std::logic_error("two generator prefixes in " + to_string(m));
      found = prefix;
    }
  }
  if (!found)
    throw std::invalid_argument("no Eliahou-Kervaire factor: " + to_string(m) +
                                " is outside the ideal (or the ideal is not stable)");
  return *found;
}

Monomial borel_move(const Monomial& m, int i) {
  if (m.is_unit() || i < 1 || i >= nu(m))
    throw std::invalid_argument("exchange move needs 1 <= i < nu(m)");
  int k = 0;
  for (const auto& [v, e] : m.terms()) {
    (void)e;
    if (v.i > i) {
      k = v.i;
      break;
    }
  }
  return mul(div_exact(m, Monomial::variable(single_var(k))),
             Monomial::variable(single_var(i)));
}

Monomial bracket_move(const BorelIdeal& I, const Monomial& m, int i) {
  if (std::find(I.gens().begin(), I.gens().end(), m) == I.gens().end())
    throw std::invalid_argument(to_string(m) + " is not a minimal generator");
  if (i >= nu(m)) return m;
  return ek_generator(I.ideal, borel_move(m, i));
}

std::vector<MonomialIdeal> lex_filtration(const BorelIdeal& I) {
  std::vector<MonomialIdeal> out;
  std::vector<Monomial> prefix;
  for (const Monomial& g : I.gens()) {
    prefix.push_back(g);
    MonomialIdeal J{I.ring(), prefix};
    if (!is_borel_fixed(J))
      throw std::logic_error("lex filtration prefix is not Borel fixed at " + to_string(g));
    out.push_back(std::move(J));
  }
  return out;
}

MonomialIdeal colon_ideal(const MonomialIdeal& J, const Monomial& m) {
  std::vector<Monomial> quotients;
  quotients.reserve(J.gens.size());
  for (const Monomial& g : J.gens)
    quotients.push_back(div_exact(lcm_of(g, m), m));
  return MonomialIdeal{J.ring, minimal_generators(std::move(quotients))};
}

bool has_linear_quotients(const MonomialIdeal& J, const std::vector<Monomial>& order) {
  std::vector<Monomial> a = J.gens, b = order;
  std::sort(a.begin(), a.end(), LexGreater{});
  std::sort(b.begin(), b.end(), LexGreater{});
  if (a != b) throw std::invalid_argument("order is not a permutation of the generators");
  std::vector<Monomial> prefix;
  for (const Monomial& m : order) {
    if (!prefix.empty()) {
      MonomialIdeal colon = colon_ideal(MonomialIdeal{J.ring, prefix}, m);
      for (const Monomial& g : colon.gens)
        if (g.degree() != 1) return false;
    }
    prefix.push_back(m);
  }
  return true;
}

MonomialIdeal parse_ideal_text(const std::string& text, std::optional<RingSpec> ring) {
  std::vector<Monomial> gens;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    gens.push_back(parse_monomial(line));
  }
  if (ring) return make_ideal(*ring, std::move(gens));
  // Infer the ring from the monomials.
  int n = 1, d = 0;
  bool grid = false, single = false;
  for (const Monomial& m : gens)
    for (const auto& [v, e] : m.terms()) {
      (void)e;
      n = std::max(n, v.i);
      d = std::max(d, v.j);
      (v.j == 0 ? single : grid) = true;
    }
  if (grid && single)
    throw std::invalid_argument("mixed single and grid variables in ideal input");
  RingSpec spec = grid ? RingSpec::grid(n, d) : RingSpec::single(n);
  return make_ideal(spec, std::move(gens));
}

std::string ideal_to_text(const MonomialIdeal& I) {
  std::ostringstream os;
  for (const Monomial& g : I.gens) os << to_string(g) << '\n';
  return os.str();
}

}  // namespace bpol
