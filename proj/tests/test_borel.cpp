#include <doctest.h>

#include <random>
#include <stdexcept>

#include "bpol/corpus.hpp"
#include "bpol/ideal.hpp"

using namespace bpol;

namespace {

Monomial m(const char* text) { return parse_monomial(text); }

MonomialIdeal ideal(int n, std::initializer_list<const char*> gens) {
  std::vector<Monomial> ms;
  for (const char* g : gens) ms.push_back(parse_monomial(g));
  return make_ideal(RingSpec::single(n), std::move(ms));
}

// Independent closure oracle for a same-degree seed: a monomial of equal
// degree lies in the closure iff its alpha expression is componentwise at
// most the seed's.
std::vector<Monomial> dominance_closure(const Monomial& seed, int n) {
  std::vector<int> alpha = alpha_expression(seed);
  std::vector<Monomial> out;
  std::vector<int> cand(alpha.size(), 1);
  while (true) {
    bool sorted = true, below = true;
    for (std::size_t k = 0; k < cand.size(); ++k) {
      if (k && cand[k] < cand[k - 1]) sorted = false;
      if (cand[k] > alpha[k]) below = false;
    }
    if (sorted && below) {
      Monomial b;
      for (int i : cand) b = mul(b, Monomial::variable(single_var(i)));
      out.push_back(b);
    }
    // odometer over {1..n}^e
    std::size_t k = 0;
    while (k < cand.size() && cand[k] == n) cand[k++] = 1;
    if (k == cand.size()) break;
    ++cand[k];
  }
  return minimal_generators(out);
}

}  // namespace

TEST_CASE("borel fixed recognition") {
  CHECK(is_borel_fixed(ideal(3, {"x1^2", "x1*x2", "x1*x3", "x2^2", "x2*x3"})));
  CHECK_FALSE(is_borel_fixed(ideal(2, {"x2"})));
  CHECK(is_borel_fixed(ideal(2, {"x1"})));
}

TEST_CASE("stable but not borel") {
  MonomialIdeal J = ideal(3, {"x1^2", "x1*x2", "x2^2", "x2*x3"});
  CHECK(is_stable(J));
  CHECK_FALSE(is_borel_fixed(J));
}

TEST_CASE("squarefree strong stability") {
  CHECK(is_sq_strongly_stable(ideal(2, {"x1*x2"})));
  CHECK_FALSE(is_sq_strongly_stable(ideal(3, {"x2*x3"})));
  CHECK_THROWS_AS(is_sq_strongly_stable(ideal(2, {"x1^2"})), std::invalid_argument);
}

TEST_CASE("borel closure") {
  BorelIdeal I = borel_closure(RingSpec::single(4), {m("x1^2*x3*x4")});
  for (const char* g : {"x1^3*x4", "x1^2*x2*x4", "x1^2*x3^2"})
    CHECK(std::count(I.gens().begin(), I.gens().end(), m(g)) == 1);

  BorelIdeal principal = borel_closure(RingSpec::single(3), {m("x1")});
  CHECK(principal.gens() == std::vector<Monomial>{m("x1")});

  BorelIdeal cubic = borel_closure(RingSpec::single(2), {m("x1*x2^2")});
  CHECK(cubic.gens() == dominance_closure(m("x1*x2^2"), 2));
  CHECK(cubic.gens() == std::vector<Monomial>{m("x1^3"), m("x1^2*x2"), m("x1*x2^2")});

  // Against the dominance oracle on random single seeds.
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    int n = std::uniform_int_distribution<int>(2, 4)(rng);
    int deg = std::uniform_int_distribution<int>(1, 4)(rng);
    std::vector<Monomial::Term> terms;
    for (int k = 0; k < deg; ++k)
      terms.push_back({single_var(std::uniform_int_distribution<int>(1, n)(rng)), 1});
    Monomial seed = Monomial::from_terms(std::move(terms));
    CHECK(borel_closure(RingSpec::single(n), {seed}).gens() == dominance_closure(seed, n));
  }

  // Idempotence.
  for (const BorelIdeal& I2 : generate_corpus(3, {.count = 8})) {
    BorelIdeal again = borel_closure(I2.ring(), I2.gens());
    CHECK(again.gens() == I2.gens());
  }
}

TEST_CASE("eliahou-kervaire factor") {
  BorelIdeal Ip = borel_closure(RingSpec::single(4), {m("x1^2*x3*x4"), m("x1^2*x2")});
  CHECK(ek_generator(Ip.ideal, m("x1^2*x2*x4")) == m("x1^2*x2"));

  BorelIdeal I = borel_closure(RingSpec::single(4), {m("x1^2*x3*x4")});
  CHECK(ek_generator(I.ideal, m("x1^3*x4")) == m("x1^3*x4"));
  for (const Monomial& g : I.gens()) CHECK(ek_generator(I.ideal, g) == g);

  CHECK_THROWS_AS(ek_generator(I.ideal, m("x4^4")), std::invalid_argument);

  // The factorization condition nu(g(m)) <= mu(m / g(m)) over random ideal
  // members.
  std::mt19937_64 rng(29);
  for (const BorelIdeal& J : generate_corpus(5, {.count = 6})) {
    for (const Monomial& g : J.gens()) {
      Monomial member = g;
      for (int k = 0; k < 3; ++k)
        member = mul(member, Monomial::variable(single_var(
                                 std::uniform_int_distribution<int>(1, J.ring().n)(rng))));
      Monomial head = ek_generator(J.ideal, member);
      Monomial tail = div_exact(member, head);
      if (!tail.is_unit()) CHECK(nu(head) <= mu(tail));
    }
  }
}

TEST_CASE("exchange moves") {
  CHECK(borel_move(m("x1^2*x3*x4"), 2) == m("x1^2*x2*x4"));
  CHECK(borel_move(m("x1^2*x3*x4"), 3) == m("x1^2*x3^2"));
  CHECK(borel_move(m("x1*x2"), 1) == m("x1^2"));
  CHECK_THROWS_AS(borel_move(m("x1*x2"), 2), std::invalid_argument);

  BorelIdeal Ip = borel_closure(RingSpec::single(4), {m("x1^2*x3*x4"), m("x1^2*x2")});
  CHECK(bracket_move(Ip, m("x1^2*x3*x4"), 2) == m("x1^2*x2"));
  BorelIdeal I = borel_closure(RingSpec::single(4), {m("x1^2*x3*x4")});
  CHECK(bracket_move(I, m("x1^2*x3*x4"), 1) == m("x1^3*x4"));
  CHECK(bracket_move(I, m("x1^2*x3*x4"), nu(m("x1^2*x3*x4"))) == m("x1^2*x3*x4"));
  CHECK_THROWS_AS(bracket_move(I, m("x1*x3*x4"), 1), std::invalid_argument);

  // The bracket agrees with the plain move in all exponents up to the
  // moved index, so nu never drops below it.
  for (const BorelIdeal& J : generate_corpus(7, {.count = 8})) {
    for (const Monomial& g : J.gens()) {
      if (g.degree() == 0) continue;
      for (int i = 1; i < nu(g); ++i) {
        Monomial moved = borel_move(g, i), bracket = bracket_move(J, g, i);
        for (int k = 1; k <= i; ++k)
          CHECK(bracket.exponent(single_var(k)) == moved.exponent(single_var(k)));
        CHECK(nu(bracket) >= i);
      }
    }
  }
}

TEST_CASE("lex filtration") {
  BorelIdeal I = make_borel(ideal(2, {"x1^3", "x1^2*x2", "x1*x2^2", "x2^3"}));
  auto filtration = lex_filtration(I);
  REQUIRE(filtration.size() == 4);
  CHECK(filtration[0].gens == std::vector<Monomial>{m("x1^3")});
  CHECK(filtration[3].gens == I.gens());

  BorelIdeal single = borel_closure(RingSpec::single(2), {m("x1")});
  CHECK(lex_filtration(single).size() == 1);

  for (const BorelIdeal& J : generate_corpus(9, {.count = 6}))
    CHECK(lex_filtration(J).size() == J.gens().size());
}

TEST_CASE("colon ideals") {
  MonomialIdeal two = make_ideal(
      RingSpec::grid(2, 3), {m("x[1,1]*x[1,2]*x[1,3]"), m("x[1,1]*x[1,2]*x[2,3]")});
  CHECK(colon_ideal(two, m("x[1,1]*x[2,2]*x[2,3]")).gens ==
        std::vector<Monomial>{m("x[1,2]")});

  MonomialIdeal three = make_ideal(RingSpec::grid(2, 3),
                                   {m("x[1,1]*x[1,2]*x[2,3]"), m("x[1,1]*x[1,2]*x[1,3]"),
                                    m("x[1,1]*x[2,2]*x[2,3]")});
  CHECK(colon_ideal(three, m("x[2,1]*x[2,2]*x[2,3]")).gens ==
        std::vector<Monomial>{m("x[1,1]")});

  MonomialIdeal J = ideal(3, {"x1^2", "x1*x2"});
  CHECK(colon_ideal(J, Monomial::unit()).gens == J.gens);
  CHECK(is_unit_ideal(colon_ideal(J, m("x1^2*x3"))));
}

TEST_CASE("linear quotients") {
  MonomialIdeal tilde = make_ideal(RingSpec::grid(2, 3),
                                   {m("x[1,1]*x[1,2]*x[1,3]"), m("x[1,1]*x[1,2]*x[2,3]"),
                                    m("x[1,1]*x[2,2]*x[2,3]"), m("x[2,1]*x[2,2]*x[2,3]")});
  CHECK(has_linear_quotients(tilde, tilde.gens));

  MonomialIdeal single = ideal(2, {"x1"});
  CHECK(has_linear_quotients(single, single.gens));

  std::vector<Monomial> bad = tilde.gens;
  std::swap(bad[0], bad[3]);
  CHECK_FALSE(has_linear_quotients(tilde, bad));

  std::vector<Monomial> not_perm{tilde.gens[0]};
  CHECK_THROWS_AS(has_linear_quotients(tilde, not_perm), std::invalid_argument);
}

TEST_CASE("ideal text parsing") {
  MonomialIdeal I = parse_ideal_text("# a comment\nx1^2\n\n  x1*x2 # inline\n");
  CHECK(I.gens == std::vector<Monomial>{m("x1^2"), m("x1*x2")});
  CHECK(I.ring == RingSpec::single(2));
  CHECK(ideal_to_text(I) == "x1^2\nx1*x2\n");

  CHECK_THROWS_AS(parse_ideal_text("x1\nx[1,1]\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ideal_text("1\n"), std::invalid_argument);

  // Minimalization and descending-lex canonical order.
  MonomialIdeal J = parse_ideal_text("x2^3\nx1*x2\nx1*x2*x3\n");
  CHECK(J.gens == std::vector<Monomial>{m("x1*x2"), m("x2^3")});
}
