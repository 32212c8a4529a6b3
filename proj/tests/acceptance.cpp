// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "bpol/cli.hpp"
#include "bpol/corpus.hpp"
#include "bpol/homology.hpp"
#include "bpol/json_io.hpp"
#include "bpol/morse.hpp"
#include "bpol/polarize.hpp"
#include "bpol/resolution.hpp"

using namespace bpol;

namespace {

Monomial m(const char* text) { return parse_monomial(text); }

BorelIdeal closure(int n, std::initializer_list<const char*> seeds) {
  std::vector<Monomial> ms;
  for (const char* s : seeds) ms.push_back(parse_monomial(s));
  return borel_closure(RingSpec::single(n), ms);
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long out = 1;
  for (int i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

struct Outcome {
  bool pass = true;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      note = what;
    }
  }
};

int failures = 0;

void report(int number, const std::string& title, const Outcome& outcome, double seconds,
            double budget_seconds) {
  bool pass = outcome.pass && seconds < budget_seconds;
  if (!pass) ++failures;
  std::ostringstream line;
  line << "criterion " << number << ": " << (pass ? "PASS" : "FAIL") << "  ("
       << seconds << " s)  " << title;
  if (!outcome.pass) line << "  -- " << outcome.note;
  if (outcome.pass && seconds >= budget_seconds) line << "  -- over the time budget";
  std::cout << line.str() << std::endl;
}

template <class F>
void criterion(int number, const std::string& title, double budget_seconds, F&& body) {
  Outcome outcome;
  auto start = std::chrono::steady_clock::now();
  try {
    body(outcome);
  } catch (const std::exception& e) {
    outcome.require(false, std::string("exception: ") + e.what());
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(number, title, outcome, seconds, budget_seconds);
}

std::string positions_text(const AdmissiblePair& p) {
  std::string out;
  for (auto [i, j] : p.positions)
    out += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  return out;
}

}  // namespace

int main() {
  const auto corpus = generate_corpus(2024, {.count = 50});

  criterion(1, "B sets of the running example", 1.0, [](Outcome& c) {
    BorelIdeal I = closure(4, {"x1^2*x3*x4"});
    AdmissiblePair p = make_admissible_pair(I, m("x1^2*x3*x4"), {1, 2, 3});
    c.require(p.positions == std::vector<std::pair<int, int>>{{1, 3}, {2, 3}, {3, 4}},
              "forced columns of the example pair");
    c.require(b_set(I, p) == std::vector<int>{2, 3}, "B = {2,3} for the closure");
    BorelIdeal Ip = closure(4, {"x1^2*x3*x4", "x1^2*x2"});
    AdmissiblePair pp = make_admissible_pair(Ip, m("x1^2*x3*x4"), {1, 2, 3});
    c.require(b_set(Ip, pp) == std::vector<int>{3}, "B = {3} with the extra generator");
  });

  criterion(2, "chain condition, minimality and strand exactness over the corpus", 120.0,
            [&](Outcome& c) {
              c.require(corpus.size() >= 50, "corpus size");
              for (const BorelIdeal& I : corpus) {
                c.require(static_cast<int>(I.gens().size()) <= 30, "generator bound");
                FreeComplex P = build_p_complex(I);
                c.require(composes_to_zero(P), "d o d = 0 at " + ideal_to_text(I.ideal));
                c.require(unit_entry_count(P) == 0,
                          "unit entry at " + ideal_to_text(I.ideal));
                CertificationReport cert = certify_resolution(P, bpol_ideal(I));
                c.require(cert.ok(), "strand failure: " + cert.summary());
              }
            });

  criterion(3, "Betti agreement across all four computations", 600.0, [&](Outcome& c) {
    for (const BorelIdeal& I : corpus) {
      FreeComplex P = build_p_complex(I);
      BettiTable from_complex = betti_from_complex(P);
      c.require(from_complex == betti_oracle(bpol_ideal(I)),
                "multigraded mismatch with the polarized oracle");
      BettiTable base = betti_oracle(I.ideal);
      c.require(from_complex.z_graded() == base.z_graded(),
                "mismatch with the base oracle");
      c.require(base.z_graded() == betti_oracle(sq_ideal(I.ideal)).z_graded(),
                "mismatch with the squarefree oracle");
      std::vector<int> counted;
      for (const Monomial& g : I.gens())
        for (int q = 0; q < nu(g); ++q) {
          if (static_cast<int>(counted.size()) <= q) counted.resize(q + 1, 0);
          counted[q] += static_cast<int>(binomial(nu(g) - 1, q));
        }
      c.require(rank_vector(P) == counted, "rank vector vs the binomial count");
    }
  });

  criterion(4, "specializations certify against the collapsed quotients", 600.0,
            [&](Outcome& c) {
              std::vector<GammaSequence> shifts{
                  squarefree_gamma(8), make_gamma({0, 0, 1, 1, 2, 2, 3, 3}),
                  make_gamma({0, 1, 1, 2, 2, 3, 3, 4})};
              for (const BorelIdeal& I : corpus) {
                FreeComplex P = build_p_complex(I);
                CertificationReport theta =
                    certify_resolution(specialize_complex(P, theta_map(P.ring)), I.ideal);
                c.require(theta.ok(), "theta failure: " + theta.summary());
                for (const GammaSequence& a : shifts) {
                  SpecializationMap phi = theta_a_map(P.ring, a);
                  CertificationReport cert = certify_resolution(
                      specialize_complex(P, phi), gamma_ideal(I.ideal, a));
                  c.require(cert.ok(), "theta_a failure: " + cert.summary());
                }
              }
            });

  criterion(5, "colon ideals: the two examples and the closed form", 120.0,
            [&](Outcome& c) {
              MonomialIdeal two = make_ideal(RingSpec::grid(2, 3),
                                             {m("x[1,1]*x[1,2]*x[1,3]"),
                                              m("x[1,1]*x[1,2]*x[2,3]")});
              c.require(colon_ideal(two, m("x[1,1]*x[2,2]*x[2,3]")).gens ==
                            std::vector<Monomial>{m("x[1,2]")},
                        "first colon example");
              MonomialIdeal three = make_ideal(RingSpec::grid(2, 3),
                                               {m("x[1,1]*x[1,2]*x[2,3]"),
                                                m("x[1,1]*x[1,2]*x[1,3]"),
                                                m("x[1,1]*x[2,2]*x[2,3]")});
              c.require(colon_ideal(three, m("x[2,1]*x[2,2]*x[2,3]")).gens ==
                            std::vector<Monomial>{m("x[1,1]")},
                        "second colon example");
              MonomialIdeal tilde = make_ideal(
                  RingSpec::grid(2, 3),
                  {m("x[1,1]*x[1,2]*x[1,3]"), m("x[1,1]*x[1,2]*x[2,3]"),
                   m("x[1,1]*x[2,2]*x[2,3]"), m("x[2,1]*x[2,2]*x[2,3]")});
              c.require(has_linear_quotients(tilde, tilde.gens),
                        "linear quotients in descending lex order");
              std::vector<Monomial> other{m("x[1,1]*x[1,2]*x[2,3]"),
                                          m("x[1,1]*x[1,2]*x[1,3]"),
                                          m("x[1,1]*x[2,2]*x[2,3]"),
                                          m("x[2,1]*x[2,2]*x[2,3]")};
              c.require(has_linear_quotients(tilde, other),
                        "linear quotients in the swapped order");

              for (const BorelIdeal& I : corpus) {
                std::vector<Monomial> prefix;
                for (const Monomial& g : I.gens()) {
                  if (!prefix.empty()) {
                    MonomialIdeal part = bpol_ideal(
                        MonomialIdeal{I.ring(), prefix}, I.maxdeg);
                    std::vector<Monomial> expected;
                    int b = 1;
                    for (int i = 1; i < nu(g); ++i) {
                      b += g.exponent(single_var(i));
                      expected.push_back(Monomial::variable(grid_var(i, b)));
                    }
                    MonomialIdeal colon = colon_ideal(part, bpol_monomial(g, I.maxdeg));
                    std::vector<Monomial> sorted = expected;
                    std::sort(sorted.begin(), sorted.end(), LexGreater{});
                    c.require(colon.gens == sorted,
                              "closed form fails at " + to_string(g) + " in " +
                                  ideal_to_text(I.ideal));
                  }
                  prefix.push_back(g);
                }
              }
            });

  criterion(6, "five-term differential in the mixed-degree remark", 10.0, [](Outcome& c) {
    BorelIdeal seven = closure(4, {"x2*x4"});
    FreeComplex P = build_p_complex(seven);
    int col = -1;
    for (std::size_t k = 0; k < P.levels[4].size(); ++k) {
      const AdmissiblePair& p = *P.levels[4][k].pair;
      if (p.m == m("x2*x4") && positions_text(p) == "(1,1)(2,2)(3,2)")
        col = static_cast<int>(k);
    }
    c.require(col >= 0, "pair e({(1,1),(2,2),(3,2)}, x[2,1]x[4,2]) not found");
    if (col < 0) return;
    std::set<std::string> support;
    for (const DiffEntry& e : P.diffs[3])
      if (e.col == col)
        support.insert(positions_text(*P.levels[3][e.row].pair) + "|" +
                       to_string(P.levels[3][e.row].pair->mt));
    c.require(support.size() == 5, "support size " + std::to_string(support.size()));
    c.require(support == std::set<std::string>{"(2,2)(3,2)|x[2,1]*x[4,2]",
                                               "(1,1)(3,2)|x[2,1]*x[4,2]",
                                               "(1,1)(2,2)|x[2,1]*x[4,2]",
                                               "(1,1)(2,2)|x[2,1]*x[3,2]",
                                               "(2,2)(3,2)|x[1,1]*x[4,2]"},
              "support differs from the five listed basis elements");
  });

  criterion(7, "Morse suite: matching, paths, signs and the comparison", 300.0,
            [&](Outcome& c) {
              std::vector<BorelIdeal> suite{closure(4, {"x2*x4"})};
              for (const BorelIdeal& I : corpus)
                if (I.gens().size() <= 12) suite.push_back(I);
              for (const BorelIdeal& I : suite) {
                MorseAnalysis analysis(I);
                MatchingReport matching = analysis.verify_matching();
                c.require(matching.matching_ok, "matching property");
                c.require(matching.acyclic, "acyclicity");

                auto by_q = enumerate_admissible(I);
                std::size_t pair_count = 0;
                for (const auto& level : by_q) pair_count += level.size();
                c.require(analysis.critical_cells().size() == pair_count,
                          "critical cell count");
                for (const auto& level : by_q)
                  for (const AdmissiblePair& pair : level) {
                    CellMask cell = analysis.cell_of_pair(pair);
                    c.require(analysis.is_critical(cell) &&
                                  analysis.pair_of_cell(cell) == pair,
                              "bijection failure");
                  }

                for (std::size_t q = 1; q < by_q.size(); ++q)
                  for (const AdmissiblePair& pair : by_q[q]) {
                    CellMask sigma = analysis.cell_of_pair(pair);
                    std::vector<int> B = b_set(I, pair);
                    std::map<CellMask, int> expected;
                    for (int r : B) {
                      std::vector<int> rows;
                      for (int s = 1; s <= pair.q(); ++s)
                        if (s != r) rows.push_back(pair.positions[s - 1].first);
                      expected[analysis.cell_of_pair(make_admissible_pair(
                          I, bracket_move(I, pair.m, pair.positions[r - 1].first),
                          rows))] = r;
                    }
                    for (const AdmissiblePair& candidate : by_q[q - 1]) {
                      CellMask tau = analysis.cell_of_pair(candidate);
                      auto paths = analysis.gradient_paths(sigma, tau);
                      auto it = expected.find(tau);
                      if (it == expected.end()) {
                        c.require(paths.empty(), "unexpected gradient path");
                      } else {
                        c.require(paths.size() == 1, "gradient path not unique");
                        if (paths.size() == 1) {
                          int qs = pair.q() % 2 == 0 ? 1 : -1;
                          int rs = it->second % 2 == 0 ? 1 : -1;
                          c.require(qs * analysis.path_sign(paths[0]) == rs,
                                    "sign law violated");
                        }
                      }
                    }
                  }

                FreeComplex P = build_p_complex(I);
                FreeComplex Q = analysis.build_q_complex();
                bool same = P.diffs.size() == Q.diffs.size();
                for (std::size_t q = 0; same && q < P.diffs.size(); ++q) {
                  auto key = [](const DiffEntry& e) {
                    return std::tuple(e.col, e.row, e.sign, to_string(e.mono));
                  };
                  std::vector<std::tuple<int, int, int, std::string>> a, b;
                  for (const DiffEntry& e : P.diffs[q]) a.push_back(key(e));
                  for (const DiffEntry& e : Q.diffs[q]) b.push_back(key(e));
                  std::sort(a.begin(), a.end());
                  std::sort(b.begin(), b.end());
                  same = a == b;
                }
                c.require(same, "induced complex differs at " + ideal_to_text(I.ideal));
              }
            });

  criterion(8, "lcm-lattice joins collapse downstairs and separate upstairs", 10.0,
            [](Outcome& c) {
              BorelIdeal I = closure(3, {"x2*x3"});
              Monomial xy = m("x1*x2"), xz = m("x1*x3"), yz = m("x2*x3");
              Monomial all = m("x1*x2*x3");
              c.require(lcm_of(xy, xz) == all && lcm_of(xy, yz) == all &&
                            lcm_of(xz, yz) == all,
                        "downstairs joins differ");
              c.require(lcm_lattice(I.ideal).contains(all), "join missing downstairs");
              Monomial txy = bpol_monomial(xy, 2), txz = bpol_monomial(xz, 2),
                       tyz = bpol_monomial(yz, 2);
              Monomial j1 = lcm_of(txy, txz), j2 = lcm_of(txy, tyz), j3 = lcm_of(txz, tyz);
              c.require(j1 == m("x[1,1]*x[2,2]*x[3,2]") &&
                            j2 == m("x[1,1]*x[2,1]*x[2,2]*x[3,2]") &&
                            j3 == m("x[1,1]*x[2,1]*x[3,2]"),
                        "upstairs joins differ from the listed values");
              c.require(j1 != j2 && j1 != j3 && j2 != j3, "upstairs joins not distinct");
              LcmLattice lifted = lcm_lattice(bpol_ideal(I));
              c.require(lifted.contains(j1) && lifted.contains(j2) && lifted.contains(j3),
                        "joins missing upstairs");
            });

  criterion(9, "face posets: the two glued complexes and the diamond bound", 300.0,
            [&](Outcome& c) {
              MorseAnalysis seven(closure(4, {"x2*x4"}));
              FacePosetReport a = seven.check_face_poset();
              c.require(a.f_vector == std::vector<int>{7, 12, 8, 2},
                        "f-vector of the first example");
              MorseAnalysis six(closure(4, {"x1^2", "x1*x2^2", "x1*x2*x3", "x1*x2*x4",
                                            "x1*x3^2", "x1*x3*x4"}));
              FacePosetReport b = six.check_face_poset();
              c.require(b.f_vector == std::vector<int>{6, 11, 8, 2},
                        "f-vector of the second example");
              c.require(a.ok() && b.ok(), "diamond or incidence failure on the examples");
              for (const BorelIdeal& I : corpus) {
                if (I.gens().size() > 12) continue;
                FacePosetReport r = MorseAnalysis(I).check_face_poset();
                c.require(r.ok(), "diamond or incidence failure at " +
                                      ideal_to_text(I.ideal));
              }
            });

  criterion(10, "negative controls exit nonzero", 60.0, [](Outcome& c) {
    BorelIdeal I = closure(4, {"x1^2*x3*x4"});
    FreeComplex P = build_p_complex(I);
    std::string doc = complex_to_json(P, bpol_ideal(I));
    auto pos = doc.find("\"sign\": 1");
    c.require(pos != std::string::npos, "no positive sign to corrupt");
    doc.replace(pos, 9, "\"sign\": -1");
    {
      std::istringstream in(doc);
      std::ostringstream out, err;
      int code = run_cli({"verify", "--complex", "-"}, in, out, err);
      c.require(code == 1, "corrupted complex document accepted");
    }
    {
      std::istringstream in("x1^2\nx1*x2\nx2^2\nx2*x3\n");
      std::ostringstream out, err;
      int code = run_cli({"verify", "--bpol", "-"}, in, out, err);
      c.require(code == 1, "stable non-Borel ideal passed the Betti certificate");
    }
  });

  std::cout << (failures == 0 ? "acceptance: all criteria passed"
                              : "acceptance: " + std::to_string(failures) + " failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
