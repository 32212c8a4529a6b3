#include "bpol/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "bpol/corpus.hpp"
#include "bpol/homology.hpp"
#include "bpol/json_io.hpp"
#include "bpol/morse.hpp"
#include "bpol/polarize.hpp"
#include "bpol/resolution.hpp"

namespace bpol {

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFail = 1;
constexpr int kUsage = 2;

std::string slurp(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }
  std::ifstream file(path);
  if (!file) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream os;
  os << file.rdbuf();
  return os.str();
}

MonomialIdeal read_ideal(const std::string& path, std::istream& in,
                         bool closure = false) {
  std::string text = slurp(path, in);
  auto first = text.find_first_not_of(" \t\r\n");
  MonomialIdeal I = (first != std::string::npos && text[first] == '{')
                        ? ideal_from_json(text)
                        : parse_ideal_text(text);
  if (closure) return borel_closure(I.ring, I.gens).ideal;
  return I;
}

FieldSpec parse_field(const std::string& name) {
  if (name == "gf32003") return FieldSpec::gf();
  if (name == "q") return FieldSpec::rationals();
  throw std::invalid_argument("--field expects gf32003 or q");
}

GammaSequence parse_gamma_csv(const std::string& csv) {
  std::vector<long long> a;
  std::istringstream in(csv);
  std::string part;
  while (std::getline(in, part, ',')) a.push_back(std::stoll(part));
  return make_gamma(std::move(a));
}

BorelIdeal to_borel(MonomialIdeal I, bool closure) {
  if (closure) return borel_closure(I.ring, I.gens);
  return make_borel(std::move(I));
}

void print_ideal(std::ostream& out, const MonomialIdeal& I, const std::string& format) {
  if (format == "json")
    out << ideal_to_json(I);
  else
    out << ideal_to_text(I);
}

int cmd_transform(const std::string& verb, const std::string& path, std::istream& in,
                  std::ostream& out, std::ostream& err, bool closure,
                  const std::string& format, const std::string& gamma_csv) {
  MonomialIdeal I = read_ideal(path, in, closure);
  if (verb == "polarize") {
    if (!is_borel_fixed(I))
      err << "warning: input is not Borel fixed; the polarization need not be one\n";
    print_ideal(out, bpol_ideal(I, max_generator_degree(I)), format);
  } else if (verb == "sq") {
    print_ideal(out, sq_ideal(I), format);
  } else {
    print_ideal(out, gamma_ideal(I, parse_gamma_csv(gamma_csv)), format);
  }
  return kOk;
}

struct ResolveOutput {
  FreeComplex complex;
  MonomialIdeal resolves;
};

ResolveOutput build_target(const BorelIdeal& I, const std::string& target,
                           const std::string& gamma_csv) {
  FreeComplex P = build_p_complex(I);
  if (target == "bpol") return {std::move(P), bpol_ideal(I)};
  if (target == "S") {
    SpecializationMap phi = theta_map(P.ring);
    return {specialize_complex(P, phi), I.ideal};
  }
  GammaSequence a = parse_gamma_csv(gamma_csv);
  SpecializationMap phi = theta_a_map(P.ring, a);
  return {specialize_complex(P, phi), gamma_ideal(I.ideal, a)};
}

int cmd_resolve(const std::string& path, std::istream& in, std::ostream& out,
                std::ostream& err, bool closure, const std::string& target,
                const std::string& gamma_csv, const std::string& format,
                const std::string& args_echo) {
  MonomialIdeal input = read_ideal(path, in);
  if (!closure && !is_borel_fixed(input)) {
    err << "error: input is not Borel fixed (use --closure to close it)\n";
    return kUsage;
  }
  BorelIdeal I = to_borel(std::move(input), closure);
  ResolveOutput res = build_target(I, target, gamma_csv);
  if (format == "json") {
    out << complex_to_json(res.complex, res.resolves, args_echo);
    return kOk;
  }
  out << "ranks:";
  for (int r : rank_vector(res.complex)) out << ' ' << r;
  out << "\nbetti table (from the complex):\n"
      << betti_from_complex(res.complex).to_text();
  return kOk;
}

int cmd_betti(const std::string& path, std::istream& in, std::ostream& out,
              const std::string& of, const FieldSpec& field, const std::string& format,
              bool closure) {
  MonomialIdeal I = read_ideal(path, in, closure);
  MonomialIdeal J = I;
  if (of == "bpol")
    J = bpol_ideal(I, max_generator_degree(I));
  else if (of == "sq")
    J = sq_ideal(I);
  BettiTable table = betti_oracle(J, field);
  if (format == "json")
    out << betti_to_json(table);
  else
    out << table.to_text();
  return kOk;
}

int cmd_verify(const std::string& path, std::istream& in, std::ostream& out,
               std::ostream& err, const FieldSpec& field, bool check_bpol_only,
               const std::string& complex_path, bool closure) {
  if (!complex_path.empty()) {
    ComplexDocument doc = complex_from_json(slurp(complex_path, in));
    CertificationReport report = certify_resolution(doc.complex, doc.resolves, field);
    out << "certification: " << report.summary() << '\n';
    return report.ok() ? kOk : kVerifyFail;
  }
  MonomialIdeal I = read_ideal(path, in);
  if (check_bpol_only) {
    BettiTable a = betti_oracle(I, field);
    BettiTable b = betti_oracle(bpol_ideal(I, max_generator_degree(I)), field);
    bool equal = a.z_graded() == b.z_graded();
    out << "betti equality (input vs polarization): " << (equal ? "ok" : "FAIL") << '\n';
    if (!equal) {
      out << "input:\n" << a.to_text() << "polarization:\n" << b.to_text();
      return kVerifyFail;
    }
    return kOk;
  }
  if (!closure && !is_borel_fixed(I)) {
    err << "error: input is not Borel fixed (use --closure to close it)\n";
    return kUsage;
  }
  BorelIdeal B = to_borel(std::move(I), closure);
  FreeComplex P = build_p_complex(B);
  bool ok = true;

  bool d2 = composes_to_zero(P);
  out << "d o d = 0: " << (d2 ? "ok" : "FAIL") << '\n';
  ok = ok && d2;

  int units = unit_entry_count(P);
  out << "minimality (unit entries = " << units << "): " << (units == 0 ? "ok" : "FAIL")
      << '\n';
  ok = ok && units == 0;

  CertificationReport cert = certify_resolution(P, bpol_ideal(B), field);
  out << "strand exactness: " << cert.summary() << '\n';
  ok = ok && cert.ok();

  bool betti = betti_equal(B, field);
  out << "betti equality (polarization certificate): " << (betti ? "ok" : "FAIL") << '\n';
  ok = ok && betti;

  return ok ? kOk : kVerifyFail;
}

int cmd_morse_verify(const MorseAnalysis& morse, std::ostream& out) {
  bool ok = true;
  out << "generators (sqsubset order):";
  for (const Monomial& g : morse.polarized_generators()) out << ' ' << to_string(g);
  out << '\n';

  MatchingReport matching = morse.verify_matching();
  out << "matching edges: " << matching.edge_count << '\n';
  for (const MatchingEdge& e : morse.matching())
    out << "  {" << morse.cell_name(e.upper) << "} -> {" << morse.cell_name(e.lower)
        << "}\n";
  out << "matching property: " << (matching.matching_ok ? "ok" : "FAIL") << '\n';
  out << "acyclic: " << (matching.acyclic ? "ok" : "FAIL") << '\n';
  ok = ok && matching.ok();

  auto pairs = enumerate_admissible(morse.ideal());
  out << "critical cells by dimension:";
  for (int c : morse.f_vector()) out << ' ' << c;
  out << '\n';
  bool bijection = true;
  std::size_t pair_count = 0;
  try {
    for (const auto& level : pairs)
      for (const AdmissiblePair& p : level) {
        ++pair_count;
        CellMask cell = morse.cell_of_pair(p);
        if (!morse.is_critical(cell) || !(morse.pair_of_cell(cell) == p)) bijection = false;
      }
    bijection = bijection && pair_count == morse.critical_cells().size();
  } catch (const std::exception&) {
    bijection = false;
  }
  out << "critical cells biject with admissible pairs: " << (bijection ? "ok" : "FAIL")
      << '\n';
  ok = ok && bijection;

  // Gradient paths between critical cells of adjacent dimension.
  const auto& critical = morse.critical_cells();
  for (CellMask sigma : critical) {
    int dim = std::popcount(sigma) - 1;
    if (dim == 0) continue;
    for (CellMask tau : critical) {
      if (std::popcount(tau) != dim) continue;
      for (const auto& path : morse.gradient_paths(sigma, tau)) {
        out << "  path from {" << morse.cell_name(sigma) << "}: ";
        for (std::size_t s = 0; s < path.size(); ++s)
          out << (s ? " -> " : "") << '{' << morse.cell_name(path[s]) << '}';
        out << "  sign " << morse.path_sign(path) << '\n';
      }
    }
  }

  FreeComplex P = build_p_complex(morse.ideal());
  FreeComplex Q = morse.build_q_complex();
  bool same = P.levels.size() == Q.levels.size();
  if (same)
    for (std::size_t q = 0; q < P.diffs.size(); ++q) {
      auto key = [](const DiffEntry& e) {
        return std::tuple(e.col, e.row, e.sign, to_string(e.mono));
      };
      std::vector<std::tuple<int, int, int, std::string>> a, b;
      for (const DiffEntry& e : P.diffs[q]) a.push_back(key(e));
      for (const DiffEntry& e : Q.diffs[q]) b.push_back(key(e));
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) same = false;
    }
  out << "induced complex matches the admissible-pair complex: " << (same ? "ok" : "FAIL")
      << '\n';
  ok = ok && same;

  FacePosetReport poset = morse.check_face_poset();
  out << "face poset: f-vector";
  for (int c : poset.f_vector) out << ' ' << c;
  out << ", diamond " << (poset.diamond_ok ? "ok" : "FAIL") << ", incidence "
      << (poset.incidence_ok ? "ok" : "FAIL") << '\n';
  ok = ok && poset.ok();

  return ok ? kOk : kVerifyFail;
}

int cmd_morse(const std::string& path, std::istream& in, std::ostream& out,
              std::ostream& err, bool verify, const std::vector<std::string>& path_cells,
              bool poset, int max_gens, bool closure) {
  MonomialIdeal I = read_ideal(path, in);
  if (!closure && !is_borel_fixed(I)) {
    err << "error: input is not Borel fixed (use --closure to close it)\n";
    return kUsage;
  }
  MorseAnalysis morse(to_borel(std::move(I), closure), max_gens);
  if (verify) return cmd_morse_verify(morse, out);
  if (!path_cells.empty()) {
    auto sigma = morse.cell_by_name(path_cells[0]);
    auto tau = morse.cell_by_name(path_cells[1]);
    if (!sigma || !tau) {
      err << "error: cell ids are comma-separated generator indices\n";
      return kUsage;
    }
    auto paths = morse.gradient_paths(*sigma, *tau);
    out << paths.size() << " gradient path(s)\n";
    for (const auto& p : paths) {
      for (std::size_t s = 0; s < p.size(); ++s)
        out << (s ? " -> " : "") << '{' << morse.cell_name(p[s]) << '}';
      out << "  sign " << morse.path_sign(p) << '\n';
    }
    return kOk;
  }
  if (poset) {
    out << "digraph morse_face_poset {\n";
    const auto& critical = morse.critical_cells();
    FreeComplex Q = morse.build_q_complex();
    for (CellMask c : critical)
      out << "  \"" << morse.cell_name(c) << "\" [label=\"" << morse.cell_name(c)
          << "\"];\n";
    for (std::size_t q = 1; q < Q.diffs.size(); ++q)
      for (const DiffEntry& e : Q.diffs[q])
        out << "  \"" << morse.cell_name(morse.cell_of_pair(*Q.levels[q + 1][e.col].pair))
            << "\" -> \""
            << morse.cell_name(morse.cell_of_pair(*Q.levels[q][e.row].pair)) << "\";\n";
    out << "}\n";
    return kOk;
  }
  err << "error: choose --verify, --paths or --poset\n";
  return kUsage;
}

int cmd_diagram(std::ostream& out, const std::string& mono, const std::string& rows_csv) {
  Monomial m = parse_monomial(mono);
  std::vector<int> rows;
  if (!rows_csv.empty()) {
    std::istringstream in(rows_csv);
    std::string part;
    while (std::getline(in, part, ',')) rows.push_back(std::stoi(part));
  }
  std::vector<std::pair<int, int>> positions;
  for (int i : rows) {
    int s = 0;
    for (const auto& [v, e] : m.terms())
      if (v.i <= i) s += e;
    positions.push_back({i, 1 + s});
  }
  if (!is_admissible(m, positions))
    throw std::invalid_argument("rows do not give an admissible pair for " + mono);
  AdmissiblePair pair{m, bpol_monomial(m, std::max(m.degree(), 1)), positions};
  for (const std::string& line : stair_diagram(pair)) out << line << '\n';
  return kOk;
}

int cmd_poset(const std::string& path, std::istream& in, std::ostream& out,
              std::ostream& err, const std::string& format, bool closure) {
  MonomialIdeal I = read_ideal(path, in);
  if (!closure && !is_borel_fixed(I)) {
    err << "error: input is not Borel fixed (use --closure to close it)\n";
    return kUsage;
  }
  PairPoset poset = admissible_pair_poset(to_borel(std::move(I), closure));
  auto label = [&poset](int v) {
    std::ostringstream os;
    os << "e(";
    const AdmissiblePair& p = poset.elements[v];
    for (std::size_t k = 0; k < p.positions.size(); ++k)
      os << (k ? "," : "") << '(' << p.positions[k].first << ',' << p.positions[k].second
         << ')';
    os << '|' << to_string(p.mt) << ')';
    return os.str();
  };
  if (format == "dot") {
    out << "digraph admissible_pair_poset {\n";
    for (int v = 0; v < poset.size(); ++v)
      out << "  \"" << label(v) << "\";\n";
    for (int v = 0; v < poset.size(); ++v)
      for (int w : poset.covers[v]) out << "  \"" << label(v) << "\" -> \"" << label(w)
                                       << "\";\n";
    out << "}\n";
  } else {
    out << poset.size() << " admissible pairs\n";
    for (int v = 0; v < poset.size(); ++v) {
      out << label(v) << " covers:";
      for (int w : poset.covers[v]) out << ' ' << label(w);
      out << '\n';
    }
  }
  return kOk;
}

int cmd_lcm_lattice(const std::string& path, std::istream& in, std::ostream& out,
                    const std::string& of, bool closure) {
  MonomialIdeal I = read_ideal(path, in, closure);
  if (of == "bpol") I = bpol_ideal(I, max_generator_degree(I));
  LcmLattice lattice = lcm_lattice(I);
  out << lattice.size() << " lattice elements\n";
  for (const Monomial& m : lattice.elements) out << to_string(m) << '\n';
  return kOk;
}

int cmd_corpus(std::ostream& out, std::uint64_t seed, int count, int max_gens,
               const std::string& format) {
  CorpusOptions opts;
  opts.count = count;
  opts.max_gens = max_gens;
  auto corpus = generate_corpus(seed, opts);
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    if (format == "json") {
      out << ideal_to_json(corpus[k].ideal);
    } else {
      out << "# ideal " << k << " (n = " << corpus[k].ring().n << ")\n"
          << ideal_to_text(corpus[k].ideal) << '\n';
    }
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"alternative polarizations of Borel fixed ideals"};
  app.require_subcommand(1);

  std::string input, format = "text", gamma_csv, target = "bpol", field_name = "gf32003";
  std::string of = "ideal", complex_path, diagram_m, diagram_rows;
  std::vector<std::string> path_cells;
  bool closure = false, morse_verify = false, morse_poset = false, bpol_only = false;
  int max_gens = 16, corpus_count = 50;
  std::uint64_t corpus_seed = 1;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "ideal file (text or JSON); '-' for stdin");
    cmd->add_flag("--closure", closure, "replace the input by its Borel closure");
    cmd->add_option("--format", format, "text | json | dot");
  };

  CLI::App* polarize = app.add_subcommand("polarize", "alternative polarization");
  add_input(polarize);
  CLI::App* sq = app.add_subcommand("sq", "squarefree shift operator");
  add_input(sq);
  CLI::App* gamma = app.add_subcommand("gamma", "gamma shift operator");
  add_input(gamma);
  gamma->add_option("--a", gamma_csv, "comma-separated shifts, a_0 = 0")->required();

  CLI::App* resolve = app.add_subcommand("resolve", "build the minimal free complex");
  add_input(resolve);
  resolve->add_option("--target", target, "bpol | S | gamma");
  resolve->add_option("--a", gamma_csv, "shifts for --target=gamma");

  CLI::App* betti = app.add_subcommand("betti", "Betti table via the Taylor oracle");
  add_input(betti);
  betti->add_option("--of", of, "ideal | bpol | sq");
  betti->add_option("--field", field_name, "gf32003 | q");

  CLI::App* verify = app.add_subcommand("verify", "certify the construction");
  add_input(verify);
  verify->add_option("--field", field_name, "gf32003 | q");
  verify->add_flag("--bpol", bpol_only, "only check Betti equality under polarization");
  verify->add_option("--complex", complex_path, "certify a complex document instead");

  CLI::App* morse = app.add_subcommand("morse", "discrete Morse analysis");
  add_input(morse);
  morse->add_flag("--verify", morse_verify, "full matching / path / comparison report");
  morse->add_option("--paths", path_cells,
                    "source and target cell ids (give the input first)")
      ->expected(2);
  morse->add_flag("--poset", morse_poset, "face poset of the supporting complex");
  morse->add_option("--max-gens", max_gens, "subset enumeration bound (default 16)");

  CLI::App* diagram = app.add_subcommand("diagram", "stair diagram of an admissible pair");
  diagram->add_option("--m", diagram_m, "generator monomial")->required();
  diagram->add_option("--i", diagram_rows, "comma-separated rows of F");

  CLI::App* poset = app.add_subcommand("poset", "admissible pair poset");
  add_input(poset);

  CLI::App* lattice = app.add_subcommand("lcm-lattice", "join closure of the generators");
  add_input(lattice);
  lattice->add_option("--of", of, "ideal | bpol");

  CLI::App* corpus = app.add_subcommand("corpus", "seeded random Borel ideals");
  corpus->add_option("--seed", corpus_seed, "generator seed");
  corpus->add_option("--count", corpus_count, "number of ideals");
  corpus->add_option("--max-gens", max_gens, "largest accepted generator count");
  corpus->add_option("--format", format, "text | json");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << e.what() << '\n';
    return kUsage;
  }

  std::ostringstream echo;
  for (const auto& a : args) echo << a << ' ';

  try {
    if (polarize->parsed() || sq->parsed() || gamma->parsed())
      return cmd_transform(polarize->parsed()  ? "polarize"
                           : sq->parsed()      ? "sq"
                                               : "gamma",
                           input, in, out, err, closure, format, gamma_csv);
    if (resolve->parsed())
      return cmd_resolve(input, in, out, err, closure, target, gamma_csv, format,
                         echo.str());
    if (betti->parsed())
      return cmd_betti(input, in, out, of, parse_field(field_name), format, closure);
    if (verify->parsed())
      return cmd_verify(input, in, out, err, parse_field(field_name), bpol_only,
                        complex_path, closure);
    if (morse->parsed())
      return cmd_morse(input, in, out, err, morse_verify, path_cells, morse_poset,
                       max_gens, closure);
    if (diagram->parsed()) return cmd_diagram(out, diagram_m, diagram_rows);
    if (poset->parsed()) return cmd_poset(input, in, out, err, format, closure);
    if (lattice->parsed()) return cmd_lcm_lattice(input, in, out, of, closure);
    if (corpus->parsed())
      return cmd_corpus(out, corpus_seed, corpus_count, max_gens, format);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerifyFail;
  }
  err << "error: no subcommand\n";
  return kUsage;
}

}  // namespace bpol
