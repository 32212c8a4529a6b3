#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bpol/cli.hpp"

using namespace bpol;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream file(path);
  file << content;
  return path.string();
}

}  // namespace

TEST_CASE("polarize, sq and gamma verbs") {
  RunResult r = run({"polarize", "-"}, "x1^3\nx1^2*x2\nx1*x2^2\nx2^3\n");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "x[1,1]*x[1,2]*x[1,3]\n"
        "x[1,1]*x[1,2]*x[2,3]\n"
        "x[1,1]*x[2,2]*x[2,3]\n"
        "x[2,1]*x[2,2]*x[2,3]\n");

  CHECK(run({"sq", "-"}, "x1\n").out == "x1\n");

  std::string corpus = run({"corpus", "--seed", "5", "--count", "3"}).out;
  // gamma with the identity-like shifts matches sq block by block.
  std::string block;
  std::istringstream in(corpus);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') block += line + "\n";
    if (line.empty() && !block.empty()) {
      CHECK(run({"gamma", "--a", "0,1,2,3,4,5", "-"}, block).out ==
            run({"sq", "-"}, block).out);
      block.clear();
    }
  }

  RunResult warn = run({"polarize", "-"}, "x2^2\n");
  CHECK(warn.code == 0);
  CHECK(warn.err.find("not Borel fixed") != std::string::npos);
}

TEST_CASE("resolve verb") {
  std::string seven = "x1^2\nx1*x2\nx1*x3\nx1*x4\nx2^2\nx2*x3\nx2*x4\n";
  RunResult r = run({"resolve", "-"}, seven);
  CHECK(r.code == 0);
  CHECK(r.out.find("ranks: 7 12 8 2") != std::string::npos);

  RunResult not_borel = run({"resolve", "-"}, "x2^2\n");
  CHECK(not_borel.code == 2);

  RunResult closed = run({"resolve", "--closure", "-"}, "x2^2\n");
  CHECK(closed.code == 0);
  CHECK(closed.out.find("ranks: 3 2") != std::string::npos);

  RunResult json = run({"resolve", "--format", "json", "-"}, seven);
  CHECK(json.code == 0);
  std::string path = write_temp("bpol_cli_complex.json", json.out);
  RunResult verified = run({"verify", "--complex", path});
  CHECK(verified.code == 0);

  // Corrupt one sign inside the document; certification must fail.
  std::string broken = json.out;
  auto pos = broken.find("\"sign\": 1");
  REQUIRE(pos != std::string::npos);
  broken.replace(pos, 9, "\"sign\": -1");
  std::string bad_path = write_temp("bpol_cli_broken.json", broken);
  CHECK(run({"verify", "--complex", bad_path}).code == 1);
}

TEST_CASE("verify verb") {
  CHECK(run({"verify", "-"}, "x1^2\nx1*x2\nx2^2\n").code == 0);
  RunResult stable = run({"verify", "--bpol", "-"}, "x1^2\nx1*x2\nx2^2\nx2*x3\n");
  CHECK(stable.code == 1);
  CHECK(stable.out.find("FAIL") != std::string::npos);
  CHECK(run({"verify", "--field", "q", "-"}, "x1^2\nx1*x2\n").code == 0);
  CHECK(run({"verify", "--field", "bogus", "-"}, "x1\n").code == 2);
}

TEST_CASE("morse verbs") {
  std::string seven = "x1^2\nx1*x2\nx1*x3\nx1*x4\nx2^2\nx2*x3\nx2*x4\n";
  RunResult r = run({"morse", "--verify", "-"}, seven);
  CHECK(r.code == 0);
  CHECK(r.out.find("{2,3,4,5} -> {3,4,5}") != std::string::npos);
  CHECK(r.out.find("{3,4,5} -> {2,3,4,5} -> {2,3,4} -> {1,2,3,4} -> {1,2,3}") !=
        std::string::npos);

  RunResult paths = run({"morse", "-", "--paths", "3,4,5,6", "1,2,3"}, seven);
  CHECK(paths.code == 0);
  CHECK(paths.out.find("1 gradient path(s)") != std::string::npos);

  RunResult bound = run({"morse", "--verify", "--max-gens", "3", "-"}, seven);
  CHECK(bound.code == 2);
}

TEST_CASE("diagram verb") {
  RunResult r = run({"diagram", "--m", "x1^2*x2*x6^2", "--i", "1,2,3,4,5"});
  CHECK(r.code == 0);
  CHECK(r.out == "BBW..\n..BW.\n...W.\n...W.\n...W.\n...BB\n");
  CHECK(run({"diagram", "--m", "x1^2*x2*x6^2", "--i", "7"}).code == 2);
}

TEST_CASE("poset verb emits the full face list") {
  std::string seven = "x1^2\nx1*x2\nx1*x3\nx1*x4\nx2^2\nx2*x3\nx2*x4\n";
  RunResult dot = run({"poset", "--format", "dot", "-"}, seven);
  CHECK(dot.code == 0);
  int nodes = 0;
  std::istringstream in(dot.out);
  std::string line;
  while (std::getline(in, line))
    if (line.find("\"];") == std::string::npos && line.find("->") == std::string::npos &&
        line.find("\";") != std::string::npos)
      ++nodes;
  CHECK(nodes == 29);
}

TEST_CASE("lcm-lattice verb") {
  // --closure expands the input before anything else, in every verb.
  CHECK(run({"lcm-lattice", "--closure", "--of", "bpol", "-"}, "x2*x3\n").out.find(
            "16 lattice elements") != std::string::npos);
  CHECK(run({"betti", "--closure", "-"}, "x2*x4\n").out ==
        run({"betti", "-"}, "x1^2\nx1*x2\nx1*x3\nx1*x4\nx2^2\nx2*x3\nx2*x4\n").out);

  RunResult base = run({"lcm-lattice", "-"}, "x1^2\nx1*x2\nx1*x3\nx2^2\nx2*x3\n");
  CHECK(base.code == 0);
  CHECK(base.out.find("x1*x2*x3\n") != std::string::npos);
  RunResult lifted = run({"lcm-lattice", "--of", "bpol", "-"},
                         "x1^2\nx1*x2\nx1*x3\nx2^2\nx2*x3\n");
  CHECK(lifted.out.find("x[1,1]*x[2,1]*x[3,2]\n") != std::string::npos);
}

TEST_CASE("deterministic output and structured round trips") {
  std::vector<std::string> corpus_args{"corpus", "--seed", "42", "--count", "5"};
  CHECK(run(corpus_args).out == run(corpus_args).out);

  RunResult json = run({"corpus", "--seed", "42", "--count", "1", "--format", "json"});
  CHECK(json.code == 0);
  // A structured ideal document feeds back into any verb.
  RunResult round = run({"polarize", "-"}, json.out);
  CHECK(round.code == 0);

  std::string seven = "x1^2\nx1*x2\nx1*x3\nx1*x4\nx2^2\nx2*x3\nx2*x4\n";
  CHECK(run({"resolve", "-"}, seven).out == run({"resolve", "-"}, seven).out);
}

TEST_CASE("usage errors") {
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"gamma", "-"}, "x1\n").code == 2);  // --a required
  CHECK(run({"resolve", "/nonexistent/path"}).code == 2);
  CHECK(run({"morse", "-"}, "x1\n").code == 2);  // needs a mode flag
}
