#include "bpol/json_io.hpp"

#include <json.hpp>

#include <stdexcept>

namespace bpol {

using nlohmann::json;

namespace {

json ring_json(const RingSpec& ring) {
  json j;
  j["kind"] = ring.kind == RingSpec::Kind::single ? "single" : "grid";
  j["n"] = ring.n;
  if (ring.kind == RingSpec::Kind::grid) j["d"] = ring.d;
  return j;
}

RingSpec ring_from(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("ring must be an object");
  int n = j.at("n").get<int>();
  if (j.contains("d") && !j["d"].is_null() &&
      (!j.contains("kind") || j["kind"] == "grid"))
    return RingSpec::grid(n, j["d"].get<int>());
  return RingSpec::single(n);
}

json ideal_json(const MonomialIdeal& I) {
  json j;
  j["ring"] = ring_json(I.ring);
  j["generators"] = json::array();
  for (const Monomial& g : I.gens) j["generators"].push_back(to_string(g));
  return j;
}

MonomialIdeal ideal_from(const json& j) {
  RingSpec ring = ring_from(j.at("ring"));
  std::vector<Monomial> gens;
  for (const auto& s : j.at("generators")) gens.push_back(parse_monomial(s.get<std::string>()));
  return make_ideal(ring, std::move(gens));
}

json pair_json(const AdmissiblePair& p) {
  json j;
  j["m"] = to_string(p.m);
  j["positions"] = json::array();
  for (const auto& [i, jj] : p.positions) j["positions"].push_back({i, jj});
  return j;
}

}  // namespace

std::string ring_to_json(const RingSpec& ring) { return ring_json(ring).dump(); }

std::string ideal_to_json(const MonomialIdeal& I) { return ideal_json(I).dump(2) + "\n"; }

MonomialIdeal ideal_from_json(const std::string& text) {
  return ideal_from(json::parse(text));
}

std::string complex_to_json(const FreeComplex& P, const MonomialIdeal& resolves,
                            const std::string& config_echo) {
  json j;
  if (!config_echo.empty()) j["config"] = config_echo;
  j["ring"] = ring_json(P.ring);
  j["resolves"] = ideal_json(resolves);
  j["levels"] = json::array();
  for (const auto& level : P.levels) {
    json jl = json::array();
    for (std::size_t k = 0; k < level.size(); ++k) {
      json jb;
      jb["id"] = k;
      jb["degree"] = to_string(level[k].degree);
      if (level[k].pair) jb["pair"] = pair_json(*level[k].pair);
      jl.push_back(jb);
    }
    j["levels"].push_back(jl);
  }
  j["differentials"] = json::array();
  for (const auto& diff : P.diffs) {
    json jd = json::array();
    for (const DiffEntry& e : diff)
      jd.push_back({{"row", e.row}, {"col", e.col}, {"sign", e.sign},
                    {"monomial", to_string(e.mono)}});
    j["differentials"].push_back(jd);
  }
  return j.dump(2) + "\n";
}

ComplexDocument complex_from_json(const std::string& text) {
  json j = json::parse(text);
  ComplexDocument doc;
  doc.resolves = ideal_from(j.at("resolves"));
  doc.complex.ring = ring_from(j.at("ring"));
  for (const auto& jl : j.at("levels")) {
    std::vector<BasisElement> level;
    for (const auto& jb : jl) {
      BasisElement b;
      b.degree = parse_monomial(jb.at("degree").get<std::string>());
      level.push_back(std::move(b));
    }
    doc.complex.levels.push_back(std::move(level));
  }
  for (const auto& jd : j.at("differentials")) {
    std::vector<DiffEntry> diff;
    for (const auto& je : jd)
      diff.push_back(DiffEntry{je.at("row").get<int>(), je.at("col").get<int>(),
                               je.at("sign").get<int>(),
                               parse_monomial(je.at("monomial").get<std::string>())});
    doc.complex.diffs.push_back(std::move(diff));
  }
  if (doc.complex.diffs.size() + 1 != doc.complex.levels.size())
    throw std::invalid_argument("complex document has mismatched levels and differentials");
  return doc;
}

std::string betti_to_json(const BettiTable& table) {
  json j = json::array();
  for (const auto& [q, deg, c] : table.entries)
    j.push_back({{"q", q}, {"degree", to_string(deg)}, {"rank", c}});
  return j.dump(2) + "\n";
}

}  // namespace bpol
