#include "nesto/json_io.hpp"

#include <sstream>

namespace nesto {

namespace {

VSet vset_from_json(const Json& j) {
  if (!j.is_array()) throw domain_error("MalformedInput", "expected a vertex list");
  VSet out;
  for (const auto& v : j) {
    if (!v.is_number_integer())
      throw domain_error("MalformedInput", "vertices must be integers");
    out.push_back(v.get<int>());
  }
  return make_vset(std::move(out));
}

}  // namespace

Json hypergraph_to_json(const Hypergraph& h) {
  Json j;
  j["vertices"] = h.carrier();
  j["hyperedges"] = h.hyperedges();
  return j;
}

Hypergraph hypergraph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("hyperedges"))
    throw domain_error("MalformedInput",
                       "hypergraph needs \"vertices\" and \"hyperedges\"");
  std::vector<VSet> edges;
  for (const auto& e : j["hyperedges"]) edges.push_back(vset_from_json(e));
  return Hypergraph(vset_from_json(j["vertices"]), std::move(edges));
}

Json construct_to_json(const Construct& c) {
  Json j;
  j["decoration"] = c.decoration();
  Json children = Json::array();
  for (const auto& ch : c.children()) children.push_back(construct_to_json(ch));
  j["children"] = std::move(children);
  return j;
}

Construct construct_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("decoration"))
    throw domain_error("MalformedInput", "construct needs \"decoration\"");
  std::vector<Construct> children;
  if (j.contains("children"))
    for (const auto& ch : j["children"]) children.push_back(construct_from_json(ch));
  return Construct(vset_from_json(j["decoration"]), std::move(children));
}

Json qpoly_to_json(const QPoly& p) {
  Json j = Json::object();
  for (const auto& [exp, coeff] : p.coefficients()) {
    std::ostringstream os;
    os << coeff;
    const std::string s = os.str();
    long long small = 0;
    bool fits = true;
    try {
      small = std::stoll(s);
    } catch (...) {
      fits = false;
    }
    if (fits)
      j[std::to_string(exp)] = small;
    else
      j[std::to_string(exp)] = s;
  }
  return j;
}

QPoly qpoly_from_json(const Json& j) {
  if (!j.is_object())
    throw domain_error("MalformedInput", "coefficients must be an object");
  QPoly p;
  for (auto it = j.begin(); it != j.end(); ++it) {
    int exp = std::stoi(it.key());
    BigInt c;
    if (it.value().is_number_integer())
      c = BigInt(it.value().get<long long>());
    else if (it.value().is_string())
      c = BigInt(it.value().get<std::string>());
    else
      throw domain_error("MalformedInput", "coefficient must be integer or string");
    p += QPoly::monomial(exp, c);
  }
  return p;
}

Json linear_to_json(const LinearConstruct& v) {
  Json j = Json::array();
  for (const auto& [c, p] : v.terms()) {
    Json term;
    term["construct"] = construct_to_json(c);
    term["coeff"] = qpoly_to_json(p);
    j.push_back(std::move(term));
  }
  return j;
}

LinearConstruct linear_from_json(const Json& j) {
  if (!j.is_array())
    throw domain_error("MalformedInput", "a linear construct is an array of terms");
  LinearConstruct out;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("construct") || !term.contains("coeff"))
      throw domain_error("MalformedInput",
                         "each term needs \"construct\" and \"coeff\"");
    out.add_term(construct_from_json(term["construct"]),
                 qpoly_from_json(term["coeff"]));
  }
  return out;
}

Delegation delegation_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("universe") || !j.contains("parts") ||
      !j.contains("whole"))
    throw domain_error("MalformedInput",
                       "delegation needs \"universe\", \"parts\" and \"whole\"");
  UniversePtr u = make_universe(j["universe"].get<std::string>());
  TeamMode mode = TeamMode::Strict;
  if (j.contains("mode")) {
    const std::string m = j["mode"].get<std::string>();
    if (m == "semistrict")
      mode = TeamMode::SemiStrict;
    else if (m != "strict")
      throw domain_error("MalformedInput", "mode must be strict or semistrict");
  }
  std::vector<Construct> constructs;
  std::vector<VSet> parts;
  for (const auto& c : j["parts"]) {
    constructs.push_back(construct_from_json(c));
    parts.push_back(constructs.back().support());
  }
  Team team = make_team(*u, parts, vset_from_json(j["whole"]), mode);
  // participants are sorted by minimum vertex; realign the constructs
  std::vector<Construct> aligned(constructs.size());
  for (auto& c : constructs) aligned[team.position_of(c.support())] = std::move(c);
  return make_delegation(std::move(team), aligned);
}

VSet parse_carrier(const std::string& spec) {
  auto dots = spec.find("..");
  if (dots != std::string::npos) {
    int lo = std::stoi(spec.substr(0, dots));
    int hi = std::stoi(spec.substr(dots + 2));
    if (lo > hi) throw domain_error("MalformedInput", "empty carrier range");
    VSet out;
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  VSet out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item.size() == 1 && item[0] >= 'a' && item[0] <= 'z')
      out.push_back(item[0] - 'a' + 1);
    else
      out.push_back(std::stoi(item));
  }
  if (out.empty()) throw domain_error("MalformedInput", "empty carrier spec");
  return make_vset(std::move(out));
}

}  // namespace nesto
