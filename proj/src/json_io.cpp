#include "ppg/json_io.hpp"

#include "ppg/error.hpp"

namespace ppg {

Json to_json(const PathWitness& w) {
  Json j;
  j["n"] = w.n;
  j["from"] = format_cycles(w.vertices.front());
  j["to"] = format_cycles(w.vertices.back());
  Json vs = Json::array();
  for (const Permutation& v : w.vertices) vs.push_back(format_cycles(v));
  j["vertices"] = std::move(vs);
  Json cs = Json::array();
  for (const AdjacencyCertificate& c : w.certificates) {
    cs.push_back({{"direction", to_string(c.direction)}, {"exponent", to_string(c.exponent)}});
  }
  j["certificates"] = std::move(cs);
  j["lemma_tag"] = to_string(w.lemma);
  j["declared_bound"] = w.declared_bound;
  j["length"] = w.length();
  if (w.best_effort) j["best_effort"] = true;
  return j;
}

PathWitness path_witness_from_json(const Json& j) {
  try {
    PathWitness w;
    w.n = j.at("n").get<std::size_t>();
    for (const auto& v : j.at("vertices")) w.vertices.push_back(parse_cycles(v.get<std::string>(), w.n));
    for (const auto& c : j.at("certificates")) {
      const std::string dir = c.at("direction").get<std::string>();
      AdjacencyCertificate cert;
      if (dir == "SecondIsPowerOfFirst") {
        cert.direction = Direction::SecondIsPowerOfFirst;
      } else if (dir == "FirstIsPowerOfSecond") {
        cert.direction = Direction::FirstIsPowerOfSecond;
      } else {
        throw ParseError("unknown direction '" + dir + "'");
      }
      const std::string e = c.at("exponent").get<std::string>();
      if (e.empty() || e.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError("exponent must be a decimal string");
      }
      cert.exponent = BigInt(e);
      w.certificates.push_back(std::move(cert));
    }
    auto tag = lemma_tag_from_string(j.at("lemma_tag").get<std::string>());
    if (!tag) throw ParseError("unknown lemma_tag");
    w.lemma = *tag;
    w.declared_bound = j.at("declared_bound").get<std::size_t>();
    w.best_effort = j.value("best_effort", false);
    if (w.vertices.empty()) throw ParseError("path without vertices");
    return w;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed path JSON: ") + e.what());
  }
}

Json to_json(const WitnessChecks& c) {
  return {{"supports_overlap", c.supports_overlap},
          {"commute", c.commute},
          {"common_fixed_points_empty", c.common_fixed_points_empty},
          {"same_cyclic_subgroup", c.same_cyclic_subgroup},
          {"prime_order_equal", c.prime_order_equal},
          {"conclusion_d_ge_6", c.conclusion_d_ge_6}};
}

Json to_json(const BoundsReport& r) {
  Json j;
  j["n"] = r.n;
  j["connected_hypothesis"] = r.connected_hypothesis;
  j["diam8_hypothesis"] = r.diam8_hypothesis;
  j["max_prime_factor"] = r.max_prime_factor;
  j["lower"] = r.lower ? Json(*r.lower) : Json(nullptr);
  j["upper"] = r.upper ? Json(*r.upper) : Json(nullptr);
  if (r.witness_pair) {
    j["witness_pair"] = {format_cycles(r.witness_pair->first), format_cycles(r.witness_pair->second)};
  } else {
    j["witness_pair"] = nullptr;
  }
  j["note"] = r.note;
  return j;
}

Json to_json(const ComponentReport& r) {
  Json j;
  j["n"] = r.n;
  std::size_t vertices = 0, diameter = 0;
  Json cs = Json::array();
  for (const ComponentSummary& c : r.components) {
    cs.push_back({{"size", c.size}, {"diameter", c.diameter}, {"least", format_cycles(c.least)}});
    vertices += c.size;
    diameter = std::max(diameter, c.diameter);
  }
  j["vertices"] = vertices;
  j["component_count"] = r.components.size();
  j["connected"] = r.components.size() == 1;
  j["max_component_diameter"] = diameter;
  j["components"] = std::move(cs);
  j["cutoff"] = r.cutoff;
  return j;
}

}  // namespace ppg
