#include "flatband/graph_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace flatband {

using nlohmann::json;

namespace {

std::string line_context(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(where + ": missing \"" + key + "\"");
  return *it;
}

std::optional<Rational> optional_rational(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (it->is_number_integer()) return Rational(it->dump());
  if (!it->is_string()) throw InputError(where + "." + key + ": rationals must be strings like \"p/q\"");
  try {
    return parse_rational(it->get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(where + "." + key + ": " + e.what());
  }
}

}  // namespace

std::string id_text(const json& id) { return id.is_string() ? id.get<std::string>() : id.dump(); }

GraphSpec parse_graph_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError("JSON syntax error at " + line_context(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
  if (!doc.is_object()) throw InputError("graph document must be a JSON object");

  const json& dim_node = require(doc, "dimension", "graph");
  if (!dim_node.is_number_integer() || dim_node.get<std::int64_t>() < 1) {
    throw InputError("dimension: must be a positive integer");
  }
  const int d = dim_node.get<int>();

  const json& orbits = require(doc, "orbits", "graph");
  if (!orbits.is_array() || orbits.empty()) throw InputError("orbits: must be a nonempty array");
  std::vector<json> ids;
  std::vector<std::optional<Rational>> potentials;
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    const std::string where = "orbits[" + std::to_string(k) + "]";
    const json& o = orbits[k];
    if (!o.is_object()) throw InputError(where + ": must be an object");
    const json& id = require(o, "id", where);
    if (!id.is_string() && !id.is_number_integer()) throw InputError(where + ".id: must be a string or integer");
    for (const auto& seen : ids) {
      if (seen == id) throw InputError(where + ".id: duplicate id " + id.dump());
    }
    ids.push_back(id);
    potentials.push_back(optional_rational(o, "potential", where));
  }

  auto orbit_of = [&](const json& id, const std::string& where) -> Orbit {
    for (std::size_t k = 0; k < ids.size(); ++k) {
      if (ids[k] == id) return static_cast<Orbit>(k);
    }
    throw InputError(where + ": unknown orbit id " + id.dump());
  };

  std::vector<EdgeClass> edges;
  std::vector<std::optional<Rational>> given_weights;
  if (auto it = doc.find("edges"); it != doc.end()) {
    if (!it->is_array()) throw InputError("edges: must be an array");
    for (std::size_t k = 0; k < it->size(); ++k) {
      const std::string where = "edges[" + std::to_string(k) + "]";
      const json& e = (*it)[k];
      if (!e.is_object()) throw InputError(where + ": must be an object");
      const Orbit i = orbit_of(require(e, "from", where), where + ".from");
      const Orbit j = orbit_of(require(e, "to", where), where + ".to");
      const json& off = require(e, "offset", where);
      if (!off.is_array()) throw InputError(where + ".offset: must be an array of integers");
      if (static_cast<int>(off.size()) != d) {
        throw InputError(where + ".offset: has length " + std::to_string(off.size()) + ", expected " +
                         std::to_string(d));
      }
      Offset a;
      for (const auto& x : off) {
        if (!x.is_number_integer()) throw InputError(where + ".offset: entries must be integers");
        a.push_back(x.get<std::int64_t>());
      }
      if (i == j && is_zero(a)) throw InputError(where + ": zero-offset self-loop at orbit " + id_text(ids[i]));
      edges.push_back({i, j, std::move(a)});
      given_weights.push_back(optional_rational(e, "weight", where));
    }
  }

  std::optional<PeriodicGraph> graph;
  try {
    graph.emplace(d, static_cast<int>(ids.size()), edges);
  } catch (const GraphError& e) {
    throw InputError(e.what());
  }
  std::vector<std::optional<Rational>> weights(graph->edge_classes().size());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    weights[*graph->find_class(edges[k].i, edges[k].j, edges[k].offset)] = given_weights[k];
  }
  return GraphSpec{std::move(*graph), std::move(ids), std::move(potentials), std::move(weights)};
}

GraphSpec load_graph_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_graph_spec(buf.str());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

nlohmann::ordered_json graph_to_json(const PeriodicGraph& g, const Labeling* lab) {
  nlohmann::ordered_json doc;
  doc["dimension"] = g.dimension();
  doc["orbits"] = nlohmann::ordered_json::array();
  for (int i = 0; i < g.num_orbits(); ++i) {
    nlohmann::ordered_json o;
    o["id"] = i + 1;
    if (lab) o["potential"] = to_string(lab->potentials.at(i));
    doc["orbits"].push_back(std::move(o));
  }
  doc["edges"] = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < g.edge_classes().size(); ++k) {
    const EdgeClass& e = g.edge_classes()[k];
    nlohmann::ordered_json o;
    o["from"] = e.i + 1;
    o["to"] = e.j + 1;
    o["offset"] = e.offset;
    if (lab) o["weight"] = to_string(lab->weights.at(k));
    doc["edges"].push_back(std::move(o));
  }
  return doc;
}

LabelMode parse_label_mode(std::string_view s) {
  if (s == "auto") return LabelMode::kAuto;
  if (s == "given") return LabelMode::kGiven;
  if (s == "random") return LabelMode::kRandom;
  throw InputError("unknown label mode \"" + std::string(s) + "\" (expected auto, given or random)");
}

Labeling resolve_labeling(const GraphSpec& spec, LabelMode mode, std::uint64_t seed) {
  RationalSampler sampler(seed);
  Labeling lab = random_labeling(spec.graph, sampler);
  if (mode == LabelMode::kRandom) return lab;
  for (std::size_t i = 0; i < spec.potentials.size(); ++i) {
    if (spec.potentials[i]) {
      lab.potentials[i] = *spec.potentials[i];
    } else if (mode == LabelMode::kGiven) {
      throw InputError("missing potential for orbit " + id_text(spec.orbit_ids[i]));
    }
  }
  for (std::size_t k = 0; k < spec.weights.size(); ++k) {
    if (spec.weights[k]) {
      lab.weights[k] = *spec.weights[k];
    } else if (mode == LabelMode::kGiven) {
      const EdgeClass& e = spec.graph.edge_classes()[k];
      throw InputError("missing weight for edge class (" + id_text(spec.orbit_ids[e.i]) + "," +
                       id_text(spec.orbit_ids[e.j]) + "," + offset_to_string(e.offset) + ")");
    }
  }
  return lab;
}

}  // namespace flatband
