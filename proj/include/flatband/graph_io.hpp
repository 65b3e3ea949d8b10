#ifndef FLATBAND_GRAPH_IO_HPP
#define FLATBAND_GRAPH_IO_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "flatband/graph.hpp"

namespace flatband {

class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A graph file: the periodic graph plus whatever labels it supplies.
///
///   { "dimension": d,
///     "orbits": [ {"id": "a" | 1, "potential": "p/q"}, ... ],
///     "edges":  [ {"from": id, "to": id, "offset": [..], "weight": "p/q"}, ... ] }
///
/// Missing "potential" / "weight" means the label is to be randomized.
struct GraphSpec {
  PeriodicGraph graph;
  /// JSON ids in orbit order.
  std::vector<nlohmann::json> orbit_ids;
  std::vector<std::optional<Rational>> potentials;
  /// Aligned with graph.edge_classes().
  std::vector<std::optional<Rational>> weights;
};

/// Parses and validates a graph document. Syntax errors report line and
/// column; schema errors name the offending element.
GraphSpec parse_graph_spec(std::string_view text);
GraphSpec load_graph_spec(const std::filesystem::path& path);

/// Document for `g` with ids 1..n; labels are written when `lab` is given.
nlohmann::ordered_json graph_to_json(const PeriodicGraph& g, const Labeling* lab = nullptr);

/// Display form of an orbit id: bare for numbers, unquoted for strings.
std::string id_text(const nlohmann::json& id);

enum class LabelMode {
  kAuto,    // given labels honored, missing ones drawn from the seed
  kGiven,   // every label must be present
  kRandom,  // every label drawn from the seed
};

LabelMode parse_label_mode(std::string_view s);

/// Labels for `spec` per `mode`; random values come from
/// RationalSampler(seed). Throws InputError when kGiven finds a gap.
Labeling resolve_labeling(const GraphSpec& spec, LabelMode mode, std::uint64_t seed);

}  // namespace flatband

#endif
