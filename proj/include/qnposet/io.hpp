#pragma once

#include "qnposet/constructions.hpp"
#include "qnposet/layout.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qnposet {

/// Contents of a poset file:
///
///   { "n": 4,
///     "relations": [[0,1],[1,2]],          // any generating set, closed on load
///     "labels": ["a","b","c","d"],          // optional
///     "parts": {"X": [0,1]},                // optional
///     "realizer": [[0,1,2,3],[3,0,1,2]] }   // optional, two permutations
struct PosetFile {
    Poset poset;
    std::map<std::string, std::vector<Element>> parts;
    std::optional<Realizer> realizer;
};

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

PosetFile poset_file_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const PosetFile& file);

PosetFile to_poset_file(const ConstructionRecord& rec);

PosetFile load_poset_file(const std::string& path);
void save_poset_file(const PosetFile& file, const std::string& path);

/// Parses "3,0,1,2" into a permutation.
std::vector<Element> parse_order(const std::string& text);

/// Hasse diagram drawn bottom to top, one edge per cover pair.
std::string to_dot(const Poset& p);

/// Vertices on a horizontal line in extension order, cover edges as arcs
/// colored by queue id.
std::string to_arc_diagram_dot(const Poset& p, const LinearExtension& l, std::span<const CoverEdge> edges,
                               const QueueAssignment& queues);

} // namespace qnposet
