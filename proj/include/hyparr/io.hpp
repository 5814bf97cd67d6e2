/**
 * @file io.hpp
 * @brief JSON and DOT serialization.
 *
 * Arrangement files look like
 *
 *   {"dim": 2, "central": false,
 *    "hyperplanes": [{"normal": ["1", "-1/2"], "offset": "3"}],
 *    "family": {"name": "alternating", "n": 5, "d": 3}}
 *
 * with rationals as lowest-terms strings; "family" is optional metadata
 * recorded by generators. Object keys are emitted sorted, so equal inputs
 * serialize to identical bytes.
 */

#ifndef HYPARR_IO_HPP
#define HYPARR_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "hyparr/arrangement.hpp"
#include "hyparr/certify.hpp"
#include "hyparr/generators.hpp"
#include "hyparr/tope_graph.hpp"

namespace hyparr {

using Json = nlohmann::json;

struct ArrangementFile {
  Arrangement arrangement;
  std::optional<Json> family;
};

Json to_json(const Arrangement& arr);
Json to_json(const ArrangementFile& file);

/// Throws std::invalid_argument naming the offending field.
ArrangementFile arrangement_from_json(const Json& j);

/// Parses text; syntax errors are reported with line and column.
ArrangementFile parse_arrangement(const std::string& text);
ArrangementFile read_arrangement_file(const std::string& path);

/// Pretty-printed with a trailing newline.
std::string dump(const Json& j);
void write_text_file(const std::string& path, const std::string& text);

Json graph_to_json(const TopeGraph& g);
Json circuit_to_json(const TopeGraph& g, const Circuit& c);
Json matching_to_json(const TopeGraph& g, const Matching& m);
Json report_to_json(const ConstructionReport& r);
Json extension_to_json(const ExtensionReport& r);
Json certificate_to_json(const Certificate& c);

/// Undirected graph, vertices labeled by sign strings and filled by color.
std::string graph_to_dot(const TopeGraph& g);

}  // namespace hyparr

#endif  // HYPARR_IO_HPP
