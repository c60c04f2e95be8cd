#pragma once

#include <filesystem>
#include <string>

#include "mono/types.hpp"

namespace mono {

enum class GraphFormat { json, csv };

/// Picks the format from the file extension (.json / .csv). ParseError on
/// anything else.
GraphFormat graph_format_from_path(const std::filesystem::path& path);

/// JSON graph document:
///   {"dim": n, "name": "...", "points": [{"x": [...], "y": [...]}, ...]}
/// Doubles are written in shortest round-trip form, so save/load is
/// bit-exact. NaN/Inf tokens are rejected at parse time.
std::string graph_to_json_string(const SampledGraph& graph);
SampledGraph graph_from_json_string(const std::string& text);

/// CSV graph document: header "x1,...,xn,y1,...,yn", one point per row;
/// the dimension is inferred from the header.
std::string graph_to_csv_string(const SampledGraph& graph);
SampledGraph graph_from_csv_string(const std::string& text);

SampledGraph load_graph(const std::filesystem::path& path, GraphFormat format);
SampledGraph load_graph(const std::filesystem::path& path);
void save_graph(const SampledGraph& graph, const std::filesystem::path& path,
                GraphFormat format);
void save_graph(const SampledGraph& graph, const std::filesystem::path& path);

/// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double v);

}  // namespace mono
