#include "mono/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mono {

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) throw ContractError("format_double: conversion failed");
    return std::string(buf, ptr);
}

GraphFormat graph_format_from_path(const std::filesystem::path& path) {
    const std::string ext = path.extension().string();
    if (ext == ".json") return GraphFormat::json;
    if (ext == ".csv") return GraphFormat::csv;
    throw ParseError("cannot infer graph format from extension '" + ext +
                     "' (expected .json or .csv)");
}

// ---------------------------------------------------------------------------
// JSON

std::string graph_to_json_string(const SampledGraph& graph) {
    nlohmann::ordered_json doc;
    doc["dim"] = graph.dim();
    if (!graph.name().empty()) doc["name"] = graph.name();
    nlohmann::ordered_json pts = nlohmann::ordered_json::array();
    for (const GraphPoint& p : graph.points()) {
        nlohmann::ordered_json jp;
        jp["x"] = p.x;
        jp["y"] = p.y;
        pts.push_back(std::move(jp));
    }
    doc["points"] = std::move(pts);
    return doc.dump(2) + "\n";
}

SampledGraph graph_from_json_string(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("graph JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("points"))
        throw ParseError("graph JSON: expected object with 'dim' and 'points'");
    if (!doc["dim"].is_number_unsigned() || doc["dim"].get<std::size_t>() == 0)
        throw ParseError("graph JSON: 'dim' must be a positive integer");
    const std::size_t dim = doc["dim"].get<std::size_t>();
    std::string name;
    if (doc.contains("name")) {
        if (!doc["name"].is_string())
            throw ParseError("graph JSON: 'name' must be a string");
        name = doc["name"].get<std::string>();
    }
    if (!doc["points"].is_array())
        throw ParseError("graph JSON: 'points' must be an array");
    std::vector<GraphPoint> points;
    std::size_t i = 0;
    for (const auto& jp : doc["points"]) {
        if (!jp.is_object() || !jp.contains("x") || !jp.contains("y"))
            throw ParseError("graph JSON: point " + std::to_string(i) +
                             " must be an object with 'x' and 'y'");
        GraphPoint p;
        for (const char* key : {"x", "y"}) {
            const auto& arr = jp[key];
            if (!arr.is_array() || arr.size() != dim)
                throw ParseError("graph JSON: point " + std::to_string(i) +
                                 " field '" + key + "' must hold " +
                                 std::to_string(dim) + " numbers");
            Vector& v = key[0] == 'x' ? p.x : p.y;
            for (const auto& e : arr) {
                if (!e.is_number())
                    throw ParseError("graph JSON: point " + std::to_string(i) +
                                     " has a non-numeric entry");
                v.push_back(e.get<double>());
            }
        }
        points.push_back(std::move(p));
        ++i;
    }
    try {
        return SampledGraph(dim, std::move(points), std::move(name));
    } catch (const ContractError& e) {
        throw ParseError(std::string("graph JSON: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// CSV

std::string graph_to_csv_string(const SampledGraph& graph) {
    std::ostringstream out;
    const std::size_t n = graph.dim();
    for (std::size_t d = 0; d < n; ++d) out << "x" << (d + 1) << ",";
    for (std::size_t d = 0; d < n; ++d)
        out << "y" << (d + 1) << (d + 1 < n ? "," : "");
    out << "\n";
    for (const GraphPoint& p : graph.points()) {
        for (std::size_t d = 0; d < n; ++d) out << format_double(p.x[d]) << ",";
        for (std::size_t d = 0; d < n; ++d)
            out << format_double(p.y[d]) << (d + 1 < n ? "," : "");
        out << "\n";
    }
    return out.str();
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(field);
            field.clear();
        } else if (c != '\r') {
            field += c;
        }
    }
    fields.push_back(field);
    return fields;
}

double parse_csv_double(const std::string& field, std::size_t line_no,
                        std::size_t col) {
    const char* begin = field.data();
    const char* end = begin + field.size();
    while (begin < end && (*begin == ' ' || *begin == '\t')) ++begin;
    while (end > begin && (end[-1] == ' ' || end[-1] == '\t')) --end;
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        throw ParseError("graph CSV: line " + std::to_string(line_no) +
                         ", column " + std::to_string(col) +
                         ": cannot parse number '" + field + "'");
    if (!std::isfinite(value))
        throw ParseError("graph CSV: line " + std::to_string(line_no) +
                         ", column " + std::to_string(col) +
                         ": non-finite value rejected");
    return value;
}

}  // namespace

SampledGraph graph_from_csv_string(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line))
        throw ParseError("graph CSV: empty input, expected a header line");
    const std::vector<std::string> header = split_csv_line(line);
    if (header.size() < 2 || header.size() % 2 != 0)
        throw ParseError("graph CSV: header must list x1..xn,y1..yn");
    const std::size_t dim = header.size() / 2;
    for (std::size_t d = 0; d < dim; ++d) {
        if (header[d] != "x" + std::to_string(d + 1) ||
            header[dim + d] != "y" + std::to_string(d + 1))
            throw ParseError("graph CSV: header must be x1,...,x" +
                             std::to_string(dim) + ",y1,...,y" +
                             std::to_string(dim));
    }
    std::vector<GraphPoint> points;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        const std::vector<std::string> fields = split_csv_line(line);
        if (fields.size() != 2 * dim)
            throw ParseError("graph CSV: line " + std::to_string(line_no) +
                             ": expected " + std::to_string(2 * dim) +
                             " fields, got " + std::to_string(fields.size()));
        GraphPoint p;
        for (std::size_t d = 0; d < dim; ++d)
            p.x.push_back(parse_csv_double(fields[d], line_no, d + 1));
        for (std::size_t d = 0; d < dim; ++d)
            p.y.push_back(parse_csv_double(fields[dim + d], line_no, dim + d + 1));
        points.push_back(std::move(p));
    }
    return SampledGraph(dim, std::move(points));
}

// ---------------------------------------------------------------------------
// Files

SampledGraph load_graph(const std::filesystem::path& path, GraphFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return format == GraphFormat::json ? graph_from_json_string(buf.str())
                                       : graph_from_csv_string(buf.str());
}

SampledGraph load_graph(const std::filesystem::path& path) {
    return load_graph(path, graph_format_from_path(path));
}

void save_graph(const SampledGraph& graph, const std::filesystem::path& path,
                GraphFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open '" + path.string() + "' for writing");
    out << (format == GraphFormat::json ? graph_to_json_string(graph)
                                        : graph_to_csv_string(graph));
}

void save_graph(const SampledGraph& graph, const std::filesystem::path& path) {
    save_graph(graph, path, graph_format_from_path(path));
}

}  // namespace mono
