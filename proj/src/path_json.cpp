#include "tcover/path_json.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tcover/error.hpp"

namespace tcover {

std::string points_to_json(const std::vector<GridPoint>& points) {
    std::string out = "[";
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i) out += ", ";
        out += '[';
        out += std::to_string(points[i].x);
        out += ',';
        out += std::to_string(points[i].y);
        out += ']';
    }
    out += ']';
    return out;
}

std::string path_to_json(const DigitalPath& path) {
    std::string out = "{\"closed\": ";
    out += path.closed ? "true" : "false";
    out += ", \"adjacency\": \"";
    out += adjacency_name(path.adjacency);
    out += "\", \"points\": ";
    out += points_to_json(path.points);
    out += '}';
    return out;
}

DigitalPath path_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("path JSON: ") + e.what());
    }
    if (!doc.is_object()) throw InputError("path JSON: top level must be an object");

    DigitalPath path;
    const auto closed = doc.find("closed");
    if (closed == doc.end() || !closed->is_boolean()) throw InputError("path JSON: \"closed\" must be a boolean");
    path.closed = closed->get<bool>();

    const auto adjacency = doc.find("adjacency");
    if (adjacency == doc.end() || !adjacency->is_string()) {
        throw InputError("path JSON: \"adjacency\" must be one of \"4\", \"8\", \"index\"");
    }
    const auto kind = parse_adjacency(adjacency->get<std::string>());
    if (!kind) throw InputError("path JSON: unknown adjacency \"" + adjacency->get<std::string>() + "\"");
    path.adjacency = *kind;

    const auto points = doc.find("points");
    if (points == doc.end() || !points->is_array()) throw InputError("path JSON: \"points\" must be an array");
    path.points.reserve(points->size());
    for (std::size_t i = 0; i < points->size(); ++i) {
        const auto& p = (*points)[i];
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
            throw InputError("path JSON: point " + std::to_string(i) + " must be [x, y] with integer coordinates");
        }
        path.points.push_back({p[0].get<std::int64_t>(), p[1].get<std::int64_t>()});
    }

    if (const auto report = validate_path(path); !report.ok()) {
        throw InputError("path JSON: invalid path: " + report.message());
    }
    return path;
}

std::string read_file(const std::string& filename) {
    std::ifstream in(filename, std::ios::binary);
    if (!in) throw InputError("cannot open " + filename);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

DigitalPath read_path_file(const std::string& filename) {
    return path_from_json(read_file(filename));
}

void write_file_atomic(const std::string& filename, const std::string& contents) {
    const std::filesystem::path target(filename);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InputError("cannot write " + tmp.string());
        out << contents;
        if (!out) throw InputError("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

}  // namespace tcover
