#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tcover/path.hpp"

namespace tcover {

/// `{"closed": false, "adjacency": "4", "points": [[0,0], [1,0]]}`
std::string path_to_json(const DigitalPath& path);

/// Parses the path format above. Throws InputError on syntax errors, schema
/// errors, or paths that fail validate_path (the report is in the message).
DigitalPath path_from_json(std::string_view text);

DigitalPath read_path_file(const std::string& filename);

/// `[[x,y], [x,y], ...]`, the point-list layout shared by all JSON outputs.
std::string points_to_json(const std::vector<GridPoint>& points);

/// Writes `contents` to a sibling temporary file and renames it into place.
void write_file_atomic(const std::string& filename, const std::string& contents);

std::string read_file(const std::string& filename);

}  // namespace tcover
