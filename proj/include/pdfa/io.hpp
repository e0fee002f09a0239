#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "pdfa/automaton.hpp"

namespace pdfa::io {

/// PDFA JSON document:
///   { "alphabet": ["0", "1"], "initial": 0,
///     "states": [ { "id": 0, "dist": {"$": 0.1, "0": 0.3, "1": 0.6},
///                   "trans": {"0": 1, "1": 0} }, ... ] }
/// State ids in a document may be any distinct integers; they are mapped to
/// dense indices in array order. Distribution entries that are absent read
/// as 0. The result is checked with require_valid().
Pdfa from_json(std::string_view text);
std::string to_json(const Pdfa& a);

Pdfa read_json_file(const std::filesystem::path& path);
void write_json_file(const Pdfa& a, const std::filesystem::path& path);

/// Graphviz rendering: nodes "q<id>\n$:<p>", edges "<σ>/<p>".
std::string to_dot(const Pdfa& a);

void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace pdfa::io
