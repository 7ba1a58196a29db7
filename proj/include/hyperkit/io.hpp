#pragma once

#include "hyperkit/function.hpp"
#include "hyperkit/groups.hpp"
#include "hyperkit/hypergroup.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace hyperkit::io {

using Json = nlohmann::ordered_json;

/// Parses the JSON hypergroup format into unvalidated data. Constants are rational strings
/// ("a/b"), decimal strings, or JSON numbers; omitted triples are zero. The file's optional
/// "arithmetic" field ("exact" | "float") is the default; `mode` overrides it.
/// Throws StructuralError on malformed input.
RawHypergroup parse_hypergroup(const Json& doc, std::optional<Arithmetic> mode = std::nullopt);
RawHypergroup read_hypergroup_file(const std::filesystem::path& path, std::optional<Arithmetic> mode = std::nullopt);

/// Serializes a hypergroup; exact constants travel as rational strings, floating ones as
/// 17-significant-digit decimals.
Json to_json(const FiniteHypergroup& h);
void write_hypergroup_file(const FiniteHypergroup& h, const std::filesystem::path& path);

/// First line n, then n rows of n 0-based indices (row i, column j holds g_i·g_j).
CayleyTable parse_cayley(std::istream& in, std::string name = "G");
CayleyTable read_cayley_file(const std::filesystem::path& path);

/// {"values": {label: value}} or {"values": [v0, v1, ...]}; a value is a number, a rational
/// string, or a [re, im] pair. Omitted labels are zero.
HFunction parse_function(const Json& doc, const FiniteHypergroup& host);
HFunction read_function_file(const std::filesystem::path& path, const FiniteHypergroup& host);

/// Same structure with double constants (exact values rounded).
FiniteHypergroup to_floating(const FiniteHypergroup& h);

Json read_json_file(const std::filesystem::path& path);

}  // namespace hyperkit::io
