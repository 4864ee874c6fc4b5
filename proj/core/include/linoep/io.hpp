#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "linoep/vectorspace.hpp"

namespace linoep {

enum class SetFormat { Csv, Json };

/// .json maps to Json, everything else to Csv.
SetFormat format_from_path(const std::filesystem::path& path);

/// CSV vector sets: one vector per row, comma-separated decimals, '.' as the
/// decimal separator, scientific notation accepted, no locale dependence.
/// Lines whose first non-blank character is '#' are comments; blank lines
/// are skipped. Throws ParseError with a 1-based line/column position.
VectorSet parse_csv_set(std::string_view text);

/// JSON vector sets: an object with a top-level "vectors" field holding a
/// list of equal-length number lists. Throws ParseError on malformed input.
VectorSet parse_json_set(std::string_view text);

/// Reads a whole file and parses it; the format defaults to the extension
/// mapping. Throws FileError if the file cannot be read.
VectorSet read_vector_set(const std::filesystem::path& path,
                          std::optional<SetFormat> format = std::nullopt);

/// Scientific notation with 17 significant digits, enough for an exact
/// double round trip through any standard parser.
std::string format_double(double value);

std::string format_csv_set(const VectorSet& set);
std::string format_json_set(const VectorSet& set);

}  // namespace linoep
