#pragma once

#include <filesystem>
#include <optional>
#include <string_view>

#include <nlohmann/json.hpp>

#include "gentaut/chern.hpp"
#include "gentaut/ext.hpp"

namespace gentaut::cli {

/// A validated input file:
///   {"n": 3,
///    "blocks": [{"size": 2, "rank": 2, "c1": "e1", "rep": [2]}, ...],
///    "hom_table": {...}}            (optional, see HomTable::from_json)
/// "c1" is a class expression; "0" stands for the trivial line bundle.
struct SpecDocument {
  int n = 0;
  BundleSpec spec;
  std::optional<HomTable> hom_table;

  /// Canonical re-rendering, used as "spec_echo" in JSON output.
  nlohmann::json echo() const;
};

/// Throws ParseError carrying "line L, column C" for malformed JSON and
/// ValidationError naming the offending field (e.g. "blocks[1].rep").
SpecDocument parse_spec(std::string_view text);
SpecDocument parse_spec_file(const std::filesystem::path& path);

}  // namespace gentaut::cli
