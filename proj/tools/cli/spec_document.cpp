#include "cli/spec_document.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "gentaut/errors.hpp"

namespace gentaut::cli {

namespace {

using nlohmann::json;

std::string line_column(std::string_view text, std::size_t byte) {
  // nlohmann reports the 1-based offset of the byte that failed.
  const std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

void reject_unknown_keys(const json& object, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (const auto& [key, value] : object.items()) {
    if (!allowed.contains(key)) {
      throw ValidationError(where + (where.empty() ? "" : ".") + key + ": unknown field");
    }
  }
}

const json& require(const json& object, const std::string& key, const std::string& where) {
  auto it = object.find(key);
  if (it == object.end()) {
    throw ValidationError(where + (where.empty() ? "" : ".") + key + ": missing");
  }
  return *it;
}

int require_int(const json& object, const std::string& key, const std::string& where) {
  const json& value = require(object, key, where);
  const std::string field = where + (where.empty() ? "" : ".") + key;
  if (!value.is_number_integer()) throw ValidationError(field + ": expected an integer");
  const auto v = value.get<std::int64_t>();
  if (v < 1 || v > 1'000'000) throw ValidationError(field + ": must be a positive integer");
  return static_cast<int>(v);
}

Block parse_block(const json& j, const std::string& where) {
  if (!j.is_object()) throw ValidationError(where + ": expected an object");
  reject_unknown_keys(j, {"size", "rank", "c1", "rep"}, where);
  const int size = require_int(j, "size", where);
  const int rank = require_int(j, "rank", where);

  const json& c1 = require(j, "c1", where);
  if (!c1.is_string()) throw ValidationError(where + ".c1: expected a class expression string");
  DivisorClass cls;
  try {
    cls = DivisorClass::parse(c1.get<std::string>());
  } catch (const Error& e) {
    throw ValidationError(where + ".c1: " + e.what());
  }
  if (cls.delta_coeff() != 0) throw ValidationError(where + ".c1: must not involve delta");

  const json& rep = require(j, "rep", where);
  if (!rep.is_array()) throw ValidationError(where + ".rep: expected an integer list");
  std::vector<int> rows;
  for (const auto& x : rep) {
    if (!x.is_number_integer()) throw ValidationError(where + ".rep: expected an integer list");
    rows.push_back(x.get<int>());
  }
  std::optional<YoungDiagram> diagram;
  try {
    diagram.emplace(Partition(rows));
  } catch (const Error& e) {
    throw ValidationError(where + ".rep: " + e.what());
  }
  if (diagram->size() != size) {
    throw ValidationError(where + ".rep: " + diagram->to_string() + " is not a partition of " +
                          std::to_string(size));
  }
  return Block{size, rank, std::move(cls), std::move(*diagram)};
}

HomTable parse_table(const json& j, const std::vector<Block>& blocks) {
  HomTable table;
  try {
    table = HomTable::from_json(j);
  } catch (const Error& e) {
    throw ValidationError(std::string("hom_table: ") + e.what());
  }
  if (table.k != static_cast<int>(blocks.size())) {
    throw ValidationError("hom_table.k: expected " + std::to_string(blocks.size()) +
                          " to match the block count");
  }
  for (int i = 0; i < table.k; ++i) {
    for (int j2 = 0; j2 < i; ++j2) {
      if (table.labels[i] != table.labels[j2]) continue;
      if (blocks[i].rank != blocks[j2].rank || !(blocks[i].c1 == blocks[j2].c1)) {
        throw ValidationError("hom_table.labels: blocks " + std::to_string(j2 + 1) + " and " +
                              std::to_string(i + 1) + " share label '" + table.labels[i] +
                              "' but differ in rank or c1");
      }
    }
  }
  return table;
}

}  // namespace

nlohmann::json SpecDocument::echo() const {
  json blocks = json::array();
  for (const auto& b : spec.blocks()) {
    blocks.push_back(
        {{"size", b.size}, {"rank", b.rank}, {"c1", b.c1.to_string()}, {"rep", b.rep.rows()}});
  }
  json out = {{"n", n}, {"blocks", blocks}};
  if (hom_table) out["hom_table"] = hom_table->to_json();
  return out;
}

SpecDocument parse_spec(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON at " + line_column(text, e.byte));
  }
  if (!j.is_object()) throw ValidationError("document: expected a JSON object");
  reject_unknown_keys(j, {"n", "blocks", "hom_table"}, "");
  const int n = require_int(j, "n", "");

  const json& list = require(j, "blocks", "");
  if (!list.is_array() || list.empty()) {
    throw ValidationError("blocks: expected a non-empty array");
  }
  std::vector<Block> blocks;
  int total = 0;
  for (std::size_t i = 0; i < list.size(); ++i) {
    blocks.push_back(parse_block(list[i], "blocks[" + std::to_string(i) + "]"));
    total += blocks.back().size;
  }
  if (total != n) {
    throw ValidationError("n: block sizes sum to " + std::to_string(total) + ", not " +
                          std::to_string(n));
  }

  std::optional<HomTable> table;
  if (auto it = j.find("hom_table"); it != j.end()) table = parse_table(*it, blocks);
  return SpecDocument{n, BundleSpec(std::move(blocks)), std::move(table)};
}

SpecDocument parse_spec_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("--spec: cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_spec(text.str());
}

}  // namespace gentaut::cli
