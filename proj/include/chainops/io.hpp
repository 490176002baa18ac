#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "chainops/core.hpp"
#include "chainops/gspec.hpp"
#include "chainops/verify.hpp"

namespace chainops {

/// JSON with insertion-ordered object keys, so emitted documents are stable.
using Json = nlohmann::ordered_json;

// Binary table: {"k": 3, "table": [[row 0], [row 1], …]}, entry = t(row, col).
Json table_to_json(const BinTable& t);
BinTable table_from_json(const Json& j);

// CSV alternative: k lines of k comma-separated integers.
std::string table_to_csv(const BinTable& t);
BinTable table_from_csv(const std::string& text);

// Generating data: {"k":3, "e":1, "g":[2,1,0], "ties":[{"a":0,"b":2,"choice":"max"}]};
// half-integer g entries (gaps) are written as decimals such as 1.5.
Json gspec_to_json(const GSpec& s);
GSpec gspec_from_json(const Json& j);

// Partial order: {"size": 5, "leq": [[0/1 row], …]} with leq[a][b] = (a <= b).
Json poset_to_json(const Poset& p);
Poset poset_from_json(const Json& j);

/// Explicit n-ary value table: {"k":3, "n":3, "values":[…]} in lexicographic
/// tuple order, last coordinate varying fastest.
struct NaryTable {
  int k = 0;
  int n = 0;
  std::vector<Element> values;
};

Json nary_to_json(const NaryTable& t);
NaryTable nary_from_json(const Json& j);

// File round trips. Tables dispatch on the extension: .csv is CSV, anything
// else is JSON.
BinTable load_table(const std::string& path);
void save_table(const BinTable& t, const std::string& path);
GSpec load_gspec(const std::string& path);
void save_gspec(const GSpec& s, const std::string& path);
Poset load_poset(const std::string& path);
NaryTable load_nary(const std::string& path);
void save_nary(const NaryTable& t, const std::string& path);

/// Comma-separated chain elements, e.g. "0,1,2".
std::vector<Element> parse_elements(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace chainops
