#include "chainops/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace chainops {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw InputError("malformed input: " + what);
}

int get_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    malformed(std::string("expected integer field \"") + key + "\"");
  }
  return j[key].get<int>();
}

}  // namespace

Json table_to_json(const BinTable& t) {
  Json rows = Json::array();
  for (Element x = 0; x < t.k; ++x) {
    Json row = Json::array();
    for (Element y = 0; y < t.k; ++y) row.push_back(t(x, y));
    rows.push_back(std::move(row));
  }
  return Json{{"k", t.k}, {"table", std::move(rows)}};
}

BinTable table_from_json(const Json& j) {
  if (!j.is_object()) malformed("table document must be a JSON object");
  const int k = get_int(j, "k");
  if (!j.contains("table") || !j["table"].is_array()) malformed("expected \"table\" array");
  const Json& rows = j["table"];
  if (static_cast<int>(rows.size()) != k) malformed("table must have exactly k rows");
  std::vector<Element> entries;
  entries.reserve(static_cast<size_t>(k) * k);
  for (const Json& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != k) {
      malformed("each table row must have exactly k entries");
    }
    for (const Json& cell : row) {
      if (!cell.is_number_integer()) malformed("table entries must be integers");
      entries.push_back(cell.get<Element>());
    }
  }
  return BinTable(k, std::move(entries));
}

std::string table_to_csv(const BinTable& t) {
  std::ostringstream out;
  for (Element x = 0; x < t.k; ++x) {
    for (Element y = 0; y < t.k; ++y) {
      if (y > 0) out << ',';
      out << t(x, y);
    }
    out << '\n';
  }
  return out.str();
}

namespace {

int parse_int(const std::string& token) {
  size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    malformed("expected an integer, got \"" + token + "\"");
  }
  while (used < token.size()) {
    if (!std::isspace(static_cast<unsigned char>(token[used]))) {
      malformed("expected an integer, got \"" + token + "\"");
    }
    ++used;
  }
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

}  // namespace

BinTable table_from_csv(const std::string& text) {
  std::vector<std::string> lines;
  for (const std::string& line : split(text, '\n')) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
  }
  const int k = static_cast<int>(lines.size());
  if (k == 0) malformed("empty table");
  std::vector<Element> entries;
  entries.reserve(static_cast<size_t>(k) * k);
  for (const std::string& line : lines) {
    const std::vector<std::string> cells = split(line, ',');
    if (static_cast<int>(cells.size()) != k) {
      malformed("table must be square: every line needs as many entries as there are lines");
    }
    for (const std::string& cell : cells) entries.push_back(parse_int(cell));
  }
  return BinTable(k, std::move(entries));
}

Json gspec_to_json(const GSpec& s) {
  Json g = Json::array();
  for (ExtValue v : s.g) {
    if (v.is_point()) {
      g.push_back(v.as_point());
    } else {
      g.push_back(v.numeric());
    }
  }
  Json ties = Json::array();
  for (const auto& [pair, choice] : s.ties) {
    ties.push_back(Json{{"a", pair.first}, {"b", pair.second}, {"choice", to_string(choice)}});
  }
  return Json{{"k", s.k}, {"e", s.e}, {"g", std::move(g)}, {"ties", std::move(ties)}};
}

GSpec gspec_from_json(const Json& j) {
  if (!j.is_object()) malformed("generating-data document must be a JSON object");
  GSpec s;
  s.k = get_int(j, "k");
  s.e = get_int(j, "e");
  if (!j.contains("g") || !j["g"].is_array()) malformed("expected \"g\" array");
  for (const Json& cell : j["g"]) {
    if (cell.is_number_integer()) {
      const long long v = cell.get<long long>();
      if (v < 0 || 2 * v > 1'000'000) malformed("g entry out of range");
      s.g.push_back(ExtValue::from_twice(static_cast<int>(2 * v)));
    } else if (cell.is_number_float()) {
      const double v = cell.get<double>();
      const double doubled = v * 2.0;
      if (doubled < 0 || doubled > 1'000'000 || doubled != std::floor(doubled)) {
        malformed("g entries must be integers or half-integers");
      }
      s.g.push_back(ExtValue::from_twice(static_cast<int>(doubled)));
    } else {
      malformed("g entries must be numbers");
    }
  }
  if (j.contains("ties")) {
    if (!j["ties"].is_array()) malformed("\"ties\" must be an array");
    for (const Json& tie : j["ties"]) {
      if (!tie.is_object()) malformed("each tie must be an object");
      const Element a = get_int(tie, "a");
      const Element b = get_int(tie, "b");
      if (!tie.contains("choice") || !tie["choice"].is_string()) {
        malformed("tie needs a \"choice\" of \"min\" or \"max\"");
      }
      const std::string choice = tie["choice"].get<std::string>();
      if (choice != "min" && choice != "max") {
        malformed("tie \"choice\" must be \"min\" or \"max\"");
      }
      if (s.ties.contains({a, b})) malformed("duplicate tie entry");
      s.ties.emplace(std::pair{a, b}, choice == "min" ? Tie::Min : Tie::Max);
    }
  }
  require_valid(s);
  return s;
}

Json poset_to_json(const Poset& p) {
  Json rows = Json::array();
  for (int a = 0; a < p.size; ++a) {
    Json row = Json::array();
    for (int b = 0; b < p.size; ++b) row.push_back(p.le(a, b) ? 1 : 0);
    rows.push_back(std::move(row));
  }
  return Json{{"size", p.size}, {"leq", std::move(rows)}};
}

Poset poset_from_json(const Json& j) {
  if (!j.is_object()) malformed("poset document must be a JSON object");
  const int size = get_int(j, "size");
  if (size < 1) malformed("poset size must be positive");
  if (!j.contains("leq") || !j["leq"].is_array()) malformed("expected \"leq\" array");
  const Json& rows = j["leq"];
  if (static_cast<int>(rows.size()) != size) malformed("\"leq\" must have one row per element");
  std::vector<std::uint8_t> leq;
  leq.reserve(static_cast<size_t>(size) * size);
  for (const Json& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != size) {
      malformed("each \"leq\" row must have one entry per element");
    }
    for (const Json& cell : row) {
      if (!cell.is_number_integer()) malformed("\"leq\" entries must be 0 or 1");
      const int v = cell.get<int>();
      if (v != 0 && v != 1) malformed("\"leq\" entries must be 0 or 1");
      leq.push_back(static_cast<std::uint8_t>(v));
    }
  }
  Poset p(size, std::move(leq));
  p.validate();
  return p;
}

Json nary_to_json(const NaryTable& t) {
  return Json{{"k", t.k}, {"n", t.n}, {"values", t.values}};
}

NaryTable nary_from_json(const Json& j) {
  if (!j.is_object()) malformed("value-table document must be a JSON object");
  NaryTable t;
  t.k = get_int(j, "k");
  t.n = get_int(j, "n");
  if (t.k < 1 || t.n < 1) malformed("domain size and arity must be positive");
  if (!j.contains("values") || !j["values"].is_array()) malformed("expected \"values\" array");
  long long want = 1;
  for (int i = 0; i < t.n; ++i) {
    want *= t.k;
    if (want > 10'000'000) malformed("value table too large");
  }
  if (static_cast<long long>(j["values"].size()) != want) {
    malformed("\"values\" must hold exactly k^n entries");
  }
  for (const Json& cell : j["values"]) {
    if (!cell.is_number_integer()) malformed("\"values\" entries must be integers");
    const Element v = cell.get<Element>();
    if (v < 0 || v >= t.k) malformed("\"values\" entry out of range");
    t.values.push_back(v);
  }
  return t;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write file: " + path);
  out << content;
  if (!out) throw InputError("cannot write file: " + path);
}

namespace {

bool has_csv_extension(const std::string& path) {
  return path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
}

Json parse_json(const std::string& text, const std::string& path) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InputError("malformed JSON in " + path);
  return j;
}

}  // namespace

BinTable load_table(const std::string& path) {
  const std::string text = read_file(path);
  if (has_csv_extension(path)) return table_from_csv(text);
  return table_from_json(parse_json(text, path));
}

void save_table(const BinTable& t, const std::string& path) {
  if (has_csv_extension(path)) {
    write_file(path, table_to_csv(t));
  } else {
    write_file(path, table_to_json(t).dump(2) + "\n");
  }
}

GSpec load_gspec(const std::string& path) {
  return gspec_from_json(parse_json(read_file(path), path));
}

void save_gspec(const GSpec& s, const std::string& path) {
  write_file(path, gspec_to_json(s).dump(2) + "\n");
}

Poset load_poset(const std::string& path) {
  return poset_from_json(parse_json(read_file(path), path));
}

NaryTable load_nary(const std::string& path) {
  return nary_from_json(parse_json(read_file(path), path));
}

void save_nary(const NaryTable& t, const std::string& path) {
  write_file(path, nary_to_json(t).dump(2) + "\n");
}

std::vector<Element> parse_elements(const std::string& text) {
  std::vector<Element> out;
  if (text.find_first_not_of(" \t") == std::string::npos) return out;
  for (const std::string& token : split(text, ',')) out.push_back(parse_int(token));
  return out;
}

}  // namespace chainops
