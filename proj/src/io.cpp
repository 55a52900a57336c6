/**
 * @file io.cpp
 * @brief Parsing and serialization of the external file formats.
 */
#include "pidtensor/io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace pidtensor {

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read file: " + path);
  return buf.str();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

/// Probability from a JSON value: string => exact rational, number => float.
Prob prob_from_json(const json& v) {
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
        s.find('E') != std::string::npos) {
      try {
        return Prob::floating(std::stod(s));
      } catch (const std::exception&) {
        throw FormatError("invalid probability literal: '" + s + "'");
      }
    }
    try {
      mpq_class q(s);
      q.canonicalize();
      return Prob::rational(q);
    } catch (const std::exception&) {
      throw FormatError("invalid probability literal: '" + s + "'");
    }
  }
  if (v.is_number()) return Prob::floating(v.get<double>());
  throw FormatError("probability must be a string rational or a number, got " +
                    std::string(v.type_name()));
}

}  // namespace

JointDistribution parse_distribution(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("variables") || !doc.contains("pmf")) {
    throw FormatError("distribution document must be an object with 'variables' and 'pmf'");
  }
  if (!doc["variables"].is_array() || doc["variables"].empty()) {
    throw FormatError("'variables' must be a non-empty array");
  }

  std::vector<std::pair<std::string, Alphabet>> vars;
  for (const auto& v : doc["variables"]) {
    if (!v.is_object() || !v.contains("name") || !v.contains("alphabet") ||
        !v["name"].is_string() || !v["alphabet"].is_array()) {
      throw FormatError("each variable needs a 'name' string and an 'alphabet' array");
    }
    std::vector<std::string> symbols;
    for (const auto& s : v["alphabet"]) {
      if (!s.is_string()) throw FormatError("alphabet symbols must be strings");
      symbols.push_back(s.get<std::string>());
    }
    vars.emplace_back(v["name"].get<std::string>(), Alphabet(std::move(symbols)));
  }

  std::size_t total = 1;
  for (const auto& v : vars) total *= v.second.size();
  std::vector<Prob> table(total, Prob(0));
  std::vector<bool> seen(total, false);

  if (!doc["pmf"].is_array()) throw FormatError("'pmf' must be an array");
  for (const auto& row : doc["pmf"]) {
    if (!row.is_object() || !row.contains("p")) {
      throw FormatError("each pmf entry must be an object with a 'p' field");
    }
    if (row.size() != vars.size() + 1) {
      throw FormatError("pmf entry must have exactly one symbol per variable plus 'p'");
    }
    std::size_t flat = 0;
    for (const auto& v : vars) {
      if (!row.contains(v.first) || !row[v.first].is_string()) {
        throw FormatError("pmf entry is missing a symbol for variable '" + v.first + "'");
      }
      flat = flat * v.second.size() + v.second.index(row[v.first].get<std::string>());
    }
    if (seen[flat]) throw FormatError("duplicate pmf entry for one cell");
    seen[flat] = true;
    table[flat] = prob_from_json(row["p"]);
  }
  return JointDistribution(std::move(vars), std::move(table));
}

JointDistribution load_distribution(const std::string& path) {
  return parse_distribution(slurp(path));
}

std::string format_distribution(const JointDistribution& joint) {
  json vars = json::array();
  for (std::size_t i = 0; i < joint.variable_count(); ++i) {
    vars.push_back({{"name", joint.name(i)}, {"alphabet", joint.alphabet(i).symbols()}});
  }
  json pmf = json::array();
  joint.for_each_cell([&](const std::vector<std::size_t>& cell, const Prob& p) {
    if (p.is_zero()) return;
    json row = json::object();
    for (std::size_t i = 0; i < joint.variable_count(); ++i) {
      row[joint.name(i)] = joint.alphabet(i).symbol(cell[i]);
    }
    if (p.exact()) {
      row["p"] = p.str();
    } else {
      row["p"] = p.to_double();
    }
    pmf.push_back(std::move(row));
  });
  json doc{{"variables", std::move(vars)}, {"pmf", std::move(pmf)}};
  return doc.dump(2) + "\n";
}

EdgeSet parse_structure_edges(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("retained_edges") ||
      !doc["retained_edges"].is_array()) {
    throw FormatError("structure document must be an object with a 'retained_edges' array");
  }
  EdgeSet edges;
  for (const auto& e : doc["retained_edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      throw FormatError("each retained edge must be a pair of variable names");
    }
    edges.insert(make_edge(e[0].get<std::string>(), e[1].get<std::string>()));
  }
  return edges;
}

EdgeSet load_structure_edges(const std::string& path) {
  return parse_structure_edges(slurp(path));
}

std::string format_structure_edges(const EdgeSet& edges) {
  json arr = json::array();
  for (const auto& e : edges) arr.push_back({e.first, e.second});
  json doc{{"retained_edges", std::move(arr)}};
  return doc.dump(2) + "\n";
}

TimeSeries parse_time_series_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = line.find(',', start);
      cells.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(cells));
  }
  if (rows.size() < 2) throw FormatError("CSV needs a header row and at least one data row");
  const std::vector<std::string> names = rows.front();
  std::vector<std::vector<std::string>> columns(names.size());
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != names.size()) {
      throw FormatError("CSV row " + std::to_string(r + 1) + " has " +
                        std::to_string(rows[r].size()) + " cells, expected " +
                        std::to_string(names.size()));
    }
    for (std::size_t c = 0; c < names.size(); ++c) columns[c].push_back(rows[r][c]);
  }
  return TimeSeries::of(names, std::move(columns));
}

TimeSeries load_time_series_csv(const std::string& path) {
  return parse_time_series_csv(slurp(path));
}

}  // namespace pidtensor
