#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cousin/char_ring.hpp"
#include "cousin/cousin_complex.hpp"
#include "cousin/errors.hpp"
#include "cousin/newton.hpp"
#include "cousin/rational.hpp"
#include "cousin/root_datum.hpp"
#include "cousin/slope_calc.hpp"

namespace cousin {

using nlohmann::json;

// Rationals serialize as JSON integers when integral and small, otherwise as
// "a/b" strings; both forms parse back.
inline json rat_to_json(const Rat& x) {
  if (is_integer(x) && numerator(x) <= 9007199254740992LL &&
      numerator(x) >= -9007199254740992LL)
    return json(static_cast<long long>(numerator(x)));
  return json(to_string(x));
}

inline Rat rat_from_json(const json& j, const char* op) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) return parse_rat(j.get<std::string>());
  fail_config("cli", op, "expected an integer or an \"a/b\" string");
}

inline json vec_to_json(const Vec& v) {
  json out = json::array();
  for (const Rat& x : v) out.push_back(rat_to_json(x));
  return out;
}

inline Vec vec_from_json(const json& j, const char* op) {
  if (!j.is_array()) fail_config("cli", op, "expected an array");
  Vec out;
  for (const auto& x : j) out.push_back(rat_from_json(x, op));
  return out;
}

inline json mat_to_json(const Mat& m) {
  json out = json::array();
  for (const Vec& row : m) out.push_back(vec_to_json(row));
  return out;
}

inline Mat mat_from_json(const json& j, const char* op) {
  if (!j.is_array()) fail_config("cli", op, "expected an array of rows");
  Mat out;
  for (const auto& row : j) out.push_back(vec_from_json(row, op));
  return out;
}

inline json read_json_file(const std::string& path, const char* op) {
  std::ifstream in(path);
  if (!in) fail_config("cli", op, "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail_config("cli", op, "bad JSON in '" + path + "': " + e.what());
  }
  return j;
}

// "@path" reads a file; anything else parses as inline JSON.
inline json read_json_argument(const std::string& text, const char* op) {
  if (!text.empty() && text[0] == '@') return read_json_file(text.substr(1), op);
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail_config("cli", op, std::string("bad inline JSON: ") + e.what());
  }
}

// A custom root datum document: {"dim": n, "simple_roots": [...],
// "simple_coroots": [...], "gamma_generators": [[...], ...]}.
inline RootDatum datum_from_json(const json& j, const std::string& tag) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("simple_roots") ||
      !j.contains("simple_coroots"))
    fail_config("root_datum", "custom",
                "custom datum needs dim, simple_roots, simple_coroots");
  const int dim = j.at("dim").get<int>();
  std::vector<Vec> roots, coroots;
  for (const auto& row : j.at("simple_roots"))
    roots.push_back(vec_from_json(row, "custom"));
  for (const auto& row : j.at("simple_coroots"))
    coroots.push_back(vec_from_json(row, "custom"));
  std::vector<std::vector<int>> gens;
  if (j.contains("gamma_generators"))
    for (const auto& perm : j.at("gamma_generators"))
      gens.push_back(perm.get<std::vector<int>>());
  return make_root_datum(dim, std::move(roots), std::move(coroots),
                         std::move(gens), tag);
}

// Preset names resolve through the registry; "@path" loads a custom document.
inline RootDatum resolve_datum(const std::string& spec) {
  if (!spec.empty() && spec[0] == '@')
    return datum_from_json(read_json_file(spec.substr(1), "preset"), spec);
  return preset_datum(spec);
}

// ---------------------------------------------------------------------------
// Table rendering.
// ---------------------------------------------------------------------------

struct RenderedTable {
  std::string title;
  std::vector<std::string> headers;             // first column label + columns
  std::vector<std::vector<std::string>> rows;   // row label + cells
};

inline std::string render_table_markdown(const RenderedTable& table) {
  std::ostringstream out;
  out << "| " ;
  for (std::size_t c = 0; c < table.headers.size(); ++c) {
    out << table.headers[c] << " |";
    if (c + 1 < table.headers.size()) out << " ";
  }
  out << "\n|";
  for (std::size_t c = 0; c < table.headers.size(); ++c) out << "---|";
  out << "\n";
  for (const auto& row : table.rows) {
    out << "| ";
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << row[c] << " |";
      if (c + 1 < row.size()) out << " ";
    }
    out << "\n";
  }
  return out.str();
}

inline std::string render_table_latex(const RenderedTable& table) {
  std::ostringstream out;
  out << "\\begin{tabular}{|";
  for (std::size_t c = 0; c < table.headers.size(); ++c) out << "c|";
  out << "}\n\\hline\n";
  for (std::size_t c = 0; c < table.headers.size(); ++c) {
    out << table.headers[c];
    out << (c + 1 < table.headers.size() ? " & " : " \\\\\n\\hline\n");
  }
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << row[c];
      out << (c + 1 < row.size() ? " & " : " \\\\\n\\hline\n");
    }
  }
  out << "\\end{tabular}\n";
  return out.str();
}

inline std::string render_table_plain(const RenderedTable& table) {
  std::vector<std::size_t> widths(table.headers.size(), 0);
  auto widen = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c)
      widths[c] = std::max(widths[c], row[c].size());
  };
  widen(table.headers);
  for (const auto& row : table.rows) widen(row);
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << row[c] << std::string(widths[c] - row[c].size(), ' ');
      if (c + 1 < row.size()) out << "  ";
    }
    out << "\n";
  };
  emit(table.headers);
  for (const auto& row : table.rows) emit(row);
  return out.str();
}

inline RenderedTable hecke_table_rendered(const HeckeTable& table,
                                          const std::string& variant) {
  RenderedTable out;
  out.title = variant;
  out.headers.push_back("operator");
  for (const auto& name : table.col_names) out.headers.push_back(name);
  for (std::size_t r = 0; r < table.row_names.size(); ++r) {
    std::vector<std::string> row{table.row_names[r]};
    for (const auto& cell : table.cells[r]) row.push_back(affine_to_string(cell));
    out.rows.push_back(std::move(row));
  }
  return out;
}

inline json hecke_table_to_json(const HeckeTable& table,
                                const std::string& variant) {
  json rows = json::array();
  for (std::size_t r = 0; r < table.row_names.size(); ++r) {
    json cells = json::array();
    for (const auto& cell : table.cells[r]) cells.push_back(affine_to_string(cell));
    rows.push_back(json{{"operator", table.row_names[r]},
                        {"sign_class", table.row_classes[r]},
                        {"cells", cells}});
  }
  return json{{"variant", variant},
              {"genus", table.genus},
              {"columns", table.col_names},
              {"rows", rows}};
}

inline json character_to_json(const RootDatum& datum, const FormalCharacter& chr) {
  json entries = json::array();
  for (const auto& [weight, coeff] : character_entries(datum, chr))
    entries.push_back(json{{"weight", vec_to_json(weight)}, {"mult", coeff}});
  return json{{"anchor", vec_to_json(chr.anchor)},
              {"depth", chr.depth},
              {"entries", entries}};
}

inline json descriptor_to_json(const CousinDescriptor& desc) {
  json degrees = json::array();
  for (int p = 0; p <= desc.d; ++p) {
    json terms = json::array();
    for (const auto& term : desc.terms[p]) {
      json t{{"w", term.label}};
      if (term.weight) t["weight"] = vec_to_json(*term.weight);
      terms.push_back(std::move(t));
    }
    degrees.push_back(json{{"degree", p}, {"terms", terms}});
  }
  return json{{"variant", desc.variant},
              {"sign", sign_name(desc.sign)},
              {"d", desc.d},
              {"degrees", degrees}};
}

inline json polygon_to_json(const NewtonPolygon& poly) {
  json points = json::array();
  for (const auto& [x, y] : poly.points) points.push_back(json::array({x, y}));
  json hull = json::array();
  for (const auto& [x, y] : poly.hull) hull.push_back(json::array({x, y}));
  json segments = json::array();
  for (const auto& seg : poly.segments)
    segments.push_back(
        json{{"slope", to_string(seg.slope)}, {"length", seg.length}});
  json valuations = json::array();
  for (const auto& [v, mult] : root_valuations(poly))
    valuations.push_back(json{{"valuation", to_string(v)}, {"mult", mult}});
  return json{{"ord", poly.ord},     {"degree", poly.degree},
              {"points", points},    {"hull", hull},
              {"segments", segments}, {"root_valuations", valuations}};
}

}  // namespace cousin
