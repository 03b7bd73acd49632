#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "minwire/datamodel.hpp"
#include "minwire/design.hpp"
#include "minwire/uniqueness.hpp"

namespace minwire {

using ordered_json = nlohmann::ordered_json;

/// ASCII literal encoding used in JSON: "x3" plain, "!x3" barred.
inline std::string literal_ascii(Literal l) {
  return (l.pol == Polarity::barred ? "!x" : "x") + std::to_string(l.var);
}

/// Human-readable encoding used in text output: "x3" plain, "x̄3" barred.
inline std::string literal_utf8(Literal l) {
  return (l.pol == Polarity::barred ? "x̄" : "x") + std::to_string(l.var);
}

inline Literal parse_literal_ascii(const std::string& text) {
  std::size_t at = 0;
  Polarity pol = Polarity::plain;
  if (at < text.size() && text[at] == '!') {
    pol = Polarity::barred;
    ++at;
  }
  if (at >= text.size() || text[at] != 'x')
    throw validation_error("literal '" + text + "' is not of the form x<k> or !x<k>");
  ++at;
  if (at >= text.size()) throw validation_error("literal '" + text + "' has no variable index");
  int var = 0;
  for (; at < text.size(); ++at) {
    if (text[at] < '0' || text[at] > '9')
      throw validation_error("literal '" + text + "' has a malformed variable index");
    var = var * 10 + (text[at] - '0');
  }
  if (var < 1) throw validation_error("literal '" + text + "' has variable index below 1");
  return Literal{var, pol};
}

inline std::string literal_set_utf8(const LiteralSet& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (Literal l : s.literals()) {
    if (!first) out << ", ";
    first = false;
    out << literal_utf8(l);
  }
  out << '}';
  return out.str();
}

inline ordered_json literal_set_to_json(const LiteralSet& s) {
  ordered_json arr = ordered_json::array();
  for (Literal l : s.literals()) arr.push_back(literal_ascii(l));
  return arr;
}

inline LiteralSet literal_set_from_json(const nlohmann::json& arr) {
  LiteralSet s;
  for (const auto& item : arr) s.insert(parse_literal_ascii(item.get<std::string>()));
  return s;
}

inline ordered_json point_to_json(const Point& p) {
  ordered_json arr = ordered_json::array();
  for (int v : p) arr.push_back(v);
  return arr;
}

inline Point point_from_json(const nlohmann::json& arr) {
  Point p;
  for (const auto& v : arr) p.push_back(v.get<int>());
  return p;
}

// ---------------------------------------------------------------------------
// input files

struct ParsedInput {
  std::variant<DataSet, InputSet> value;

  bool has_outputs() const { return std::holds_alternative<DataSet>(value); }
  const FieldSpec& spec() const {
    return has_outputs() ? std::get<DataSet>(value).spec() : std::get<InputSet>(value).spec();
  }

  /// The input points, outputs dropped if present.
  InputSet as_input_set() const {
    if (has_outputs()) return inputs_of(std::get<DataSet>(value));
    return std::get<InputSet>(value);
  }

  const DataSet& as_dataset() const {
    if (!has_outputs())
      throw validation_error("this command needs outputs, but the input file has none");
    return std::get<DataSet>(value);
  }
};

namespace detail {

inline ParsedInput parse_json_input(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw validation_error(std::string("JSON ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("q") || !doc.contains("n") || !doc.contains("rows"))
    throw validation_error("JSON input must be an object with q, n, and rows");
  const FieldSpec spec(doc["q"].get<int>(), doc["n"].get<int>());
  std::vector<Row> rows;
  std::vector<Point> points;
  int with_output = 0, without_output = 0;
  for (const auto& row : doc["rows"]) {
    if (!row.is_object() || !row.contains("input"))
      throw validation_error("every row needs an \"input\" array");
    Point p = point_from_json(row["input"]);
    if (row.contains("output") && !row["output"].is_null()) {
      ++with_output;
      rows.push_back({std::move(p), row["output"].get<int>()});
    } else {
      ++without_output;
      points.push_back(std::move(p));
    }
  }
  if (with_output > 0 && without_output > 0)
    throw validation_error("format error: rows mix present and missing outputs");
  if (with_output > 0 || doc["rows"].empty()) return {DataSet(spec, std::move(rows))};
  return {InputSet(spec, std::move(points))};
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(cell);
      cell.clear();
    } else if (c != '\r' && c != ' ' && c != '\t') {
      cell += c;
    }
  }
  cells.push_back(cell);
  return cells;
}

inline ParsedInput parse_csv_input(const std::string& text, std::optional<int> q_override) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  // header: x1,...,xn[,y]
  while (std::getline(in, line)) {
    ++line_no;
    if (!split_csv_line(line).front().empty()) break;
  }
  const std::vector<std::string> header = split_csv_line(line);
  if (header.empty() || header.front().empty())
    throw validation_error("CSV parse error: missing header line");
  bool has_outputs = header.back() == "y";
  const int n = static_cast<int>(header.size()) - (has_outputs ? 1 : 0);
  for (int i = 0; i < n; ++i)
    if (header[static_cast<std::size_t>(i)] != "x" + std::to_string(i + 1))
      throw validation_error("CSV parse error at line " + std::to_string(line_no) +
                             ": header must be x1..xn followed by an optional y");

  std::vector<std::vector<int>> table;
  while (std::getline(in, line)) {
    ++line_no;
    const auto cells = split_csv_line(line);
    if (cells.size() == 1 && cells.front().empty()) continue;
    if (cells.size() != header.size())
      throw validation_error("CSV parse error at line " + std::to_string(line_no) + ": expected " +
                             std::to_string(header.size()) + " fields, found " +
                             std::to_string(cells.size()));
    std::vector<int> vals;
    for (const std::string& cell : cells) {
      try {
        std::size_t used = 0;
        vals.push_back(std::stoi(cell, &used));
        if (used != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw validation_error("CSV parse error at line " + std::to_string(line_no) + ": '" +
                               cell + "' is not an integer");
      }
    }
    table.push_back(std::move(vals));
  }

  int q = q_override.value_or(0);
  if (q == 0) {
    for (const auto& vals : table)
      for (int v : vals) q = std::max(q, v + 1);
    q = std::max(q, 2);
  }
  const FieldSpec spec(q, n);
  if (has_outputs) {
    std::vector<Row> rows;
    for (auto& vals : table) {
      Row r;
      r.output = vals.back();
      vals.pop_back();
      r.input = std::move(vals);
      rows.push_back(std::move(r));
    }
    return {DataSet(spec, std::move(rows))};
  }
  std::vector<Point> points(table.begin(), table.end());
  return {InputSet(spec, std::move(points))};
}

}  // namespace detail

/// Reads a data file. JSON: { "q": int, "n": int, "rows": [ { "input":
/// [ints], "output": int? } ] }. CSV: header x1..xn[,y], integer rows. Rows
/// without outputs yield an InputSet. For CSV without a q override, q is
/// inferred as max entry + 1 (at least 2).
inline ParsedInput parse_input_text(const std::string& text, std::optional<int> q_override = {}) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    if (c == '{') return detail::parse_json_input(text);
    break;
  }
  return detail::parse_csv_input(text, q_override);
}

inline ParsedInput parse_input(const std::string& path, std::optional<int> q_override = {}) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw validation_error("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_input_text(buf.str(), q_override);
}

// ---------------------------------------------------------------------------
// min-set reports

inline ordered_json minsets_to_json(const MinSetReport& report) {
  ordered_json doc;
  doc["command"] = "minsets";
  doc["unsigned"] = ordered_json::array();
  for (const Component& c : report.unsigned_minsets) doc["unsigned"].push_back(literal_set_to_json(c));
  doc["signed"] = ordered_json::array();
  for (const Component& c : report.signed_minsets) doc["signed"].push_back(literal_set_to_json(c));
  doc["signed_consistent"] = report.signed_consistent;
  return doc;
}

inline MinSetReport minsets_from_json(const nlohmann::json& doc) {
  MinSetReport report;
  for (const auto& arr : doc.at("unsigned")) report.unsigned_minsets.push_back(literal_set_from_json(arr));
  for (const auto& arr : doc.at("signed")) report.signed_minsets.push_back(literal_set_from_json(arr));
  report.signed_consistent = doc.at("signed_consistent").get<bool>();
  return report;
}

inline std::string minsets_to_text(const DataSet& data, const MinSetReport& report) {
  std::ostringstream out;
  out << "q=" << data.spec().q << " n=" << data.spec().n << " rows=" << data.size() << "\n";
  out << "unsigned min-sets (" << report.unsigned_minsets.size() << "):\n";
  for (const Component& c : report.unsigned_minsets) out << "  " << literal_set_utf8(c) << "\n";
  if (report.signed_consistent) {
    out << "signed min-sets (" << report.signed_minsets.size() << "):\n";
    for (const Component& c : report.signed_minsets) out << "  " << literal_set_utf8(c) << "\n";
  } else {
    out << "signed min-sets: none (no monotone sign pattern fits the data)\n";
  }
  return out.str();
}

/// One digraph per min-set: the local wiring diagram of the target node,
/// activators labeled "+", inhibitors "-". Unsigned diagrams are emitted
/// when no signed min-set exists.
inline std::string minsets_to_dot(const MinSetReport& report) {
  std::ostringstream out;
  const bool use_signed = report.signed_consistent;
  const auto& sets = use_signed ? report.signed_minsets : report.unsigned_minsets;
  const char* stem = use_signed ? "signed_minset_" : "unsigned_minset_";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    out << "digraph " << stem << (i + 1) << " {\n";
    out << "  rankdir=LR;\n";
    out << "  \"f\";\n";
    for (Literal l : sets[i].literals()) {
      out << "  \"x" << l.var << "\" -> \"f\"";
      if (use_signed) out << " [label=\"" << (l.pol == Polarity::plain ? "+" : "-") << "\"]";
      out << ";\n";
    }
    out << "}\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// certificates

inline ordered_json certificate_to_json(const Certificate& cert) {
  ordered_json doc;
  doc["command"] = "certify";
  doc["q"] = cert.spec.q;
  doc["n"] = cert.spec.n;
  doc["points"] = cert.points;
  doc["cylindrically_connected"] = cert.connectivity.connected;
  if (cert.connectivity.witness) {
    const ConnectivityWitness& w = *cert.connectivity.witness;
    ordered_json fixed = ordered_json::object();
    for (auto [coord, value] : w.cylinder.fixed) fixed[std::to_string(coord)] = value;
    doc["connectivity_witness"] = {
        {"cylinder", fixed}, {"a", point_to_json(w.a)}, {"b", point_to_json(w.b)}};
  } else {
    doc["connectivity_witness"] = nullptr;
  }
  if (cert.diagonal) {
    doc["diagonal"] = {{"length", cert.diagonal->length},
                       {"witness", point_to_json(cert.diagonal->witness)},
                       {"corner", cert.diagonal->corner}};
  } else {
    doc["diagonal"] = nullptr;
  }
  if (cert.type_skipped_cap) {
    doc["type"] = "skipped (cap)";
  } else if (cert.type) {
    doc["type"] = to_string(cert.type->type);
    if (cert.type->offending_monomial)
      doc["type_evidence"] = literal_set_to_json(*cert.type->offending_monomial);
    if (cert.type->witness_weak_order) doc["type_evidence"] = *cert.type->witness_weak_order;
  }
  doc["unsigned_unique_for_all_outputs"] = cert.unsigned_unique_for_all_outputs;
  switch (cert.signed_uniqueness.at_most_one) {
    case Verdict::yes: doc["signed_at_most_one_for_all_outputs"] = true; break;
    case Verdict::no: doc["signed_at_most_one_for_all_outputs"] = false; break;
    case Verdict::unknown:
      doc["signed_at_most_one_for_all_outputs"] = "unknown (non-Boolean)";
      break;
  }
  switch (cert.signed_uniqueness.method) {
    case SignedUniquenessResult::Method::cylindrical:
      doc["signed_verdict_method"] = "cylindrical connectivity";
      break;
    case SignedUniquenessResult::Method::exhaustive:
      doc["signed_verdict_method"] = "exhaustive weak orders";
      break;
    case SignedUniquenessResult::Method::none: doc["signed_verdict_method"] = "none"; break;
  }
  if (cert.signed_uniqueness.counterexample)
    doc["signed_counterexample_weak_order"] = *cert.signed_uniqueness.counterexample;
  return doc;
}

inline Certificate certificate_from_json(const nlohmann::json& doc) {
  Certificate cert;
  cert.spec = FieldSpec(doc.at("q").get<int>(), doc.at("n").get<int>());
  cert.points = doc.at("points").get<std::size_t>();
  cert.connectivity.connected = doc.at("cylindrically_connected").get<bool>();
  if (!doc.at("connectivity_witness").is_null()) {
    ConnectivityWitness w;
    for (const auto& [key, value] : doc.at("connectivity_witness").at("cylinder").items())
      w.cylinder.fixed[std::stoi(key)] = value.get<int>();
    w.a = point_from_json(doc.at("connectivity_witness").at("a"));
    w.b = point_from_json(doc.at("connectivity_witness").at("b"));
    cert.connectivity.witness = std::move(w);
  }
  if (!doc.at("diagonal").is_null()) {
    DiagonalInfo d;
    d.length = doc.at("diagonal").at("length").get<int>();
    d.witness = point_from_json(doc.at("diagonal").at("witness"));
    d.corner = doc.at("diagonal").at("corner").get<bool>();
    cert.diagonal = std::move(d);
  }
  if (doc.contains("type")) {
    if (doc.at("type").is_string() && doc.at("type").get<std::string>() == "skipped (cap)") {
      cert.type_skipped_cap = true;
    } else {
      TypeResult t;
      const std::string name = doc.at("type").get<std::string>();
      t.type = name == "1"    ? TypeClass::type1
               : name == "2"  ? TypeClass::type2
               : name == "3a" ? TypeClass::type3a
                              : TypeClass::type3b;
      if (t.type == TypeClass::type2 && doc.contains("type_evidence"))
        t.offending_monomial = literal_set_from_json(doc.at("type_evidence"));
      if (t.type == TypeClass::type3b && doc.contains("type_evidence"))
        t.witness_weak_order = doc.at("type_evidence").get<std::vector<int>>();
      cert.type = std::move(t);
    }
  }
  cert.unsigned_unique_for_all_outputs = doc.at("unsigned_unique_for_all_outputs").get<bool>();
  const auto& verdict = doc.at("signed_at_most_one_for_all_outputs");
  cert.signed_uniqueness.at_most_one =
      verdict.is_boolean() ? (verdict.get<bool>() ? Verdict::yes : Verdict::no) : Verdict::unknown;
  const std::string method = doc.at("signed_verdict_method").get<std::string>();
  cert.signed_uniqueness.method = method == "cylindrical connectivity"
                                      ? SignedUniquenessResult::Method::cylindrical
                                  : method == "exhaustive weak orders"
                                      ? SignedUniquenessResult::Method::exhaustive
                                      : SignedUniquenessResult::Method::none;
  if (doc.contains("signed_counterexample_weak_order"))
    cert.signed_uniqueness.counterexample =
        doc.at("signed_counterexample_weak_order").get<std::vector<int>>();
  return cert;
}

inline std::string certificate_to_text(const Certificate& cert) {
  std::ostringstream out;
  out << "q=" << cert.spec.q << " n=" << cert.spec.n << " points=" << cert.points << "\n";
  out << "cylindrically connected: " << (cert.connectivity.connected ? "yes" : "no") << "\n";
  if (cert.connectivity.witness) {
    const ConnectivityWitness& w = *cert.connectivity.witness;
    out << "  witness cylinder {";
    bool first = true;
    for (auto [coord, value] : w.cylinder.fixed) {
      if (!first) out << ", ";
      first = false;
      out << "s" << coord << "=" << value;
    }
    out << "} separates " << point_to_string(w.a) << " and " << point_to_string(w.b) << "\n";
  }
  if (cert.diagonal) {
    out << "diagonal: length " << cert.diagonal->length << " at "
        << point_to_string(cert.diagonal->witness)
        << (cert.diagonal->corner ? " (corner point)" : "") << "\n";
  } else {
    out << "diagonal: none\n";
  }
  if (cert.type_skipped_cap)
    out << "candidate type: skipped (cap)\n";
  else if (cert.type)
    out << "candidate type: " << to_string(cert.type->type) << "\n";
  out << "unsigned min-set unique for all outputs: "
      << (cert.unsigned_unique_for_all_outputs ? "yes" : "no") << "\n";
  out << "signed min-set at most one for all outputs: ";
  switch (cert.signed_uniqueness.at_most_one) {
    case Verdict::yes: out << "yes"; break;
    case Verdict::no: out << "no"; break;
    case Verdict::unknown: out << "unknown (non-Boolean)"; break;
  }
  out << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// suggestions

inline ordered_json suggest_to_json(const SuggestResult& result) {
  ordered_json doc;
  doc["command"] = "suggest";
  doc["already_unique"] = result.already_unique;
  doc["suggestions"] = ordered_json::array();
  for (const Suggestion& s : result.suggestions) {
    ordered_json added = ordered_json::array();
    for (const Point& p : s.added) added.push_back(point_to_json(p));
    doc["suggestions"].push_back(
        {{"added_points", added}, {"resulting_unique", s.resulting_unique}});
  }
  return doc;
}

inline SuggestResult suggest_from_json(const nlohmann::json& doc) {
  SuggestResult result;
  result.already_unique = doc.at("already_unique").get<bool>();
  for (const auto& item : doc.at("suggestions")) {
    Suggestion s;
    for (const auto& p : item.at("added_points")) s.added.push_back(point_from_json(p));
    s.resulting_unique = item.at("resulting_unique").get<bool>();
    result.suggestions.push_back(std::move(s));
  }
  return result;
}

inline std::string suggest_to_text(const SuggestResult& result) {
  std::ostringstream out;
  if (result.already_unique) {
    out << "already unique: the input set is cylindrically connected\n";
    return out.str();
  }
  if (result.suggestions.empty()) {
    out << "no extension within the budget makes the set cylindrically connected\n";
    return out.str();
  }
  out << "extensions guaranteeing a unique min-set (" << result.suggestions.size() << "):\n";
  for (const Suggestion& s : result.suggestions) {
    out << " ";
    for (const Point& p : s.added) out << " " << point_to_string(p);
    out << "\n";
  }
  return out.str();
}

}  // namespace minwire
