#include "stochstab/io/document.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace stochstab::io {
namespace {

using nlohmann::json;

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + offset, '\n'));
}

Rational rational_field(const json& value, std::size_t line, const std::string& field) {
  try {
    if (value.is_string()) return Rational::parse(value.get<std::string>());
    if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, field + ": " + e.what());
  }
  throw ParseError(line, field + ": expected a rational string such as \"3/2\"");
}

std::string string_field(const json& obj, const char* key, std::size_t line, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string())
    throw ParseError(line, where + "." + key + ": expected a string");
  return it->get<std::string>();
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> problems)
    : std::runtime_error("invalid document: " + join(problems, "; ")), problems_(std::move(problems)) {}

InputDocument parse_document(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json_document(text);
  return parse_line_document(text);
}

InputDocument parse_json_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1), e.what());
  }
  if (!root.is_object()) throw ParseError(1, "top level must be an object");

  InputDocument doc;
  auto states = root.find("states");
  if (states == root.end() || !states->is_array()) throw ParseError(1, "states: expected an array");
  for (std::size_t i = 0; i < states->size(); ++i) {
    if (!(*states)[i].is_string()) throw ParseError(1, "states[" + std::to_string(i) + "]: expected a string");
    doc.states.push_back((*states)[i].get<std::string>());
  }

  if (auto arcs = root.find("arcs"); arcs != root.end()) {
    if (!arcs->is_array()) throw ParseError(1, "arcs: expected an array");
    for (std::size_t i = 0; i < arcs->size(); ++i) {
      const json& a = (*arcs)[i];
      const std::string where = "arcs[" + std::to_string(i) + "]";
      if (!a.is_object()) throw ParseError(1, where + ": expected an object");
      InputArc arc;
      arc.line = i + 1;
      arc.from = string_field(a, "from", 1, where);
      arc.to = string_field(a, "to", 1, where);
      const bool has_exp = a.contains("exp");
      const bool has_weight = a.contains("weight");
      if (has_exp == has_weight) throw ParseError(1, where + ": give exactly one of exp, weight");
      if (has_exp) {
        arc.exponent = rational_field(a["exp"], 1, where + ".exp");
      } else {
        const std::string w = string_field(a, "weight", 1, where);
        if (w == "0") {
          arc.exponent.reset();
        } else if (w == "1") {
          arc.exponent = Rational(0);
        } else if (w.starts_with("e^")) {
          arc.exponent = rational_field(json(w.substr(2)), 1, where + ".weight");
        } else {
          throw ParseError(1, where + ".weight: expected \"0\", \"1\" or \"e^alpha\"");
        }
      }
      if (a.contains("coeff")) arc.coeff = rational_field(a["coeff"], 1, where + ".coeff");
      doc.arcs.push_back(std::move(arc));
    }
  }
  validate(doc);
  return doc;
}

InputDocument parse_line_document(std::string_view text) {
  InputDocument doc;
  bool declared = false;
  std::vector<std::string> seen;
  auto note = [&](const std::string& name) {
    if (!declared && std::find(seen.begin(), seen.end(), name) == seen.end()) seen.push_back(name);
  };

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    if (tok.front() == "states") {
      if (declared || !doc.arcs.empty()) throw ParseError(line_no, "states must be declared once, before arcs");
      declared = true;
      doc.states.assign(tok.begin() + 1, tok.end());
      continue;
    }
    if (tok.size() < 3 || tok.size() > 4) throw ParseError(line_no, "expected: from to exponent [coeff]");
    InputArc arc;
    arc.line = line_no;
    arc.from = tok[0];
    arc.to = tok[1];
    try {
      arc.exponent = Rational::parse(tok[2]);
      if (tok.size() == 4) arc.coeff = Rational::parse(tok[3]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
    note(arc.from);
    note(arc.to);
    doc.arcs.push_back(std::move(arc));
  }
  if (!declared) doc.states = std::move(seen);
  validate(doc);
  return doc;
}

void validate(const InputDocument& doc) {
  std::vector<std::string> problems;
  if (doc.states.empty()) problems.push_back("no states declared");

  std::set<std::string> names;
  for (const auto& s : doc.states) {
    if (s.empty()) problems.push_back("empty state name");
    if (!names.insert(s).second) problems.push_back("duplicate state '" + s + "'");
  }

  std::set<std::pair<std::string, std::string>> pairs;
  for (const auto& a : doc.arcs) {
    const std::string where = "arc " + std::to_string(a.line) + " (" + a.from + "->" + a.to + ")";
    if (!names.count(a.from)) problems.push_back(where + ": undeclared state '" + a.from + "'");
    if (!names.count(a.to)) problems.push_back(where + ": undeclared state '" + a.to + "'");
    if (a.from == a.to) problems.push_back(where + ": self-loops are not representable");
    if (!pairs.emplace(a.from, a.to).second) problems.push_back(where + ": duplicate arc");
    if (a.exponent && a.exponent->sign() < 0)
      problems.push_back(where + ": negative exponent " + a.exponent->to_string());
    if (a.coeff.sign() <= 0) problems.push_back(where + ": coefficient must be positive");
  }
  if (!problems.empty()) throw ValidationError(std::move(problems));
}

PerturbationGraph<MonomialClass> to_graph(const InputDocument& doc) {
  auto g = PerturbationGraph<MonomialClass>::from_names(doc.states);
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < doc.states.size(); ++i) index[doc.states[i]] = i;
  for (const auto& a : doc.arcs)
    if (a.exponent) g.set_weight(index.at(a.from), index.at(a.to), MonomialClass::exp(*a.exponent));
  return g;
}

oracle::OffDiagonal to_numeric_spec(const InputDocument& doc) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < doc.states.size(); ++i) index[doc.states[i]] = i;
  oracle::OffDiagonal spec;
  for (const auto& a : doc.arcs)
    if (a.exponent)
      spec.emplace(std::make_pair(index.at(a.from), index.at(a.to)), oracle::MonomialSpec(a.coeff, *a.exponent));
  return spec;
}

}  // namespace stochstab::io
