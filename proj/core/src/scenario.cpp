#include "stabkit/scenario.hpp"

#include <cctype>
#include <charconv>
#include <map>

#include <json.hpp>

#include "stabkit/error.hpp"

namespace stabkit {

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

[[noreturn]] void malformed(std::string_view ref, const std::string& why) {
  throw Error(ErrorKind::InvalidInput, "malformed reference '" + std::string(ref) + "': " + why);
}

std::size_t parse_count(std::string_view text, std::string_view ref) {
  std::string t = trim(text);
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), n);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) malformed(ref, "expected a count, got '" + t + "'");
  return n;
}

bool is_name(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-')) return false;
  return true;
}

/// "head(inner)" -> inner, if text has that exact shape.
bool unwrap(std::string_view text, std::string_view head, std::string& inner) {
  if (text.size() < head.size() + 2 || text.substr(0, head.size()) != head ||
      text[head.size()] != '(' || text.back() != ')')
    return false;
  int depth = 0;
  for (std::size_t i = head.size(); i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')' && --depth == 0 && i + 1 != text.size()) return false;
  }
  inner = std::string(text.substr(head.size() + 1, text.size() - head.size() - 2));
  return true;
}

/// Splits "x^n" into ("x", n); n = 1 without an exponent outside parentheses.
std::pair<std::string, std::size_t> power(std::string_view text, std::string_view ref) {
  std::size_t caret = text.rfind('^');
  std::size_t close = text.rfind(')');
  if (caret == std::string_view::npos || (close != std::string_view::npos && caret < close))
    return {trim(text), 1};
  return {trim(text.substr(0, caret)), parse_count(text.substr(caret + 1), ref)};
}

void flatten(const Catalog& catalog, std::string_view ref, std::vector<std::string>& parts) {
  std::string t = trim(ref);
  std::string inner;
  if (t.rfind("sum^", 0) == 0) {
    std::size_t open = t.find('(');
    if (open == std::string::npos || t.back() != ')') malformed(t, "expected sum^n(knot)");
    std::size_t n = parse_count(std::string_view(t).substr(4, open - 4), t);
    std::string body = t.substr(open + 1, t.size() - open - 2);
    for (std::size_t i = 0; i < n; ++i) flatten(catalog, body, parts);
    return;
  }
  if (unwrap(t, "sum", inner)) {
    auto items = split_top_level(inner, ',');
    if (items.empty()) malformed(t, "empty sum");
    for (const auto& item : items) flatten(catalog, item, parts);
    return;
  }
  if (!is_name(t)) malformed(t, "expected a catalog id, sum(...) or sum^n(...)");
  catalog.at(t);
  parts.push_back(t);
}

}  // namespace

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == sep && depth == 0)) {
      std::string item = trim(text.substr(start, i - start));
      if (!item.empty() || i != text.size() || !out.empty()) out.push_back(item);
      start = i + 1;
    } else if (text[i] == '(') {
      ++depth;
    } else if (text[i] == ')') {
      --depth;
    }
  }
  for (const auto& item : out)
    if (item.empty()) malformed(text, "empty item");
  return out;
}

ResolvedKnot resolve_knot(const Catalog& catalog, std::string_view ref) {
  ResolvedKnot out;
  flatten(catalog, ref, out.parts);
  if (out.parts.size() == 1) {
    out.knot = catalog.at(out.parts.front()).knot;
    return out;
  }
  std::vector<SeifertKnot> knots;
  for (const auto& id : out.parts) knots.push_back(catalog.at(id).knot);
  out.knot = SeifertKnot(trim(ref), connected_sum(knots).seifert());
  return out;
}

SurgeryDisc resolve_disc(const Catalog& catalog, const ResolvedKnot& knot, std::string_view spec) {
  std::vector<std::pair<std::string, std::string>> names;  // (catalog id, disc name)
  for (const auto& term : split_top_level(spec, '+')) {
    auto [base, n] = power(term, spec);
    std::string id, name = base;
    if (auto dot = base.find('.'); dot != std::string::npos) {
      id = base.substr(0, dot);
      name = base.substr(dot + 1);
    }
    if (!is_name(name) || (!id.empty() && !is_name(id))) malformed(spec, "bad disc term '" + term + "'");
    for (std::size_t i = 0; i < n; ++i) names.emplace_back(id, name);
  }
  if (names.size() != knot.parts.size())
    malformed(spec, std::to_string(names.size()) + " disc terms for " +
                        std::to_string(knot.parts.size()) + " summands");
  std::vector<SurgeryDisc> discs;
  for (std::size_t i = 0; i < names.size(); ++i) {
    const auto& [id, name] = names[i];
    if (!id.empty() && id != knot.parts[i])
      malformed(spec, "disc '" + id + "." + name + "' does not bound summand " +
                          std::to_string(i + 1) + " (" + knot.parts[i] + ")");
    discs.push_back(catalog.at(knot.parts[i]).disc(name));
  }
  if (discs.size() == 1) return discs.front();
  return boundary_connect_sum(discs);
}

SurgeryDisc resolve_disc_ref(const Catalog& catalog, std::string_view ref) {
  std::string t = trim(ref);
  auto dot = t.find('.');
  if (dot == std::string::npos) malformed(t, "expected id.disc");
  return catalog.at(t.substr(0, dot)).disc(t.substr(dot + 1));
}

TwoKnotModel resolve_two_knot(const Catalog& catalog, std::string_view ref) {
  std::vector<TwoKnotModel> parts;
  for (const auto& item : split_top_level(ref, '#')) {
    auto [base, n] = power(item, ref);
    std::string inner;
    TwoKnotModel one;
    if (base == "unknot")
      one = unknotted_sphere();
    else if (unwrap(base, "double", inner))
      one = double_of_disc(resolve_disc_ref(catalog, inner));
    else
      malformed(ref, "expected unknot or double(id.disc), got '" + base + "'");
    for (std::size_t i = 0; i < n; ++i) parts.push_back(one);
  }
  return parts.size() == 1 ? parts.front() : two_knot_sum(parts);
}

SatelliteScenario resolve_satellite(const Catalog& catalog, std::string_view ref) {
  std::string t = trim(ref);
  std::string base = "6_1.std", companion = "6_1.std";
  std::size_t copies = 0;
  if (!t.empty() && t.front() == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(t);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorKind::InvalidInput, std::string("malformed scenario JSON: ") + e.what());
    }
    auto str = [&](const char* key) {
      if (!doc.contains(key) || !doc[key].is_string())
        throw Error(ErrorKind::InvalidInput, std::string("scenario JSON: missing string field \"") + key + "\"");
      return doc[key].get<std::string>();
    };
    base = str("base") + "." + str("base_disc");
    companion = str("companion") + "." + str("companion_disc");
    if (!doc.contains("copies") || !doc["copies"].is_number_unsigned())
      throw Error(ErrorKind::InvalidInput, "scenario JSON: \"copies\" must be a non-negative integer");
    copies = doc["copies"].get<std::size_t>();
  } else {
    std::string inner;
    if (!unwrap(t, "thmC", inner)) malformed(t, "expected thmC(...) or scenario JSON");
    bool have_count = false;
    for (const auto& kv : split_top_level(inner, ',')) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) malformed(t, "expected key=value, got '" + kv + "'");
      std::string key = trim(std::string_view(kv).substr(0, eq));
      std::string value = trim(std::string_view(kv).substr(eq + 1));
      if (key == "g") {
        copies = 4 * parse_count(value, t);
        have_count = true;
      } else if (key == "N") {
        copies = parse_count(value, t);
        have_count = true;
      } else if (key == "base") {
        base = value;
      } else if (key == "companion") {
        companion = value;
      } else {
        malformed(t, "unknown key '" + key + "'");
      }
    }
    if (!have_count) malformed(t, "thmC needs g=... or N=...");
  }
  SurgeryDisc base_disc = resolve_disc_ref(catalog, base);
  const CatalogEntry& entry = catalog.at(base.substr(0, base.find('.')));
  if (entry.eta.empty())
    throw Error(ErrorKind::Hypothesis,
                "eta generates A(R): no infection curve recorded for " + entry.id);
  return make_satellite_scenario(base_disc, entry.eta, true, resolve_disc_ref(catalog, companion),
                                 copies);
}

}  // namespace stabkit
