#include "stabkit/catalog.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "stabkit/error.hpp"

namespace stabkit {

namespace {

using nlohmann::json;

Integer json_integer(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Integer(std::to_string(v.get<long long>()));
  if (v.is_string()) return parse_integer(v.get<std::string>());
  throw Error(ErrorKind::InvalidInput, where + ": expected an integer");
}

const json& field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw Error(ErrorKind::InvalidInput, where + ": missing field \"" + key + "\"");
  return *it;
}

Matrix<Integer> seifert_matrix(const json& rows, const std::string& where) {
  if (!rows.is_array()) throw Error(ErrorKind::InvalidInput, where + ": seifert must be a list of rows");
  const std::size_t n = rows.size();
  Matrix<Integer> v(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n)
      throw Error(ErrorKind::InvalidInput, where + ": seifert matrix must be square");
    for (std::size_t j = 0; j < n; ++j) v(i, j) = json_integer(rows[i][j], where);
  }
  return v;
}

Matrix<Integer> curve_matrix(const json& cols, std::size_t rows, const std::string& where) {
  if (!cols.is_array()) throw Error(ErrorKind::InvalidInput, where + ": curves must be a list of column vectors");
  Matrix<Integer> c(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (!cols[j].is_array() || cols[j].size() != rows)
      throw Error(ErrorKind::InvalidInput,
                  where + ": curve " + std::to_string(j + 1) + " must have " + std::to_string(rows) +
                      " coordinates");
    for (std::size_t i = 0; i < rows; ++i) c(i, j) = json_integer(cols[j][i], where);
  }
  return c;
}

CatalogEntry parse_entry(const json& e, const std::string& source) {
  if (!e.is_object()) throw Error(ErrorKind::InvalidInput, source + ": catalog entry must be an object");
  const json& name = field(e, "name", source);
  if (!name.is_string()) throw Error(ErrorKind::InvalidInput, source + ": name must be a string");
  CatalogEntry out;
  out.id = name.get<std::string>();
  const std::string where = "catalog entry '" + out.id + "'";
  try {
    Matrix<Integer> v = seifert_matrix(field(e, "seifert", where), where);
    if (auto g = e.find("genus"); g != e.end()) {
      if (!g->is_number_integer() || g->get<long long>() < 0 ||
          static_cast<std::size_t>(g->get<long long>()) * 2 != v.rows())
        throw Error(ErrorKind::InvalidInput, "genus does not match the " + std::to_string(v.rows()) +
                                                 "x" + std::to_string(v.rows()) + " Seifert matrix");
    }
    out.knot = SeifertKnot(out.id, v);
    if (auto d = e.find("discs"); d != e.end()) {
      if (!d->is_array()) throw Error(ErrorKind::InvalidInput, "discs must be a list");
      for (const auto& disc : *d) {
        const json& dn = field(disc, "name", where);
        if (!dn.is_string()) throw Error(ErrorKind::InvalidInput, "disc name must be a string");
        std::string dname = dn.get<std::string>();
        out.discs.emplace_back(dname, out.knot,
                               curve_matrix(field(disc, "curves", where), v.rows(),
                                            where + " disc '" + dname + "'"));
      }
    }
    if (auto eta = e.find("eta"); eta != e.end()) {
      if (!eta->is_array()) throw Error(ErrorKind::InvalidInput, "eta must be a list of integers");
      for (const auto& x : *eta) out.eta.push_back(json_integer(x, where));
    }
    if (auto n = e.find("notes"); n != e.end() && n->is_string()) out.notes = n->get<std::string>();
  } catch (const Error& err) {
    if (std::string(err.what()).rfind(where, 0) == 0) throw;
    throw Error(err.kind(), where + ": " + err.what());
  }
  return out;
}

}  // namespace

const SurgeryDisc& CatalogEntry::disc(const std::string& name) const {
  for (const auto& d : discs)
    if (d.name() == name) return d;
  throw Error(ErrorKind::InvalidInput, "unknown disc reference '" + id + "." + name + "'");
}

Catalog Catalog::builtin() {
  Catalog c;
  {
    CatalogEntry e;
    e.id = "9_46";
    e.knot = SeifertKnot("9_46", Matrix<Integer>{{0, 2}, {1, 0}});
    e.discs.emplace_back("left", e.knot, Matrix<Integer>{{1}, {0}});
    e.discs.emplace_back("right", e.knot, Matrix<Integer>{{0}, {1}});
    e.notes = "pretzel knot P(3,-3,3); genus 1 with two ribbon discs from surgery on either "
              "0-framed band core";
    c.insert(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "6_1";
    e.knot = SeifertKnot("6_1", Matrix<Integer>{{1, 1}, {0, -2}});
    e.discs.emplace_back("std", e.knot, Matrix<Integer>{{1}, {1}});
    e.eta = {Integer(1), Integer(0)};
    e.notes = "stevedore knot; ribbon disc from the 0-framed curve a+b, infection curve eta "
              "with class the first generator";
    c.insert(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "unknot";
    e.knot = SeifertKnot::unknot();
    e.discs.emplace_back("std", e.knot, Matrix<Integer>(0, 0));
    e.notes = "trivial knot bounding the standard disc";
    c.insert(std::move(e));
  }
  return c;
}

void Catalog::merge_json(const std::string& text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, source + ": malformed JSON: " + e.what());
  }
  const json* list = &doc;
  if (doc.is_object() && doc.contains("knots")) list = &doc["knots"];
  if (list->is_object()) {
    insert(parse_entry(*list, source));
    return;
  }
  if (!list->is_array())
    throw Error(ErrorKind::InvalidInput, source + ": expected a list of catalog entries");
  for (const auto& e : *list) insert(parse_entry(e, source));
}

void Catalog::merge_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot read catalog " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  merge_json(text.str(), path.string());
}

void Catalog::insert(CatalogEntry entry) {
  std::string id = entry.id;
  entries_.insert_or_assign(std::move(id), std::move(entry));
}

const CatalogEntry& Catalog::at(const std::string& id) const {
  auto it = entries_.find(id);
  if (it == entries_.end()) throw Error(ErrorKind::InvalidInput, "unknown knot reference '" + id + "'");
  return it->second;
}

std::vector<std::string> Catalog::ids() const {
  std::vector<std::string> out;
  for (const auto& [id, e] : entries_) out.push_back(id);
  return out;
}

}  // namespace stabkit
