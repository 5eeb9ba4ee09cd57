#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "stabkit/knot.hpp"

namespace stabkit {

struct CatalogEntry {
  std::string id;
  SeifertKnot knot;
  std::vector<SurgeryDisc> discs;
  /// Coordinates of an infection curve class in A(K); empty if none is recorded.
  std::vector<Integer> eta;
  std::string notes;

  /// Throws InvalidInput naming the entry if no disc has this name.
  const SurgeryDisc& disc(const std::string& name) const;
};

/// Knots by id. Built-in entries: 9_46, 6_1, unknot.
class Catalog {
 public:
  static Catalog builtin();

  /// Adds or replaces entries from JSON: a list of entries or {"knots": [...]}.
  /// Each entry is {"name", "genus", "seifert", "discs": [{"name", "curves"}]}
  /// with optional "eta" and "notes"; curves are column vectors.
  void merge_json(const std::string& text, const std::string& source = "<json>");
  void merge_file(const std::filesystem::path& path);

  void insert(CatalogEntry entry);
  bool contains(const std::string& id) const { return entries_.count(id) != 0; }
  /// Throws InvalidInput "unknown knot reference" for a missing id.
  const CatalogEntry& at(const std::string& id) const;
  std::vector<std::string> ids() const;

 private:
  std::map<std::string, CatalogEntry> entries_;
};

}  // namespace stabkit
