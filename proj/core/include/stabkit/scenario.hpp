#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "stabkit/catalog.hpp"
#include "stabkit/knot.hpp"
#include "stabkit/metabelian.hpp"

namespace stabkit {

/// Scenario mini-language.
///
///   knot      := id | "sum(" knot ("," knot)* ")" | "sum^" n "(" knot ")"
///   discs     := term ("+" term)*            one term per catalog summand
///   term      := name ["^" n] | id "." name ["^" n]
///   two-knot  := part ("#" part)*
///   part      := "unknot" | "double(" id "." name ")" ["^" n]
///   satellite := "thmC(" key "=" value ("," key "=" value)* ")" | scenario JSON
///                keys: g (N = 4g), N, base, companion (as id.name; default 6_1.std)
///
/// Scenario JSON: {"base", "base_disc", "companion", "companion_disc", "copies"}.
struct ResolvedKnot {
  SeifertKnot knot;
  std::vector<std::string> parts;  // catalog ids of the connected summands, in order
};

ResolvedKnot resolve_knot(const Catalog& catalog, std::string_view ref);

SurgeryDisc resolve_disc(const Catalog& catalog, const ResolvedKnot& knot, std::string_view spec);

/// "id.name"
SurgeryDisc resolve_disc_ref(const Catalog& catalog, std::string_view ref);

TwoKnotModel resolve_two_knot(const Catalog& catalog, std::string_view ref);

SatelliteScenario resolve_satellite(const Catalog& catalog, std::string_view ref);

/// Splits on `sep` outside parentheses; trims whitespace.
std::vector<std::string> split_top_level(std::string_view text, char sep);

}  // namespace stabkit
