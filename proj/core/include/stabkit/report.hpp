#pragma once

#include <string>

#include "stabkit/bounds.hpp"

namespace stabkit {

/// Aligned human-readable report; an infinite upper bound prints as "inf".
std::string format_text(const BoundReport& r);

/// {"quantity", "lower", "upper", "components", "provenance"}; infinite upper is "inf".
std::string format_json(const BoundReport& r);

}  // namespace stabkit
