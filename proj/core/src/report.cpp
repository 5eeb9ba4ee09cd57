#include "stabkit/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace stabkit {

std::string format_text(const BoundReport& r) {
  std::ostringstream out;
  auto row = [&](const std::string& key, const std::string& value) {
    out << std::left << std::setw(14) << key << value << '\n';
  };
  row("quantity", to_string(r.quantity));
  row("lower", std::to_string(r.lower));
  row("upper", r.upper ? std::to_string(*r.upper) : "inf");
  for (const auto& [name, value] : r.components) row("  " + name, std::to_string(value));
  out << "provenance\n";
  for (const auto& line : r.provenance) out << "  - " << line << '\n';
  return out.str();
}

std::string format_json(const BoundReport& r) {
  nlohmann::ordered_json j;
  j["quantity"] = to_string(r.quantity);
  j["lower"] = r.lower;
  if (r.upper)
    j["upper"] = *r.upper;
  else
    j["upper"] = "inf";
  j["components"] = nlohmann::ordered_json::object();
  for (const auto& [name, value] : r.components) j["components"][name] = value;
  j["provenance"] = r.provenance;
  return j.dump(2);
}

}  // namespace stabkit
