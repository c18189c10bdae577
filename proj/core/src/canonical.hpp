#pragma once

#include <json.hpp>

#include "edgechain/errors.hpp"

namespace edgechain {

// Canonical serialization: UTF-8, keys sorted, no insignificant
// whitespace, integers in decimal. Fractions never appear as JSON floats —
// they are rendered to decimal strings (to_decimal) before they reach a
// payload, and this guard keeps it that way.
inline void reject_floats(const nlohmann::json& value) {
  if (value.is_number_float()) {
    throw Error(Errc::InvalidValue,
                "canonical payloads carry fractions as decimal strings, not floats");
  }
  if (value.is_object() || value.is_array()) {
    for (const auto& item : value) reject_floats(item);
  }
}

inline std::string canonical_dump(const nlohmann::json& value) {
  reject_floats(value);
  return value.dump();
}

}  // namespace edgechain
