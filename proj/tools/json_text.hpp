#pragma once

#include <string>

#include "json.hpp"

namespace bicoeff::cli {

using Json = nlohmann::ordered_json;

// %.{digits}g rendering shared by every output format, so a value prints the
// same bytes wherever it appears. Non-finite values render as "null".
std::string format_double(double x, int digits);

// Canonical serialization: insertion key order, two-space indent, doubles at
// twelve significant digits. parse + render is byte-stable (doubles carry
// almost sixteen digits, so a twelve-digit decimal survives the round trip).
std::string render_json(const Json& j);

}  // namespace bicoeff::cli
