#include "json_text.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>

namespace bicoeff::cli {

namespace {

void append_escaped(std::string& out, const std::string& s) {
  out += '"';
  for (unsigned char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      default:
        if (ch < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
          out += buf;
        } else {
          out += static_cast<char>(ch);
        }
    }
  }
  out += '"';
}

void render_value(std::string& out, const Json& j, int depth) {
  const std::string pad(static_cast<size_t>(depth) * 2, ' ');
  const std::string inner(static_cast<size_t>(depth + 1) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::null:
      out += "null";
      break;
    case Json::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      break;
    case Json::value_t::number_integer:
      out += std::to_string(j.get<std::int64_t>());
      break;
    case Json::value_t::number_unsigned:
      out += std::to_string(j.get<std::uint64_t>());
      break;
    case Json::value_t::number_float:
      out += format_double(j.get<double>(), 12);
      break;
    case Json::value_t::string:
      append_escaped(out, j.get<std::string>());
      break;
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        break;
      }
      out += "[\n";
      bool first = true;
      for (const auto& item : j) {
        if (!first) out += ",\n";
        first = false;
        out += inner;
        render_value(out, item, depth + 1);
      }
      out += '\n';
      out += pad;
      out += ']';
      break;
    }
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        break;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += inner;
        append_escaped(out, it.key());
        out += ": ";
        render_value(out, it.value(), depth + 1);
      }
      out += '\n';
      out += pad;
      out += '}';
      break;
    }
    default:
      out += "null";
  }
}

}  // namespace

std::string format_double(double x, int digits) {
  if (!std::isfinite(x)) return "null";
  if (x == 0.0) return "0";  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
  return buf;
}

std::string render_json(const Json& j) {
  std::string out;
  render_value(out, j, 0);
  out += '\n';
  return out;
}

}  // namespace bicoeff::cli
