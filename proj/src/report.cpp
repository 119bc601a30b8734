#include "monoidlab/report.hpp"

#include <cstdint>
#include <sstream>

namespace monoidlab {

namespace {

using nlohmann::json;

// Scalar arrays print inline, nested arrays one row per line, arrays of
// objects as dashed blocks. Objects recurse with two-space indent.

bool is_scalar(const json& j) {
  return j.is_primitive();
}

bool all_scalar(const json& arr) {
  for (const auto& v : arr)
    if (!is_scalar(v)) return false;
  return true;
}

std::string scalar_text(const json& j) {
  if (j.is_null()) return "none";
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

std::string inline_array(const json& arr) {
  std::string out = "[";
  for (size_t i = 0; i < arr.size(); ++i) {
    if (i) out += ", ";
    out += scalar_text(arr[i]);
  }
  return out + "]";
}

void walk(const json& j, int depth, std::ostringstream& out);

void walk_entry(const std::string& label, const json& v, int depth,
                std::ostringstream& out) {
  std::string pad(2 * depth, ' ');
  if (is_scalar(v)) {
    out << pad << label << ": " << scalar_text(v) << "\n";
  } else if (v.is_array() && all_scalar(v)) {
    out << pad << label << ": " << inline_array(v) << "\n";
  } else {
    out << pad << label << ":\n";
    walk(v, depth + 1, out);
  }
}

void walk(const json& j, int depth, std::ostringstream& out) {
  std::string pad(2 * depth, ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      walk_entry(it.key(), it.value(), depth, out);
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (is_scalar(v)) {
        out << pad << "- " << scalar_text(v) << "\n";
      } else if (v.is_array() && all_scalar(v)) {
        out << pad << inline_array(v) << "\n";
      } else {
        out << pad << "-\n";
        walk(v, depth + 1, out);
      }
    }
  } else {
    out << pad << scalar_text(j) << "\n";
  }
}

}  // namespace

std::string fnv1a_hex(const std::string& data) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::string render_json(const Report& r) {
  json doc;
  doc["command"] = r.command;
  doc["inputs"] = json::array();
  for (const auto& in : r.inputs)
    doc["inputs"].push_back({{"digest", in.digest}, {"path", in.path}});
  doc["payload"] = r.payload;
  doc["warnings"] = r.warnings;
  return doc.dump(2) + "\n";
}

std::string render_human(const Report& r) {
  std::ostringstream out;
  out << "command: " << r.command << "\n";
  for (const auto& in : r.inputs)
    out << "input: " << in.path << " (fnv1a " << in.digest << ")\n";
  for (const auto& w : r.warnings) out << "warning: " << w << "\n";
  out << "\n";
  walk(r.payload, 0, out);
  return out.str();
}

}  // namespace monoidlab
