#pragma once

// Structured command reports. Every CLI command produces a Report; the
// payload is plain JSON data with canonically ordered keys, so rendering
// the same report twice gives identical bytes. Timing lives outside the
// payload and is never serialized, which keeps reports reproducible.

#include <string>
#include <vector>

#include <json.hpp>

namespace monoidlab {

struct ReportInput {
  std::string path;
  std::string digest;
};

struct Report {
  std::string command;
  std::vector<ReportInput> inputs;
  nlohmann::json payload;
  std::vector<std::string> warnings;
  double elapsed_ms = 0.0;
};

// 64-bit FNV-1a of a byte string, rendered as 16 hex digits.
std::string fnv1a_hex(const std::string& data);

// Machine format: a single JSON object with keys command, inputs, payload,
// warnings. Parsing it and serializing again reproduces the same bytes.
std::string render_json(const Report& r);

// Human format: an indented walk of the same data.
std::string render_human(const Report& r);

}  // namespace monoidlab
