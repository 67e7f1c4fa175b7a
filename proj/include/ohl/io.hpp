#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "ohl/report.hpp"

namespace ohl::io {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

struct RunOptions {
  std::size_t search_bound = 40320;
};

struct RunResult {
  std::string kind;
  std::string backend;
  CheckReport report;
};

// Throws ParseError.
json parse_structure(const std::string& text);
// Loads and checks a structure document. Throws SchemaError, or the library
// error that made the data unusable.
RunResult run_structure(const json& doc, const RunOptions& opt = {});

std::string fnv1a64(const std::string& bytes);
ordered_json report_json(const RunResult& r, const std::string& digest, const std::optional<std::string>& timestamp);
// One line per record plus a summary line.
std::string report_text(const RunResult& r);

struct DemoParams {
  std::size_t size = 2;
  std::string group = "z2";
  std::int64_t p = 2;
  std::size_t max_n = 2;
};

// Structure document for a named generator. Throws OutOfBounds.
ordered_json demo_structure(const std::string& name, const DemoParams& params);

}  // namespace ohl::io
