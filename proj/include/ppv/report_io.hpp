#pragma once

#include <string>

#include "ppv/engine.hpp"

namespace ppv {

inline constexpr const char* kReportSchema = "ppv-report/1";

struct InputDocument {
  std::string a1_text, a0_text;
  RatFunc a1, a0;
  EngineOptions options;
};

// Reads {"parameters": [...], "equation": {"a1", "a0"}, "options": {...}}; missing a1/a0 mean 0.
InputDocument read_input_document(const std::string& json_text);
void validate_options(const EngineOptions& o);

std::string report_json(const PPVReport& r, const EngineOptions& o);
std::string report_text(const PPVReport& r, const EngineOptions& o);
// Case tag and Riccati data only.
std::string classify_text(const HDesc& h, const EngineOptions& o);

}  // namespace ppv
