#pragma once
// Serialization helpers shared by the CLI: rationals as "p/q", complex
// numbers as {re, im} decimal-string pairs at full working precision, and
// the common output header block.

#include "shq/mp.hh"

#include <json.hpp>

#include <string>

namespace shq {

inline constexpr const char* tool_version = "1.0.0";

std::string rat_str(const rat& q);
std::string real_str(const real& x);

nlohmann::json cplx_json(const cplx& z);

// schema/tool/version/config echo plus a timestamp field (the one part of
// any output that is allowed to differ between identical runs).
nlohmann::json header_json(const std::string& subcommand, const nlohmann::json& config);

// CSV comment header; mirrors header_json line by line.
std::string header_csv(const std::string& subcommand, const nlohmann::json& config);

// Write to path, or to stdout when path is empty.
void write_output(const std::string& path, const std::string& content);

} // namespace shq
