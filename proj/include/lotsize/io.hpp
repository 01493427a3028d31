#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "lotsize/core.hpp"

// JSON interchange: instance files, plan/scenario files, reports, and the
// canonical digest used to tie reports to inputs. Field names are stable and
// numbers are plain decimals.

namespace lotsize::io {

using json = nlohmann::ordered_json;

// Thrown for anything wrong with input files: parse errors, missing fields,
// bad lengths. The CLI maps it to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Instance instance_from_json(const json& j);
json instance_to_json(const Instance& inst);

Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

// Plan files carry {"x": [...]} (amounts); {"X": [...]} (cumulative) is also
// accepted and differenced.
ProductionPlan load_plan(const std::string& path, int T);
json plan_to_json(const ProductionPlan& plan);

// Scenario files carry {"d": [...]} (cumulative demands).
Scenario load_scenario(const std::string& path, int T);

// FNV-1a over the canonical serialization; stable across runs and platforms.
std::string instance_digest(const Instance& inst);

// Logging gated by ROBUST_LOTSIZE_LOG in {off, info, debug}; writes to
// stderr so reports on stdout stay machine-readable.
enum class LogLevel { off = 0, info = 1, debug = 2 };
LogLevel log_level();
void log_info(const std::string& msg);
void log_debug(const std::string& msg);

}  // namespace lotsize::io
