#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "busecoarse/io.hpp"
#include "busecoarse/metric_space.hpp"

namespace busecoarse::cli {

inline constexpr const char* kVersion = "0.3.0";

enum ExitCode : int {
    kSuccess = 0,
    kInternal = 1,
    kUsage = 2,
    kPrecondition = 3,
    kCheckFailed = 4,
};

struct ExperimentConfig {
    std::optional<SpaceDescriptor> space;
    std::string command;
    io::Json parameters = io::Json::object();
    std::uint64_t seed = 0;
    double tolerance = kDefaultTolerance;
};

/// Names accepted as `command`.
const std::vector<std::string>& command_names();

/// Parameter keys accepted by `command`; throws UsageError for unknown commands.
const std::vector<std::string>& parameter_names(const std::string& command);

/// Value of BUSECOARSE_TOLERANCE, or kDefaultTolerance when unset. Throws
/// UsageError when set to something other than a positive finite number.
double tolerance_from_env();

/**
 * Reads {"command": ..., "space": ..., "seed": ..., "tolerance": ...,
 * "parameters": {...}}. Keys other than these four are also treated as
 * parameters, so flat configs work. Throws UsageError on schema violations.
 */
ExperimentConfig parse_config(const io::Json& j, double default_tolerance);

struct RunOutcome {
    io::Json report;
    int exit_code = kSuccess;
};

/// Executes one command. Module errors surface as exceptions.
RunOutcome run(const ExperimentConfig& config);

/// parse_config + run with every error mapped to its exit code and an error report.
RunOutcome run_guarded(const io::Json& config, double default_tolerance);

}  // namespace busecoarse::cli
