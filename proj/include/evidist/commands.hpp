#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evidist/experiments.hpp"
#include "evidist/metrics.hpp"

namespace evidist::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

enum class Metric { Jousselme, Sunberg, Generalized };

std::optional<Metric> parse_metric(std::string_view name) noexcept;
std::optional<SweepKind> parse_sweep_kind(std::string_view name) noexcept;

/// Fixed-point, 12 digits after the decimal point.
std::string format_value(double value);

/// `step,d_jousselme,d_sunberg,d_generalized` header plus one LF-terminated
/// row per result.
std::string sweep_csv(const std::vector<SweepResult>& results);

// Each command writes results to `out`, diagnostics to `err`, and returns
// the process exit code.

int cmd_distance(const std::filesystem::path& file, std::string_view first, std::string_view second,
                 Metric metric, const DistanceParams& params, std::ostream& out, std::ostream& err);

/// Writes the combined BPA to `out_path`, or to `out` when absent.
int cmd_combine(const std::filesystem::path& file, std::string_view first, std::string_view second,
                const std::optional<std::filesystem::path>& out_path, std::ostream& out,
                std::ostream& err);

/// With `verbose`, reports negative-clamp events of the quadratic form on `err`.
int cmd_sweep(SweepKind kind, const DistanceParams& params, const std::filesystem::path& out_path,
              bool verbose, std::ostream& out, std::ostream& err);

}  // namespace evidist::cli
