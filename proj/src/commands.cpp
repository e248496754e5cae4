#include "evidist/commands.hpp"

#include <array>
#include <fstream>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "evidist/combine.hpp"
#include "evidist/document.hpp"
#include "evidist/error.hpp"

namespace evidist::cli {

std::optional<Metric> parse_metric(std::string_view name) noexcept {
  if (name == "jousselme") return Metric::Jousselme;
  if (name == "sunberg") return Metric::Sunberg;
  if (name == "generalized") return Metric::Generalized;
  return std::nullopt;
}

std::optional<SweepKind> parse_sweep_kind(std::string_view name) noexcept {
  if (name == "shifted") return SweepKind::Shifted;
  if (name == "growing") return SweepKind::Growing;
  return std::nullopt;
}

std::string format_value(double value) {
  // Keep "-0.000000000000" out of the output.
  if (value == 0.0) value = 0.0;
  return fmt::format("{:.12f}", value);
}

std::string sweep_csv(const std::vector<SweepResult>& results) {
  std::string out = "step,d_jousselme,d_sunberg,d_generalized\n";
  for (const auto& r : results) {
    out += fmt::format("{},{},{},{}\n", r.step, format_value(r.d_jousselme), format_value(r.d_sunberg),
                       format_value(r.d_generalized));
  }
  return out;
}

namespace {

void write_file(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::IoError, fmt::format("cannot open '{}' for writing", path.string()));
  file.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  file.close();
  if (!file) throw Error(ErrorCode::IoError, fmt::format("failed writing '{}'", path.string()));
}

int report(std::ostream& err, const std::exception& e) {
  fmt::print(err, "evidist: {}\n", e.what());
  return kExitDomainError;
}

}  // namespace

int cmd_distance(const std::filesystem::path& file, std::string_view first, std::string_view second,
                 Metric metric, const DistanceParams& params, std::ostream& out, std::ostream& err) {
  try {
    params.validate();
    const auto doc = load_bpa_file(file);
    const auto& m1 = doc.find(first);
    const auto& m2 = doc.find(second);
    double d = 0.0;
    switch (metric) {
      case Metric::Jousselme: d = distance_jousselme(m1, m2); break;
      case Metric::Sunberg: d = distance_sunberg(m1, m2, params.hausdorff_k); break;
      case Metric::Generalized: d = distance_generalized(m1, m2, params); break;
    }
    fmt::print(out, "{}\n", format_value(d));
    return kExitOk;
  } catch (const std::exception& e) {
    return report(err, e);
  }
}

int cmd_combine(const std::filesystem::path& file, std::string_view first, std::string_view second,
                const std::optional<std::filesystem::path>& out_path, std::ostream& out,
                std::ostream& err) {
  try {
    const auto doc = load_bpa_file(file);
    auto combined = dempster_combine(doc.find(first), doc.find(second));
    BpaDocument result{doc.frame, {{fmt::format("{}_{}", first, second), std::move(combined)}}};
    const auto text = emit_bpa_document(result);
    if (out_path) {
      write_file(*out_path, text);
    } else {
      out << text;
    }
    return kExitOk;
  } catch (const std::exception& e) {
    return report(err, e);
  }
}

int cmd_sweep(SweepKind kind, const DistanceParams& params, const std::filesystem::path& out_path,
              bool verbose, std::ostream& out, std::ostream& err) {
  try {
    const auto results = run_sweep(kind, params);
    write_file(out_path, sweep_csv(results));
    if (verbose) {
      constexpr std::array<std::string_view, 3> names{"jousselme", "sunberg", "generalized"};
      std::size_t events = 0;
      for (const auto& r : results) {
        for (std::size_t m = 0; m < names.size(); ++m) {
          if (r.half_quadratic[m] < -kIndefiniteTolerance) {
            fmt::print(err, "step {} {}: half quadratic form {:.6e} < 0, clamped to 0\n", r.step,
                       names[m], r.half_quadratic[m]);
            ++events;
          }
        }
      }
      fmt::print(err, "sweep {}: {} steps, {} negative-clamp event(s), alpha = {}, K = {}\n",
                 to_string(kind), results.size(), events, params.alpha, params.hausdorff_k);
    }
    fmt::print(out, "wrote {}\n", out_path.string());
    return kExitOk;
  } catch (const std::exception& e) {
    return report(err, e);
  }
}

}  // namespace evidist::cli
