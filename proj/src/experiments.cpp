#include "evidist/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <string>

#include <fmt/format.h>

#include "evidist/error.hpp"

namespace evidist {

std::string canonical_number(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

namespace {

Frame embedded_frame(const std::vector<double>& points) {
  std::vector<double> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  std::vector<ElementLabel> labels;
  std::vector<double> positions;
  for (double p : sorted) {
    auto label = canonical_number(p);
    if (std::find(labels.begin(), labels.end(), label) != labels.end()) continue;
    labels.push_back(std::move(label));
    positions.push_back(p);
  }
  return Frame::create(std::move(labels), std::move(positions));
}

FocalSet points_set(const Frame& frame, std::initializer_list<double> points) {
  std::vector<std::string> labels;
  for (double p : points) labels.push_back(canonical_number(p));
  std::vector<std::string_view> views(labels.begin(), labels.end());
  return frame.subset(views);
}

FocalSet prefix_set(const Frame& frame, int count) {
  const auto bits = count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
  return frame.from_bits(bits & frame.full_mask());
}

}  // namespace

Scenario scenario_shifted(int i) {
  const auto range = sweep_range(SweepKind::Shifted);
  if (i < range.first || i > range.last) {
    throw Error(ErrorCode::StepOutOfRange,
                fmt::format("shift {} is outside [{}, {}]", i, range.first, range.last));
  }
  const double x = i;
  const Frame frame = embedded_frame({2.0, 2.3, 2.5, 2.7, 3.0, x, x + 0.5, x + 1.0});

  Bpa a = Bpa::create(frame, {
                                 {points_set(frame, {2.0}), 0.1},
                                 {points_set(frame, {2.0, 2.3}), 0.2},
                                 {points_set(frame, {2.0, 2.3, 2.5}), 0.4},
                                 {points_set(frame, {2.0, 2.3, 2.5, 2.7}), 0.2},
                                 {points_set(frame, {2.0, 2.3, 2.5, 2.7, 3.0}), 0.1},
                             });
  const double third = 1.0 / 3.0;
  Bpa b = Bpa::create(frame, {
                                 {points_set(frame, {x}), third},
                                 {points_set(frame, {x, x + 0.5}), third},
                                 {points_set(frame, {x, x + 0.5, x + 1.0}), third},
                             });
  return {std::move(a), std::move(b), frame};
}

Scenario scenario_growing(int case_number) {
  const auto range = sweep_range(SweepKind::Growing);
  if (case_number < range.first || case_number > range.last) {
    throw Error(ErrorCode::CaseOutOfRange,
                fmt::format("case {} is outside [{}, {}]", case_number, range.first, range.last));
  }
  std::vector<ElementLabel> labels;
  std::vector<double> positions;
  for (int j = 1; j <= 20; ++j) {
    labels.push_back(std::to_string(j));
    positions.push_back(j);
  }
  const Frame frame = Frame::create(std::move(labels), std::move(positions));

  std::map<std::uint64_t, double> m1;
  m1[frame.subset({"2", "3", "4"}).bits()] += 0.05;
  m1[frame.subset({"7"}).bits()] += 0.05;
  m1[frame.full_mask()] += 0.1;
  m1[prefix_set(frame, case_number).bits()] += 0.8;

  std::vector<MassAssignment> first;
  for (const auto& [bits, mass] : m1) first.push_back({frame.from_bits(bits), mass});

  Bpa a = Bpa::create(frame, std::move(first));
  Bpa b = Bpa::create(frame, {{frame.subset({"1", "2", "3", "4", "5"}), 1.0}});
  return {std::move(a), std::move(b), frame};
}

SweepRange sweep_range(SweepKind kind) noexcept {
  return kind == SweepKind::Shifted ? SweepRange{2, 12} : SweepRange{1, 20};
}

std::string_view to_string(SweepKind kind) noexcept {
  return kind == SweepKind::Shifted ? "shifted" : "growing";
}

std::vector<SweepResult> run_sweep(SweepKind kind, const DistanceParams& params, Execution exec) {
  params.validate();
  const auto range = sweep_range(kind);
  const auto count = static_cast<std::size_t>(range.last - range.first + 1);
  std::vector<SweepResult> out(count);
  for_each_index(count, exec, [&](std::size_t index) {
    const int step = range.first + static_cast<int>(index);
    const auto scenario = kind == SweepKind::Shifted ? scenario_shifted(step) : scenario_growing(step);
    const auto d = distance_all(scenario.first, scenario.second, params);
    out[index] = {step,
                  d.jousselme.distance,
                  d.sunberg.distance,
                  d.generalized.distance,
                  {d.jousselme.half_quadratic, d.sunberg.half_quadratic, d.generalized.half_quadratic}};
  });
  return out;
}

}  // namespace evidist
