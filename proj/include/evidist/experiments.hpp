#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "evidist/batch.hpp"
#include "evidist/bpa.hpp"
#include "evidist/metrics.hpp"

namespace evidist {

struct Scenario {
  Bpa first;
  Bpa second;
  Frame frame;
};

/// Fixed-mass scenario: BPA A on {2, 2.3, 2.5, 2.7, 3} held stationary, BPA B
/// on {i, i+0.5, i+1} with three nested focal sets of mass 1/3 each. The
/// frame is the union of both element sets, ordered by position.
/// Throws StepOutOfRange unless 2 <= i <= 12.
Scenario scenario_shifted(int i);

/// Growing-subset scenario on elements "1".."20" at positions 1..20:
///   m1({2,3,4}) = 0.05, m1({7}) = 0.05, m1(Ω) = 0.1, m1({1..case}) = 0.8
///   m2({1,2,3,4,5}) = 1
/// When {1..case} coincides with another focal set of m1 the masses add.
/// Throws CaseOutOfRange unless 1 <= case <= 20.
Scenario scenario_growing(int case_number);

enum class SweepKind { Shifted, Growing };

struct SweepRange {
  int first;
  int last;
};

SweepRange sweep_range(SweepKind kind) noexcept;
std::string_view to_string(SweepKind kind) noexcept;

struct SweepResult {
  int step = 0;
  double d_jousselme = 0.0;
  double d_sunberg = 0.0;
  double d_generalized = 0.0;
  /// Unclamped ½ΔᵀDΔ for jousselme, sunberg, generalized.
  std::array<double, 3> half_quadratic{};
};

/// One result per step in ascending step order. Steps are evaluated
/// concurrently under Execution::Parallel; output is identical either way.
std::vector<SweepResult> run_sweep(SweepKind kind, const DistanceParams& params,
                                   Execution exec = Execution::Parallel);

/// Shortest decimal text that round-trips `value` ("2", "2.3", "7.5").
std::string canonical_number(double value);

}  // namespace evidist
