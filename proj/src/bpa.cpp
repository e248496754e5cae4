#include "evidist/bpa.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "evidist/error.hpp"

namespace evidist {

Bpa Bpa::create(Frame frame, std::vector<MassAssignment> assignments) {
  for (const auto& [set, mass] : assignments) {
    if (!(set.frame() == frame)) {
      throw Error(ErrorCode::FrameMismatch,
                  fmt::format("focal set {} does not belong to the BPA's frame", to_string(set)));
    }
    if (std::isnan(mass) || mass < 0.0 || mass > 1.0) {
      throw Error(ErrorCode::MassOutOfRange,
                  fmt::format("mass {} of {} is outside [0, 1]", mass, to_string(set)));
    }
    if (set.empty() && mass > 0.0) {
      throw Error(ErrorCode::EmptySetMass,
                  fmt::format("the empty set carries mass {}; m(empty) must be 0", mass));
    }
  }

  std::sort(assignments.begin(), assignments.end(),
            [](const MassAssignment& a, const MassAssignment& b) { return canonical_less(a.set, b.set); });
  auto dup = std::adjacent_find(assignments.begin(), assignments.end(),
                                [](const MassAssignment& a, const MassAssignment& b) {
                                  return a.set.bits() == b.set.bits();
                                });
  if (dup != assignments.end()) {
    throw Error(ErrorCode::DuplicateFocalSet,
                fmt::format("focal set {} is assigned more than once", to_string(dup->set)));
  }

  std::erase_if(assignments, [](const MassAssignment& a) { return a.mass == 0.0; });

  double sum = 0.0;
  for (const auto& a : assignments) sum += a.mass;
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw Error(ErrorCode::MassSumViolation, fmt::format("masses sum to {:.17g}, expected 1", sum));
  }
  return Bpa(std::move(frame), std::move(assignments));
}

std::vector<FocalSet> Bpa::support() const {
  std::vector<FocalSet> out;
  out.reserve(focal_.size());
  for (const auto& a : focal_) out.push_back(a.set);
  return out;
}

double Bpa::mass(const FocalSet& set) const {
  if (!(set.frame() == frame_)) {
    throw Error(ErrorCode::FrameMismatch, "focal set does not belong to the BPA's frame");
  }
  auto it = std::lower_bound(focal_.begin(), focal_.end(), set.bits(),
                             [](const MassAssignment& a, std::uint64_t bits) { return a.set.bits() < bits; });
  if (it != focal_.end() && it->set.bits() == set.bits()) return it->mass;
  return 0.0;
}

Bpa bpa_new(Frame frame, std::vector<MassAssignment> assignments) {
  return Bpa::create(std::move(frame), std::move(assignments));
}

std::vector<FocalSet> bpa_support(const Bpa& bpa) { return bpa.support(); }

double bpa_mass(const Bpa& bpa, const FocalSet& set) { return bpa.mass(set); }

}  // namespace evidist
