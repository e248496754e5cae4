#pragma once

#include <span>
#include <vector>

#include "evidist/frame.hpp"

namespace evidist {

struct MassAssignment {
  FocalSet set;
  double mass;

  friend bool operator==(const MassAssignment&, const MassAssignment&) = default;
};

/// Basic probability assignment: a sparse mass function over the subsets of
/// a frame. Only strictly positive masses are stored; m(∅) is always 0.
class Bpa {
 public:
  static constexpr double kSumTolerance = 1e-9;

  /// Validates and stores the masses as given (never renormalized). Entries
  /// with zero mass are dropped. Throws MassOutOfRange, MassSumViolation,
  /// EmptySetMass, DuplicateFocalSet or FrameMismatch.
  static Bpa create(Frame frame, std::vector<MassAssignment> assignments);

  const Frame& frame() const noexcept { return frame_; }

  /// Focal elements in canonical (ascending bit pattern) order.
  std::span<const MassAssignment> focal() const noexcept { return focal_; }
  std::size_t support_size() const noexcept { return focal_.size(); }
  std::vector<FocalSet> support() const;

  /// Stored mass, or 0 for sets outside the support. Throws FrameMismatch.
  double mass(const FocalSet& set) const;

  friend bool operator==(const Bpa& a, const Bpa& b) noexcept {
    return a.frame_ == b.frame_ && a.focal_ == b.focal_;
  }

 private:
  Bpa(Frame frame, std::vector<MassAssignment> focal)
      : frame_(std::move(frame)), focal_(std::move(focal)) {}

  Frame frame_;
  std::vector<MassAssignment> focal_;
};

Bpa bpa_new(Frame frame, std::vector<MassAssignment> assignments);
std::vector<FocalSet> bpa_support(const Bpa& bpa);
double bpa_mass(const Bpa& bpa, const FocalSet& set);

}  // namespace evidist
