#include "evidist/combine.hpp"

#include <map>

#include <fmt/format.h>

#include "evidist/error.hpp"

namespace evidist {

namespace {

void require_same_frame(const Bpa& m1, const Bpa& m2) {
  if (!(m1.frame() == m2.frame())) {
    throw Error(ErrorCode::FrameMismatch, "BPAs are defined over different frames");
  }
}

}  // namespace

double conflict_k(const Bpa& m1, const Bpa& m2) {
  require_same_frame(m1, m2);
  double k = 0.0;
  for (const auto& b : m1.focal()) {
    for (const auto& c : m2.focal()) {
      if ((b.set.bits() & c.set.bits()) == 0) k += b.mass * c.mass;
    }
  }
  return k;
}

Bpa dempster_combine(const Bpa& m1, const Bpa& m2) {
  require_same_frame(m1, m2);

  std::map<std::uint64_t, double> joint;
  double k = 0.0;
  for (const auto& b : m1.focal()) {
    for (const auto& c : m2.focal()) {
      const auto meet = b.set.bits() & c.set.bits();
      const double product = b.mass * c.mass;
      if (meet == 0) {
        k += product;
      } else {
        joint[meet] += product;
      }
    }
  }
  if (k >= kTotalConflictThreshold || joint.empty()) {
    throw Error(ErrorCode::TotalConflict,
                fmt::format("total conflict between BPAs (k = {:.12g}); Dempster's rule is undefined", k));
  }

  // Normalizing by the retained mass equals dividing by 1 - k, and keeps every
  // ratio <= 1 in floating point.
  double retained = 0.0;
  for (const auto& [bits, mass] : joint) retained += mass;

  std::vector<MassAssignment> out;
  out.reserve(joint.size());
  for (const auto& [bits, mass] : joint) {
    out.push_back({m1.frame().from_bits(bits), mass / retained});
  }
  return Bpa::create(m1.frame(), std::move(out));
}

}  // namespace evidist
