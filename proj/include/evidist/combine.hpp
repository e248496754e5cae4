#pragma once

#include "evidist/bpa.hpp"

namespace evidist {

/// k at or above this value is treated as total conflict.
inline constexpr double kTotalConflictThreshold = 1.0 - 1e-12;

/// Conflict coefficient: total mass product over support pairs with empty
/// intersection. Throws FrameMismatch.
double conflict_k(const Bpa& m1, const Bpa& m2);

/// Dempster's rule. Cost is O(|support1| * |support2|) regardless of frame
/// size. Throws FrameMismatch or TotalConflict.
Bpa dempster_combine(const Bpa& m1, const Bpa& m2);

}  // namespace evidist
