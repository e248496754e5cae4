#pragma once

// Test-only reference computations. Nothing here calls into the metric or
// combination code it is used to check: every oracle works on dense 2^n
// arrays indexed by subset bit pattern and recomputes set quantities by
// walking element indices.

#include <cstdint>
#include <random>
#include <vector>

#include "evidist/bpa.hpp"

namespace evidist::oracle {

enum class Kernel { Jaccard, Hausdorff, Blend };

/// Dense mass vector of length 2^n built from the BPA's stored entries.
std::vector<double> dense_masses(const Bpa& bpa);

/// Element-walk Jaccard |A∩B|/|A∪B| (1 for two empty sets).
double jaccard(std::uint64_t a, std::uint64_t b, std::size_t n);

/// max(|min A - min B|, |max A - max B|) found by scanning every element.
double hausdorff_extremes(std::uint64_t a, std::uint64_t b, const std::vector<double>& positions);

/// General sup-inf Hausdorff over the two point sets, d(b, c) = |b - c|.
double hausdorff_sup_inf(std::uint64_t a, std::uint64_t b, const std::vector<double>& positions);

/// √(½ ΔᵀDΔ) over the full 2^n powerset: materializes the 2^n × 2^n matrix,
/// forms y = DΔ, then Δ·y.
double dense_distance(const Bpa& m1, const Bpa& m2, Kernel kernel, double alpha, double k);

/// Raw ½ ΔᵀDΔ without clamping.
double dense_half_quadratic(const Bpa& m1, const Bpa& m2, Kernel kernel, double alpha, double k);

/// Same quantity for frames too large for a 2^n × 2^n loop: builds the
/// dense 2^n mass vectors, scans them for coordinates where Δ ≠ 0, and sums
/// the element-walk kernel over those coordinates only.
double scan_half_quadratic(const Bpa& m1, const Bpa& m2, Kernel kernel, double alpha, double k);
double scan_distance(const Bpa& m1, const Bpa& m2, Kernel kernel, double alpha, double k);

/// Dempster's rule by looping over every pair of subsets; returns the dense
/// combined mass vector and the conflict coefficient.
struct DenseCombination {
  std::vector<double> masses;
  double k = 0.0;
};
DenseCombination brute_combine(const Bpa& m1, const Bpa& m2);

/// Random frame with labels e0..e{n-1}; positions drawn from [-10, 10] and
/// rounded to 0.25 so ties between elements occur.
Frame random_frame(std::mt19937_64& rng, std::size_t n, bool embedded = true);

/// Random BPA with 1..max_focal distinct nonempty focal sets.
Bpa random_bpa(std::mt19937_64& rng, const Frame& frame, std::size_t max_focal = 6);

}  // namespace evidist::oracle
