#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "evidist/bpa.hpp"

namespace evidist {

/// The union of two BPAs' supports in canonical order, with both mass
/// vectors aligned to it. These are the only coordinates of the 2^N mass
/// vectors where m1 - m2 can be nonzero.
struct JointSupport {
  Frame frame;
  std::vector<FocalSet> sets;
  std::vector<double> v1;
  std::vector<double> v2;

  std::size_t size() const noexcept { return sets.size(); }
};

/// Throws FrameMismatch.
JointSupport joint_support(const Bpa& m1, const Bpa& m2);

struct DistanceParams {
  double alpha = 0.5;
  double hausdorff_k = 1.0;

  /// Throws AlphaOutOfRange or InvalidTuning.
  void validate() const;
};

enum class SimilarityKind { Jaccard, Hausdorff, Blend };

/// Square similarity matrix indexed by a joint support, stored row-major.
class SimilarityMatrix {
 public:
  SimilarityMatrix(JointSupport support, SimilarityKind kind, std::vector<double> entries,
                   double alpha, double hausdorff_k);

  const JointSupport& support() const noexcept { return support_; }
  SimilarityKind kind() const noexcept { return kind_; }
  /// Blend weight; 1 for Jaccard and 0 for Hausdorff matrices.
  double alpha() const noexcept { return alpha_; }
  /// Tuning constant K; 0 for Jaccard matrices.
  double hausdorff_k() const noexcept { return hausdorff_k_; }

  std::size_t dim() const noexcept { return support_.size(); }
  double operator()(std::size_t row, std::size_t col) const noexcept {
    return entries_[row * dim() + col];
  }
  std::span<const double> entries() const noexcept { return entries_; }

 private:
  JointSupport support_;
  SimilarityKind kind_;
  std::vector<double> entries_;
  double alpha_;
  double hausdorff_k_;
};

SimilarityMatrix jaccard_matrix(const JointSupport& support);

/// Entries 1 / (1 + k * H) with H the 1-D Hausdorff distance.
/// Throws NoEmbedding, EmptySet or InvalidTuning.
SimilarityMatrix hausdorff_matrix(const JointSupport& support, double k);
SimilarityMatrix hausdorff_matrix(const JointSupport& support, const Frame& frame, double k);

/// alpha * dj + (1 - alpha) * dh, entrywise.
/// Throws KindMismatch, SupportMismatch or AlphaOutOfRange.
SimilarityMatrix blend_matrix(const SimilarityMatrix& dj, const SimilarityMatrix& dh, double alpha);

/// Half quadratic forms below this are reported as genuine indefiniteness
/// rather than rounding noise.
inline constexpr double kIndefiniteTolerance = 1e-9;

struct DistanceReport {
  double distance = 0.0;
  /// ½ ΔᵀDΔ before clamping.
  double half_quadratic = 0.0;

  bool clamped() const noexcept { return half_quadratic < 0.0; }
  bool indefinite() const noexcept { return half_quadratic < -kIndefiniteTolerance; }
};

/// √(max(0, ½ ΔᵀDΔ)) with Δ = v1 - v2. Throws SupportMismatch.
double quadratic_distance(const JointSupport& support, const SimilarityMatrix& d);
DistanceReport quadratic_report(const JointSupport& support, const SimilarityMatrix& d);

double distance_jousselme(const Bpa& m1, const Bpa& m2);
double distance_sunberg(const Bpa& m1, const Bpa& m2, double k = 1.0);
double distance_generalized(const Bpa& m1, const Bpa& m2, const DistanceParams& params = {});

struct DistanceTriple {
  DistanceReport jousselme;
  DistanceReport sunberg;
  DistanceReport generalized;
};

/// All three distances from one joint support; the generalized matrix is
/// built from the same Jaccard and Hausdorff matrices.
DistanceTriple distance_all(const Bpa& m1, const Bpa& m2, const DistanceParams& params = {});

}  // namespace evidist
