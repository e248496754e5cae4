#include "evidist/metrics.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "evidist/error.hpp"

namespace evidist {

JointSupport joint_support(const Bpa& m1, const Bpa& m2) {
  if (!(m1.frame() == m2.frame())) {
    throw Error(ErrorCode::FrameMismatch, "BPAs are defined over different frames");
  }
  JointSupport out{m1.frame(), {}, {}, {}};
  const auto a = m1.focal();
  const auto b = m2.focal();
  const auto capacity = a.size() + b.size();
  out.sets.reserve(capacity);
  out.v1.reserve(capacity);
  out.v2.reserve(capacity);

  // Both supports are already canonical, so a merge keeps the union canonical.
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].set.bits() < b[j].set.bits())) {
      out.sets.push_back(a[i].set);
      out.v1.push_back(a[i].mass);
      out.v2.push_back(0.0);
      ++i;
    } else if (i == a.size() || b[j].set.bits() < a[i].set.bits()) {
      out.sets.push_back(b[j].set);
      out.v1.push_back(0.0);
      out.v2.push_back(b[j].mass);
      ++j;
    } else {
      out.sets.push_back(a[i].set);
      out.v1.push_back(a[i].mass);
      out.v2.push_back(b[j].mass);
      ++i;
      ++j;
    }
  }
  return out;
}

void DistanceParams::validate() const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorCode::AlphaOutOfRange, fmt::format("alpha = {} is outside [0, 1]", alpha));
  }
  if (!(hausdorff_k > 0.0) || !std::isfinite(hausdorff_k)) {
    throw Error(ErrorCode::InvalidTuning, fmt::format("K = {} must be positive and finite", hausdorff_k));
  }
}

SimilarityMatrix::SimilarityMatrix(JointSupport support, SimilarityKind kind,
                                   std::vector<double> entries, double alpha, double hausdorff_k)
    : support_(std::move(support)),
      kind_(kind),
      entries_(std::move(entries)),
      alpha_(alpha),
      hausdorff_k_(hausdorff_k) {}

SimilarityMatrix jaccard_matrix(const JointSupport& support) {
  const auto n = support.size();
  std::vector<double> entries(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    entries[i * n + i] = set_jaccard(support.sets[i], support.sets[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      const double s = set_jaccard(support.sets[i], support.sets[j]);
      entries[i * n + j] = s;
      entries[j * n + i] = s;
    }
  }
  return SimilarityMatrix(support, SimilarityKind::Jaccard, std::move(entries), 1.0, 0.0);
}

SimilarityMatrix hausdorff_matrix(const JointSupport& support, double k) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw Error(ErrorCode::InvalidTuning, fmt::format("K = {} must be positive and finite", k));
  }
  if (!support.frame.has_positions()) {
    throw Error(ErrorCode::NoEmbedding, "frame has no positions");
  }
  const auto n = support.size();
  std::vector<double> entries(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double s = 1.0 / (1.0 + k * set_hausdorff_1d(support.sets[i], support.sets[j]));
      entries[i * n + j] = s;
      entries[j * n + i] = s;
    }
  }
  return SimilarityMatrix(support, SimilarityKind::Hausdorff, std::move(entries), 0.0, k);
}

SimilarityMatrix hausdorff_matrix(const JointSupport& support, const Frame& frame, double k) {
  if (!(support.frame == frame)) {
    throw Error(ErrorCode::FrameMismatch, "joint support does not belong to the given frame");
  }
  return hausdorff_matrix(support, k);
}

namespace {

bool same_sets(const JointSupport& a, const JointSupport& b) {
  return a.frame == b.frame &&
         std::equal(a.sets.begin(), a.sets.end(), b.sets.begin(), b.sets.end(),
                    [](const FocalSet& x, const FocalSet& y) { return x.bits() == y.bits(); });
}

}  // namespace

SimilarityMatrix blend_matrix(const SimilarityMatrix& dj, const SimilarityMatrix& dh, double alpha) {
  if (dj.kind() != SimilarityKind::Jaccard || dh.kind() != SimilarityKind::Hausdorff) {
    throw Error(ErrorCode::KindMismatch, "blend needs a Jaccard matrix and a Hausdorff matrix");
  }
  if (!same_sets(dj.support(), dh.support())) {
    throw Error(ErrorCode::SupportMismatch, "matrices are indexed by different joint supports");
  }
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorCode::AlphaOutOfRange, fmt::format("alpha = {} is outside [0, 1]", alpha));
  }
  const auto a = dj.entries();
  const auto h = dh.entries();
  const double beta = 1.0 - alpha;
  std::vector<double> entries(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) entries[i] = alpha * a[i] + beta * h[i];
  return SimilarityMatrix(dj.support(), SimilarityKind::Blend, std::move(entries), alpha,
                          dh.hausdorff_k());
}

DistanceReport quadratic_report(const JointSupport& support, const SimilarityMatrix& d) {
  if (!same_sets(support, d.support())) {
    throw Error(ErrorCode::SupportMismatch, "matrix is indexed by a different joint support");
  }
  const auto n = support.size();
  std::vector<double> delta(n);
  for (std::size_t i = 0; i < n; ++i) delta[i] = support.v1[i] - support.v2[i];

  double form = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += d(i, j) * delta[j];
    form += delta[i] * row;
  }
  DistanceReport report;
  report.half_quadratic = 0.5 * form;
  report.distance = std::sqrt(std::max(0.0, report.half_quadratic));
  return report;
}

double quadratic_distance(const JointSupport& support, const SimilarityMatrix& d) {
  return quadratic_report(support, d).distance;
}

double distance_jousselme(const Bpa& m1, const Bpa& m2) {
  const auto s = joint_support(m1, m2);
  return quadratic_distance(s, jaccard_matrix(s));
}

double distance_sunberg(const Bpa& m1, const Bpa& m2, double k) {
  const auto s = joint_support(m1, m2);
  return quadratic_distance(s, hausdorff_matrix(s, k));
}

double distance_generalized(const Bpa& m1, const Bpa& m2, const DistanceParams& params) {
  params.validate();
  const auto s = joint_support(m1, m2);
  return quadratic_distance(s, blend_matrix(jaccard_matrix(s), hausdorff_matrix(s, params.hausdorff_k),
                                            params.alpha));
}

DistanceTriple distance_all(const Bpa& m1, const Bpa& m2, const DistanceParams& params) {
  params.validate();
  const auto s = joint_support(m1, m2);
  const auto dj = jaccard_matrix(s);
  const auto dh = hausdorff_matrix(s, params.hausdorff_k);
  return {quadratic_report(s, dj), quadratic_report(s, dh),
          quadratic_report(s, blend_matrix(dj, dh, params.alpha))};
}

}  // namespace evidist
