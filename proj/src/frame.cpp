#include "evidist/frame.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <unordered_set>

#include <fmt/format.h>

#include "evidist/error.hpp"

namespace evidist {

Frame Frame::create(std::vector<ElementLabel> labels, std::optional<std::vector<double>> positions) {
  if (labels.empty()) {
    throw Error(ErrorCode::EmptyFrame, "frame needs at least one element");
  }
  if (labels.size() > kMaxElements) {
    throw Error(ErrorCode::TooManyElements,
                fmt::format("frame has {} elements, at most {} are supported", labels.size(),
                            kMaxElements));
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second) {
      throw Error(ErrorCode::DuplicateLabel, fmt::format("duplicate element label '{}'", label));
    }
  }

  auto body = std::make_shared<Body>();
  if (positions) {
    if (positions->size() != labels.size()) {
      throw Error(ErrorCode::PositionLengthMismatch,
                  fmt::format("{} positions given for {} elements", positions->size(),
                              labels.size()));
    }
    for (std::size_t i = 0; i < positions->size(); ++i) {
      if (!std::isfinite((*positions)[i])) {
        throw Error(ErrorCode::NonFinitePosition,
                    fmt::format("position of element '{}' is not finite", labels[i]));
      }
    }
    body->positions = std::move(*positions);
  }
  body->labels = std::move(labels);
  return Frame(std::move(body));
}

Frame frame_new(std::vector<ElementLabel> labels, std::optional<std::vector<double>> positions) {
  return Frame::create(std::move(labels), std::move(positions));
}

std::optional<std::size_t> Frame::index_of(std::string_view label) const noexcept {
  const auto& labels = body_->labels;
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels.begin());
}

std::uint64_t Frame::full_mask() const noexcept {
  const auto n = size();
  return n == 64 ? std::numeric_limits<std::uint64_t>::max() : ((std::uint64_t{1} << n) - 1);
}

FocalSet Frame::empty_set() const { return FocalSet(*this, 0); }

FocalSet Frame::omega() const { return FocalSet(*this, full_mask()); }

FocalSet Frame::from_bits(std::uint64_t bits) const {
  if ((bits & ~full_mask()) != 0) {
    throw Error(ErrorCode::ElementOutOfRange,
                fmt::format("bit pattern {:#x} references elements beyond a frame of size {}", bits,
                            size()));
  }
  return FocalSet(*this, bits);
}

FocalSet Frame::from_indices(std::initializer_list<std::size_t> indices) const {
  std::uint64_t bits = 0;
  for (auto i : indices) {
    if (i >= size()) {
      throw Error(ErrorCode::ElementOutOfRange,
                  fmt::format("element index {} out of range for frame of size {}", i, size()));
    }
    bits |= std::uint64_t{1} << i;
  }
  return FocalSet(*this, bits);
}

FocalSet Frame::subset(std::span<const std::string_view> labels) const {
  std::uint64_t bits = 0;
  for (auto label : labels) {
    auto index = index_of(label);
    if (!index) {
      throw Error(ErrorCode::UnknownElement, fmt::format("element '{}' is not in the frame", label));
    }
    bits |= std::uint64_t{1} << *index;
  }
  return FocalSet(*this, bits);
}

FocalSet Frame::subset(std::initializer_list<std::string_view> labels) const {
  return subset(std::span<const std::string_view>(labels.begin(), labels.size()));
}

bool operator==(const Frame& a, const Frame& b) noexcept {
  if (a.body_ == b.body_) return true;
  return a.body_->labels == b.body_->labels && a.body_->positions == b.body_->positions;
}

std::size_t FocalSet::size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<std::size_t> FocalSet::indices() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (auto rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
  }
  return out;
}

void require_same_frame(const FocalSet& a, const FocalSet& b) {
  if (!(a.frame() == b.frame())) {
    throw Error(ErrorCode::FrameMismatch, "focal sets belong to different frames");
  }
}

FocalSet FocalSet::intersect(const FocalSet& other) const {
  require_same_frame(*this, other);
  return FocalSet(frame_, bits_ & other.bits_);
}

FocalSet FocalSet::unite(const FocalSet& other) const {
  require_same_frame(*this, other);
  return FocalSet(frame_, bits_ | other.bits_);
}

std::string to_string(const FocalSet& set) {
  std::string out = "{";
  bool first = true;
  for (auto i : set.indices()) {
    if (!first) out += ',';
    out += set.frame().label(i);
    first = false;
  }
  out += '}';
  return out;
}

double set_jaccard(const FocalSet& a, const FocalSet& b) {
  require_same_frame(a, b);
  const auto unite = std::popcount(a.bits() | b.bits());
  if (unite == 0) return 1.0;
  return static_cast<double>(std::popcount(a.bits() & b.bits())) / static_cast<double>(unite);
}

namespace {

struct Extent {
  double lo;
  double hi;
};

Extent extent(const FocalSet& set, std::span<const double> positions) {
  Extent e{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (auto rest = set.bits(); rest != 0; rest &= rest - 1) {
    const double p = positions[static_cast<std::size_t>(std::countr_zero(rest))];
    e.lo = std::min(e.lo, p);
    e.hi = std::max(e.hi, p);
  }
  return e;
}

}  // namespace

double set_hausdorff_1d(const FocalSet& a, const FocalSet& b) {
  require_same_frame(a, b);
  const Frame& frame = a.frame();
  if (!frame.has_positions()) {
    throw Error(ErrorCode::NoEmbedding, "frame has no positions");
  }
  if (a.empty() || b.empty()) {
    throw Error(ErrorCode::EmptySet, "Hausdorff distance is undefined for the empty set");
  }
  const auto ea = extent(a, frame.positions());
  const auto eb = extent(b, frame.positions());
  return std::max(std::abs(ea.lo - eb.lo), std::abs(ea.hi - eb.hi));
}

double set_hausdorff_1d(const FocalSet& a, const FocalSet& b, const Frame& frame) {
  if (!(a.frame() == frame) || !(b.frame() == frame)) {
    throw Error(ErrorCode::FrameMismatch, "focal sets do not belong to the given frame");
  }
  return set_hausdorff_1d(a, b);
}

}  // namespace evidist
