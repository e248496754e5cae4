#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace evidist {

using ElementLabel = std::string;

class FocalSet;

/// Frame of discernment: an ordered list of distinct element labels, each
/// optionally embedded at a point on the real line. Copies share one
/// immutable body, so passing frames by value is cheap.
class Frame {
 public:
  static constexpr std::size_t kMaxElements = 64;

  /// Throws DuplicateLabel, TooManyElements, EmptyFrame,
  /// PositionLengthMismatch or NonFinitePosition.
  static Frame create(std::vector<ElementLabel> labels,
                      std::optional<std::vector<double>> positions = std::nullopt);

  std::size_t size() const noexcept { return body_->labels.size(); }
  std::span<const ElementLabel> elements() const noexcept { return body_->labels; }
  const ElementLabel& label(std::size_t index) const { return body_->labels.at(index); }

  bool has_positions() const noexcept { return !body_->positions.empty(); }
  /// Empty when the frame has no embedding.
  std::span<const double> positions() const noexcept { return body_->positions; }

  std::optional<std::size_t> index_of(std::string_view label) const noexcept;

  /// Bit pattern with one bit per element.
  std::uint64_t full_mask() const noexcept;

  FocalSet empty_set() const;
  FocalSet omega() const;
  /// Throws ElementOutOfRange if `bits` references an index >= size().
  FocalSet from_bits(std::uint64_t bits) const;
  FocalSet from_indices(std::initializer_list<std::size_t> indices) const;
  /// Throws UnknownElement for labels not in the frame.
  FocalSet subset(std::span<const std::string_view> labels) const;
  FocalSet subset(std::initializer_list<std::string_view> labels) const;

  /// Same body, or identical labels and positions.
  friend bool operator==(const Frame& a, const Frame& b) noexcept;

 private:
  struct Body {
    std::vector<ElementLabel> labels;
    std::vector<double> positions;
  };

  explicit Frame(std::shared_ptr<const Body> body) : body_(std::move(body)) {}

  std::shared_ptr<const Body> body_;
};

/// Free-function spelling of Frame::create.
Frame frame_new(std::vector<ElementLabel> labels,
                std::optional<std::vector<double>> positions = std::nullopt);

/// A subset of one frame's elements. Element i is a member iff bit i is set.
class FocalSet {
 public:
  std::uint64_t bits() const noexcept { return bits_; }
  const Frame& frame() const noexcept { return frame_; }

  std::size_t size() const noexcept;
  bool empty() const noexcept { return bits_ == 0; }
  bool contains(std::size_t index) const noexcept {
    return index < 64 && ((bits_ >> index) & 1u) != 0;
  }

  std::vector<std::size_t> indices() const;

  /// Throws FrameMismatch.
  FocalSet intersect(const FocalSet& other) const;
  FocalSet unite(const FocalSet& other) const;

  friend bool operator==(const FocalSet& a, const FocalSet& b) noexcept {
    return a.bits_ == b.bits_ && a.frame_ == b.frame_;
  }

 private:
  friend class Frame;
  FocalSet(Frame frame, std::uint64_t bits) : frame_(std::move(frame)), bits_(bits) {}

  Frame frame_;
  std::uint64_t bits_;
};

/// Canonical focal-set order: ascending bit pattern.
inline bool canonical_less(const FocalSet& a, const FocalSet& b) noexcept {
  return a.bits() < b.bits();
}

/// "{a,b,c}" in frame order.
std::string to_string(const FocalSet& set);

/// Throws FrameMismatch unless both sets live on the same frame.
void require_same_frame(const FocalSet& a, const FocalSet& b);

/// |a ∩ b| / |a ∪ b|; (∅, ∅) is defined as 1.
double set_jaccard(const FocalSet& a, const FocalSet& b);

/// One-dimensional Hausdorff distance between two focal sets:
/// max(|min(a) - min(b)|, |max(a) - max(b)|) over element positions.
/// Throws NoEmbedding, EmptySet or FrameMismatch.
double set_hausdorff_1d(const FocalSet& a, const FocalSet& b);
double set_hausdorff_1d(const FocalSet& a, const FocalSet& b, const Frame& frame);

}  // namespace evidist
