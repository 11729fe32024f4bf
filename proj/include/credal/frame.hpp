#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace credal {

/// A subset of a frame encoded as a bitmask: bit i is set iff the i-th label
/// of the frame belongs to the subset. 0 is the empty set.
struct SubsetMask {
  std::uint32_t bits = 0;

  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint32_t b) : bits(b) {}

  constexpr bool empty() const { return bits == 0; }
  constexpr int cardinality() const { return std::popcount(bits); }
  constexpr bool contains(SubsetMask other) const { return (other.bits & ~bits) == 0; }
  constexpr bool is_subset_of(SubsetMask other) const { return other.contains(*this); }
  constexpr bool intersects(SubsetMask other) const { return (bits & other.bits) != 0; }

  friend constexpr SubsetMask operator|(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits | b.bits); }
  friend constexpr SubsetMask operator&(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits & b.bits); }
  friend constexpr auto operator<=>(SubsetMask, SubsetMask) = default;
};

inline constexpr int kMaxFrameSize = 24;

/// Ordered, immutable frame of discernment. Copies share the label storage.
class Frame {
 public:
  static Frame build(std::span<const std::string> labels);
  static Frame build(std::initializer_list<std::string_view> labels);

  int size() const { return static_cast<int>(labels_->size()); }
  const std::vector<std::string>& labels() const { return *labels_; }
  const std::string& label(int i) const { return (*labels_)[static_cast<std::size_t>(i)]; }

  std::size_t subset_count() const { return std::size_t{1} << size(); }
  SubsetMask empty_set() const { return SubsetMask(0); }
  SubsetMask full_set() const { return SubsetMask(static_cast<std::uint32_t>(subset_count() - 1)); }
  bool is_valid(SubsetMask a) const { return a.bits < subset_count(); }

  /// Index of `label`, or -1.
  int index_of(std::string_view label) const;
  SubsetMask singleton(int i) const { return SubsetMask(std::uint32_t{1} << i); }

  /// Throws UnknownLabel. Repeated labels are tolerated.
  SubsetMask subset_of(std::span<const std::string> labels) const;

  /// Accepts "*" (whole frame), "{}" or "" (empty set), and comma separated
  /// labels with optional surrounding braces: "a,r" or "{a, r}".
  SubsetMask parse_subset(std::string_view expr) const;

  /// "{}" for the empty set, otherwise "{a,r}" in frame order.
  std::string format(SubsetMask a) const;
  std::vector<std::string> members(SubsetMask a) const;

  friend bool operator==(const Frame& a, const Frame& b) {
    return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
  }

 private:
  explicit Frame(std::shared_ptr<const std::vector<std::string>> labels) : labels_(std::move(labels)) {}
  std::shared_ptr<const std::vector<std::string>> labels_;
};

/// Throws FrameMismatch unless both frames are equal.
void require_same_frame(const Frame& a, const Frame& b);

}  // namespace credal
