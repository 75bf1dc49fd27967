#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace lvf {

/// An index p in Z or Z + 1/2, stored doubled so that hashing and ordering stay exact.
class HalfIndex {
public:
  constexpr HalfIndex() = default;
  constexpr HalfIndex(std::int64_t integer) : doubled_(2 * integer) {}  // NOLINT

  static constexpr HalfIndex from_doubled(std::int64_t doubled) {
    HalfIndex h;
    h.doubled_ = doubled;
    return h;
  }
  /// Parses "k" or "k/2".
  static HalfIndex parse(std::string_view text);

  constexpr std::int64_t doubled() const { return doubled_; }
  constexpr bool is_half() const { return (doubled_ & 1) != 0; }
  /// Integer value; throws InvalidArgument for half-integers.
  std::int64_t to_integer() const;
  double to_double() const { return static_cast<double>(doubled_) / 2.0; }

  constexpr HalfIndex operator-() const { return from_doubled(-doubled_); }
  constexpr HalfIndex& operator+=(HalfIndex o) {
    doubled_ += o.doubled_;
    return *this;
  }
  constexpr HalfIndex& operator-=(HalfIndex o) {
    doubled_ -= o.doubled_;
    return *this;
  }
  friend constexpr HalfIndex operator+(HalfIndex a, HalfIndex b) { return a += b; }
  friend constexpr HalfIndex operator-(HalfIndex a, HalfIndex b) { return a -= b; }
  friend constexpr bool operator==(HalfIndex, HalfIndex) = default;
  friend constexpr auto operator<=>(HalfIndex, HalfIndex) = default;

  std::string to_string() const;

private:
  std::int64_t doubled_ = 0;
};

std::ostream& operator<<(std::ostream& os, HalfIndex h);

/// Distance |a - b| between two indices of the same parity class.
std::int64_t index_distance(HalfIndex a, HalfIndex b);

/// Finite contiguous range lo, lo+1, ..., hi of indices sharing one parity class.
class IndexWindow {
public:
  /// Throws InvalidArgument if lo > hi or the parities differ.
  IndexWindow(HalfIndex lo, HalfIndex hi);

  static IndexWindow integral(std::int64_t lo, std::int64_t hi) { return {lo, hi}; }
  /// Parses "[lo..hi]".
  static IndexWindow parse(std::string_view text);

  HalfIndex lo() const { return lo_; }
  HalfIndex hi() const { return hi_; }
  /// Shift class s: true for Z + 1/2.
  bool half_shift() const { return lo_.is_half(); }
  std::int64_t size() const { return (hi_.doubled() - lo_.doubled()) / 2 + 1; }
  bool contains(HalfIndex p) const;
  bool contains(const IndexWindow& w) const { return contains(w.lo_) && contains(w.hi_); }
  HalfIndex at(std::int64_t offset) const { return lo_ + HalfIndex(offset); }
  std::vector<HalfIndex> indices() const;
  /// Shrinks both ends by `margin`; empty result yields nullopt.
  std::optional<IndexWindow> shrink(std::int64_t margin) const;

  friend bool operator==(const IndexWindow&, const IndexWindow&) = default;

  std::string to_string() const;

private:
  HalfIndex lo_;
  HalfIndex hi_;
};

std::ostream& operator<<(std::ostream& os, const IndexWindow& w);

} // namespace lvf
