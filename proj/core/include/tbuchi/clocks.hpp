#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>

namespace tbuchi {

/// 1-based clock index; 0 is reserved for the DBM reference row.
using ClockId = unsigned;

/// Small set of clock ids (supports ids 1..31).
class ClockSet {
 public:
  constexpr ClockSet() = default;

  static constexpr ClockSet single(ClockId c) {
    ClockSet s;
    s.add(c);
    return s;
  }

  /// {1, 2, ..., n}
  static constexpr ClockSet first_n(unsigned n) {
    ClockSet s;
    for (ClockId c = 1; c <= n; ++c) s.add(c);
    return s;
  }

  static ClockSet of(std::initializer_list<ClockId> cs) {
    ClockSet s;
    for (ClockId c : cs) s.add(c);
    return s;
  }

  constexpr void add(ClockId c) { bits_ |= bit(c); }
  constexpr void remove(ClockId c) { bits_ &= ~bit(c); }
  constexpr bool contains(ClockId c) const { return (bits_ & bit(c)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool any() const { return bits_ != 0; }
  constexpr unsigned size() const { return static_cast<unsigned>(std::popcount(bits_)); }

  constexpr ClockSet operator|(ClockSet o) const { return ClockSet(bits_ | o.bits_); }
  constexpr ClockSet operator&(ClockSet o) const { return ClockSet(bits_ & o.bits_); }
  constexpr ClockSet minus(ClockSet o) const { return ClockSet(bits_ & ~o.bits_); }
  constexpr ClockSet& operator|=(ClockSet o) {
    bits_ |= o.bits_;
    return *this;
  }

  constexpr bool subset_of(ClockSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(ClockSet o) const { return (bits_ & o.bits_) != 0; }

  constexpr bool operator==(const ClockSet&) const = default;

  constexpr std::uint32_t raw() const { return bits_; }

  /// Iterates set members in increasing id order.
  template <typename F>
  void for_each(F&& f) const {
    std::uint32_t b = bits_;
    while (b) {
      f(static_cast<ClockId>(std::countr_zero(b)));
      b &= b - 1;
    }
  }

 private:
  constexpr explicit ClockSet(std::uint32_t raw) : bits_(raw) {}
  static constexpr std::uint32_t bit(ClockId c) { return 1u << c; }

  std::uint32_t bits_ = 0;
};

}  // namespace tbuchi
