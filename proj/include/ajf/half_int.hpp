#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace ajf {

/// Exact half-integer, stored as the doubled value (3/2 has twice == 3).
struct HalfInt {
  int twice = 0;

  constexpr HalfInt() = default;

  static constexpr HalfInt from_twice(int t) {
    HalfInt h;
    h.twice = t;
    return h;
  }

  /// Whole number n, stored as n/1.
  static constexpr HalfInt of(int n) { return from_twice(2 * n); }

  constexpr bool is_integer() const { return twice % 2 == 0; }

  constexpr double to_double() const { return 0.5 * twice; }

  /// Exact conversion; rejects genuine half-odd values.
  constexpr int to_int() const {
    if (!is_integer()) throw std::logic_error("HalfInt::to_int on half-odd value");
    return twice / 2;
  }

  constexpr HalfInt operator-() const { return from_twice(-twice); }
  constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice + o.twice); }
  constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice - o.twice); }
  constexpr HalfInt& operator+=(HalfInt o) { twice += o.twice; return *this; }
  constexpr HalfInt& operator-=(HalfInt o) { twice -= o.twice; return *this; }

  friend constexpr HalfInt operator*(int k, HalfInt h) { return from_twice(k * h.twice); }

  constexpr auto operator<=>(const HalfInt&) const = default;

  constexpr bool is_nonneg_integer() const { return twice >= 0 && is_integer(); }
};

constexpr HalfInt half() { return HalfInt::from_twice(1); }
constexpr HalfInt one() { return HalfInt::of(1); }

inline HalfInt abs(HalfInt h) { return h.twice < 0 ? -h : h; }

inline std::string to_string(HalfInt h) {
  if (h.is_integer()) return std::to_string(h.twice / 2);
  return std::to_string(h.twice) + "/2";
}

}  // namespace ajf
