#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>

namespace simpair {

/// An element of {0,1,2,...} together with the three infinite values aleph_0 < aleph_1 < c.
///
/// aleph_1 sits strictly between aleph_0 and the continuum; this is a convention,
/// not something the order of the other values depends on.
class Cardinal {
 public:
  enum class Kind : std::uint8_t { Finite, Aleph0, Aleph1, Continuum };

  constexpr Cardinal() = default;
  constexpr explicit Cardinal(std::uint64_t n) : count_(n) {}

  static constexpr Cardinal fin(std::uint64_t n) { return Cardinal(n); }
  static constexpr Cardinal aleph0() { return Cardinal(Kind::Aleph0); }
  static constexpr Cardinal aleph1() { return Cardinal(Kind::Aleph1); }
  static constexpr Cardinal continuum() { return Cardinal(Kind::Continuum); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::Finite; }
  constexpr bool is_zero() const { return is_finite() && count_ == 0; }
  /// Only meaningful when is_finite().
  constexpr std::uint64_t count() const { return count_; }

  // Finite values compare by count; kind is ordered Finite < Aleph0 < Aleph1 < Continuum.
  constexpr auto operator<=>(const Cardinal&) const = default;

  friend Cardinal operator+(Cardinal a, Cardinal b);
  Cardinal& operator+=(Cardinal b) { return *this = *this + b; }

  /// "7", "inf" (aleph_0), "aleph1", "continuum".
  std::string str() const;

 private:
  constexpr explicit Cardinal(Kind k) : kind_(k) {}

  Kind kind_ = Kind::Finite;
  std::uint64_t count_ = 0;
};

/// Sum of a list of cardinals. If `unbounded_nonzero` is set, the list stands for an
/// infinite family with infinitely many nonzero terms and the sum saturates to at least aleph_0.
Cardinal sum(std::span<const Cardinal> terms, bool unbounded_nonzero = false);

}  // namespace simpair
