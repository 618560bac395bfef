#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "simpair/cardinal.hpp"
#include "simpair/core.hpp"

namespace simpair {

/// An eventually-constant sequence indexed by positions 1, 2, ..., omega.
///
/// Positions 1..k hold `prefix`, every later finite position holds `tail`, and position
/// omega holds `omega`. The prefix never ends in an entry equal to the tail.
class ShapeSeq {
 public:
  ShapeSeq() = default;
  ShapeSeq(std::vector<Cardinal> prefix, Cardinal tail, Cardinal omega);

  const std::vector<Cardinal>& prefix() const { return prefix_; }
  Cardinal tail() const { return tail_; }
  Cardinal omega() const { return omega_; }

  /// Value at finite position m >= 1.
  Cardinal at(std::size_t m) const;
  /// Value at position m given as a cardinal: Fin(m) for m >= 1, aleph_0 for omega.
  Cardinal at(Cardinal position) const;

  bool is_zero() const { return prefix_.empty() && tail_.is_zero() && omega_.is_zero(); }

  auto operator<=>(const ShapeSeq&) const = default;

 private:
  std::vector<Cardinal> prefix_;
  Cardinal tail_;
  Cardinal omega_;
};

/// Pointwise comparison at every finite position and at omega.
bool shape_leq(const ShapeSeq& a, const ShapeSeq& b);

/// Coarse-shape realizability: nonzero, weakly decreasing, and omega value equal to the
/// eventual finite value unless every finite position is aleph_0.
bool sc_member(const ShapeSeq& s);

/// A shape that can be the fine shape of E on one F-class: nonzero, values at most aleph_0.
class LocalFineShape {
 public:
  /// Throws NotRealizable.
  explicit LocalFineShape(ShapeSeq seq);
  const ShapeSeq& seq() const { return seq_; }
  auto operator<=>(const LocalFineShape&) const = default;

 private:
  ShapeSeq seq_;
};

/// A member of Sc.
class LocalCoarseShape {
 public:
  /// Throws NotInSc.
  explicit LocalCoarseShape(ShapeSeq seq);
  const ShapeSeq& seq() const { return seq_; }
  auto operator<=>(const LocalCoarseShape&) const = default;

 private:
  ShapeSeq seq_;
};

inline bool shape_leq(const LocalCoarseShape& a, const LocalCoarseShape& b) { return shape_leq(a.seq(), b.seq()); }

/// Local fine shape -> number of F-classes carrying it (only nonzero counts stored).
using GlobalFineShape = std::map<LocalFineShape, Cardinal>;

ShapeSeq fs_of(const FinEqRel& r);
ShapeSeq cs_of(const FinEqRel& r);
LocalFineShape lfs_of_class(const FinPair& p, std::size_t c);
LocalCoarseShape lcs_of_class(const FinPair& p, std::size_t c);
LocalCoarseShape fine_to_coarse(const LocalFineShape& a);
ShapeSeq crs_of(const FinPair& p);
GlobalFineShape gfs_of(const FinPair& p);

/// Least size of a class with this local coarse shape. Throws NotRealizable if !sc_member.
Cardinal min_size(const ShapeSeq& s);
inline Cardinal min_size(const LocalCoarseShape& s) { return min_size(s.seq()); }

/// `<v1,...,vk|t;w>`; tokens are decimal integers or `inf`.
ShapeSeq parse_shape_literal(std::string_view text);
std::string print_shape_literal(const ShapeSeq& s);
inline std::string print_shape_literal(const LocalFineShape& s) { return print_shape_literal(s.seq()); }
inline std::string print_shape_literal(const LocalCoarseShape& s) { return print_shape_literal(s.seq()); }

/// `{<..>:k, <..>:k}` in key order.
std::string print_gfs(const GlobalFineShape& g);

}  // namespace simpair
