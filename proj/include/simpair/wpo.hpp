#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "simpair/cardinal.hpp"
#include "simpair/core.hpp"
#include "simpair/shapes.hpp"

namespace simpair {

/// Upward-closed subset of Sc, stored as its finite antichain of minimal elements.
/// Generators are kept sorted by their literal text.
class UpperSet {
 public:
  UpperSet() = default;

  const std::vector<LocalCoarseShape>& generators() const& { return generators_; }
  std::vector<LocalCoarseShape> generators() && { return std::move(generators_); }
  bool empty() const { return generators_.empty(); }
  bool contains(const LocalCoarseShape& s) const;

  /// `{g1, g2, ...}`
  std::string str() const;

  bool operator==(const UpperSet&) const = default;

  friend UpperSet upper_set_from_shapes(std::span<const LocalCoarseShape> shapes);

 private:
  std::vector<LocalCoarseShape> generators_;
};

/// The <=-minimal elements of `shapes`, duplicates removed, in order of first appearance.
std::vector<LocalCoarseShape> minimal_elements(std::span<const LocalCoarseShape> shapes);

UpperSet upper_set_from_shapes(std::span<const LocalCoarseShape> shapes);
inline bool upper_set_contains(const UpperSet& w, const LocalCoarseShape& s) { return w.contains(s); }

/// Number of F-classes of p whose local coarse shape lies in w.
Cardinal n_w(const FinPair& p, const UpperSet& w);

/// {alpha in Sc : every class with shape alpha has at least m elements}; m = Fin(k), k >= 1, or aleph_0.
UpperSet size_upper_set(Cardinal m);

inline constexpr std::size_t kDefaultGcsShapeCap = 20;

/// gcs(p1) <= gcs(p2), checked over every upper set generated by realized shapes of p1.
/// Throws CapExceeded when p1 realizes more than `shape_cap` distinct local coarse shapes.
bool gcs_leq(const FinPair& p1, const FinPair& p2, std::size_t shape_cap = kDefaultGcsShapeCap);

/// Distinct local coarse shapes realized by the F-classes of p, sorted.
std::vector<LocalCoarseShape> realized_coarse_shapes(const FinPair& p);

}  // namespace simpair
