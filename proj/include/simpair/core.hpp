#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace simpair {

using Element = std::size_t;
using Block = std::vector<Element>;
using BlockList = std::vector<Block>;
using ElementSet = std::vector<Element>;  // sorted, duplicate-free

/// A finite equivalence relation on {0,...,n-1}, kept as its list of classes.
///
/// Canonical form: elements ascending inside each block, blocks ordered by least element.
/// Every constructor canonicalizes, so two equal relations compare equal.
class FinEqRel {
 public:
  FinEqRel() = default;

  /// Throws NotAPartition on overlap, gap, empty block, or ElementOutOfRange.
  static FinEqRel from_blocks(std::size_t n, BlockList blocks);
  /// Classes are the fibers of `labels` (kernel of the function table).
  static FinEqRel from_labels(std::span<const std::size_t> labels);

  std::size_t size() const { return class_of_.size(); }
  std::size_t num_classes() const { return blocks_.size(); }
  const BlockList& blocks() const { return blocks_; }
  const Block& block(std::size_t c) const { return blocks_.at(c); }
  /// Index of the block containing x.
  std::size_t class_of(Element x) const { return class_of_.at(x); }
  bool related(Element x, Element y) const { return class_of(x) == class_of(y); }
  /// True iff every block of *this lies inside a block of other.
  bool refines(const FinEqRel& other) const;

  bool operator==(const FinEqRel& other) const { return blocks_ == other.blocks_; }

 private:
  BlockList blocks_;
  std::vector<std::size_t> class_of_;
};

FinEqRel discrete(std::size_t n);
FinEqRel indiscrete(std::size_t n);
FinEqRel kernel_partition(std::span<const std::size_t> f);

/// Union of the classes meeting `a`.
ElementSet saturate(const FinEqRel& r, std::span<const Element> a);

/// A nested pair E ⊆ F on a common ground set.
class FinPair {
 public:
  FinPair() = default;
  /// Throws NotNested unless e refines f; sizes must agree (NotAPartition otherwise).
  FinPair(FinEqRel e, FinEqRel f);

  std::size_t size() const { return e_.size(); }
  const FinEqRel& E() const { return e_; }
  const FinEqRel& F() const { return f_; }

  /// E-class indices contained in F-class `c`, ascending (hence ordered by least element).
  const std::vector<std::size_t>& e_classes_in(std::size_t c) const;
  /// F-class index containing E-class `e`.
  std::size_t f_class_of_e_class(std::size_t e) const { return f_of_e_.at(e); }

  bool operator==(const FinPair& other) const { return e_ == other.e_ && f_ == other.f_; }

 private:
  FinEqRel e_;
  FinEqRel f_;
  std::vector<std::vector<std::size_t>> e_in_f_;
  std::vector<std::size_t> f_of_e_;
};

FinPair validate_pair(std::size_t n, BlockList e_blocks, BlockList f_blocks);

/// Pair induced on `a`, relabeled by the order isomorphism a -> {0,...,|a|-1}.
FinPair restrict(const FinPair& p, std::span<const Element> a);

/// (Δ, F/E) on the E-classes of p in canonical order.
FinPair quotient(const FinPair& p);

/// Apply a permutation of the ground set: x in the result corresponds to perm^-1(x) in p.
FinPair relabel(const FinPair& p, std::span<const std::size_t> perm);

enum class WitnessMode { Reduction, Embedding, Isomorphism };

const char* to_string(WitnessMode m);
WitnessMode witness_mode_from_string(std::string_view s);

/// A function table from one ground set to another, tagged with the relation it claims.
struct Witness {
  WitnessMode mode = WitnessMode::Reduction;
  std::vector<Element> map;

  bool operator==(const Witness&) const = default;
};

}  // namespace simpair
