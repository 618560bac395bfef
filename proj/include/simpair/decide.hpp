#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "simpair/core.hpp"

namespace simpair {

/// Answer of a decision procedure, with a witness map whenever the answer is yes.
struct Decision {
  bool holds = false;
  std::optional<Witness> witness;
};

/// Left nodes are F-classes of the source pair, right nodes F-classes of the target.
struct BipartiteGraph {
  std::size_t left = 0;
  std::size_t right = 0;
  std::vector<std::vector<std::size_t>> adj;  // ascending right indices per left node

  std::size_t num_edges() const;
};

struct Matching {
  std::vector<std::optional<std::size_t>> mate;  // left -> right
  std::size_t size = 0;
};

/// Edge (c, c') iff lcs(c) <= lcs(c').
BipartiteGraph compatibility_graph(const FinPair& p1, const FinPair& p2);

/// Hopcroft-Karp. Deterministic: adjacency is scanned in ascending order.
Matching max_matching(const BipartiteGraph& g);

/// Simultaneous reduction exists iff crs(p1) <= crs(p2).
Decision decide_reduction(const FinPair& p1, const FinPair& p2);

/// Simultaneous embedding exists iff the compatibility graph has a matching saturating p1's F-classes.
Decision decide_embedding(const FinPair& p1, const FinPair& p2);

/// Builds an injective point map sending F-class c of p1 into F-class class_map[c] of p2.
/// Inside each class a new E-class goes to the unused target E-class of least sufficient size
/// (least index on ties). Throws ShapeMismatch when no such class is left.
Witness align_embedding(const FinPair& p1, const FinPair& p2, std::span<const std::size_t> class_map);

/// Isomorphic iff the global fine shapes agree.
Decision decide_isomorphism(const FinPair& p1, const FinPair& p2);

struct Violation {
  enum class Kind { E, F, NotInjective, NotSurjective };
  Kind kind;
  Element x = 0;
  Element y = 0;  // for NotSurjective: the missed target element

  std::string str() const;
};

struct Verification {
  bool ok = true;
  std::vector<Violation> violations;
};

/// Checks x E y <=> f(x) E' f(y) and x F y <=> f(x) F' f(y) for all x < y, plus injectivity
/// or bijectivity as required by the mode. Throws RangeError on a malformed table.
Verification verify_witness(const FinPair& p1, const FinPair& p2, const Witness& w);

}  // namespace simpair
