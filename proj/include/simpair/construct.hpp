#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "simpair/core.hpp"
#include "simpair/shapes.hpp"

namespace simpair {

/// The pair (E_g, F_g) on tuples (x, k, m, n) with k < n and m < g[x](n): F groups tuples by x,
/// E groups them by (x, m, n). Points are numbered in lexicographic order of (x, n, m, k),
/// so F-class x of the result is the class built from g[x].
/// Throws InfiniteShape if some g[x] has an infinite value or a nonzero tail/omega entry.
FinPair build_shape_pair(std::span<const LocalFineShape> g);

/// Image table of a permutation of {0,...,n-1}.
using Permutation = std::vector<std::size_t>;

/// Cycle notation such as "(0 2)(1 3)"; "" and "()" are the identity.
/// Throws ParseError on bad syntax and NotAPermutation on repeated or out-of-range points.
Permutation parse_cycles(std::string_view text, std::size_t degree);

/// E = orbits of <sub_gens>, F = orbits of <full_gens>. Every member of sub_gens must occur in
/// full_gens (NotSubset); every generator must be a permutation of degree n (NotAPermutation).
FinPair orbit_pair(std::size_t n, std::span<const Permutation> sub_gens, std::span<const Permutation> full_gens);

enum class RandomProfile { UniformRefinement, ShapeTargeted };

/// Deterministic in (seed, n, profile). UniformRefinement draws F by a Chinese-restaurant
/// process and refines each block by another; ShapeTargeted draws class sizes the same way
/// and realizes them with build_shape_pair.
FinPair random_pair(std::uint64_t seed, std::size_t n, RandomProfile profile);

}  // namespace simpair
