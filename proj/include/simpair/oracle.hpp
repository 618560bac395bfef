#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "simpair/core.hpp"
#include "simpair/decide.hpp"

namespace simpair::oracle {

// Exhaustive searches that know nothing about shapes. They check the definition of a
// simultaneous reduction directly on every candidate map and return the lexicographically
// least map that works.

inline constexpr std::uint64_t kDefaultCap = 10'000'000;
inline constexpr std::uint64_t kDefaultIsoCap = 40'320;  // 8!
inline constexpr std::size_t kDefaultMaxEnumeration = 6;

/// All |X2|^|X1| total functions.
Decision brute_reduction(const FinPair& p1, const FinPair& p2, std::uint64_t cap = kDefaultCap);
/// All injections; false without search when |X1| > |X2|.
Decision brute_embedding(const FinPair& p1, const FinPair& p2, std::uint64_t cap = kDefaultCap);
/// All bijections; false without search when the sizes differ.
Decision brute_isomorphism(const FinPair& p1, const FinPair& p2, std::uint64_t cap = kDefaultIsoCap);

/// Every labeled pair on {0,...,n-1}, each exactly once, in canonical form.
/// Throws CapExceeded when n > max_n.
void for_each_pair(std::size_t n, const std::function<void(const FinPair&)>& visit,
                   std::size_t max_n = kDefaultMaxEnumeration);
std::vector<FinPair> enumerate_pairs(std::size_t n, std::size_t max_n = kDefaultMaxEnumeration);

}  // namespace simpair::oracle
