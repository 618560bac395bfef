#pragma once

#include <random>
#include <string>
#include <vector>

#include "simpair/simpair.hpp"

namespace simpair::testing {

// The small pairs used throughout the examples.
inline FinPair pair_a() { return validate_pair(6, {{0}, {1, 2}, {3, 4, 5}}, {{0, 1, 2}, {3, 4, 5}}); }
inline FinPair pair_b() { return validate_pair(6, {{0}, {1}, {2}, {3, 4}, {5}}, {{0, 1, 2}, {3, 4, 5}}); }
inline FinPair pair_c() { return validate_pair(3, {{0}, {1, 2}}, {{0, 1, 2}}); }
inline FinPair pair_d() { return validate_pair(6, {{0, 1}, {2}, {3, 4}, {5}}, {{0, 1, 2}, {3, 4, 5}}); }
inline FinPair pair_e() { return validate_pair(5, {{0}, {1}, {2, 3}, {4}}, {{0, 1}, {2, 3, 4}}); }

inline ShapeSeq seq(const std::string& literal) { return parse_shape_literal(literal); }
inline LocalCoarseShape coarse(const std::string& literal) { return LocalCoarseShape(seq(literal)); }
inline LocalFineShape fine(const std::string& literal) { return LocalFineShape(seq(literal)); }

inline std::vector<FinPair> universe(std::size_t n_max) {
  std::vector<FinPair> out;
  for (std::size_t n = 0; n <= n_max; ++n)
    oracle::for_each_pair(n, [&](const FinPair& p) { out.push_back(p); });
  return out;
}

// Random finite local coarse shape: decreasing prefix of length <= max_len, entries <= max_value.
inline LocalCoarseShape random_coarse(std::mt19937_64& rng, std::size_t max_len, std::uint64_t max_value) {
  auto len = 1 + rng() % max_len;
  std::vector<Cardinal> prefix;
  std::uint64_t prev = 1 + rng() % max_value;
  for (std::size_t i = 0; i < len; ++i) {
    prefix.emplace_back(prev);
    prev = rng() % (prev + 1);
    if (prev == 0) break;
  }
  return LocalCoarseShape(ShapeSeq(prefix, Cardinal(), Cardinal()));
}

inline FinPair random_small_pair(std::mt19937_64& rng, std::size_t min_n, std::size_t max_n) {
  auto n = min_n + rng() % (max_n - min_n + 1);
  auto profile = rng() % 2 ? RandomProfile::ShapeTargeted : RandomProfile::UniformRefinement;
  return random_pair(rng(), n, profile);
}

}  // namespace simpair::testing
