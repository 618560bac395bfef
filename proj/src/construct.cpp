#include "simpair/construct.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>

#include "simpair/error.hpp"

namespace simpair {

FinPair build_shape_pair(std::span<const LocalFineShape> g) {
  std::vector<std::size_t> e_labels, f_labels;
  std::size_t e_class = 0;
  for (std::size_t x = 0; x < g.size(); ++x) {
    const auto& s = g[x].seq();
    bool finite = s.tail().is_zero() && s.omega().is_zero() &&
                  std::all_of(s.prefix().begin(), s.prefix().end(), [](Cardinal c) { return c.is_finite(); });
    if (!finite)
      throw Error(ErrorCode::InfiniteShape,
                  "shape " + std::to_string(x) + " = " + print_shape_literal(s) + " needs infinitely many points");
    for (std::size_t size = 1; size <= s.prefix().size(); ++size) {
      for (std::uint64_t m = 0; m < s.at(size).count(); ++m, ++e_class) {
        for (std::size_t k = 0; k < size; ++k) {
          e_labels.push_back(e_class);
          f_labels.push_back(x);
        }
      }
    }
  }
  return FinPair(FinEqRel::from_labels(e_labels), FinEqRel::from_labels(f_labels));
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  Permutation perm(degree);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> moved(degree, false);
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) -> void { throw ParseError(msg, 1, pos + 1); };
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<std::size_t> cycle;
    while (true) {
      skip_space();
      if (pos >= text.size()) fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected a point");
      std::size_t v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        v = v * 10 + static_cast<std::size_t>(text[pos++] - '0');
      if (v >= degree)
        throw Error(ErrorCode::NotAPermutation, "point " + std::to_string(v) + " exceeds degree " + std::to_string(degree));
      if (moved[v]) throw Error(ErrorCode::NotAPermutation, "point " + std::to_string(v) + " appears twice");
      moved[v] = true;
      cycle.push_back(v);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) perm[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_space();
  }
  return perm;
}

namespace {

void check_permutation(const Permutation& p, std::size_t n) {
  if (p.size() != n) throw Error(ErrorCode::NotAPermutation, "generator has degree " + std::to_string(p.size()));
  std::vector<bool> seen(n, false);
  for (auto v : p) {
    if (v >= n || seen[v]) throw Error(ErrorCode::NotAPermutation, "generator is not a bijection");
    seen[v] = true;
  }
}

std::vector<std::size_t> orbits(std::size_t n, std::span<const Permutation> gens) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : gens)
    for (std::size_t x = 0; x < n; ++x) {
      auto a = find(x), b = find(g[x]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::size_t> labels(n);
  for (std::size_t x = 0; x < n; ++x) labels[x] = find(x);
  return labels;
}

// Platform-independent draw from {0,...,bound-1}.
std::size_t below(std::mt19937_64& rng, std::size_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return static_cast<std::size_t>(r % bound);
}

// Chinese-restaurant process with concentration 1: table label of each of n customers.
std::vector<std::size_t> restaurant(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> table(n);
  std::size_t tables = 0;
  for (std::size_t i = 0; i < n; ++i) {
    auto r = below(rng, i + 1);
    table[i] = r < i ? table[r] : tables++;
  }
  return table;
}

std::vector<std::size_t> table_sizes(const std::vector<std::size_t>& table) {
  std::vector<std::size_t> sizes;
  for (auto t : table) {
    if (sizes.size() <= t) sizes.resize(t + 1, 0);
    ++sizes[t];
  }
  return sizes;
}

}  // namespace

FinPair orbit_pair(std::size_t n, std::span<const Permutation> sub_gens, std::span<const Permutation> full_gens) {
  for (const auto& g : full_gens) check_permutation(g, n);
  for (const auto& g : sub_gens) {
    check_permutation(g, n);
    if (std::find(full_gens.begin(), full_gens.end(), g) == full_gens.end())
      throw Error(ErrorCode::NotSubset, "a subgroup generator is missing from the full generator list");
  }
  return FinPair(FinEqRel::from_labels(orbits(n, sub_gens)), FinEqRel::from_labels(orbits(n, full_gens)));
}

FinPair random_pair(std::uint64_t seed, std::size_t n, RandomProfile profile) {
  std::mt19937_64 rng(seed);
  auto f_table = restaurant(rng, n);
  if (profile == RandomProfile::UniformRefinement) {
    auto f = FinEqRel::from_labels(f_table);
    std::vector<std::size_t> e_labels(n);
    std::size_t offset = 0;
    for (const auto& block : f.blocks()) {
      auto local = restaurant(rng, block.size());
      for (std::size_t j = 0; j < block.size(); ++j) e_labels[block[j]] = offset + local[j];
      offset += block.size();
    }
    return FinPair(FinEqRel::from_labels(e_labels), f);
  }
  std::vector<LocalFineShape> g;
  for (auto class_size : table_sizes(f_table)) {
    std::vector<Cardinal> counts;
    for (auto s : table_sizes(restaurant(rng, class_size))) {
      if (counts.size() < s) counts.resize(s);
      counts[s - 1] += Cardinal(1);
    }
    g.emplace_back(ShapeSeq(std::move(counts), Cardinal(), Cardinal()));
  }
  return build_shape_pair(g);
}

}  // namespace simpair
