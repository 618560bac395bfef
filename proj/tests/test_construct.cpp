#include <doctest.h>

#include <random>

#include "fixtures.hpp"

using namespace simpair;
using namespace simpair::testing;

TEST_CASE("build_shape_pair") {
  std::vector g{fine("<2|0;0>"), fine("<0,1|0;0>")};
  auto p = build_shape_pair(g);
  CHECK(p == validate_pair(4, {{0}, {1}, {2, 3}}, {{0, 1}, {2, 3}}));
  CHECK(gfs_of(p) == GlobalFineShape{{g[0], Cardinal(1)}, {g[1], Cardinal(1)}});

  std::vector single{fine("<1|0;0>")};
  CHECK(build_shape_pair(single) == FinPair(discrete(1), discrete(1)));

  auto alpha = fine("<1,2|0;0>");
  std::vector twice{alpha, alpha};
  CHECK(gfs_of(build_shape_pair(twice)) == GlobalFineShape{{alpha, Cardinal(2)}});

  CHECK(build_shape_pair(std::vector<LocalFineShape>{}).size() == 0);

  for (const char* infinite : {"<inf|0;0>", "<1|1;0>", "<1|0;1>"}) {
    std::vector bad{fine(infinite)};
    try {
      build_shape_pair(bad);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InfiniteShape);
    }
  }

  // F-class x is the class built from g[x].
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    std::vector<LocalFineShape> gs;
    for (std::size_t x = 0; x < 1 + rng() % 5; ++x) {
      std::vector<Cardinal> counts(1 + rng() % 4);
      for (auto& c : counts) c = Cardinal(rng() % 3);
      counts.back() = Cardinal(1 + rng() % 2);
      gs.emplace_back(ShapeSeq(counts, Cardinal(), Cardinal()));
    }
    auto q = build_shape_pair(gs);
    REQUIRE(q.F().num_classes() == gs.size());
    for (std::size_t x = 0; x < gs.size(); ++x) CHECK(lfs_of_class(q, x) == gs[x]);
  }
}

TEST_CASE("parse_cycles") {
  CHECK(parse_cycles("(0 2)(1 3)", 4) == Permutation{2, 3, 0, 1});
  CHECK(parse_cycles("(0 1 2 3)", 4) == Permutation{1, 2, 3, 0});
  CHECK(parse_cycles("", 3) == Permutation{0, 1, 2});
  CHECK(parse_cycles("()", 3) == Permutation{0, 1, 2});
  CHECK(parse_cycles(" (0 1) ( 2 ) ", 3) == Permutation{1, 0, 2});
  CHECK_THROWS_AS(parse_cycles("(0 1", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("0 1", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(0 x)", 3), ParseError);
  try {
    parse_cycles("(0 1)(1 2)", 3);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAPermutation);
  }
  CHECK_THROWS_AS(parse_cycles("(0 5)", 3), Error);
}

TEST_CASE("orbit_pair") {
  auto sub = std::vector<Permutation>{parse_cycles("(0 2)(1 3)", 4)};
  auto full = std::vector<Permutation>{parse_cycles("(0 2)(1 3)", 4), parse_cycles("(0 1 2 3)", 4)};
  auto p = orbit_pair(4, sub, full);
  CHECK(p.E().blocks() == BlockList{{0, 2}, {1, 3}});
  CHECK(p.F().blocks() == BlockList{{0, 1, 2, 3}});

  auto same = orbit_pair(4, full, full);
  CHECK(same.E() == same.F());

  CHECK(orbit_pair(5, std::vector<Permutation>{}, std::vector<Permutation>{}) == FinPair(discrete(5), discrete(5)));

  try {
    orbit_pair(4, full, sub);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSubset);
  }
  auto broken = std::vector<Permutation>{Permutation{0, 0, 1, 2}};
  try {
    orbit_pair(4, std::vector<Permutation>{}, broken);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAPermutation);
  }

  // Random subgroups always give nested pairs.
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    std::size_t n = 1 + rng() % 8;
    std::vector<Permutation> gens;
    for (std::size_t k = 0; k < 1 + rng() % 3; ++k) {
      Permutation g(n);
      for (std::size_t j = 0; j < n; ++j) g[j] = j;
      std::shuffle(g.begin(), g.end(), rng);
      gens.push_back(g);
    }
    std::vector<Permutation> sub_gens(gens.begin(), gens.begin() + static_cast<long>(rng() % (gens.size() + 1)));
    auto q = orbit_pair(n, sub_gens, gens);
    CHECK(q.E().refines(q.F()));
  }
}

TEST_CASE("random_pair") {
  for (auto profile : {RandomProfile::UniformRefinement, RandomProfile::ShapeTargeted}) {
    CHECK(random_pair(5, 0, profile).size() == 0);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      auto p = random_pair(seed, 6, profile);
      CHECK(p.size() == 6);
      CHECK(p == random_pair(seed, 6, profile));
      CHECK(p == parse_pair(serialize_pair(p)));
    }
  }
  // Different seeds eventually differ.
  bool differs = false;
  for (std::uint64_t seed = 1; seed < 20 && !differs; ++seed)
    differs = !(random_pair(seed, 6, RandomProfile::UniformRefinement) == random_pair(0, 6, RandomProfile::UniformRefinement));
  CHECK(differs);
}
