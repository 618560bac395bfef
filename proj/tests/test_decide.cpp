#include <doctest.h>

#include <random>

#include "fixtures.hpp"

using namespace simpair;
using namespace simpair::testing;

namespace {

void check_sound(const FinPair& a, const FinPair& b, const Decision& d, WitnessMode mode) {
  if (!d.holds) return;
  REQUIRE(d.witness.has_value());
  CHECK(d.witness->mode == mode);
  CHECK(verify_witness(a, b, *d.witness).ok);
}

}  // namespace

TEST_CASE("decide_reduction") {
  auto d = decide_reduction(pair_a(), pair_b());
  CHECK(d.holds);
  REQUIRE(d.witness);
  CHECK(d.witness->map == std::vector<Element>{0, 1, 1, 3, 3, 3});
  CHECK(verify_witness(pair_a(), pair_b(), *d.witness).ok);

  auto self = decide_reduction(pair_a(), pair_a());
  CHECK(self.holds);
  check_sound(pair_a(), pair_a(), self, WitnessMode::Reduction);

  CHECK_FALSE(decide_reduction(FinPair(discrete(2), indiscrete(2)), FinPair(discrete(1), discrete(1))).holds);
  CHECK(decide_reduction(validate_pair(0, {}, {}), pair_c()).holds);
  CHECK_FALSE(decide_reduction(pair_c(), validate_pair(0, {}, {})).holds);
}

TEST_CASE("compatibility_graph and max_matching") {
  auto g = compatibility_graph(pair_c(), pair_b());
  CHECK(g.left == 1);
  CHECK(g.adj == std::vector<std::vector<std::size_t>>{{1}});

  auto self = compatibility_graph(pair_a(), pair_a());
  for (std::size_t c = 0; c < self.left; ++c)
    CHECK(std::find(self.adj[c].begin(), self.adj[c].end(), c) != self.adj[c].end());

  auto de = compatibility_graph(pair_d(), pair_e());
  CHECK(de.adj == std::vector<std::vector<std::size_t>>{{1}, {1}});
  CHECK(max_matching(de).size == 1);

  BipartiteGraph k22{2, 2, {{0, 1}, {0, 1}}};
  CHECK(max_matching(k22).size == 2);
  CHECK(max_matching(BipartiteGraph{}).size == 0);
  BipartiteGraph no_edges{3, 2, {{}, {}, {}}};
  CHECK(max_matching(no_edges).size == 0);

  // Against brute force over all subsets of edges on random small graphs.
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    BipartiteGraph r{1 + rng() % 5, 1 + rng() % 5, {}};
    r.adj.resize(r.left);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < r.left; ++u)
      for (std::size_t v = 0; v < r.right; ++v)
        if (rng() % 3 == 0) {
          r.adj[u].push_back(v);
          edges.emplace_back(u, v);
        }
    std::size_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
      std::vector<bool> lu(r.left), rv(r.right);
      std::size_t size = 0;
      bool ok = true;
      for (std::size_t i = 0; i < edges.size() && ok; ++i) {
        if (!(mask >> i & 1)) continue;
        auto [u, v] = edges[i];
        if (lu[u] || rv[v]) ok = false;
        lu[u] = rv[v] = true;
        ++size;
      }
      if (ok) best = std::max(best, size);
    }
    auto m = max_matching(r);
    CHECK(m.size == best);
    std::vector<bool> used(r.right);
    std::size_t counted = 0;
    for (std::size_t u = 0; u < r.left; ++u) {
      if (!m.mate[u]) continue;
      ++counted;
      CHECK(std::find(r.adj[u].begin(), r.adj[u].end(), *m.mate[u]) != r.adj[u].end());
      CHECK_FALSE(used[*m.mate[u]]);
      used[*m.mate[u]] = true;
    }
    CHECK(counted == m.size);
  }
}

TEST_CASE("decide_embedding") {
  auto cb = decide_embedding(pair_c(), pair_b());
  CHECK(cb.holds);
  REQUIRE(cb.witness);
  CHECK(cb.witness->map == std::vector<Element>{5, 3, 4});
  check_sound(pair_c(), pair_b(), cb, WitnessMode::Embedding);

  CHECK(decide_embedding(pair_e(), pair_d()).holds);
  check_sound(pair_e(), pair_d(), decide_embedding(pair_e(), pair_d()), WitnessMode::Embedding);
  CHECK_FALSE(decide_embedding(pair_d(), pair_e()).holds);
  CHECK(decide_embedding(pair_a(), pair_a()).holds);
  CHECK_FALSE(decide_embedding(pair_a(), pair_b()).holds);
}

TEST_CASE("align_embedding") {
  std::vector<std::size_t> into_second{1};
  CHECK(align_embedding(pair_c(), pair_b(), into_second).map == std::vector<Element>{5, 3, 4});

  auto ef = validate_pair(5, {{0, 1}, {2, 3, 4}}, {{0, 1}, {2, 3, 4}});
  std::vector<std::size_t> identity{0, 1};
  auto w = align_embedding(ef, ef, identity);
  CHECK(w.map == std::vector<Element>{0, 1, 2, 3, 4});

  std::vector<std::size_t> into_first{0};
  try {
    align_embedding(pair_c(), pair_b(), into_first);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ShapeMismatch);
  }
  std::vector<std::size_t> clash{0, 0};
  CHECK_THROWS_AS(align_embedding(pair_a(), pair_a(), clash), Error);

  // Least sufficient size, whatever order the source classes come in.
  auto src = validate_pair(3, {{0}, {1, 2}}, {{0, 1, 2}});
  auto tgt = validate_pair(5, {{0, 1, 2}, {3, 4}}, {{0, 1, 2, 3, 4}});
  std::vector<std::size_t> zero{0};
  CHECK(align_embedding(src, tgt, zero).map == std::vector<Element>{3, 0, 1});
}

TEST_CASE("decide_isomorphism") {
  std::vector<std::size_t> perm{3, 4, 5, 0, 1, 2};
  auto d = pair_d();
  std::vector<std::size_t> rot{1, 2, 3, 4, 5, 0};
  auto moved = relabel(d, rot);
  auto res = decide_isomorphism(d, moved);
  CHECK(res.holds);
  check_sound(d, moved, res, WitnessMode::Isomorphism);
  auto self = decide_isomorphism(pair_a(), pair_a());
  CHECK(self.holds);
  CHECK(self.witness->map == std::vector<Element>{0, 1, 2, 3, 4, 5});
  CHECK_FALSE(decide_isomorphism(pair_d(), pair_e()).holds);
  CHECK(decide_isomorphism(relabel(d, perm), d).holds);
}

TEST_CASE("verify_witness") {
  Witness id{WitnessMode::Isomorphism, {0, 1, 2, 3, 4, 5}};
  CHECK(verify_witness(pair_a(), pair_a(), id).ok);
  Witness red{WitnessMode::Reduction, {0, 1, 1, 3, 3, 3}};
  CHECK(verify_witness(pair_a(), pair_b(), red).ok);

  auto dd = FinPair(discrete(2), discrete(2));
  Witness constant{WitnessMode::Reduction, {0, 0}};
  auto v = verify_witness(dd, dd, constant);
  CHECK_FALSE(v.ok);
  REQUIRE(!v.violations.empty());
  CHECK(v.violations[0].kind == Violation::Kind::E);
  CHECK(v.violations[0].x == 0);
  CHECK(v.violations[0].y == 1);

  // A reduction need not be injective, an embedding must be.
  auto ii = FinPair(indiscrete(2), indiscrete(2));
  Witness collapse{WitnessMode::Reduction, {0, 0}};
  CHECK(verify_witness(ii, ii, collapse).ok);
  collapse.mode = WitnessMode::Embedding;
  CHECK(verify_witness(ii, ii, collapse).violations.at(0).kind == Violation::Kind::NotInjective);

  Witness partial{WitnessMode::Isomorphism, {0}};
  auto one = FinPair(discrete(1), discrete(1));
  auto v2 = verify_witness(one, dd, partial);
  CHECK(v2.violations.at(0).kind == Violation::Kind::NotSurjective);
  CHECK(v2.violations.at(0).y == 1);

  Witness short_map{WitnessMode::Reduction, {0}};
  CHECK_THROWS_AS(verify_witness(dd, dd, short_map), Error);
  Witness out_of_range{WitnessMode::Reduction, {0, 7}};
  try {
    verify_witness(dd, dd, out_of_range);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RangeError);
  }
}

TEST_CASE("single relations") {
  // With F = E the pair carries no more than E itself.
  auto rels = universe(4);
  for (const auto& a : rels) {
    if (!(a.E() == a.F())) continue;
    for (const auto& b : rels) {
      if (!(b.E() == b.F())) continue;
      CHECK(decide_reduction(a, b).holds == (a.E().num_classes() <= b.E().num_classes()));
      CHECK(decide_isomorphism(a, b).holds == (fs_of(a.E()) == fs_of(b.E())));
    }
  }
}
