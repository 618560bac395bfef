#include "simpair/decide.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <numeric>

#include "simpair/error.hpp"
#include "simpair/shapes.hpp"

namespace simpair {

std::size_t BipartiteGraph::num_edges() const {
  std::size_t n = 0;
  for (const auto& a : adj) n += a.size();
  return n;
}

BipartiteGraph compatibility_graph(const FinPair& p1, const FinPair& p2) {
  BipartiteGraph g{p1.F().num_classes(), p2.F().num_classes(), {}};
  std::vector<LocalCoarseShape> right;
  for (std::size_t c = 0; c < g.right; ++c) right.push_back(lcs_of_class(p2, c));
  g.adj.resize(g.left);
  for (std::size_t c = 0; c < g.left; ++c) {
    auto lcs = lcs_of_class(p1, c);
    for (std::size_t d = 0; d < g.right; ++d)
      if (shape_leq(lcs, right[d])) g.adj[c].push_back(d);
  }
  return g;
}

Matching max_matching(const BipartiteGraph& g) {
  constexpr auto kInf = std::numeric_limits<std::size_t>::max();
  constexpr auto kFree = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> mate_left(g.left, kFree), mate_right(g.right, kFree), dist(g.left);

  auto bfs = [&] {
    std::deque<std::size_t> queue;
    bool found = false;
    for (std::size_t u = 0; u < g.left; ++u) {
      dist[u] = mate_left[u] == kFree ? 0 : kInf;
      if (dist[u] == 0) queue.push_back(u);
    }
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      for (auto v : g.adj[u]) {
        auto w = mate_right[v];
        if (w == kFree) {
          found = true;
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return found;
  };

  auto dfs = [&](auto&& self, std::size_t u) -> bool {
    for (auto v : g.adj[u]) {
      auto w = mate_right[v];
      if (w == kFree || (dist[w] == dist[u] + 1 && self(self, w))) {
        mate_left[u] = v;
        mate_right[v] = u;
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  };

  Matching m;
  while (bfs())
    for (std::size_t u = 0; u < g.left; ++u)
      if (mate_left[u] == kFree && dfs(dfs, u)) ++m.size;
  m.mate.resize(g.left);
  for (std::size_t u = 0; u < g.left; ++u)
    if (mate_left[u] != kFree) m.mate[u] = mate_left[u];
  return m;
}

namespace {

// F-class indices sorted by number of E-classes, largest first, ties by index.
std::vector<std::size_t> classes_by_e_count(const FinPair& p) {
  std::vector<std::size_t> order(p.F().num_classes());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return p.e_classes_in(a).size() > p.e_classes_in(b).size();
  });
  return order;
}

}  // namespace

Decision decide_reduction(const FinPair& p1, const FinPair& p2) {
  Decision d;
  d.holds = shape_leq(crs_of(p1), crs_of(p2));
  if (!d.holds) return d;

  auto src = classes_by_e_count(p1);
  auto tgt = classes_by_e_count(p2);
  Witness w{WitnessMode::Reduction, std::vector<Element>(p1.size())};
  for (std::size_t i = 0; i < src.size(); ++i) {
    const auto& from = p1.e_classes_in(src[i]);
    const auto& to = p2.e_classes_in(tgt.at(i));
    if (from.size() > to.size()) throw Error(ErrorCode::ShapeMismatch, "crs comparison and class counts disagree");
    for (std::size_t j = 0; j < from.size(); ++j)
      for (auto x : p1.E().block(from[j])) w.map[x] = p2.E().block(to[j]).front();
  }
  d.witness = std::move(w);
  return d;
}

Decision decide_embedding(const FinPair& p1, const FinPair& p2) {
  auto g = compatibility_graph(p1, p2);
  auto m = max_matching(g);
  Decision d;
  d.holds = m.size == g.left;
  if (!d.holds) return d;
  std::vector<std::size_t> class_map(g.left);
  for (std::size_t c = 0; c < g.left; ++c) class_map[c] = *m.mate[c];
  d.witness = align_embedding(p1, p2, class_map);
  return d;
}

Witness align_embedding(const FinPair& p1, const FinPair& p2, std::span<const std::size_t> class_map) {
  if (class_map.size() != p1.F().num_classes())
    throw Error(ErrorCode::InvalidArgument, "class map must cover every F-class of the source");
  std::vector<bool> target_used(p2.F().num_classes(), false);
  for (auto t : class_map) {
    if (t >= target_used.size())
      throw Error(ErrorCode::ClassIndexOutOfRange, "target F-class " + std::to_string(t) + " does not exist");
    if (target_used[t]) throw Error(ErrorCode::InvalidArgument, "class map is not injective");
    target_used[t] = true;
  }

  constexpr auto kNone = std::numeric_limits<std::size_t>::max();
  Witness w{WitnessMode::Embedding, std::vector<Element>(p1.size())};
  std::vector<std::size_t> chosen(p1.E().num_classes(), kNone);  // source E-class -> target E-class
  std::vector<std::size_t> next_free(p2.E().num_classes(), 0);   // next unused element of a target E-class
  std::vector<bool> e_used(p2.E().num_classes(), false);

  for (std::size_t c = 0; c < class_map.size(); ++c) {
    const auto& candidates = p2.e_classes_in(class_map[c]);
    for (auto x : p1.F().block(c)) {
      auto e = p1.E().class_of(x);
      if (chosen[e] == kNone) {
        auto need = p1.E().block(e).size();
        std::size_t best = kNone;
        for (auto t : candidates) {
          auto size = p2.E().block(t).size();
          if (e_used[t] || size < need) continue;
          if (best == kNone || size < p2.E().block(best).size()) best = t;
        }
        if (best == kNone)
          throw Error(ErrorCode::ShapeMismatch, "F-class " + std::to_string(c) + " does not fit into F-class " +
                                                    std::to_string(class_map[c]));
        chosen[e] = best;
        e_used[best] = true;
      }
      auto t = chosen[e];
      w.map[x] = p2.E().block(t)[next_free[t]++];
    }
  }
  return w;
}

Decision decide_isomorphism(const FinPair& p1, const FinPair& p2) {
  Decision d;
  d.holds = gfs_of(p1) == gfs_of(p2);
  if (!d.holds) return d;

  std::map<LocalFineShape, std::vector<std::size_t>> groups1, groups2;
  for (std::size_t c = 0; c < p1.F().num_classes(); ++c) groups1[lfs_of_class(p1, c)].push_back(c);
  for (std::size_t c = 0; c < p2.F().num_classes(); ++c) groups2[lfs_of_class(p2, c)].push_back(c);

  Witness w{WitnessMode::Isomorphism, std::vector<Element>(p1.size())};
  std::vector<bool> e_used(p2.E().num_classes(), false);
  for (const auto& [shape, from_classes] : groups1) {
    const auto& to_classes = groups2.at(shape);
    for (std::size_t i = 0; i < from_classes.size(); ++i) {
      const auto& targets = p2.e_classes_in(to_classes[i]);
      for (auto e : p1.e_classes_in(from_classes[i])) {
        const auto& block = p1.E().block(e);
        auto it = std::find_if(targets.begin(), targets.end(),
                               [&](auto t) { return !e_used[t] && p2.E().block(t).size() == block.size(); });
        if (it == targets.end()) throw Error(ErrorCode::ShapeMismatch, "equal local fine shapes failed to align");
        e_used[*it] = true;
        const auto& image = p2.E().block(*it);
        for (std::size_t j = 0; j < block.size(); ++j) w.map[block[j]] = image[j];
      }
    }
  }
  d.witness = std::move(w);
  return d;
}

std::string Violation::str() const {
  switch (kind) {
    case Kind::E: return "E-relation not preserved at (" + std::to_string(x) + "," + std::to_string(y) + ")";
    case Kind::F: return "F-relation not preserved at (" + std::to_string(x) + "," + std::to_string(y) + ")";
    case Kind::NotInjective:
      return "not injective: " + std::to_string(x) + " and " + std::to_string(y) + " share an image";
    case Kind::NotSurjective: return "not surjective: " + std::to_string(y) + " has no preimage";
  }
  return "?";
}

Verification verify_witness(const FinPair& p1, const FinPair& p2, const Witness& w) {
  if (w.map.size() != p1.size())
    throw Error(ErrorCode::RangeError, "map has " + std::to_string(w.map.size()) + " entries, source has " +
                                           std::to_string(p1.size()) + " points");
  for (auto v : w.map)
    if (v >= p2.size())
      throw Error(ErrorCode::RangeError, "map value " + std::to_string(v) + " outside target of size " +
                                             std::to_string(p2.size()));

  Verification out;
  auto report = [&](Violation::Kind k, Element x, Element y) { out.violations.push_back({k, x, y}); };
  const auto& f = w.map;
  for (Element x = 0; x < f.size(); ++x) {
    for (Element y = x + 1; y < f.size(); ++y) {
      if (p1.E().related(x, y) != p2.E().related(f[x], f[y])) report(Violation::Kind::E, x, y);
      if (p1.F().related(x, y) != p2.F().related(f[x], f[y])) report(Violation::Kind::F, x, y);
      if (w.mode != WitnessMode::Reduction && f[x] == f[y]) report(Violation::Kind::NotInjective, x, y);
    }
  }
  if (w.mode == WitnessMode::Isomorphism) {
    std::vector<bool> hit(p2.size(), false);
    for (auto v : f) hit[v] = true;
    for (Element y = 0; y < hit.size(); ++y)
      if (!hit[y]) report(Violation::Kind::NotSurjective, 0, y);
  }
  out.ok = out.violations.empty();
  return out;
}

}  // namespace simpair
