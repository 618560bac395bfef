#include "simpair/wpo.hpp"

#include <algorithm>
#include <cstdint>

#include "simpair/error.hpp"

namespace simpair {

std::vector<LocalCoarseShape> minimal_elements(std::span<const LocalCoarseShape> shapes) {
  std::vector<LocalCoarseShape> out;
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    const auto& s = shapes[i];
    bool keep = true;
    for (std::size_t j = 0; j < shapes.size() && keep; ++j) {
      if (j == i) continue;
      // Strictly below s, or an equal copy appearing earlier.
      if (shape_leq(shapes[j], s) && (shapes[j] != s || j < i)) keep = false;
    }
    if (keep) out.push_back(s);
  }
  return out;
}

UpperSet upper_set_from_shapes(std::span<const LocalCoarseShape> shapes) {
  UpperSet w;
  w.generators_ = minimal_elements(shapes);
  std::sort(w.generators_.begin(), w.generators_.end(), [](const auto& a, const auto& b) {
    return print_shape_literal(a) < print_shape_literal(b);
  });
  return w;
}

bool UpperSet::contains(const LocalCoarseShape& s) const {
  return std::any_of(generators_.begin(), generators_.end(), [&](const auto& g) { return shape_leq(g, s); });
}

std::string UpperSet::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ", ";
    out += print_shape_literal(generators_[i]);
  }
  return out + '}';
}

Cardinal n_w(const FinPair& p, const UpperSet& w) {
  std::uint64_t count = 0;
  for (std::size_t c = 0; c < p.F().num_classes(); ++c)
    if (w.contains(lcs_of_class(p, c))) ++count;
  return Cardinal(count);
}

namespace {

void partitions(std::size_t remaining, std::size_t max_part, std::vector<std::size_t>& current,
                std::vector<std::vector<std::size_t>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

UpperSet size_upper_set(Cardinal m) {
  if (m == Cardinal::aleph0()) {
    // Either infinitely many classes (position 1 is omega) or an infinite class (tail >= 1).
    std::vector<LocalCoarseShape> gens{LocalCoarseShape(ShapeSeq({Cardinal::aleph0()}, Cardinal(), Cardinal())),
                                       LocalCoarseShape(ShapeSeq({}, Cardinal(1), Cardinal(1)))};
    return upper_set_from_shapes(gens);
  }
  if (!m.is_finite() || m.count() == 0)
    throw Error(ErrorCode::InvalidArgument, "size threshold must be a position in 1..omega");
  std::vector<std::vector<std::size_t>> parts;
  std::vector<std::size_t> current;
  partitions(static_cast<std::size_t>(m.count()), static_cast<std::size_t>(m.count()), current, parts);
  std::vector<LocalCoarseShape> gens;
  for (const auto& sizes : parts) {
    std::vector<Cardinal> coarse(sizes.front());
    for (auto s : sizes)
      for (std::size_t i = 0; i < s; ++i) coarse[i] += Cardinal(1);
    gens.emplace_back(ShapeSeq(std::move(coarse), Cardinal(), Cardinal()));
  }
  return upper_set_from_shapes(gens);
}

std::vector<LocalCoarseShape> realized_coarse_shapes(const FinPair& p) {
  std::vector<LocalCoarseShape> shapes;
  for (std::size_t c = 0; c < p.F().num_classes(); ++c) shapes.push_back(lcs_of_class(p, c));
  std::sort(shapes.begin(), shapes.end());
  shapes.erase(std::unique(shapes.begin(), shapes.end()), shapes.end());
  return shapes;
}

bool gcs_leq(const FinPair& p1, const FinPair& p2, std::size_t shape_cap) {
  auto shapes = realized_coarse_shapes(p1);
  const auto k = shapes.size();
  auto subsets = [](std::size_t bits) { return bits >= 64 ? UINT64_MAX : std::uint64_t{1} << bits; };
  if (k > shape_cap || k >= 64) throw CapExceeded(subsets(k), subsets(shape_cap));
  // Bit i of a class mask: shapes[i] <= lcs(class), i.e. the class lies in up(shapes[i]).
  auto masks = [&](const FinPair& p) {
    std::vector<std::uint64_t> out;
    for (std::size_t c = 0; c < p.F().num_classes(); ++c) {
      auto lcs = lcs_of_class(p, c);
      std::uint64_t mask = 0;
      for (std::size_t i = 0; i < k; ++i)
        if (shape_leq(shapes[i], lcs)) mask |= std::uint64_t{1} << i;
      out.push_back(mask);
    }
    return out;
  };
  auto m1 = masks(p1), m2 = masks(p2);
  for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << k); ++subset) {
    auto count = [subset](const std::vector<std::uint64_t>& ms) {
      return std::count_if(ms.begin(), ms.end(), [subset](std::uint64_t m) { return (m & subset) != 0; });
    };
    if (count(m1) > count(m2)) return false;
  }
  return true;
}

}  // namespace simpair
