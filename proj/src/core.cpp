#include "simpair/core.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "simpair/error.hpp"

namespace simpair {

namespace {

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

void check_in_range(Element x, std::size_t n) {
  if (x >= n)
    throw Error(ErrorCode::ElementOutOfRange,
                "element " + std::to_string(x) + " outside ground set of size " + std::to_string(n));
}

}  // namespace

FinEqRel FinEqRel::from_blocks(std::size_t n, BlockList blocks) {
  FinEqRel r;
  r.class_of_.assign(n, kUnset);
  for (auto& b : blocks) {
    if (b.empty()) throw Error(ErrorCode::NotAPartition, "empty block");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) { return a.front() < b.front(); });
  for (std::size_t c = 0; c < blocks.size(); ++c) {
    for (auto x : blocks[c]) {
      check_in_range(x, n);
      if (r.class_of_[x] != kUnset)
        throw Error(ErrorCode::NotAPartition, "element " + std::to_string(x) + " appears twice");
      r.class_of_[x] = c;
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    if (r.class_of_[x] == kUnset)
      throw Error(ErrorCode::NotAPartition, "element " + std::to_string(x) + " is in no block");
  r.blocks_ = std::move(blocks);
  return r;
}

FinEqRel FinEqRel::from_labels(std::span<const std::size_t> labels) {
  FinEqRel r;
  std::map<std::size_t, std::size_t> index;
  r.class_of_.resize(labels.size());
  for (std::size_t x = 0; x < labels.size(); ++x) {
    auto [it, fresh] = index.try_emplace(labels[x], r.blocks_.size());
    if (fresh) r.blocks_.emplace_back();
    r.blocks_[it->second].push_back(x);
    r.class_of_[x] = it->second;
  }
  return r;
}

bool FinEqRel::refines(const FinEqRel& other) const {
  if (size() != other.size()) return false;
  for (const auto& b : blocks_)
    for (auto x : b)
      if (other.class_of(x) != other.class_of(b.front())) return false;
  return true;
}

FinEqRel discrete(std::size_t n) {
  std::vector<std::size_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = i;
  return FinEqRel::from_labels(labels);
}

FinEqRel indiscrete(std::size_t n) { return FinEqRel::from_labels(std::vector<std::size_t>(n, 0)); }

FinEqRel kernel_partition(std::span<const std::size_t> f) { return FinEqRel::from_labels(f); }

ElementSet saturate(const FinEqRel& r, std::span<const Element> a) {
  std::vector<bool> hit(r.num_classes(), false);
  for (auto x : a) {
    check_in_range(x, r.size());
    hit[r.class_of(x)] = true;
  }
  ElementSet out;
  for (std::size_t x = 0; x < r.size(); ++x)
    if (hit[r.class_of(x)]) out.push_back(x);
  return out;
}

FinPair::FinPair(FinEqRel e, FinEqRel f) : e_(std::move(e)), f_(std::move(f)) {
  if (e_.size() != f_.size())
    throw Error(ErrorCode::NotAPartition, "E and F live on ground sets of different size");
  if (!e_.refines(f_)) throw Error(ErrorCode::NotNested, "some E-class meets two F-classes");
  e_in_f_.resize(f_.num_classes());
  f_of_e_.resize(e_.num_classes());
  for (std::size_t c = 0; c < e_.num_classes(); ++c) {
    auto fc = f_.class_of(e_.block(c).front());
    e_in_f_[fc].push_back(c);
    f_of_e_[c] = fc;
  }
}

const std::vector<std::size_t>& FinPair::e_classes_in(std::size_t c) const {
  if (c >= e_in_f_.size())
    throw Error(ErrorCode::ClassIndexOutOfRange, "F-class " + std::to_string(c) + " does not exist");
  return e_in_f_[c];
}

FinPair validate_pair(std::size_t n, BlockList e_blocks, BlockList f_blocks) {
  return FinPair(FinEqRel::from_blocks(n, std::move(e_blocks)), FinEqRel::from_blocks(n, std::move(f_blocks)));
}

FinPair restrict(const FinPair& p, std::span<const Element> a) {
  ElementSet sorted(a.begin(), a.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::size_t> e_labels, f_labels;
  for (auto x : sorted) {
    check_in_range(x, p.size());
    e_labels.push_back(p.E().class_of(x));
    f_labels.push_back(p.F().class_of(x));
  }
  return FinPair(FinEqRel::from_labels(e_labels), FinEqRel::from_labels(f_labels));
}

FinPair quotient(const FinPair& p) {
  std::vector<std::size_t> f_labels(p.E().num_classes());
  for (std::size_t c = 0; c < f_labels.size(); ++c) f_labels[c] = p.f_class_of_e_class(c);
  return FinPair(discrete(f_labels.size()), FinEqRel::from_labels(f_labels));
}

FinPair relabel(const FinPair& p, std::span<const std::size_t> perm) {
  if (perm.size() != p.size()) throw Error(ErrorCode::NotAPermutation, "permutation has wrong degree");
  std::vector<std::size_t> e_labels(p.size()), f_labels(p.size());
  std::vector<bool> seen(p.size(), false);
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (perm[x] >= p.size() || seen[perm[x]]) throw Error(ErrorCode::NotAPermutation, "not a bijection");
    seen[perm[x]] = true;
    e_labels[perm[x]] = p.E().class_of(x);
    f_labels[perm[x]] = p.F().class_of(x);
  }
  return FinPair(FinEqRel::from_labels(e_labels), FinEqRel::from_labels(f_labels));
}

const char* to_string(WitnessMode m) {
  switch (m) {
    case WitnessMode::Reduction: return "reduction";
    case WitnessMode::Embedding: return "embedding";
    case WitnessMode::Isomorphism: return "isomorphism";
  }
  return "?";
}

WitnessMode witness_mode_from_string(std::string_view s) {
  if (s == "reduction") return WitnessMode::Reduction;
  if (s == "embedding") return WitnessMode::Embedding;
  if (s == "isomorphism") return WitnessMode::Isomorphism;
  throw Error(ErrorCode::InvalidArgument, "unknown witness mode '" + std::string(s) + "'");
}

}  // namespace simpair
