#include "simpair/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "simpair/error.hpp"

namespace simpair::oracle {

namespace {

// Saturating arithmetic for search-space sizes.
std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

std::uint64_t power(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r = mul_sat(r, base);
  return r;
}

std::uint64_t falling(std::uint64_t n, std::size_t k) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r = mul_sat(r, n - i);
  return r;
}

void check_cap(std::uint64_t space, std::uint64_t cap) {
  if (space > cap) throw CapExceeded(space, cap);
}

bool is_simultaneous_reduction(const FinPair& p1, const FinPair& p2, const std::vector<Element>& f) {
  for (Element x = 0; x < f.size(); ++x)
    for (Element y = x + 1; y < f.size(); ++y)
      if (p1.E().related(x, y) != p2.E().related(f[x], f[y]) || p1.F().related(x, y) != p2.F().related(f[x], f[y]))
        return false;
  return true;
}

Decision found(WitnessMode mode, std::vector<Element> f) { return Decision{true, Witness{mode, std::move(f)}}; }

bool next_injection(std::vector<Element>& f, std::vector<bool>& used, std::size_t target, std::size_t pos);

}  // namespace

Decision brute_reduction(const FinPair& p1, const FinPair& p2, std::uint64_t cap) {
  const auto n1 = p1.size(), n2 = p2.size();
  check_cap(power(n2, n1), cap);
  if (n1 == 0) return found(WitnessMode::Reduction, {});
  if (n2 == 0) return {};
  std::vector<Element> f(n1, 0);
  while (true) {
    if (is_simultaneous_reduction(p1, p2, f)) return found(WitnessMode::Reduction, f);
    // Odometer with the last coordinate moving fastest: lexicographic order.
    std::size_t i = n1;
    while (i > 0 && f[i - 1] + 1 == n2) f[--i] = 0;
    if (i == 0) return {};
    ++f[i - 1];
  }
}

Decision brute_embedding(const FinPair& p1, const FinPair& p2, std::uint64_t cap) {
  const auto n1 = p1.size(), n2 = p2.size();
  if (n1 > n2) return {};
  check_cap(falling(n2, n1), cap);
  std::vector<Element> f;
  std::vector<bool> used(n2, false);
  // Smallest injection: 0, 1, ..., n1-1.
  for (Element i = 0; i < n1; ++i) {
    f.push_back(i);
    used[i] = true;
  }
  do {
    if (is_simultaneous_reduction(p1, p2, f)) return found(WitnessMode::Embedding, f);
  } while (n1 > 0 && next_injection(f, used, n2, n1 - 1));
  return {};
}

Decision brute_isomorphism(const FinPair& p1, const FinPair& p2, std::uint64_t cap) {
  const auto n = p1.size();
  if (n != p2.size()) return {};
  check_cap(falling(n, n), cap);
  std::vector<Element> f(n);
  std::iota(f.begin(), f.end(), 0);
  do {
    if (is_simultaneous_reduction(p1, p2, f)) return found(WitnessMode::Isomorphism, f);
  } while (std::next_permutation(f.begin(), f.end()));
  return {};
}

namespace {

// Advances f to the next injection in lexicographic order, changing positions >= some i <= pos.
bool next_injection(std::vector<Element>& f, std::vector<bool>& used, std::size_t target, std::size_t pos) {
  const auto k = f.size();
  for (std::size_t i = pos + 1; i-- > 0;) {
    used[f[i]] = false;
    Element v = f[i] + 1;
    while (v < target && used[v]) ++v;
    if (v == target) continue;
    f[i] = v;
    used[v] = true;
    // Refill the suffix with the smallest unused values.
    Element next = 0;
    for (std::size_t j = i + 1; j < k; ++j) {
      while (used[next]) ++next;
      f[j] = next;
      used[next] = true;
    }
    return true;
  }
  return false;
}

// Restricted growth strings of length n: every set partition exactly once.
void for_each_rgs(std::size_t n, const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> labels(n, 0);
  auto rec = [&](auto&& self, std::size_t i, std::size_t blocks) -> void {
    if (i == n) {
      visit(labels);
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      labels[i] = b;
      self(self, i + 1, std::max(blocks, b + 1));
    }
  };
  if (n == 0) {
    visit(labels);
    return;
  }
  labels[0] = 0;
  rec(rec, 1, 1);
}

}  // namespace

void for_each_pair(std::size_t n, const std::function<void(const FinPair&)>& visit, std::size_t max_n) {
  if (n > max_n) throw CapExceeded(n, max_n);
  for_each_rgs(n, [&](const std::vector<std::size_t>& f_labels) {
    auto f = FinEqRel::from_labels(f_labels);
    // Refine each F-block independently: a mixed-radix product over block partitions.
    std::vector<std::vector<std::vector<std::size_t>>> choices;
    for (const auto& b : f.blocks()) {
      std::vector<std::vector<std::size_t>> parts;
      for_each_rgs(b.size(), [&](const std::vector<std::size_t>& l) { parts.push_back(l); });
      choices.push_back(std::move(parts));
    }
    std::vector<std::size_t> pick(choices.size(), 0);
    while (true) {
      std::vector<std::size_t> e_labels(n);
      std::size_t offset = 0;
      for (std::size_t c = 0; c < choices.size(); ++c) {
        const auto& block = f.blocks()[c];
        const auto& local = choices[c][pick[c]];
        for (std::size_t j = 0; j < block.size(); ++j) e_labels[block[j]] = offset + local[j];
        offset += block.size();
      }
      visit(FinPair(FinEqRel::from_labels(e_labels), f));
      std::size_t c = choices.size();
      while (c > 0 && pick[c - 1] + 1 == choices[c - 1].size()) pick[--c] = 0;
      if (c == 0) break;
      ++pick[c - 1];
    }
  });
}

std::vector<FinPair> enumerate_pairs(std::size_t n, std::size_t max_n) {
  std::vector<FinPair> out;
  for_each_pair(n, [&](const FinPair& p) { out.push_back(p); }, max_n);
  return out;
}

}  // namespace simpair::oracle
