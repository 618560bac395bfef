#include "crosscheck.hpp"

#include <filesystem>
#include <random>

#include "simpair/simpair.hpp"

namespace simpair::cli {

namespace {

class Checker {
 public:
  Checker(const CrossCheckOptions& opts, CrossCheckReport& report) : opts_(opts), report_(report) {}

  void check(const FinPair& a, const FinPair& b) {
    const auto cap = opts_.cap.value_or(oracle::kDefaultCap);
    const auto iso_cap = opts_.cap.value_or(oracle::kDefaultIsoCap);

    auto red = decide_reduction(a, b);
    auto red_oracle = oracle::brute_reduction(a, b, cap);
    tally(report_.reduction, red, red_oracle, a, b, "red");

    auto emb = decide_embedding(a, b);
    auto emb_oracle = oracle::brute_embedding(a, b, cap);
    tally(report_.embedding, emb, emb_oracle, a, b, "emb");

    auto hall = max_matching(compatibility_graph(a, b)).size == a.F().num_classes();
    if (hall != gcs_leq(a, b) || hall != emb_oracle.holds) {
      ++report_.hall_gcs_disagreements;
      reproduce(a, b, "hall");
    }

    auto iso = decide_isomorphism(a, b);
    auto iso_oracle = oracle::brute_isomorphism(a, b, iso_cap);
    tally(report_.isomorphism, iso, iso_oracle, a, b, "iso");
  }

 private:
  void tally(RelationTally& t, const Decision& fast, const Decision& slow, const FinPair& a, const FinPair& b,
             const char* tag) {
    ++t.checked;
    if (fast.holds) ++t.holds;
    if (fast.holds != slow.holds) {
      ++t.disagreements;
      reproduce(a, b, tag);
    }
    for (const auto* d : {&fast, &slow}) {
      if (d->holds && (!d->witness || !verify_witness(a, b, *d->witness).ok)) {
        ++report_.unsound_witnesses;
        reproduce(a, b, tag);
      }
    }
  }

  void reproduce(const FinPair& a, const FinPair& b, const char* tag) {
    namespace fs = std::filesystem;
    fs::create_directories(opts_.reproducer_dir);
    auto stem = fs::path(opts_.reproducer_dir) /
                ("crosscheck_" + std::to_string(report_.reproducers_written++) + "_" + tag);
    write_file(stem.string() + "_a.json", serialize_pair(a));
    write_file(stem.string() + "_b.json", serialize_pair(b));
  }

  const CrossCheckOptions& opts_;
  CrossCheckReport& report_;
};

}  // namespace

void CrossCheckReport::print(std::ostream& out) const {
  auto line = [&](const char* name, const RelationTally& t) {
    out << name << ": checked=" << t.checked << " holds=" << t.holds << " agreements=" << t.checked - t.disagreements
        << " disagreements=" << t.disagreements << '\n';
  };
  line("red", reduction);
  line("emb", embedding);
  line("iso", isomorphism);
  out << "hall/gcs/oracle disagreements=" << hall_gcs_disagreements << '\n';
  out << "unsound witnesses=" << unsound_witnesses << '\n';
}

CrossCheckReport cross_check(const CrossCheckOptions& opts) {
  CrossCheckReport report;
  Checker checker(opts, report);

  if (opts.n_max > oracle::kDefaultMaxEnumeration) throw CapExceeded(opts.n_max, oracle::kDefaultMaxEnumeration);
  std::vector<FinPair> universe;
  for (std::size_t n = 0; n <= opts.n_max; ++n)
    oracle::for_each_pair(n, [&](const FinPair& p) { universe.push_back(p); });
  for (const auto& a : universe)
    for (const auto& b : universe) checker.check(a, b);

  if (opts.count > 0) {
    const auto lo = std::min(opts.n_max + 1, opts.random_max);
    const auto hi = std::max(lo, opts.random_max);
    std::mt19937_64 rng(opts.seed);
    auto draw = [&] {
      auto n = lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
      auto profile = rng() % 2 ? RandomProfile::ShapeTargeted : RandomProfile::UniformRefinement;
      return random_pair(rng(), n, profile);
    };
    for (std::size_t i = 0; i < opts.count; ++i) {
      auto a = draw();
      // Every fourth instance compares a pair with a shuffled copy of itself.
      if (rng() % 4 == 0) {
        std::vector<std::size_t> perm(a.size());
        for (std::size_t j = 0; j < perm.size(); ++j) perm[j] = j;
        for (std::size_t j = perm.size(); j > 1; --j) std::swap(perm[j - 1], perm[rng() % j]);
        checker.check(a, relabel(a, perm));
      } else {
        checker.check(a, draw());
      }
    }
  }
  return report;
}

}  // namespace simpair::cli
