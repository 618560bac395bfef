#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace simpair::cli {

struct CrossCheckOptions {
  std::size_t n_max = 3;
  std::uint64_t seed = 1;
  std::size_t count = 100;       // random instances
  std::size_t random_max = 6;    // largest random ground set
  std::optional<std::uint64_t> cap;
  std::string reproducer_dir = ".";
};

struct RelationTally {
  std::size_t checked = 0;
  std::size_t holds = 0;
  std::size_t disagreements = 0;
};

struct CrossCheckReport {
  RelationTally reduction, embedding, isomorphism;
  std::size_t hall_gcs_disagreements = 0;
  std::size_t unsound_witnesses = 0;
  std::size_t reproducers_written = 0;

  bool clean() const {
    return reduction.disagreements == 0 && embedding.disagreements == 0 && isomorphism.disagreements == 0 &&
           hall_gcs_disagreements == 0 && unsound_witnesses == 0;
  }
  void print(std::ostream& out) const;
};

/// Exhaustive sweep over all ordered pairs on <= n_max points, then `count` random ordered pairs
/// on n_max+1 .. random_max points. Compares every decision procedure with its brute-force oracle.
/// Throws CapExceeded if an oracle search is too large.
CrossCheckReport cross_check(const CrossCheckOptions& opts);

}  // namespace simpair::cli
