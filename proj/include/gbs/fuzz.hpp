#pragma once

// Seeded random graphs and the invariant suite run over them.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gbs/graph.hpp"
#include "gbs/report.hpp"

namespace gbs {

// mt19937_64 seeded through splitmix64; all draws use plain modulo so the
// stream is identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next() { return engine_(); }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
  bool chance(unsigned percent) { return below(100) < percent; }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

// 1-6 vertices, at most 8 edges, labels in +-1..+-12 drawn from a small prime
// support. Most graphs balance their cycles so the modular image stays in
// {1,-1}.
LabeledGraph random_graph(Rng& rng);

struct FuzzOptions {
  std::uint64_t seed = 1;
  std::size_t count = 1;
  std::size_t labeling_orders = 20;
  std::size_t collapse_orders = 3;
  std::size_t max_sign_changes = 10;
  bool negate_xi = false;  // fault injection: the labeling sees -xi
};

struct InvariantTally {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
};

struct Finding {
  std::size_t iteration = 0;
  std::string invariant;
  std::string detail;
  Json original;
  Json minimized;
};

struct FuzzReport {
  FuzzOptions options;
  std::vector<InvariantTally> tallies;
  std::vector<Finding> findings;  // first finding per invariant, by iteration

  std::size_t violations() const;
  const InvariantTally& tally(const std::string& name) const;
};

// Names of every invariant, in report order.
const std::vector<std::string>& invariant_names();

// Runs the named invariants on one graph; returns (name, detail) for each
// violation. Checked counts are added to `tallies` when given.
std::vector<std::pair<std::string, std::string>> check_invariants(
    const LabeledGraph& g, Rng& rng, const FuzzOptions& options,
    std::vector<InvariantTally>* tallies = nullptr);

// Greedy shrink keeping `invariant` violated: drop edges, then vertices, then
// divide labels by primes both ends share.
LabeledGraph shrink(const LabeledGraph& g, const std::string& invariant, std::uint64_t seed,
                    const FuzzOptions& options);

FuzzReport run_fuzz(const FuzzOptions& options);

Json fuzz_json(const FuzzReport& report);
std::string fuzz_text(const FuzzReport& report);

}  // namespace gbs
