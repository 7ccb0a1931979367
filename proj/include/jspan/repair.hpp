#ifndef JSPAN_REPAIR_HPP
#define JSPAN_REPAIR_HPP

#include <cstdint>
#include <vector>

#include "jspan/dep_graph.hpp"
#include "jspan/joint.hpp"
#include "jspan/tree.hpp"

namespace jspan {

/// Deterministic 64-bit generator (splitmix-style). The constants are fixed
/// here so that repair outcomes are reproducible across implementations:
///   state += 0x9E3779B97F4A7C15
///   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform value in [0, bound). bound must be positive. Uses plain modulo:
  /// the bias is irrelevant at the candidate-set sizes seen here and keeping
  /// the mapping trivial makes it easy to reproduce elsewhere.
  std::size_t below(std::size_t bound) { return static_cast<std::size_t>(next() % bound); }

 private:
  std::uint64_t state_;
};

constexpr std::uint64_t kDefaultSeed = 42;

struct ChangedArc {
  int token = 0;
  int old_head = 0;
  int new_head = 0;

  friend bool operator==(const ChangedArc&, const ChangedArc&) = default;
};

struct RepairLog {
  std::vector<ChangedArc> changed_arcs;
  int violations_fixed = 0;  // distinct intervals at which arcs were re-pointed
  std::uint64_t seed = kDefaultSeed;
};

/// Re-points dependency arcs until the pair satisfies the joint-span
/// conditions. Constituency nodes are processed bottom-up; at each interval
/// one external-headed token is kept (chosen uniformly under the seed) and
/// every other external-headed token is re-pointed to it; head chains that
/// never leave the interval (cycles, which only defective corpora contain)
/// are re-pointed the same way. Relation labels are never touched and the
/// tree is never modified. Already-compliant pairs come back unchanged.
std::pair<DependencyGraph, RepairLog> repair_pair(const ConstNode& tree,
                                                  const DependencyGraph& graph,
                                                  std::uint64_t seed = kDefaultSeed);

struct CorpusRepairStats {
  std::size_t total_pairs = 0;
  std::size_t non_compliant = 0;
  std::size_t arcs_changed = 0;

  double fraction_repaired() const {
    return total_pairs == 0 ? 0.0 : static_cast<double>(non_compliant) / total_pairs;
  }
};

/// Repairs every pair; the per-pair seed is seed XOR the pair's 0-based
/// position, so outcomes do not depend on corpus order or traversal.
std::pair<std::vector<std::pair<DependencyGraph, RepairLog>>, CorpusRepairStats> repair_corpus(
    const std::vector<std::pair<ConstNode, DependencyGraph>>& pairs,
    std::uint64_t seed = kDefaultSeed);

}  // namespace jspan

#endif  // JSPAN_REPAIR_HPP
