#ifndef DEONET_PREORDER_HPP
#define DEONET_PREORDER_HPP

#include <cstdint>
#include <vector>

#include "deonet/cpnet.hpp"

// Materialized ceteris-paribus preorder over all 2^n outcomes of a CP-net.
// Flip edges come from flip_verdict on every Hamming-1 pair; reachability is
// taken over worse -> better strict edges plus indifference edges in both
// directions, closed reflexively and transitively.

namespace deonet {

inline constexpr int kDefaultVariableCap = 14;
// The closure is 4^n bits; past this it stops being a desk-scale object.
inline constexpr int kMaxVariableCap = 16;

// Verdict of compare(first, second): Less means first is strictly worse.
enum class Relation { Equal, Less, Greater, Equivalent, Incomparable };

enum class IncomparabilityKind {
  StronglyIncomparable,  // different weakly connected components
  WeaklyIncomparable,    // same component, no path either way
  Comparable,
  Equivalent
};

class PreferenceGraph {
 public:
  // Throws std::invalid_argument when the net has more variables than `cap`
  // (or than kMaxVariableCap, or cap < 1).
  static PreferenceGraph build(const CPNet& net, int cap = kDefaultVariableCap);

  const CPNet& net() const { return net_; }
  std::uint32_t num_variables() const { return n_; }
  Outcome num_outcomes() const { return count_; }

  // Precomputed flip table: verdict of flipping `var` away from `o`.
  FlipVerdict flip(Outcome o, std::uint32_t var) const {
    return verdicts_[static_cast<std::size_t>(o) * n_ + var];
  }

  bool leq(Outcome o, Outcome u) const;  // o is at most as good as u
  Relation compare(Outcome o, Outcome u) const;

  std::uint32_t component_of(Outcome o) const { return wcc_[o]; }
  // Partition of all outcomes by weakly connected flip-graph component,
  // components ordered by smallest member, members ascending.
  std::vector<std::vector<Outcome>> weakly_connected_components() const;

  IncomparabilityKind classify_incomparability(Outcome o, Outcome u) const;

  // Outcomes with no strictly better outcome, ascending.
  std::vector<Outcome> optimal_outcomes() const;

  // Mutual-reachability class id of an outcome (indifference class in a
  // consistent net).
  std::uint32_t scc_of(Outcome o) const { return scc_[o]; }

 private:
  PreferenceGraph() = default;

  CPNet net_;
  std::uint32_t n_ = 0;
  Outcome count_ = 0;
  std::size_t words_ = 0;                // closure row width
  std::vector<FlipVerdict> verdicts_;    // [o * n_ + var]
  std::vector<std::uint32_t> scc_;       // outcome -> scc id (sinks first)
  std::vector<std::uint64_t> reach_;     // per-scc bitset rows, [scc * words_]
  std::vector<std::uint32_t> wcc_;       // outcome -> component id
};

// Groups outcomes that differ only on variables whose every CPT row is
// indifferent (the grouping used for the merged graph export), ordered by
// smallest member.
std::vector<std::vector<Outcome>> indifference_merged_nodes(
    const PreferenceGraph& graph);

}  // namespace deonet

#endif
