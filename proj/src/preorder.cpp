#include "deonet/preorder.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace deonet {

namespace {

// Iterative Tarjan; emits components in reverse topological order (every
// successor component gets a smaller id), which is exactly the order the
// reachability DP needs.
class TarjanScc {
 public:
  TarjanScc(const PreferenceGraph& g, Outcome count, std::uint32_t n)
      : g_(g), n_(n), index_(count, kUnset), low_(count, 0),
        on_stack_(count, false) {}

  std::vector<std::uint32_t> run(std::uint32_t* scc_count) {
    std::vector<std::uint32_t> scc(index_.size(), 0);
    std::uint32_t next_id = 0;
    for (Outcome start = 0; start < index_.size(); ++start) {
      if (index_[start] != kUnset) continue;
      visit(start, scc, next_id);
    }
    *scc_count = next_id;
    return scc;
  }

 private:
  static constexpr std::uint32_t kUnset = UINT32_MAX;

  bool edge(Outcome o, std::uint32_t var) const {
    FlipVerdict v = g_.flip(o, var);
    return v == FlipVerdict::Worse || v == FlipVerdict::Indifferent;
  }

  void visit(Outcome root, std::vector<std::uint32_t>& scc,
             std::uint32_t& next_id) {
    struct Frame {
      Outcome node;
      std::uint32_t next_var;
    };
    std::vector<Frame> frames{{root, 0}};
    std::uint32_t counter = static_cast<std::uint32_t>(order_.size());
    index_[root] = low_[root] = counter;
    order_.push_back(root);
    stack_.push_back(root);
    on_stack_[root] = true;

    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next_var < n_) {
        std::uint32_t var = f.next_var++;
        if (!edge(f.node, var)) continue;
        Outcome to = f.node ^ (Outcome{1} << var);
        if (index_[to] == kUnset) {
          index_[to] = low_[to] = static_cast<std::uint32_t>(order_.size());
          order_.push_back(to);
          stack_.push_back(to);
          on_stack_[to] = true;
          frames.push_back({to, 0});
        } else if (on_stack_[to]) {
          low_[f.node] = std::min(low_[f.node], index_[to]);
        }
        continue;
      }
      Outcome node = f.node;
      frames.pop_back();
      if (!frames.empty())
        low_[frames.back().node] = std::min(low_[frames.back().node], low_[node]);
      if (low_[node] == index_[node]) {
        for (;;) {
          Outcome w = stack_.back();
          stack_.pop_back();
          on_stack_[w] = false;
          scc[w] = next_id;
          if (w == node) break;
        }
        ++next_id;
      }
    }
  }

  const PreferenceGraph& g_;
  std::uint32_t n_;
  std::vector<std::uint32_t> index_, low_;
  std::vector<bool> on_stack_;
  std::vector<Outcome> order_, stack_;
};

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
};

}  // namespace

PreferenceGraph PreferenceGraph::build(const CPNet& net, int cap) {
  if (cap < 1) throw std::invalid_argument("variable cap must be >= 1");
  int hard = std::min(cap, kMaxVariableCap);
  if (static_cast<int>(net.size()) > hard) {
    std::string reason =
        cap > kMaxVariableCap
            ? "the materialized closure needs 4^n bits; hard limit is " +
                  std::to_string(kMaxVariableCap)
            : "cap is " + std::to_string(cap);
    throw std::invalid_argument("net has " + std::to_string(net.size()) +
                                " variables; " + reason);
  }

  PreferenceGraph g;
  g.net_ = net;
  g.n_ = net.size();
  g.count_ = net.num_outcomes();
  g.words_ = (static_cast<std::size_t>(g.count_) + 63) / 64;

  // Flip table over all Hamming-1 pairs.
  g.verdicts_.resize(static_cast<std::size_t>(g.count_) * g.n_);
  for (Outcome o = 0; o < g.count_; ++o)
    for (std::uint32_t var = 0; var < g.n_; ++var)
      g.verdicts_[static_cast<std::size_t>(o) * g.n_ + var] =
          flip_verdict(net, o, var);

  // Mutual-reachability classes, then per-class reachability rows. Tarjan
  // numbers classes sinks-first: every successor class has a smaller id, so
  // processing classes in id order sees only completed successor rows.
  std::uint32_t scc_count = 0;
  g.scc_ = TarjanScc(g, g.count_, g.n_).run(&scc_count);
  std::vector<std::vector<Outcome>> members(scc_count);
  for (Outcome o = 0; o < g.count_; ++o) members[g.scc_[o]].push_back(o);

  g.reach_.assign(static_cast<std::size_t>(scc_count) * g.words_, 0);
  for (std::uint32_t id = 0; id < scc_count; ++id) {
    std::uint64_t* row = g.reach_.data() + static_cast<std::size_t>(id) * g.words_;
    for (Outcome o : members[id]) row[o >> 6] |= std::uint64_t{1} << (o & 63);
    for (Outcome o : members[id]) {
      for (std::uint32_t var = 0; var < g.n_; ++var) {
        FlipVerdict v = g.flip(o, var);
        if (v != FlipVerdict::Worse && v != FlipVerdict::Indifferent) continue;
        Outcome to = o ^ (Outcome{1} << var);
        if (g.scc_[to] == id) continue;
        const std::uint64_t* src =
            g.reach_.data() + static_cast<std::size_t>(g.scc_[to]) * g.words_;
        for (std::size_t w = 0; w < g.words_; ++w) row[w] |= src[w];
      }
    }
  }

  // Weak connectivity ignores edge orientation; incomparable flips add none.
  UnionFind uf(g.count_);
  for (Outcome o = 0; o < g.count_; ++o)
    for (std::uint32_t var = 0; var < g.n_; ++var)
      if (g.flip(o, var) != FlipVerdict::Incomparable)
        uf.join(o, o ^ (Outcome{1} << var));
  g.wcc_.resize(g.count_);
  std::vector<std::uint32_t> rename(g.count_, UINT32_MAX);
  std::uint32_t next = 0;
  for (Outcome o = 0; o < g.count_; ++o) {
    std::uint32_t root = uf.find(o);
    if (rename[root] == UINT32_MAX) rename[root] = next++;
    g.wcc_[o] = rename[root];
  }
  return g;
}

bool PreferenceGraph::leq(Outcome o, Outcome u) const {
  check_outcome(net_, o);
  check_outcome(net_, u);
  const std::uint64_t* row =
      reach_.data() + static_cast<std::size_t>(scc_[o]) * words_;
  return (row[u >> 6] >> (u & 63)) & 1u;
}

Relation PreferenceGraph::compare(Outcome o, Outcome u) const {
  if (o == u) {
    check_outcome(net_, o);
    return Relation::Equal;
  }
  bool ou = leq(o, u), uo = leq(u, o);
  if (ou && uo) return Relation::Equivalent;
  if (ou) return Relation::Less;
  if (uo) return Relation::Greater;
  return Relation::Incomparable;
}

std::vector<std::vector<Outcome>> PreferenceGraph::weakly_connected_components()
    const {
  std::uint32_t n_comp = 0;
  for (Outcome o = 0; o < count_; ++o) n_comp = std::max(n_comp, wcc_[o] + 1);
  std::vector<std::vector<Outcome>> out(n_comp);
  for (Outcome o = 0; o < count_; ++o) out[wcc_[o]].push_back(o);
  // Component ids are assigned by first member, so rows are already ordered
  // by smallest element and internally ascending.
  return out;
}

IncomparabilityKind PreferenceGraph::classify_incomparability(Outcome o,
                                                              Outcome u) const {
  switch (compare(o, u)) {
    case Relation::Equal:
    case Relation::Equivalent: return IncomparabilityKind::Equivalent;
    case Relation::Less:
    case Relation::Greater: return IncomparabilityKind::Comparable;
    case Relation::Incomparable:
      return wcc_[o] == wcc_[u] ? IncomparabilityKind::WeaklyIncomparable
                                : IncomparabilityKind::StronglyIncomparable;
  }
  throw std::logic_error("unreachable");
}

std::vector<Outcome> PreferenceGraph::optimal_outcomes() const {
  // o is maximal iff everything it can reach reaches it back, i.e. its
  // reachable set is exactly its own mutual class.
  std::vector<Outcome> out;
  for (Outcome o = 0; o < count_; ++o) {
    const std::uint64_t* row =
        reach_.data() + static_cast<std::size_t>(scc_[o]) * words_;
    bool maximal = true;
    for (std::size_t w = 0; w < words_ && maximal; ++w) {
      std::uint64_t bits = row[w];
      while (bits) {
        Outcome u = static_cast<Outcome>((w << 6) + std::countr_zero(bits));
        bits &= bits - 1;
        if (scc_[u] != scc_[o]) {
          maximal = false;
          break;
        }
      }
    }
    if (maximal) out.push_back(o);
  }
  return out;
}

std::vector<std::vector<Outcome>> indifference_merged_nodes(
    const PreferenceGraph& graph) {
  const CPNet& net = graph.net();
  Outcome mask = 0;  // variables indifferent under every context
  for (std::uint32_t var = 0; var < net.size(); ++var) {
    bool all_indifferent = !net.cpt[var].empty();
    for (const CompiledRow& row : net.cpt[var])
      all_indifferent = all_indifferent && row.kind == RowKind::Indifferent;
    if (all_indifferent) mask |= Outcome{1} << var;
  }

  std::vector<std::vector<Outcome>> nodes;
  std::vector<bool> seen(graph.num_outcomes(), false);
  for (Outcome o = 0; o < graph.num_outcomes(); ++o) {
    if (seen[o]) continue;
    std::vector<Outcome> members;
    // Orbit of o under flipping the masked variables.
    Outcome sub = mask;
    for (;;) {
      members.push_back((o & ~mask) | sub);
      if (sub == 0) break;
      sub = (sub - 1) & mask;
    }
    std::sort(members.begin(), members.end());
    for (Outcome m : members) seen[m] = true;
    nodes.push_back(std::move(members));
  }
  return nodes;
}

}  // namespace deonet
