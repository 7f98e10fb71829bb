#ifndef DEONET_TESTS_GENERATORS_HPP
#define DEONET_TESTS_GENERATORS_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "deonet/compiler.hpp"
#include "deonet/cpnet.hpp"
#include "deonet/norms.hpp"
#include "deonet/preorder.hpp"
#include "deonet/reasoner.hpp"

namespace testsup {

using Rng = std::mt19937;

inline int pick(Rng& rng, int lo, int hi) {  // inclusive
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool chance(Rng& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

struct NetOptions {
  int max_parents = 2;
  double p_absent = 0.2;
  double p_indifferent = 0.2;
  bool acyclic = false;  // parents drawn from lower-numbered variables only
};

// Hand-assembled net with random structure and rows; provenance is dummy.
inline deonet::CPNet random_net(Rng& rng, int n, const NetOptions& opt = {}) {
  deonet::CPNet net;
  for (int i = 0; i < n; ++i) net.variables.push_back("v" + std::to_string(i));
  net.parents.resize(n);
  net.cpt.resize(n);
  for (int var = 0; var < n; ++var) {
    int pool_size = opt.acyclic ? var : n - 1;
    int k = std::min(pick(rng, 0, opt.max_parents), pool_size);
    std::vector<std::uint32_t> pool;
    for (int p = 0; p < n; ++p)
      if (p != var && (!opt.acyclic || p < var))
        pool.push_back(static_cast<std::uint32_t>(p));
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(static_cast<std::size_t>(k));
    std::sort(pool.begin(), pool.end());
    net.parents[var] = pool;

    std::size_t n_ctx = std::size_t{1} << k;
    for (std::size_t ctx = 0; ctx < n_ctx; ++ctx) {
      deonet::CompiledRow row;
      if (chance(rng, opt.p_absent)) {
        // absent
      } else if (chance(rng, opt.p_indifferent)) {
        row.kind = deonet::RowKind::Indifferent;
        row.provenance = {0};
      } else {
        row.kind = deonet::RowKind::Strict;
        row.preferred = chance(rng, 0.5);
        row.provenance = {0};
      }
      net.cpt[var].push_back(std::move(row));
    }
  }
  return net;
}

struct NormSetOptions {
  int max_atoms = 8;
  int max_norms = 12;
  double p_liberty = 0.3;
  int max_condition = 2;
  // condition atoms only from earlier atoms: dependency graph acyclic
  bool order_respecting = true;
};

// Random O/L norm set built through the AST (not text).
inline deonet::NormSet random_norms(Rng& rng, const NormSetOptions& opt = {}) {
  deonet::NormSet set;
  int n_atoms = pick(rng, 1, opt.max_atoms);
  for (int i = 0; i < n_atoms; ++i)
    set.atoms.push_back(std::string(1, static_cast<char>('a' + i)));

  int n_norms = pick(rng, 1, opt.max_norms);
  for (int i = 0; i < n_norms; ++i) {
    deonet::Norm norm;
    norm.kind = chance(rng, opt.p_liberty) ? deonet::NormKind::Liberty
                                           : deonet::NormKind::Obligation;
    deonet::AtomId target = static_cast<deonet::AtomId>(pick(rng, 0, n_atoms - 1));
    norm.consequent = {target, chance(rng, 0.5)};

    std::vector<deonet::AtomId> pool;
    for (deonet::AtomId a = 0; a < static_cast<deonet::AtomId>(n_atoms); ++a)
      if (a != target && (!opt.order_respecting || a < target)) pool.push_back(a);
    std::shuffle(pool.begin(), pool.end(), rng);
    int want = std::min<int>(pick(rng, 0, opt.max_condition),
                             static_cast<int>(pool.size()));
    std::vector<deonet::Literal> lits;
    for (int c = 0; c < want; ++c) lits.push_back({pool[c], chance(rng, 0.5)});
    norm.condition = deonet::make_condition(std::move(lits));

    bool duplicate = false;
    for (const deonet::Norm& prev : set.norms) duplicate = duplicate || prev == norm;
    if (!duplicate) set.norms.push_back(std::move(norm));
  }
  return set;
}

// Rejection-samples norm sets until one compiles conflict-free into a
// consistent net. Mixes order-respecting (guaranteed acyclic) and free
// condition structures.
inline deonet::NormSet random_consistent_norms(Rng& rng, int cap = 10) {
  for (;;) {
    NormSetOptions opt;
    opt.order_respecting = chance(rng, 0.7);
    deonet::NormSet set = random_norms(rng, opt);
    if (!deonet::detect_conflicts(set).empty()) continue;
    deonet::CPNet net = deonet::compile(set);
    auto graph = deonet::PreferenceGraph::build(net, cap);
    if (!deonet::consistent(graph).consistent) continue;
    return set;
  }
}

// Random valid norm file text with layout noise, for round-trip fuzzing.
inline std::string random_norm_file(Rng& rng) {
  std::vector<std::string> names = {"a",    "b2",  "cat", "d_g", "E",
                                    "iff",  "nota", "x9",  "And", "o"};
  std::shuffle(names.begin(), names.end(), rng);
  int n_atoms = pick(rng, 1, static_cast<int>(names.size()));
  names.resize(static_cast<std::size_t>(n_atoms));

  std::string text;
  auto maybe_noise = [&] {
    if (chance(rng, 0.2)) text += "\n";
    if (chance(rng, 0.2)) text += "# comment line\n";
  };
  auto spaces = [&] { return std::string(static_cast<std::size_t>(pick(rng, 1, 3)), ' '); };

  if (chance(rng, 0.4)) {
    text += "atom";
    for (const std::string& n : names) text += spaces() + n;
    text += "\n";
  }

  int n_norms = pick(rng, 0, 8);
  for (int i = 0; i < n_norms; ++i) {
    maybe_noise();
    const char* kinds[] = {"O", "P", "L"};
    std::string kind = kinds[pick(rng, 0, 2)];
    int target = pick(rng, 0, n_atoms - 1);
    bool positive = chance(rng, 0.5);

    std::string norm = kind + "(" + (positive ? "" : "not" + spaces()) + names[static_cast<std::size_t>(target)];
    std::vector<int> pool;
    for (int a = 0; a < n_atoms; ++a)
      if (a != target) pool.push_back(a);
    std::shuffle(pool.begin(), pool.end(), rng);
    int want = std::min<int>(pick(rng, 0, 2), static_cast<int>(pool.size()));
    for (int c = 0; c < want; ++c) {
      norm += spaces() + (c == 0 ? "IF" : "AND") + spaces();
      if (chance(rng, 0.5)) norm += "not" + spaces();
      norm += names[static_cast<std::size_t>(pool[static_cast<std::size_t>(c)])];
    }
    norm += ")";
    text += norm;
    if (chance(rng, 0.3)) text += spaces() + "# trailing note";
    text += "\n";
  }
  maybe_noise();
  return text;
}

}  // namespace testsup

#endif
