#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "deonet/compiler.hpp"
#include "deonet/preorder.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace deonet;

namespace {

const char* kPets =
    "O(not d)\n"
    "L(c)\n"
    "O(not f IF not d)\n"
    "O(f IF d)\n"
    "O(w IF f)\n"
    "L(w IF not f)\n"
    "atom b\n";

PreferenceGraph pets_graph() {
  return PreferenceGraph::build(compile(parse_norms(kPets).norms));
}

PreferenceGraph ctd_graph() {
  return PreferenceGraph::build(
      compile(parse_norms("O(p)\nO(q IF not p)\nO(not q IF p)\n").norms));
}

}  // namespace

TEST_CASE("the pet bylaws split into two components of sixteen on the bobcat bit") {
  PreferenceGraph g = pets_graph();
  auto comps = g.weakly_connected_components();
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].size() == 16);
  CHECK(comps[1].size() == 16);
  std::uint32_t b = *g.net().var_index("b");
  for (Outcome o : comps[0]) CHECK(((o >> b) & 1u) == 0);
  for (Outcome o : comps[1]) CHECK(((o >> b) & 1u) == 1);
}

TEST_CASE("the duty framework closes into a total order") {
  PreferenceGraph g = ctd_graph();
  const CPNet& net = g.net();
  Outcome best = parse_outcome(net, "p,not q");
  Outcome second = parse_outcome(net, "p,q");
  Outcome third = parse_outcome(net, "not p,q");
  Outcome worst = parse_outcome(net, "not p,not q");
  std::vector<Outcome> chain{best, second, third, worst};
  for (std::size_t i = 0; i < chain.size(); ++i) {
    for (std::size_t j = 0; j < chain.size(); ++j) {
      Relation want = i == j          ? Relation::Equal
                      : i < j         ? Relation::Greater
                                      : Relation::Less;
      CHECK(g.compare(chain[i], chain[j]) == want);
    }
  }
  CHECK(g.weakly_connected_components().size() == 1);
}

TEST_CASE("an all-absent net closes to the identity") {
  CPNet net = compile(parse_norms("atom a b\n").norms);
  PreferenceGraph g = PreferenceGraph::build(net);
  for (Outcome o = 0; o < 4; ++o)
    for (Outcome u = 0; u < 4; ++u)
      CHECK(g.compare(o, u) == (o == u ? Relation::Equal : Relation::Incomparable));
  CHECK(g.weakly_connected_components().size() == 4);
  CHECK(PreferenceGraph::build(compile(parse_norms("atom a b c\n").norms))
            .weakly_connected_components()
            .size() == 8);
}

TEST_CASE("ceteris-paribus dog comparison from the running example") {
  PreferenceGraph g = pets_graph();
  const CPNet& net = g.net();
  Outcome with_dog = parse_outcome(net, "c,d,not f,w,b");
  Outcome without = parse_outcome(net, "c,not d,not f,w,b");
  CHECK(g.compare(with_dog, without) == Relation::Less);
  CHECK(g.compare(without, with_dog) == Relation::Greater);
  CHECK(g.compare(with_dog, with_dog) == Relation::Equal);
}

TEST_CASE("bobcat outcomes are strongly incomparable across components") {
  PreferenceGraph g = pets_graph();
  const CPNet& net = g.net();
  Outcome bob = parse_outcome(net, "b,c,d,f,w");
  Outcome nobob = parse_outcome(net, "not b,c,not d,not f,w");
  CHECK(g.compare(bob, nobob) == Relation::Incomparable);
  CHECK(g.classify_incomparability(bob, nobob) ==
        IncomparabilityKind::StronglyIncomparable);
  CHECK(g.classify_incomparability(bob, bob) == IncomparabilityKind::Equivalent);
  Outcome better = parse_outcome(net, "b,c,not d,not f,w");
  CHECK(g.classify_incomparability(bob, better) ==
        IncomparabilityKind::Comparable);
}

TEST_CASE("independent preferences leave diagonal outcomes weakly incomparable") {
  // a > !a and b > !b with no dependency: a!b and !ab sit in one component
  // but neither reaches the other.
  CPNet net = compile(parse_norms("O(a)\nO(b)\n").norms);
  PreferenceGraph g = PreferenceGraph::build(net);
  testsup::OracleClosure oracle(net);
  Outcome ab_ = 0b01, a_b = 0b10;
  CHECK(oracle.compare(ab_, a_b) == Relation::Incomparable);  // cross-check
  CHECK(g.compare(ab_, a_b) == Relation::Incomparable);
  CHECK(g.weakly_connected_components().size() == 1);
  CHECK(g.classify_incomparability(ab_, a_b) ==
        IncomparabilityKind::WeaklyIncomparable);
}

TEST_CASE("the pet-bylaw optima are the no-dog no-fence outcomes") {
  PreferenceGraph g = pets_graph();
  const CPNet& net = g.net();
  auto optima = g.optimal_outcomes();
  // {!d !f} x {w, !w} x {c, !c} x {b, !b}: the w and !w tops are indifferent
  // under the fenceless liberty, so both sit at the top of each component.
  CHECK(optima.size() == 8);
  for (Outcome o : optima) {
    CHECK(((o >> *net.var_index("d")) & 1u) == 0);
    CHECK(((o >> *net.var_index("f")) & 1u) == 0);
  }
  for (Outcome o : optima)
    for (Outcome u = 0; u < g.num_outcomes(); ++u)
      CHECK(g.compare(o, u) != Relation::Less);
}

TEST_CASE("duty-framework optimum is compliance") {
  PreferenceGraph g = ctd_graph();
  CHECK(g.optimal_outcomes() ==
        std::vector<Outcome>{parse_outcome(g.net(), "p,not q")});
}

TEST_CASE("an all-absent net is all-optimal") {
  PreferenceGraph g =
      PreferenceGraph::build(compile(parse_norms("atom a b\n").norms));
  CHECK(g.optimal_outcomes() == std::vector<Outcome>{0, 1, 2, 3});
}

TEST_CASE("merged nodes group exactly the all-indifferent variables") {
  PreferenceGraph g = pets_graph();
  auto nodes = indifference_merged_nodes(g);
  CHECK(nodes.size() == 16);
  std::uint32_t c = *g.net().var_index("c");
  for (const auto& node : nodes) {
    REQUIRE(node.size() == 2);
    CHECK((node[0] ^ node[1]) == (Outcome{1} << c));
  }
  // conditional indifference (W under !f) must not merge
  PreferenceGraph ctd = ctd_graph();
  CHECK(indifference_merged_nodes(ctd).size() == ctd.num_outcomes());
}

TEST_CASE("closure is reflexive and transitive by direct check") {
  std::mt19937 rng(31);
  for (int nets = 0; nets < 25; ++nets) {
    int n = testsup::pick(rng, 1, 6);
    CPNet net = testsup::random_net(rng, n);
    PreferenceGraph g = PreferenceGraph::build(net);
    Outcome count = g.num_outcomes();
    for (Outcome o = 0; o < count; ++o) CHECK(g.leq(o, o));
    for (Outcome o = 0; o < count; ++o)
      for (Outcome u = 0; u < count; ++u) {
        if (!g.leq(o, u)) continue;
        for (Outcome v = 0; v < count; ++v)
          if (g.leq(u, v)) CHECK(g.leq(o, v));
      }
  }
  // one larger instance, bitset-checked closure o leq u leq v
  CPNet net = testsup::random_net(rng, 10);
  PreferenceGraph g = PreferenceGraph::build(net);
  for (Outcome o = 0; o < g.num_outcomes(); ++o) {
    CHECK(g.leq(o, o));
    for (Outcome u = 0; u < g.num_outcomes(); ++u) {
      if (!g.leq(o, u)) continue;
      bool all = true;
      for (Outcome v = 0; v < g.num_outcomes() && all; ++v)
        if (g.leq(u, v) && !g.leq(o, v)) all = false;
      REQUIRE(all);
    }
  }
}

TEST_CASE("compare agrees with the matrix-closure oracle on random nets") {
  std::mt19937 rng(32);
  for (int nets = 0; nets < 60; ++nets) {
    int n = testsup::pick(rng, 1, 8);
    testsup::NetOptions opt;
    opt.acyclic = testsup::chance(rng, 0.5);
    CPNet net = testsup::random_net(rng, n, opt);
    PreferenceGraph g = PreferenceGraph::build(net);
    testsup::OracleClosure oracle(net);
    for (Outcome o = 0; o < g.num_outcomes(); ++o)
      for (Outcome u = 0; u < g.num_outcomes(); ++u)
        REQUIRE(g.compare(o, u) == oracle.compare(o, u));
  }
}

TEST_CASE("equivalence restricted to a component is an equivalence relation") {
  std::mt19937 rng(33);
  for (int nets = 0; nets < 20; ++nets) {
    CPNet net = testsup::random_net(rng, testsup::pick(rng, 2, 6));
    PreferenceGraph g = PreferenceGraph::build(net);
    Outcome count = g.num_outcomes();
    auto equiv = [&](Outcome a, Outcome b) {
      Relation r = g.compare(a, b);
      return r == Relation::Equal || r == Relation::Equivalent;
    };
    for (Outcome o = 0; o < count; ++o) {
      CHECK(equiv(o, o));
      for (Outcome u = 0; u < count; ++u) {
        if (!equiv(o, u)) continue;
        CHECK(g.component_of(o) == g.component_of(u));
        CHECK(equiv(u, o));
        for (Outcome v = 0; v < count; ++v)
          if (equiv(u, v)) CHECK(equiv(o, v));
      }
    }
  }
}

TEST_CASE("incomparability kinds match the component structure") {
  std::mt19937 rng(34);
  for (int nets = 0; nets < 25; ++nets) {
    CPNet net = testsup::random_net(rng, testsup::pick(rng, 1, 6));
    PreferenceGraph g = PreferenceGraph::build(net);
    for (Outcome o = 0; o < g.num_outcomes(); ++o)
      for (Outcome u = 0; u < g.num_outcomes(); ++u) {
        auto kind = g.classify_incomparability(o, u);
        bool same_comp = g.component_of(o) == g.component_of(u);
        if (g.compare(o, u) == Relation::Incomparable) {
          CHECK(kind == (same_comp ? IncomparabilityKind::WeaklyIncomparable
                                   : IncomparabilityKind::StronglyIncomparable));
        } else {
          CHECK((kind == IncomparabilityKind::Comparable ||
                 kind == IncomparabilityKind::Equivalent));
          CHECK(same_comp);
        }
      }
  }
}

TEST_CASE("a zero-variable net has the one empty outcome") {
  PreferenceGraph g = PreferenceGraph::build(compile(parse_norms("").norms));
  CHECK(g.num_outcomes() == 1);
  CHECK(g.compare(0, 0) == Relation::Equal);
  CHECK(g.optimal_outcomes() == std::vector<Outcome>{0});
  CHECK(g.weakly_connected_components() == std::vector<std::vector<Outcome>>{{0}});
}

TEST_CASE("the cap and the hard ceiling are enforced") {
  std::string many = "atom";
  for (int i = 0; i < 15; ++i) many += " a" + std::to_string(i);
  CPNet net15 = compile(parse_norms(many + "\n").norms);
  CHECK_THROWS_AS(PreferenceGraph::build(net15), std::invalid_argument);
  CHECK_NOTHROW(PreferenceGraph::build(net15, 15));

  CPNet net3 = compile(parse_norms("atom a b c\n").norms);
  CHECK_THROWS_AS(PreferenceGraph::build(net3, 2), std::invalid_argument);
  CHECK_THROWS_AS(PreferenceGraph::build(net3, 0), std::invalid_argument);

  std::string huge = "atom";
  for (int i = 0; i < 17; ++i) huge += " a" + std::to_string(i);
  CPNet net17 = compile(parse_norms(huge + "\n").norms);
  CHECK_THROWS_AS(PreferenceGraph::build(net17, 30), std::invalid_argument);
}
