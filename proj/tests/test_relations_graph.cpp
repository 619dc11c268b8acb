#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "wpl/relations_graph.hpp"

using namespace wpl;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::set<std::string> node_ids(const RelationGraph& g) {
  std::set<std::string> ids;
  for (const auto& n : g.nodes) ids.insert(n.id());
  return ids;
}

std::set<std::string> edge_keys(const RelationGraph& g) {
  std::set<std::string> keys;
  for (const auto& e : g.edges) {
    keys.insert(g.nodes[e.source].id() + ">" + g.nodes[e.target].id() + ":" + e.label);
  }
  return keys;
}

}  // namespace

TEST(BuildGraph, Domestic234Chain) {
  auto g = build_graph({{WeightSeq{2, 3, 4}, std::nullopt}});
  EXPECT_EQ(node_ids(g), (std::set<std::string>{"w", "w2_2", "w2_2_2", "w4_3_2", "w3_3_2"}));
  std::set<std::string> expected{"w4_3_2>w3_3_2:C2", "w3_3_2>w2_2_2:C3", "w2_2_2>w2_2:C2", "w2_2>w:C2",
                                 "w2_2_2>w:C2xC2"};
  for (const auto& k : expected) EXPECT_TRUE(edge_keys(g).count(k)) << k;
}

TEST(BuildGraph, Tubular632) {
  auto g = build_graph({{WeightSeq{6, 3, 2}, std::nullopt}});
  auto ids = node_ids(g);
  EXPECT_TRUE(ids.count("w6_3_2"));
  EXPECT_TRUE(ids.count("w3_3_3"));
  EXPECT_TRUE(ids.count("w2_2_2_2_lam_1/2-1/2*sqrt(-3)"));
  auto keys = edge_keys(g);
  EXPECT_TRUE(keys.count("w6_3_2>w3_3_3:C2"));
  EXPECT_TRUE(keys.count("w6_3_2>w2_2_2_2_lam_1/2-1/2*sqrt(-3):C3"));
  EXPECT_TRUE(keys.count("w3_3_3>w3_3_3:C3"));
  EXPECT_FALSE(g.notes.empty());
}

TEST(BuildGraph, EmptyAndSingleNode) {
  auto g = build_graph({});
  EXPECT_TRUE(g.nodes.empty());
  EXPECT_TRUE(g.edges.empty());

  auto one = build_graph({{WeightSeq{2, 3}, std::nullopt}});
  ASSERT_EQ(one.nodes.size(), 1u);
  EXPECT_TRUE(one.edges.empty());
  std::string dot = to_dot(one);
  EXPECT_NE(dot.find("w3_2"), std::string::npos);
  EXPECT_EQ(dot.find("->"), std::string::npos);
}

TEST(BuildGraph, ParameterOn2222) {
  auto g = build_graph({{WeightSeq{2, 2, 2, 2}, FieldElem(-1)}}, {OrbitExpansion::Chain, 2, 256});
  auto keys = edge_keys(g);
  EXPECT_TRUE(keys.count("w2_2_2_2_lam_-1>w2_2_2_2_lam_-1:C2"));
  EXPECT_TRUE(keys.count("w2_2_2_2_lam_-1>w2_2_2_2_lam_-1:C2xC2"));
  // A parameter on a type other than (2,2,2,2) is ignored.
  EXPECT_EQ(to_dot(build_graph({{WeightSeq{2, 3, 4}, FieldElem(-1)}})),
            to_dot(build_graph({{WeightSeq{2, 3, 4}, std::nullopt}})));
}

TEST(BuildGraph, MaxNodesBudget) {
  auto g = build_graph({{WeightSeq{2, 2, 2, 2}, FieldElem(3)}}, {OrbitExpansion::Exhaustive, 6, 4});
  EXPECT_LE(g.nodes.size(), 4u);
  EXPECT_FALSE(g.notes.empty());
}

TEST(Golden, RelationGraphs) {
  std::string dir = WPL_GOLDEN_DIR;
  auto g1 = build_graph(parse_seeds(slurp(dir + "/domestic.seeds")));
  EXPECT_EQ(to_dot(g1), slurp(dir + "/domestic.dot"));
  GraphOptions chain;
  chain.expansion = OrbitExpansion::Chain;
  auto g2 = build_graph(parse_seeds(slurp(dir + "/tubular.seeds")), chain);
  EXPECT_EQ(to_dot(g2), slurp(dir + "/tubular.dot"));
}

TEST(Export, JsonShape) {
  auto g = build_graph({{WeightSeq{2, 3, 3}, std::nullopt}});
  auto j = to_json(g);
  ASSERT_EQ(j["nodes"].size(), g.nodes.size());
  ASSERT_EQ(j["edges"].size(), g.edges.size());
  for (const auto& e : j["edges"]) {
    EXPECT_TRUE(e.contains("source"));
    EXPECT_TRUE(e.contains("label"));
    EXPECT_TRUE(e.contains("matrix"));
  }
  EXPECT_EQ(to_json(build_graph({{WeightSeq{2, 3, 3}, std::nullopt}})).dump(), j.dump());
}

TEST(ParseSeeds, Forms) {
  auto s = parse_seeds("# comment\n2,3,4\n\n2,2,2,2;(1+sqrt(-3))/2\n");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].weights, (WeightSeq{2, 3, 4}));
  EXPECT_FALSE(s[0].lambda.has_value());
  ASSERT_TRUE(s[1].lambda.has_value());
  EXPECT_EQ(*s[1].lambda, omega());
  try {
    parse_seeds("2,x,4\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
  }
}

// Properties.

TEST(RelationsGraphProperty, WitnessesAreAdmissible) {
  std::vector<std::vector<Seed>> seed_sets{
      {{WeightSeq{2, 3, 4}, std::nullopt}},
      {{WeightSeq{4, 4, 2}, std::nullopt}, {WeightSeq{6, 3, 2}, std::nullopt}},
      {{WeightSeq{12, 8}, std::nullopt}, {WeightSeq{2, 2, 6}, std::nullopt}},
      {{WeightSeq{2, 2, 2, 2}, FieldElem(5)}},
  };
  for (const auto& seeds : seed_sets) {
    auto g = build_graph(seeds, {OrbitExpansion::Chain, 2, 256});
    for (std::size_t a = 1; a < g.nodes.size(); ++a) EXPECT_LT(g.nodes[a - 1].id(), g.nodes[a].id());
    for (const auto& e : g.edges) {
      const auto& w = e.witness;
      EXPECT_TRUE(is_admissible_window(w.hom));
      EXPECT_TRUE(is_admissible_structural(w.hom));
      EXPECT_EQ(w.kernel.label(), e.label);
      EXPECT_EQ(w.codomain.sorted_desc(), g.nodes[e.target].weights.weights());
      EXPECT_EQ(w.hom.domain().sorted_desc(), g.nodes[e.source].weights.weights());
      const auto& src = g.nodes[e.source];
      const auto& dst = g.nodes[e.target];
      if (src.orbit && dst.orbit) {
        EXPECT_TRUE(tubular_edge_check(w.hom.domain(), src.orbit->representative, w.kernel, w.codomain,
                                       dst.orbit->representative));
      }
    }
  }
}

TEST(RelationsGraphProperty, SeedOrderIrrelevant) {
  std::vector<Seed> a{{WeightSeq{4, 4, 2}, std::nullopt}, {WeightSeq{2, 3, 5}, std::nullopt}};
  std::vector<Seed> b{a[1], a[0]};
  EXPECT_EQ(to_dot(build_graph(a)), to_dot(build_graph(b)));
}
