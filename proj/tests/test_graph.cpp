#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "domdraw/graph.hpp"
#include "support/generators.hpp"

using namespace domdraw;
using domdraw::testing::Rng;

namespace {

const char* kDiamond = "s a\ns b\na t\nb t\n";
const char* kChain3 = "s v\nv t\n";
const char* kW3 = "s a\ns b\ns c\na t\nb t\nc t\n";

Dag isolated(std::initializer_list<const char*> ids) {
  DagBuilder b;
  for (auto id : ids) b.vertex(id);
  return std::move(b).build();
}

std::set<std::string> as_set(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(ParseEdgeList, ChainAndDiamond) {
  const Dag chain = parse_edge_list(kChain3);
  EXPECT_EQ(chain.size(), 3u);
  EXPECT_EQ(chain.edge_count(), 2u);
  EXPECT_EQ(chain.ids(), (std::vector<std::string>{"s", "v", "t"}));

  const Dag diamond = parse_edge_list(kDiamond);
  EXPECT_EQ(diamond.size(), 4u);
  EXPECT_EQ(diamond.edge_count(), 4u);
  EXPECT_EQ(diamond.ids(), (std::vector<std::string>{"s", "a", "b", "t"}));
}

TEST(ParseEdgeList, CommentsBlankLinesAndWhitespace) {
  const Dag g = parse_edge_list("# header\n\n  s\tv  \r\n# mid\nv   t\n\n");
  EXPECT_EQ(g.size(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
}

TEST(ParseEdgeList, RejectsCycle) {
  try {
    parse_edge_list("a b\nb a\n");
    FAIL() << "expected CycleDetected";
  } catch (const CycleDetected& e) {
    EXPECT_TRUE(e.vertex() == "a" || e.vertex() == "b");
  }
}

TEST(ParseEdgeList, CycleVertexIsOnTheCycle) {
  // x -> y -> z -> y : x is downstream-free, the cycle is {y, z}; w hangs below it.
  try {
    parse_edge_list("x y\ny z\nz y\nz w\n");
    FAIL() << "expected CycleDetected";
  } catch (const CycleDetected& e) {
    EXPECT_TRUE(e.vertex() == "y" || e.vertex() == "z") << e.vertex();
  }
}

TEST(ParseEdgeList, RejectsMalformedSelfLoopDuplicateReserved) {
  try {
    parse_edge_list("s a\ns\n");
    FAIL();
  } catch (const MalformedLine& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_edge_list("a b c\n"), MalformedLine);
  EXPECT_THROW(parse_edge_list("a a\n"), SelfLoop);
  EXPECT_THROW(parse_edge_list("a b\na b\n"), MalformedLine);
  EXPECT_THROW(parse_edge_list("__S a\n"), ReservedVertexId);
  EXPECT_THROW(parse_edge_list("a __T\n"), ReservedVertexId);
}

TEST(ToStGraph, AlreadySt) {
  const StGraph st = to_st_graph(parse_edge_list(kDiamond));
  EXPECT_EQ(st.dag().id(st.source()), "s");
  EXPECT_EQ(st.dag().id(st.sink()), "t");
  EXPECT_FALSE(st.virtual_source());
  EXPECT_FALSE(st.virtual_sink());
  EXPECT_EQ(st.size(), 4u);

  const StGraph chain = to_st_graph(parse_edge_list(kChain3));
  EXPECT_EQ(chain.dag().id(chain.source()), "s");
  EXPECT_EQ(chain.dag().id(chain.sink()), "t");
}

TEST(ToStGraph, IsolatedVerticesForceAugmentation) {
  const StGraph st = to_st_graph(isolated({"a", "b"}));
  ASSERT_EQ(st.size(), 4u);
  EXPECT_TRUE(st.virtual_source());
  EXPECT_TRUE(st.virtual_sink());
  const Dag& g = st.dag();
  EXPECT_EQ(g.id(st.source()), "__S");
  EXPECT_EQ(g.id(st.sink()), "__T");
  std::set<std::pair<std::string, std::string>> edges;
  for (auto [u, v] : g.edges()) edges.emplace(g.id(u), g.id(v));
  EXPECT_EQ(edges, (std::set<std::pair<std::string, std::string>>{
                       {"__S", "a"}, {"__S", "b"}, {"a", "__T"}, {"b", "__T"}}));
}

TEST(ToStGraph, OnlyMissingSideIsAugmented) {
  const StGraph st = to_st_graph(parse_edge_list("s a\ns b\n"));
  EXPECT_FALSE(st.virtual_source());
  EXPECT_TRUE(st.virtual_sink());
  EXPECT_EQ(st.dag().id(st.source()), "s");
}

TEST(ToStGraph, SingleVertex) {
  const StGraph st = to_st_graph(isolated({"v"}));
  EXPECT_EQ(st.size(), 1u);
  EXPECT_EQ(st.source(), st.sink());
  EXPECT_FALSE(st.virtual_source());
}

TEST(TopologicalOrder, Examples) {
  EXPECT_EQ(topological_order(parse_edge_list(kChain3)), (std::vector<std::string>{"s", "v", "t"}));
  EXPECT_EQ(topological_order(parse_edge_list(kDiamond)), (std::vector<std::string>{"s", "a", "b", "t"}));
  EXPECT_EQ(topological_order(isolated({"v"})), (std::vector<std::string>{"v"}));
  // lexicographic, not first-appearance, tie-break
  EXPECT_EQ(topological_order(parse_edge_list("s z\ns y\n")), (std::vector<std::string>{"s", "y", "z"}));
}

TEST(ReachOracle, Examples) {
  const Dag chain = parse_edge_list(kChain3);
  const auto rc = reach_oracle(chain);
  EXPECT_TRUE(rc(chain.at("s"), chain.at("t")));
  EXPECT_FALSE(rc(chain.at("t"), chain.at("s")));

  const Dag g = parse_edge_list(kDiamond);
  const auto r = reach_oracle(g);
  EXPECT_FALSE(r(g.at("a"), g.at("b")));
  EXPECT_FALSE(r(g.at("b"), g.at("a")));
  EXPECT_EQ(r.strict_count(), 5u);
  for (auto [u, v] : {std::pair{"s", "a"}, {"s", "b"}, {"s", "t"}, {"a", "t"}, {"b", "t"}})
    EXPECT_TRUE(r(g.at(u), g.at(v))) << u << "->" << v;
  for (Vertex v = 0; v < g.size(); ++v) EXPECT_TRUE(r(v, v));
}

TEST(MaxAntichain, Examples) {
  EXPECT_EQ(max_antichain_bruteforce(parse_edge_list(kChain3)).size(), 1u);
  EXPECT_EQ(as_set(max_antichain_bruteforce(parse_edge_list(kDiamond))), (std::set<std::string>{"a", "b"}));
  EXPECT_EQ(as_set(max_antichain_bruteforce(parse_edge_list(kW3))), (std::set<std::string>{"a", "b", "c"}));
}

TEST(MaxAntichain, RefusesLargeGraphs) {
  Rng rng(7);
  const Dag g = domdraw::testing::random_dag(rng, 21, 0.3);
  EXPECT_THROW(max_antichain_bruteforce(g), TooLargeForOracle);
  EXPECT_NO_THROW(max_antichain_bruteforce(g, 21));
}

TEST(GraphProperties, RandomDags) {
  Rng rng(2024);
  for (int iter = 0; iter < 150; ++iter) {
    std::uniform_int_distribution<std::size_t> size(1, 30);
    std::uniform_real_distribution<double> density(0.05, 0.9);
    const Dag g = domdraw::testing::random_dag(rng, size(rng), density(rng));
    const auto r = reach_oracle(g);
    const std::size_t n = g.size();

    // in_adj is the transpose of out_adj
    std::size_t in_total = 0;
    for (Vertex v = 0; v < n; ++v) {
      in_total += g.in(v).size();
      for (Vertex u : g.in(v)) EXPECT_TRUE(std::binary_search(g.out(u).begin(), g.out(u).end(), v));
    }
    EXPECT_EQ(in_total, g.edge_count());

    // transitive, antisymmetric off the diagonal
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v) {
        if (u != v) EXPECT_FALSE(r(u, v) && r(v, u));
        if (!r(u, v)) continue;
        for (Vertex w = 0; w < n; ++w)
          if (r(v, w)) EXPECT_TRUE(r(u, w));
      }

    // bitset closure agrees with the search oracle
    const auto closure = transitive_closure(g);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v) ASSERT_EQ(closure(u, v), r(u, v));

    // lexicographic topological order is a linear extension
    const auto topo = topological_order(g);
    ASSERT_EQ(topo.size(), n);
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[g.at(topo[i])] = i;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v)
        if (u != v && r(u, v)) EXPECT_LT(pos[u], pos[v]);

    // augmentation: source reaches all, all reach sink
    const StGraph st = to_st_graph(g);
    const auto rst = reach_oracle(st.dag());
    for (Vertex v = 0; v < st.size(); ++v) {
      EXPECT_TRUE(rst(st.source(), v));
      EXPECT_TRUE(rst(v, st.sink()));
    }
  }
}
