#ifndef DOMDRAW_TESTS_GENERATORS_HPP
#define DOMDRAW_TESTS_GENERATORS_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "domdraw/graph.hpp"
#include "domdraw/modular.hpp"

namespace domdraw::testing {

using Rng = std::mt19937_64;

/// Random DAG on ids v0..v{n-1}: a random vertex order, each forward pair an
/// edge with probability `density`. Isolated vertices are kept.
inline Dag random_dag(Rng& rng, std::size_t n, double density) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution coin(density);
  DagBuilder b;
  for (std::size_t i = 0; i < n; ++i) b.vertex("v" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) b.edge(static_cast<Vertex>(order[i]), static_cast<Vertex>(order[j]));
  return std::move(b).build();
}

inline StGraph random_st_graph(Rng& rng, std::size_t n, double density) {
  return to_st_graph(random_dag(rng, n, density));
}

/// Two chains a0..ap and b0..bq with random cross edges. Every vertex gets a
/// random time consistent with its chain, and cross edges only run forward
/// in time, so the result is acyclic and covered by two chains.
inline Dag two_chain_dag(Rng& rng, std::size_t len_a, std::size_t len_b, double cross_density) {
  std::vector<int> slots(len_a + len_b, 0);
  std::fill(slots.begin() + static_cast<std::ptrdiff_t>(len_a), slots.end(), 1);
  std::shuffle(slots.begin(), slots.end(), rng);
  std::vector<std::pair<int, std::size_t>> timeline;  // (chain, index) in time order
  std::size_t ia = 0, ib = 0;
  for (int c : slots) timeline.emplace_back(c, c == 0 ? ia++ : ib++);

  auto name = [](int chain, std::size_t i) { return std::string(chain == 0 ? "a" : "b") + std::to_string(i); };
  DagBuilder b;
  for (auto [c, i] : timeline) b.vertex(name(c, i));
  for (std::size_t i = 1; i < len_a; ++i) b.edge(name(0, i - 1), name(0, i));
  for (std::size_t i = 1; i < len_b; ++i) b.edge(name(1, i - 1), name(1, i));
  std::bernoulli_distribution coin(cross_density);
  for (std::size_t x = 0; x < timeline.size(); ++x)
    for (std::size_t y = x + 1; y < timeline.size(); ++y)
      if (timeline[x].first != timeline[y].first && coin(rng))
        b.edge(name(timeline[x].first, timeline[x].second), name(timeline[y].first, timeline[y].second));
  return std::move(b).build();
}

/// A graph assembled from a quotient DAG by substituting a member DAG for
/// each quotient vertex; `blocks` lists member ids per quotient vertex.
struct ModularInstance {
  Dag dag;
  std::vector<std::vector<std::string>> blocks;
};

/// For a quotient edge i -> j, every sink of member i gets an edge to every
/// source of member j, so each member is a transitive module.
inline ModularInstance substitute(const Dag& quotient, const std::vector<Dag>& members) {
  ModularInstance inst;
  DagBuilder b;
  auto name = [](std::size_t block, const std::string& id) { return "m" + std::to_string(block) + "_" + id; };
  for (std::size_t i = 0; i < members.size(); ++i) {
    inst.blocks.emplace_back();
    for (const auto& id : members[i].ids()) {
      b.vertex(name(i, id));
      inst.blocks.back().push_back(name(i, id));
    }
    for (auto [u, v] : members[i].edges()) b.edge(name(i, members[i].id(u)), name(i, members[i].id(v)));
  }
  for (auto [qi, qj] : quotient.edges()) {
    const Dag& from = members[qi];
    const Dag& to = members[qj];
    for (Vertex u = 0; u < from.size(); ++u) {
      if (!from.out(u).empty()) continue;
      for (Vertex v = 0; v < to.size(); ++v)
        if (to.in(v).empty()) b.edge(name(qi, from.id(u)), name(qj, to.id(v)));
    }
  }
  inst.dag = std::move(b).build();
  return inst;
}

inline ModularInstance random_modular(Rng& rng, std::size_t max_blocks, std::size_t max_member) {
  std::uniform_int_distribution<std::size_t> blocks(1, max_blocks);
  std::uniform_int_distribution<std::size_t> member_size(1, max_member);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  const Dag quotient = random_dag(rng, blocks(rng), density(rng));
  std::vector<Dag> members;
  for (std::size_t i = 0; i < quotient.size(); ++i) members.push_back(random_dag(rng, member_size(rng), density(rng)));
  return substitute(quotient, members);
}

/// Partition of the st-graph over `inst.dag`; augmentation vertices become
/// singleton blocks.
inline CongruencePartition partition_of(const StGraph& st, const ModularInstance& inst) {
  CongruencePartition p;
  for (const auto& block : inst.blocks) {
    p.blocks.emplace_back();
    for (const auto& id : block) p.blocks.back().push_back(st.dag().at(id));
  }
  if (st.virtual_source()) p.blocks.push_back({st.source()});
  if (st.virtual_sink()) p.blocks.push_back({st.sink()});
  return p;
}

/// Brute-force width of an st-graph (virtual terminals never enlarge an
/// antichain except in the two-vertex case).
inline std::size_t oracle_width(const StGraph& g) {
  return max_antichain_bruteforce(g.dag(), 24).size();
}

}  // namespace domdraw::testing

#endif  // DOMDRAW_TESTS_GENERATORS_HPP
