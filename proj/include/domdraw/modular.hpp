#ifndef DOMDRAW_MODULAR_HPP
#define DOMDRAW_MODULAR_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "domdraw/channels.hpp"
#include "domdraw/ctc.hpp"
#include "domdraw/drawing.hpp"
#include "domdraw/error.hpp"
#include "domdraw/graph.hpp"

namespace domdraw {

/// Partition of V into transitive modules: inside a block, every member has
/// the same predecessors and the same successors outside the block in the
/// transitive closure.
struct CongruencePartition {
  std::vector<std::vector<Vertex>> blocks;

  std::size_t h() const noexcept { return blocks.size(); }

  static CongruencePartition singletons(std::size_t n) {
    CongruencePartition p;
    p.blocks.reserve(n);
    for (Vertex v = 0; v < n; ++v) p.blocks.push_back({v});
    return p;
  }
};

/// Block index of every vertex. Throws NotAPartition unless the blocks are
/// non-empty, disjoint and cover 0..n-1.
inline std::vector<std::size_t> block_index(std::size_t n, const CongruencePartition& p) {
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> block(n, kUnset);
  for (std::size_t i = 0; i < p.h(); ++i) {
    if (p.blocks[i].empty()) throw NotAPartition("block " + std::to_string(i) + " is empty");
    for (Vertex v : p.blocks[i]) {
      if (v >= n) throw NotAPartition("block " + std::to_string(i) + " holds an unknown vertex");
      if (block[v] != kUnset) throw NotAPartition("vertex #" + std::to_string(v) + " is in two blocks");
      block[v] = i;
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (block[v] == kUnset) throw NotAPartition("vertex #" + std::to_string(v) + " is in no block");
  return block;
}

struct PartitionIssue {
  enum class Side { kPredecessors, kSuccessors };
  std::size_t block;
  Vertex u;
  Vertex v;
  Side side;
  Vertex witness;  ///< outside vertex related to exactly one of u, v
};

struct PartitionReport {
  std::vector<PartitionIssue> issues;
  bool valid() const noexcept { return issues.empty(); }
};

inline std::string describe(const Dag& g, const PartitionIssue& issue) {
  const bool preds = issue.side == PartitionIssue::Side::kPredecessors;
  return "block " + std::to_string(issue.block) + ": '" + g.id(issue.u) + "' and '" + g.id(issue.v) +
         "' differ on external " + (preds ? "predecessor" : "successor") + " '" + g.id(issue.witness) + "'";
}

namespace detail {

// First column set in (a XOR b) AND NOT mask, if any.
inline std::optional<Vertex> first_difference(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                                              std::span<const std::uint64_t> mask) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    const std::uint64_t diff = (a[w] ^ b[w]) & ~mask[w];
    if (diff) return static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(diff)));
  }
  return std::nullopt;
}

}  // namespace detail

/// Compares each member of every block against the block's first member.
inline PartitionReport validate_partition(const StGraph& g, const CongruencePartition& p,
                                          const ReachMatrix& closure) {
  const std::size_t n = g.size();
  block_index(n, p);
  const BitMatrix& succ = closure.bits();
  const BitMatrix pred = succ.transposed();
  const std::size_t words = succ.words();

  PartitionReport report;
  std::vector<std::uint64_t> inside(words);
  for (std::size_t i = 0; i < p.h(); ++i) {
    const auto& block = p.blocks[i];
    std::fill(inside.begin(), inside.end(), 0);
    for (Vertex v : block) inside[v / 64] |= std::uint64_t{1} << (v % 64);
    const Vertex rep = block.front();
    for (std::size_t m = 1; m < block.size(); ++m) {
      const Vertex v = block[m];
      if (auto w = detail::first_difference(pred.row(rep), pred.row(v), inside))
        report.issues.push_back({i, rep, v, PartitionIssue::Side::kPredecessors, *w});
      if (auto w = detail::first_difference(succ.row(rep), succ.row(v), inside))
        report.issues.push_back({i, rep, v, PartitionIssue::Side::kSuccessors, *w});
    }
  }
  return report;
}

inline PartitionReport validate_partition(const StGraph& g, const CongruencePartition& p) {
  return validate_partition(g, p, transitive_closure(g.dag()));
}

/// Desk-scale congruence partition.
///
/// Two non-terminal vertices u, v are related when {u, v} is a transitive
/// module: their closure successor sets and predecessor sets agree outside
/// {u, v}. Blocks are the connected components of that relation (a union of
/// overlapping modules is a module). Source and sink always stay singletons.
inline CongruencePartition find_congruence_partition(const StGraph& g) {
  const std::size_t n = g.size();
  const auto closure = transitive_closure(g.dag());
  const BitMatrix& succ = closure.bits();
  const BitMatrix pred = succ.transposed();

  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };

  std::vector<std::uint64_t> pair_mask(succ.words(), 0);
  for (Vertex u = 0; u < n; ++u) {
    if (g.is_terminal(u)) continue;
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.is_terminal(v) || find(u) == find(v)) continue;
      pair_mask[u / 64] |= std::uint64_t{1} << (u % 64);
      pair_mask[v / 64] |= std::uint64_t{1} << (v % 64);
      const bool twins = !detail::first_difference(succ.row(u), succ.row(v), pair_mask) &&
                         !detail::first_difference(pred.row(u), pred.row(v), pair_mask);
      pair_mask[u / 64] = 0;
      pair_mask[v / 64] = 0;
      if (twins) parent[find(v)] = find(u);
    }
  }

  CongruencePartition p;
  std::vector<std::size_t> block_of_root(n, static_cast<std::size_t>(-1));
  for (Vertex v = 0; v < n; ++v) {
    const Vertex root = find(v);
    if (block_of_root[root] == static_cast<std::size_t>(-1)) {
      block_of_root[root] = p.blocks.size();
      p.blocks.emplace_back();
    }
    p.blocks[block_of_root[root]].push_back(v);
  }
  if (!validate_partition(g, p, closure).valid()) return CongruencePartition::singletons(n);
  return p;
}

/// Graph obtained by merging every block into one vertex; vertex i of the
/// quotient stands for block i.
struct QuotientGraph {
  StGraph graph;
  std::vector<std::size_t> block_of;  ///< original vertex -> quotient vertex
};

/// Block-induced subgraph, st-augmented with virtual s_i / t_i.
struct ModuleInducedGraph {
  StGraph graph;
  std::vector<std::optional<Vertex>> original;  ///< local vertex -> original vertex; empty for s_i / t_i
  std::size_t module_size = 0;
};

/// The quotient graph together with every module-induced graph.
struct ModularGraphs {
  QuotientGraph quotient;
  std::vector<ModuleInducedGraph> members;
};

namespace detail {

inline void require_valid(const StGraph& g, const CongruencePartition& p, const ReachMatrix& closure) {
  const auto report = validate_partition(g, p, closure);
  if (!report.valid()) throw InvalidPartition("not a congruence partition: " + describe(g.dag(), report.issues.front()));
}

inline QuotientGraph build_quotient(const StGraph& g, const CongruencePartition& p) {
  auto block = block_index(g.size(), p);
  DagBuilder b;
  for (std::size_t i = 0; i < p.h(); ++i) b.vertex("M" + std::to_string(i));
  for (auto [u, v] : g.dag().edges()) {
    const auto bu = static_cast<Vertex>(block[u]);
    const auto bv = static_cast<Vertex>(block[v]);
    if (bu != bv && !b.has_edge(bu, bv)) b.edge(bu, bv);
  }
  const auto s = static_cast<Vertex>(block[g.source()]);
  const auto t = static_cast<Vertex>(block[g.sink()]);
  return QuotientGraph{StGraph(std::move(b).build(), s, t, false, false), std::move(block)};
}

inline std::vector<ModuleInducedGraph> build_members(const StGraph& g, const CongruencePartition& p) {
  const auto block = block_index(g.size(), p);
  const Dag& dag = g.dag();
  std::vector<ModuleInducedGraph> members;
  members.reserve(p.h());
  for (std::size_t i = 0; i < p.h(); ++i) {
    const auto& module = p.blocks[i];
    const bool has_source = block[g.source()] == i;
    const bool has_sink = block[g.sink()] == i;

    DagBuilder b;
    std::vector<std::optional<Vertex>> original;
    std::optional<Vertex> s_i, t_i;
    if (!has_source) {
      s_i = b.vertex("__s" + std::to_string(i));
      original.push_back(std::nullopt);
    }
    for (Vertex v : module) {
      b.vertex(dag.id(v));
      original.push_back(v);
    }
    if (!has_sink) {
      t_i = b.vertex("__t" + std::to_string(i));
      original.push_back(std::nullopt);
    }

    for (Vertex u : module) {
      bool internal_out = false;
      for (Vertex w : dag.out(u)) {
        if (block[w] != i) continue;
        b.edge(dag.id(u), dag.id(w));
        internal_out = true;
      }
      const bool internal_in = std::any_of(dag.in(u).begin(), dag.in(u).end(), [&](Vertex w) { return block[w] == i; });
      if (s_i && !internal_in) b.edge(*s_i, b.vertex(dag.id(u)));
      if (t_i && !internal_out) b.edge(b.vertex(dag.id(u)), *t_i);
    }

    const Vertex local_s = s_i ? *s_i : b.vertex(dag.id(g.source()));
    const Vertex local_t = t_i ? *t_i : b.vertex(dag.id(g.sink()));
    members.push_back({StGraph(std::move(b).build(), local_s, local_t, s_i.has_value(), t_i.has_value()),
                       std::move(original), module.size()});
  }
  return members;
}

}  // namespace detail

inline QuotientGraph quotient_graph(const StGraph& g, const CongruencePartition& p) {
  detail::require_valid(g, p, transitive_closure(g.dag()));
  return detail::build_quotient(g, p);
}

/// One st-graph per block. The block holding the source gets only a virtual
/// sink, the block holding the sink only a virtual source, every other block
/// both.
inline std::vector<ModuleInducedGraph> module_induced_graphs(const StGraph& g, const CongruencePartition& p) {
  detail::require_valid(g, p, transitive_closure(g.dag()));
  return detail::build_members(g, p);
}

inline ModularGraphs modular_graphs(const StGraph& g, const CongruencePartition& p) {
  detail::require_valid(g, p, transitive_closure(g.dag()));
  return ModularGraphs{detail::build_quotient(g, p), detail::build_members(g, p)};
}

/// Widths of the quotient (index 0) and of every member graph.
struct NeckProfile {
  std::vector<std::size_t> widths;
  std::size_t neck = 0;           ///< w_N, the largest width
  std::size_t rho = 0;            ///< largest n_i (n_0 = h, n_i = |M_i|)
  std::size_t width_at_rho = 0;   ///< largest width among graphs with rho vertices
};

inline NeckProfile dimensional_neck(const ModularGraphs& graphs) {
  NeckProfile profile;
  std::vector<std::size_t> sizes;
  profile.widths.push_back(width(graphs.quotient.graph));
  sizes.push_back(graphs.quotient.graph.size());
  for (const auto& m : graphs.members) {
    profile.widths.push_back(width(m.graph));
    sizes.push_back(m.module_size);
  }
  profile.neck = *std::max_element(profile.widths.begin(), profile.widths.end());
  profile.rho = *std::max_element(sizes.begin(), sizes.end());
  for (std::size_t i = 0; i < sizes.size(); ++i)
    if (sizes[i] == profile.rho) profile.width_at_rho = std::max(profile.width_at_rho, profile.widths[i]);
  return profile;
}

/// A `dims`-dimensional drawing of an st-graph: minimum decomposition padded
/// with (s, t) channels, then kd_draw.
inline DominanceDrawing padded_drawing(const StGraph& g, std::size_t dims) {
  const auto d = pad_decomposition(min_channel_decomposition(g), dims);
  return kd_draw(g, d, build_ctc(g, d));
}

/// Drawings of the quotient (index 0) and members, all in w_N dimensions.
inline std::vector<DominanceDrawing> drawings_computation(const ModularGraphs& graphs, std::size_t neck) {
  std::vector<DominanceDrawing> drawings;
  drawings.reserve(graphs.members.size() + 1);
  drawings.push_back(padded_drawing(graphs.quotient.graph, neck));
  for (const auto& m : graphs.members) drawings.push_back(padded_drawing(m.graph, neck));
  return drawings;
}

inline std::vector<DominanceDrawing> drawings_computation(const ModularGraphs& graphs) {
  return drawings_computation(graphs, dimensional_neck(graphs).neck);
}

/// Per-dimension extent of a drawing: the largest coordinate, which in a
/// dominance drawing of an st-graph is the sink's.
inline std::vector<Coord> extent(const DominanceDrawing& drawing) {
  std::vector<Coord> ext(drawing.k(), 0);
  for (std::size_t e = 0; e < drawing.size(); ++e)
    for (std::size_t g = 0; g < drawing.k(); ++g) ext[g] = std::max(ext[g], drawing.coords(e)[g]);
  return ext;
}

/// Opens room in the quotient drawing for every member drawing.
///
/// Evaluated on the original quotient coordinates: in dimension g, mu_j moves
/// up by extent_g(member i) for every i != j with D_g(mu_i) < D_g(mu_j), or
/// D_g(mu_i) = D_g(mu_j) and mu_i reaches mu_j. `quotient` entry i is mu_i.
inline DominanceDrawing shifter(const DominanceDrawing& quotient, std::span<const DominanceDrawing> members,
                                const ReachMatrix& quotient_reach) {
  const std::size_t h = quotient.size();
  const std::size_t k = quotient.k();
  if (members.size() != h)
    throw DimensionMismatch("shifter needs one member drawing per quotient vertex (" + std::to_string(members.size()) +
                            " for " + std::to_string(h) + ")");
  if (quotient_reach.size() != h) throw DimensionMismatch("quotient reachability has the wrong size");
  std::vector<std::vector<Coord>> extents;
  extents.reserve(h);
  for (const auto& m : members) {
    if (m.k() != k) throw DimensionMismatch("member drawing has " + std::to_string(m.k()) + " dimensions, expected " +
                                            std::to_string(k));
    extents.push_back(extent(m));
  }

  DominanceDrawing shifted(k, quotient.provenance());
  std::vector<Coord> row(k);
  for (std::size_t j = 0; j < h; ++j) {
    const auto cj = quotient.coords(j);
    for (std::size_t g = 0; g < k; ++g) {
      Coord value = cj[g];
      for (std::size_t i = 0; i < h; ++i) {
        if (i == j) continue;
        const Coord ci = quotient.coords(i)[g];
        if (ci < cj[g] || (ci == cj[g] && quotient_reach.reaches(static_cast<Vertex>(i), static_cast<Vertex>(j))))
          value += extents[i][g];
      }
      row[g] = value;
    }
    shifted.add(quotient.id(j), row);
  }
  return shifted;
}

/// w_N-dimensional dominance drawing of `g` from a congruence partition.
///
/// Each vertex v of block i is placed at D(mu_i) + D(v in member i), with
/// the quotient drawing shifted first. Virtual s_i / t_i and the quotient
/// vertices do not appear in the result; entries follow g's vertex order.
inline DominanceDrawing nd_draw(const StGraph& g, const CongruencePartition& p) {
  const auto graphs = modular_graphs(g, p);
  const auto drawings = drawings_computation(graphs);
  const auto& quotient = graphs.quotient;
  const auto shifted = shifter(drawings.front(), std::span(drawings).subspan(1), reach_oracle(quotient.graph.dag()));

  std::vector<std::size_t> local(g.size());
  for (const auto& m : graphs.members)
    for (std::size_t l = 0; l < m.original.size(); ++l)
      if (m.original[l]) local[*m.original[l]] = l;

  const std::size_t k = shifted.k();
  DominanceDrawing out(k, Provenance::kNd);
  std::vector<Coord> row(k);
  for (Vertex v = 0; v < g.size(); ++v) {
    const std::size_t i = quotient.block_of[v];
    const auto base = shifted.coords(i);
    const auto inner = drawings[i + 1].coords(local[v]);
    for (std::size_t d = 0; d < k; ++d) row[d] = base[d] + inner[d];
    out.add(g.dag().id(v), row);
  }
  return out;
}

}  // namespace domdraw

#endif  // DOMDRAW_MODULAR_HPP
