#ifndef DOMDRAW_GRAPH_HPP
#define DOMDRAW_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <optional>
#include <queue>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "domdraw/error.hpp"

namespace domdraw {

/// Dense vertex index, assigned in first-appearance order.
using Vertex = std::uint32_t;

/// Ids starting with this prefix are reserved for augmentation vertices.
inline constexpr std::string_view kReservedPrefix = "__";
inline constexpr std::string_view kVirtualSourceId = "__S";
inline constexpr std::string_view kVirtualSinkId = "__T";

/// Immutable directed acyclic graph over opaque string vertex ids.
///
/// Adjacency is kept in both directions, each list sorted by vertex index.
class Dag {
 public:
  Dag() = default;

  std::size_t size() const noexcept { return ids_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  const std::string& id(Vertex v) const { return ids_.at(v); }
  const std::vector<std::string>& ids() const noexcept { return ids_; }

  std::optional<Vertex> find(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  Vertex at(std::string_view id) const {
    auto v = find(id);
    if (!v) throw UnknownVertex(std::string(id));
    return *v;
  }

  std::span<const Vertex> out(Vertex v) const { return out_.at(v); }
  std::span<const Vertex> in(Vertex v) const { return in_.at(v); }

  /// Some topological order (Kahn over vertex indices); fixed at construction.
  std::span<const Vertex> topo() const noexcept { return topo_; }

  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> result;
    result.reserve(edge_count_);
    for (Vertex u = 0; u < size(); ++u)
      for (Vertex w : out_[u]) result.emplace_back(u, w);
    return result;
  }

 private:
  friend class DagBuilder;

  std::vector<std::string> ids_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::vector<Vertex> topo_;
  std::size_t edge_count_ = 0;
};

/// Incremental construction of a Dag. Acyclicity is checked by build().
class DagBuilder {
 public:
  Vertex vertex(std::string_view id) {
    auto [it, inserted] = index_.try_emplace(std::string(id), static_cast<Vertex>(ids_.size()));
    if (inserted) {
      ids_.emplace_back(id);
      out_.emplace_back();
    }
    return it->second;
  }

  void edge(Vertex u, Vertex v) {
    if (u == v) throw SelfLoop(ids_.at(u));
    if (!edges_.insert(key(u, v)).second) throw DuplicateEdge(ids_.at(u), ids_.at(v));
    out_.at(u).push_back(v);
  }

  void edge(std::string_view u, std::string_view v) {
    const Vertex from = vertex(u);  // ids are numbered in order of appearance
    edge(from, vertex(v));
  }

  bool has_edge(Vertex u, Vertex v) const { return edges_.count(key(u, v)) != 0; }
  std::size_t size() const noexcept { return ids_.size(); }

  Dag build() && {
    Dag g;
    const std::size_t n = ids_.size();
    g.ids_ = std::move(ids_);
    g.index_ = std::move(index_);
    g.out_ = std::move(out_);
    g.in_.assign(n, {});
    for (Vertex u = 0; u < n; ++u) {
      std::sort(g.out_[u].begin(), g.out_[u].end());
      for (Vertex w : g.out_[u]) g.in_[w].push_back(u);
      g.edge_count_ += g.out_[u].size();
    }
    // in_ lists come out sorted because u is visited in increasing order.

    std::vector<std::size_t> indeg(n);
    for (Vertex v = 0; v < n; ++v) indeg[v] = g.in_[v].size();
    std::queue<Vertex> frontier;
    for (Vertex v = 0; v < n; ++v)
      if (indeg[v] == 0) frontier.push(v);
    while (!frontier.empty()) {
      Vertex u = frontier.front();
      frontier.pop();
      g.topo_.push_back(u);
      for (Vertex w : g.out_[u])
        if (--indeg[w] == 0) frontier.push(w);
    }
    if (g.topo_.size() != n) throw CycleDetected(g.ids_[cycle_vertex(g, indeg)]);
    return g;
  }

 private:
  static std::uint64_t key(Vertex u, Vertex v) {
    return (static_cast<std::uint64_t>(u) << 32) | v;
  }

  // Every vertex left with positive in-degree after Kahn has a remaining
  // predecessor; walking predecessors must revisit a vertex on a cycle.
  static Vertex cycle_vertex(const Dag& g, const std::vector<std::size_t>& indeg) {
    Vertex v = 0;
    while (indeg[v] == 0) ++v;
    std::vector<char> seen(g.size(), 0);
    while (!seen[v]) {
      seen[v] = 1;
      for (Vertex p : g.in_[v]) {
        if (indeg[p] != 0) {
          v = p;
          break;
        }
      }
    }
    return v;
  }

  std::vector<std::string> ids_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<std::vector<Vertex>> out_;
  std::unordered_set<std::uint64_t> edges_;
};

/// A DAG with a designated unique source and unique sink.
///
/// Either endpoint may be a virtual vertex added by augmentation. A
/// single-vertex graph is an st-graph whose source and sink coincide.
class StGraph {
 public:
  /// Validates that `source` and `sink` are the unique source and sink.
  StGraph(Dag dag, Vertex source, Vertex sink, bool virtual_source, bool virtual_sink)
      : dag_(std::move(dag)),
        source_(source),
        sink_(sink),
        virtual_source_(virtual_source),
        virtual_sink_(virtual_sink) {
    if (dag_.size() == 0) throw InputError("an st-graph needs at least one vertex");
    for (Vertex v = 0; v < dag_.size(); ++v) {
      if ((dag_.in(v).empty()) != (v == source_))
        throw InputError("vertex '" + dag_.id(v) + "' breaks the unique-source condition");
      if ((dag_.out(v).empty()) != (v == sink_))
        throw InputError("vertex '" + dag_.id(v) + "' breaks the unique-sink condition");
    }
  }

  const Dag& dag() const noexcept { return dag_; }
  std::size_t size() const noexcept { return dag_.size(); }
  Vertex source() const noexcept { return source_; }
  Vertex sink() const noexcept { return sink_; }
  bool virtual_source() const noexcept { return virtual_source_; }
  bool virtual_sink() const noexcept { return virtual_sink_; }

  bool is_terminal(Vertex v) const noexcept { return v == source_ || v == sink_; }
  bool is_virtual(Vertex v) const noexcept {
    return (virtual_source_ && v == source_) || (virtual_sink_ && v == sink_);
  }

 private:
  Dag dag_;
  Vertex source_;
  Vertex sink_;
  bool virtual_source_;
  bool virtual_sink_;
};

/// Square bit matrix; row u holds one bit per column.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::size_t words() const noexcept { return words_; }

  bool test(std::size_t r, std::size_t c) const {
    return (bits_[r * words_ + c / 64] >> (c % 64)) & 1u;
  }
  void set(std::size_t r, std::size_t c) { bits_[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64); }

  std::span<const std::uint64_t> row(std::size_t r) const { return {bits_.data() + r * words_, words_}; }
  std::span<std::uint64_t> row(std::size_t r) { return {bits_.data() + r * words_, words_}; }

  void or_row(std::size_t dst, std::size_t src) {
    auto d = row(dst);
    auto s = row(src);
    for (std::size_t w = 0; w < words_; ++w) d[w] |= s[w];
  }

  std::size_t count() const {
    std::size_t total = 0;
    for (auto w : bits_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  BitMatrix transposed() const {
    BitMatrix t(n_);
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < n_; ++c)
        if (test(r, c)) t.set(c, r);
    return t;
  }

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Reflexive reachability relation: reaches(u, v) iff a directed path u~>v
/// exists, with reaches(v, v) true by convention.
class ReachMatrix {
 public:
  ReachMatrix() = default;
  explicit ReachMatrix(BitMatrix bits) : bits_(std::move(bits)) {}

  std::size_t size() const noexcept { return bits_.size(); }
  bool reaches(Vertex u, Vertex v) const { return bits_.test(u, v); }
  bool operator()(Vertex u, Vertex v) const { return reaches(u, v); }
  bool comparable(Vertex u, Vertex v) const { return reaches(u, v) || reaches(v, u); }

  const BitMatrix& bits() const noexcept { return bits_; }

  /// Number of true entries with u != v.
  std::size_t strict_count() const { return bits_.count() - size(); }

 private:
  BitMatrix bits_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n\v\f";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace detail

/// Reads the edge-list format: one "u v" edge per line, '#' comment lines,
/// blank lines ignored. Vertices are indexed in first-appearance order.
inline Dag parse_edge_list(std::istream& in) {
  DagBuilder builder;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view = line;
    if (lineno == 1 && view.starts_with("\xEF\xBB\xBF")) view.remove_prefix(3);
    view = detail::trim(view);
    if (view.empty() || view.front() == '#') continue;

    std::istringstream tokens{std::string(view)};
    std::string u, v, extra;
    if (!(tokens >> u >> v) || (tokens >> extra))
      throw MalformedLine(lineno, "expected exactly two vertex ids");
    for (const auto& id : {u, v})
      if (std::string_view(id).starts_with(kReservedPrefix)) throw ReservedVertexId(id);
    try {
      builder.edge(u, v);
    } catch (const DuplicateEdge& e) {
      throw MalformedLine(lineno, e.what());
    }
  }
  return std::move(builder).build();
}

inline Dag parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

/// Returns an st-graph for `g`, adding a virtual source "__S" and/or a
/// virtual sink "__T" when the source or sink is not unique.
inline StGraph to_st_graph(const Dag& g) {
  if (g.size() == 0) throw InputError("graph has no vertices");
  std::vector<Vertex> sources, sinks;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (g.in(v).empty()) sources.push_back(v);
    if (g.out(v).empty()) sinks.push_back(v);
  }
  const bool add_source = sources.size() != 1;
  const bool add_sink = sinks.size() != 1;
  if (!add_source && !add_sink) return StGraph(g, sources.front(), sinks.front(), false, false);

  DagBuilder b;
  for (const auto& id : g.ids()) b.vertex(id);
  for (auto [u, v] : g.edges()) b.edge(u, v);
  Vertex s = sources.front();
  Vertex t = sinks.front();
  if (add_source) {
    s = b.vertex(kVirtualSourceId);
    for (Vertex v : sources) b.edge(s, v);
  }
  if (add_sink) {
    t = b.vertex(kVirtualSinkId);
    for (Vertex v : sinks) b.edge(v, t);
  }
  return StGraph(std::move(b).build(), s, t, add_source, add_sink);
}

/// Kahn's algorithm with the frontier ordered by vertex id, so the result
/// is the lexicographically smallest linear extension.
inline std::vector<std::string> topological_order(const Dag& g) {
  std::vector<std::size_t> indeg(g.size());
  auto later = [&](Vertex a, Vertex b) { return g.id(a) > g.id(b); };
  std::priority_queue<Vertex, std::vector<Vertex>, decltype(later)> frontier(later);
  for (Vertex v = 0; v < g.size(); ++v) {
    indeg[v] = g.in(v).size();
    if (indeg[v] == 0) frontier.push(v);
  }
  std::vector<std::string> order;
  order.reserve(g.size());
  while (!frontier.empty()) {
    Vertex u = frontier.top();
    frontier.pop();
    order.push_back(g.id(u));
    for (Vertex w : g.out(u))
      if (--indeg[w] == 0) frontier.push(w);
  }
  // Dag construction already rejects cycles; this guards hand-built inputs.
  if (order.size() != g.size()) throw CycleDetected(g.id(0));
  return order;
}

/// Brute-force reachability: one search per vertex.
inline ReachMatrix reach_oracle(const Dag& g) {
  const std::size_t n = g.size();
  BitMatrix bits(n);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    bits.set(s, s);
    stack.assign(1, s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.out(u)) {
        if (!bits.test(s, w)) {
          bits.set(s, w);
          stack.push_back(w);
        }
      }
    }
  }
  return ReachMatrix(std::move(bits));
}

/// Transitive closure by bitset propagation in reverse topological order.
/// Produces the same relation as reach_oracle in O(n*m/64).
inline ReachMatrix transitive_closure(const Dag& g) {
  BitMatrix bits(g.size());
  auto topo = g.topo();
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    bits.set(*it, *it);
    for (Vertex w : g.out(*it)) bits.or_row(*it, w);
  }
  return ReachMatrix(std::move(bits));
}

inline constexpr std::size_t kDefaultOracleLimit = 20;

/// Exhaustive maximum antichain. Exponential; refuses graphs above `limit`.
inline std::vector<std::string> max_antichain_bruteforce(const Dag& g,
                                                         std::size_t limit = kDefaultOracleLimit) {
  const std::size_t n = g.size();
  if (n > limit || n >= 63) throw TooLargeForOracle(n, limit);
  if (n == 0) return {};
  const auto r = reach_oracle(g);
  std::vector<std::uint64_t> comparable(n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && r.comparable(u, v)) comparable[u] |= std::uint64_t{1} << v;

  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<char> antichain(total, 0);
  antichain[0] = 1;
  std::uint64_t best = 0;
  int best_size = 0;
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    const auto low = static_cast<std::size_t>(std::countr_zero(mask));
    const std::uint64_t rest = mask & (mask - 1);
    antichain[mask] = antichain[rest] && (comparable[low] & rest) == 0;
    if (antichain[mask] && std::popcount(mask) > best_size) {
      best_size = std::popcount(mask);
      best = mask;
    }
  }
  std::vector<std::string> result;
  for (Vertex v = 0; v < n; ++v)
    if (best >> v & 1u) result.push_back(g.id(v));
  return result;
}

}  // namespace domdraw

#endif  // DOMDRAW_GRAPH_HPP
