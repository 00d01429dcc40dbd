#ifndef DOMDRAW_CTC_HPP
#define DOMDRAW_CTC_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "domdraw/channels.hpp"
#include "domdraw/error.hpp"
#include "domdraw/graph.hpp"

namespace domdraw {

/// Compressed transitive closure: for every vertex v and channel C_i, the
/// rank in C_i of the lowest vertex of C_i that v reaches. k*n integers.
class CompressedTransitiveClosure {
 public:
  std::size_t k() const noexcept { return k_; }
  std::size_t size() const noexcept { return ids_.size(); }
  const std::vector<std::string>& ids() const noexcept { return ids_; }

  /// Rank of Proj_{C_i}(v) in C_i; no bounds checks.
  std::uint32_t rank(Vertex v, std::size_t i) const noexcept { return table_[v * k_ + i]; }

  std::span<const std::uint32_t> ranks(Vertex v) const { return {table_.data() + v * k_, k_}; }

  ChannelPosition projection(Vertex v, std::size_t i) const {
    if (v >= size()) throw UnknownVertex("#" + std::to_string(v));
    if (i >= k_) throw ChannelOutOfRange(i, k_);
    return ChannelPosition{i, rank(v, i)};
  }

  ChannelPosition projection(std::string_view v, std::size_t i) const { return projection(vertex(v), i); }

  /// The channel and rank of `v` itself (source and sink: channel 0).
  ChannelPosition home(Vertex v) const { return home_.at(v); }

  /// u reaches v iff u's projection onto v's channel is at or below v.
  bool reaches(Vertex u, Vertex v) const {
    if (u >= size()) throw UnknownVertex("#" + std::to_string(u));
    const auto [i, j] = home(v);
    return rank(u, i) <= j;
  }

  bool reaches(std::string_view u, std::string_view v) const { return reaches(vertex(u), vertex(v)); }

  Vertex vertex(std::string_view id) const {
    for (Vertex v = 0; v < ids_.size(); ++v)
      if (ids_[v] == id) return v;
    throw UnknownVertex(std::string(id));
  }

  /// Out-edge inspections performed while building the table.
  std::size_t edge_visits() const noexcept { return edge_visits_; }

 private:
  friend CompressedTransitiveClosure build_ctc(const StGraph&, const ChannelDecomposition&);

  std::size_t k_ = 0;
  std::vector<std::string> ids_;
  std::vector<std::uint32_t> table_;
  std::vector<ChannelPosition> home_;
  std::size_t edge_visits_ = 0;
};

/// One reverse-topological pass per channel: a member of C_i projects to
/// itself, any other vertex to the lowest projection among its direct
/// successors. At most k*m edge inspections.
inline CompressedTransitiveClosure build_ctc(const StGraph& g, const ChannelDecomposition& d) {
  const auto report = validate_decomposition(g, d);
  if (!report.valid())
    throw InvalidDecomposition("invalid channel decomposition: " + describe(g.dag(), report.issues.front()));

  const Dag& dag = g.dag();
  const std::size_t n = dag.size();
  const std::size_t k = d.size();
  constexpr auto kNone = std::numeric_limits<std::uint32_t>::max();

  CompressedTransitiveClosure ctc;
  ctc.k_ = k;
  ctc.ids_ = dag.ids();
  ctc.table_.assign(n * k, kNone);
  ctc.home_.resize(n);
  for (Vertex v = 0; v < n; ++v) ctc.home_[v] = *d.home(v);

  std::vector<std::uint32_t> member_rank(n, kNone);
  const auto topo = dag.topo();
  for (std::size_t i = 0; i < k; ++i) {
    const auto channel = d.channel(i);
    for (std::size_t j = 0; j < channel.size(); ++j) member_rank[channel[j]] = static_cast<std::uint32_t>(j);

    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
      const Vertex v = *it;
      auto best = member_rank[v];
      if (best == kNone) {
        for (Vertex w : dag.out(v)) {
          ++ctc.edge_visits_;
          best = std::min(best, ctc.table_[w * k + i]);
        }
      }
      ctc.table_[v * k + i] = best;
    }

    for (Vertex v : channel) member_rank[v] = kNone;
  }
  return ctc;
}

}  // namespace domdraw

#endif  // DOMDRAW_CTC_HPP
