#ifndef DOMDRAW_CHANNELS_HPP
#define DOMDRAW_CHANNELS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "domdraw/error.hpp"
#include "domdraw/graph.hpp"
#include "domdraw/matching.hpp"

namespace domdraw {

/// Location of a vertex inside a channel; ranks are 0-based, so the source
/// sits at rank 0 and the sink at rank |C|-1.
struct ChannelPosition {
  std::size_t channel = 0;
  std::size_t rank = 0;

  friend bool operator==(const ChannelPosition&, const ChannelPosition&) = default;
};

/// Ordered chains of an st-graph. Source and sink head and close every
/// channel; every other vertex belongs to exactly one channel.
///
/// The constructor does not validate; see validate_decomposition().
class ChannelDecomposition {
 public:
  ChannelDecomposition(std::size_t vertex_count, Vertex source, Vertex sink,
                       std::vector<std::vector<Vertex>> channels)
      : source_(source), sink_(sink), channels_(std::move(channels)), home_(vertex_count) {
    for (std::size_t i = channels_.size(); i-- > 0;) {
      const auto& c = channels_[i];
      for (std::size_t j = 0; j < c.size(); ++j)
        if (c[j] < vertex_count && c[j] != source_ && c[j] != sink_) home_[c[j]] = ChannelPosition{i, j};
    }
    if (!channels_.empty() && !channels_[0].empty()) {
      if (source_ < vertex_count) home_[source_] = ChannelPosition{0, 0};
      if (sink_ < vertex_count) home_[sink_] = ChannelPosition{0, channels_[0].size() - 1};
    }
  }

  std::size_t size() const noexcept { return channels_.size(); }
  std::size_t vertex_count() const noexcept { return home_.size(); }
  Vertex source() const noexcept { return source_; }
  Vertex sink() const noexcept { return sink_; }

  const std::vector<std::vector<Vertex>>& channels() const noexcept { return channels_; }
  std::span<const Vertex> channel(std::size_t i) const { return channels_.at(i); }

  /// The channel holding `v` and its rank there. Source and sink report
  /// channel 0. Empty for vertices no channel covers.
  std::optional<ChannelPosition> home(Vertex v) const { return home_.at(v); }

 private:
  Vertex source_;
  Vertex sink_;
  std::vector<std::vector<Vertex>> channels_;
  std::vector<std::optional<ChannelPosition>> home_;
};

/// Minimum channel decomposition (size equals the width of `g`).
///
/// Minimum chain cover of the strict order on V minus {s, t}: maximum
/// matching between left copies u and right copies v for every u < v in
/// the closure, chains read off the matched pairs, then s prepended and t
/// appended. Chains are emitted in order of their first vertex index.
inline ChannelDecomposition min_channel_decomposition(const StGraph& g, const ReachMatrix& closure) {
  const Vertex s = g.source();
  const Vertex t = g.sink();
  const std::size_t n = g.size();
  if (s == t) return ChannelDecomposition(n, s, t, {{s}});

  std::vector<Vertex> inner;
  std::vector<std::uint32_t> compact(n, BipartiteMatching::kFree);
  for (Vertex v = 0; v < n; ++v) {
    if (v == s || v == t) continue;
    compact[v] = static_cast<std::uint32_t>(inner.size());
    inner.push_back(v);
  }
  if (inner.empty()) return ChannelDecomposition(n, s, t, {{s, t}});

  std::vector<std::vector<std::uint32_t>> adjacency(inner.size());
  for (std::uint32_t a = 0; a < inner.size(); ++a)
    for (std::uint32_t b = 0; b < inner.size(); ++b)
      if (a != b && closure.reaches(inner[a], inner[b])) adjacency[a].push_back(b);

  BipartiteMatching matching(std::move(adjacency), inner.size());

  std::vector<std::vector<Vertex>> channels;
  for (std::uint32_t head = 0; head < inner.size(); ++head) {
    if (matching.right_mate(head) != BipartiteMatching::kFree) continue;
    std::vector<Vertex> chain{s};
    for (auto a = head; a != BipartiteMatching::kFree; a = matching.left_mate(a)) chain.push_back(inner[a]);
    chain.push_back(t);
    channels.push_back(std::move(chain));
  }
  return ChannelDecomposition(n, s, t, std::move(channels));
}

inline ChannelDecomposition min_channel_decomposition(const StGraph& g) {
  return min_channel_decomposition(g, transitive_closure(g.dag()));
}

/// Width of `g`: the size of a minimum channel decomposition.
inline std::size_t width(const StGraph& g) { return min_channel_decomposition(g).size(); }

struct DecompositionIssue {
  enum class Kind {
    kNoChannels,
    kOutOfRange,      ///< channel holds an index that is not a vertex
    kMissingSource,   ///< channel does not start with the source
    kMissingSink,     ///< channel does not end with the sink
    kNotAChain,       ///< consecutive pair (a, b) with b unreachable from a
    kUncovered,       ///< vertex a appears in no channel
    kDuplicated,      ///< vertex a appears more than once
  };
  Kind kind;
  std::size_t channel = 0;
  Vertex a = 0;
  Vertex b = 0;
};

struct DecompositionReport {
  std::vector<DecompositionIssue> issues;
  bool valid() const noexcept { return issues.empty(); }
};

inline std::string describe(const Dag& g, const DecompositionIssue& issue) {
  auto name = [&](Vertex v) { return v < g.size() ? g.id(v) : "#" + std::to_string(v); };
  const std::string where = "channel " + std::to_string(issue.channel);
  switch (issue.kind) {
    case DecompositionIssue::Kind::kNoChannels:
      return "decomposition has no channels";
    case DecompositionIssue::Kind::kOutOfRange:
      return where + ": vertex index " + std::to_string(issue.a) + " out of range";
    case DecompositionIssue::Kind::kMissingSource:
      return where + ": does not start with the source";
    case DecompositionIssue::Kind::kMissingSink:
      return where + ": does not end with the sink";
    case DecompositionIssue::Kind::kNotAChain:
      return where + ": '" + name(issue.b) + "' is not reachable from '" + name(issue.a) + "'";
    case DecompositionIssue::Kind::kUncovered:
      return "vertex '" + name(issue.a) + "' is in no channel";
    case DecompositionIssue::Kind::kDuplicated:
      return "vertex '" + name(issue.a) + "' is in more than one channel position";
  }
  return {};
}

inline DecompositionReport validate_decomposition(const StGraph& g, const ChannelDecomposition& d,
                                                  const ReachMatrix& closure) {
  using Kind = DecompositionIssue::Kind;
  DecompositionReport report;
  const std::size_t n = g.size();
  if (d.size() == 0) report.issues.push_back({Kind::kNoChannels});

  std::vector<std::size_t> seen(n, 0);
  for (std::size_t i = 0; i < d.size(); ++i) {
    auto c = d.channel(i);
    if (c.empty() || c.front() != g.source()) report.issues.push_back({Kind::kMissingSource, i});
    if (c.empty() || c.back() != g.sink()) report.issues.push_back({Kind::kMissingSink, i});
    bool in_range = true;
    for (Vertex v : c) {
      if (v >= n) {
        report.issues.push_back({Kind::kOutOfRange, i, v});
        in_range = false;
      } else if (!g.is_terminal(v)) {
        ++seen[v];
      }
    }
    if (!in_range) continue;
    for (std::size_t j = 1; j < c.size(); ++j)
      if (!closure.reaches(c[j - 1], c[j]) || c[j - 1] == c[j])
        report.issues.push_back({Kind::kNotAChain, i, c[j - 1], c[j]});
  }
  for (Vertex v = 0; v < n; ++v) {
    if (g.is_terminal(v)) continue;
    if (seen[v] == 0) report.issues.push_back({Kind::kUncovered, 0, v});
    if (seen[v] > 1) report.issues.push_back({Kind::kDuplicated, 0, v});
  }
  return report;
}

inline DecompositionReport validate_decomposition(const StGraph& g, const ChannelDecomposition& d) {
  return validate_decomposition(g, d, transitive_closure(g.dag()));
}

/// Appends (s, t) channels until the decomposition has `k_target` channels.
inline ChannelDecomposition pad_decomposition(const ChannelDecomposition& d, std::size_t k_target) {
  if (k_target < d.size()) throw TargetSmallerThanSize(k_target, d.size());
  auto channels = d.channels();
  std::vector<Vertex> dummy{d.source()};
  if (d.sink() != d.source()) dummy.push_back(d.sink());
  channels.resize(k_target, dummy);
  return ChannelDecomposition(d.vertex_count(), d.source(), d.sink(), std::move(channels));
}

}  // namespace domdraw

#endif  // DOMDRAW_CHANNELS_HPP
