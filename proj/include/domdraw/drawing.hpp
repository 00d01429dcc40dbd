#ifndef DOMDRAW_DRAWING_HPP
#define DOMDRAW_DRAWING_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "domdraw/channels.hpp"
#include "domdraw/ctc.hpp"
#include "domdraw/error.hpp"
#include "domdraw/graph.hpp"

namespace domdraw {

using Coord = std::int64_t;

/// Which construction produced a drawing.
enum class Provenance { kKd, kNd, kDistinct };

inline std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::kKd: return "kd";
    case Provenance::kNd: return "nd";
    case Provenance::kDistinct: return "distinct";
  }
  return "kd";
}

inline std::optional<Provenance> parse_provenance(std::string_view s) {
  if (s == "kd") return Provenance::kKd;
  if (s == "nd") return Provenance::kNd;
  if (s == "distinct") return Provenance::kDistinct;
  return std::nullopt;
}

/// True iff every coordinate of `a` is <= the matching coordinate of `b`.
inline bool dominated_by(std::span<const Coord> a, std::span<const Coord> b) {
  for (std::size_t g = 0; g < a.size(); ++g)
    if (a[g] > b[g]) return false;
  return true;
}

/// Integer coordinate vectors of length k, one per vertex id. Entries keep
/// insertion order; drawings built from a graph follow its vertex indices.
class DominanceDrawing {
 public:
  explicit DominanceDrawing(std::size_t k, Provenance provenance = Provenance::kKd)
      : k_(k), provenance_(provenance) {}

  std::size_t k() const noexcept { return k_; }
  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  Provenance provenance() const noexcept { return provenance_; }
  void set_provenance(Provenance p) noexcept { provenance_ = p; }

  const std::vector<std::string>& ids() const noexcept { return ids_; }
  const std::string& id(std::size_t entry) const { return ids_.at(entry); }

  std::span<const Coord> coords(std::size_t entry) const { return {coords_.data() + entry * k_, k_}; }
  std::span<Coord> coords(std::size_t entry) { return {coords_.data() + entry * k_, k_}; }

  std::optional<std::size_t> find(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::span<const Coord> coords(std::string_view id) const {
    auto e = find(id);
    if (!e) throw UnknownVertex(std::string(id));
    return coords(*e);
  }

  void add(std::string id, std::span<const Coord> coords) {
    if (coords.size() != k_)
      throw DimensionMismatch("vertex '" + id + "' has " + std::to_string(coords.size()) +
                              " coordinates, expected " + std::to_string(k_));
    if (!index_.try_emplace(id, ids_.size()).second)
      throw InputError("duplicate coordinates for vertex '" + id + "'");
    ids_.push_back(std::move(id));
    coords_.insert(coords_.end(), coords.begin(), coords.end());
  }

  /// Copy restricted to the entries whose id satisfies `keep`.
  template <typename Pred>
  DominanceDrawing filtered(Pred keep) const {
    DominanceDrawing out(k_, provenance_);
    for (std::size_t e = 0; e < size(); ++e)
      if (keep(ids_[e])) out.add(ids_[e], coords(e));
    return out;
  }

  friend bool operator==(const DominanceDrawing& a, const DominanceDrawing& b) {
    return a.k_ == b.k_ && a.provenance_ == b.provenance_ && a.ids_ == b.ids_ && a.coords_ == b.coords_;
  }

 private:
  std::size_t k_;
  Provenance provenance_;
  std::vector<std::string> ids_;
  std::vector<Coord> coords_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// k-dimensional dominance drawing from a channel decomposition.
///
/// Dimension h of v is the rank of Proj_{C_h}(v); for v's own channel this
/// is v's rank there. With k = 2 this is the classical two-channel drawing.
inline DominanceDrawing kd_draw(const StGraph& g, const ChannelDecomposition& d,
                                const CompressedTransitiveClosure& ctc) {
  if (ctc.k() != d.size() || ctc.size() != g.size())
    throw InvalidDecomposition("compressed transitive closure does not match the decomposition");
  DominanceDrawing drawing(d.size(), Provenance::kKd);
  std::vector<Coord> row(d.size());
  for (Vertex v = 0; v < g.size(); ++v) {
    auto ranks = ctc.ranks(v);
    std::copy(ranks.begin(), ranks.end(), row.begin());
    drawing.add(g.dag().id(v), row);
  }
  return drawing;
}

inline DominanceDrawing kd_draw(const StGraph& g, const ChannelDecomposition& d) {
  return kd_draw(g, d, build_ctc(g, d));
}

/// Dominance drawing with distinct coordinates: every dimension is re-ranked
/// by (old coordinate, position in `topo`), giving a permutation of 0..n-1.
inline DominanceDrawing make_distinct(const DominanceDrawing& drawing, std::span<const std::string> topo) {
  std::unordered_map<std::string_view, std::size_t> position;
  for (std::size_t i = 0; i < topo.size(); ++i) position.emplace(topo[i], i);
  const std::size_t n = drawing.size();
  std::vector<std::size_t> topo_pos(n);
  for (std::size_t e = 0; e < n; ++e) {
    auto it = position.find(drawing.id(e));
    if (it == position.end()) throw UnknownVertex(drawing.id(e));
    topo_pos[e] = it->second;
  }

  std::vector<Coord> ranked(n * drawing.k());
  std::vector<std::size_t> order(n);
  for (std::size_t g = 0; g < drawing.k(); ++g) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const Coord ca = drawing.coords(a)[g];
      const Coord cb = drawing.coords(b)[g];
      return ca != cb ? ca < cb : topo_pos[a] < topo_pos[b];
    });
    for (std::size_t r = 0; r < n; ++r) ranked[order[r] * drawing.k() + g] = static_cast<Coord>(r);
  }

  DominanceDrawing out(drawing.k(), Provenance::kDistinct);
  for (std::size_t e = 0; e < n; ++e)
    out.add(drawing.id(e), std::span<const Coord>(ranked.data() + e * drawing.k(), drawing.k()));
  return out;
}

inline DominanceDrawing make_distinct(const DominanceDrawing& drawing, const std::vector<std::string>& topo) {
  return make_distinct(drawing, std::span<const std::string>(topo));
}

struct DominanceIssue {
  enum class Kind {
    kMissingDominance,  ///< v reachable from u but u is not dominated by v
    kFalseDominance,    ///< u dominated by v without a path u ~> v
    kCoincident,        ///< u and v share every coordinate
  };
  Kind kind;
  Vertex u;
  Vertex v;
};

struct DominanceReport {
  std::vector<DominanceIssue> issues;
  bool valid() const noexcept { return issues.empty(); }
};

inline std::string describe(const Dag& g, const DominanceIssue& issue) {
  const std::string pair = "('" + g.id(issue.u) + "', '" + g.id(issue.v) + "')";
  switch (issue.kind) {
    case DominanceIssue::Kind::kMissingDominance:
      return pair + ": path exists but coordinates are not dominated";
    case DominanceIssue::Kind::kFalseDominance:
      return pair + ": coordinates dominated but no path exists";
    case DominanceIssue::Kind::kCoincident:
      return pair + ": vertices share a point";
  }
  return {};
}

/// Checks u <= v coordinate-wise  <=>  u reaches v, for every ordered pair
/// of distinct vertices of `g`, against the search-based oracle.
inline DominanceReport verify_dominance(const Dag& g, const DominanceDrawing& drawing) {
  std::vector<std::size_t> entry(g.size());
  for (Vertex v = 0; v < g.size(); ++v) {
    auto e = drawing.find(g.id(v));
    if (!e) throw MissingVertexCoordinates(g.id(v));
    entry[v] = *e;
  }
  const auto r = reach_oracle(g);
  DominanceReport report;
  for (Vertex u = 0; u < g.size(); ++u) {
    for (Vertex v = 0; v < g.size(); ++v) {
      if (u == v) continue;
      const auto cu = drawing.coords(entry[u]);
      const auto cv = drawing.coords(entry[v]);
      const bool dominated = dominated_by(cu, cv);
      if (u < v && std::equal(cu.begin(), cu.end(), cv.begin()))
        report.issues.push_back({DominanceIssue::Kind::kCoincident, u, v});
      if (r.reaches(u, v) && !dominated) report.issues.push_back({DominanceIssue::Kind::kMissingDominance, u, v});
      if (!r.reaches(u, v) && dominated) report.issues.push_back({DominanceIssue::Kind::kFalseDominance, u, v});
    }
  }
  return report;
}

}  // namespace domdraw

#endif  // DOMDRAW_DRAWING_HPP
