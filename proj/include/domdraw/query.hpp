#ifndef DOMDRAW_QUERY_HPP
#define DOMDRAW_QUERY_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "domdraw/drawing.hpp"
#include "domdraw/error.hpp"

namespace domdraw {

/// Reachability index over a dominance drawing: u reaches v iff u's
/// coordinates are all <= v's. Exact when the drawing is a certified
/// dominance drawing.
class ReachIndex {
 public:
  explicit ReachIndex(DominanceDrawing drawing) : drawing_(std::move(drawing)) {
    if (drawing_.empty()) throw EmptyDrawing();
  }

  std::size_t k() const noexcept { return drawing_.k(); }
  std::size_t size() const noexcept { return drawing_.size(); }
  const DominanceDrawing& drawing() const noexcept { return drawing_; }

  bool contains(std::string_view id) const { return drawing_.find(id).has_value(); }

  /// At most k coordinate comparisons; `comparisons`, when given, is
  /// incremented by the number actually made.
  bool query(std::string_view u, std::string_view v, std::size_t* comparisons = nullptr) const {
    const auto cu = drawing_.coords(u);
    const auto cv = drawing_.coords(v);
    for (std::size_t g = 0; g < cu.size(); ++g) {
      if (comparisons) ++*comparisons;
      if (cu[g] > cv[g]) return false;
    }
    return true;
  }

 private:
  DominanceDrawing drawing_;
};

class UnknownVertexInPair : public UnknownVertex {
 public:
  UnknownVertexInPair(std::size_t pair, const std::string& id) : UnknownVertex(id), pair_(pair) {}
  std::size_t pair_index() const noexcept { return pair_; }

 private:
  std::size_t pair_;
};

inline ReachIndex build_index(DominanceDrawing drawing) { return ReachIndex(std::move(drawing)); }

/// Element-wise query. Every pair is checked before any is answered, so an
/// unknown vertex yields no partial result.
inline std::vector<bool> batch_query(const ReachIndex& index,
                                     const std::vector<std::pair<std::string, std::string>>& pairs) {
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (!index.contains(pairs[i].first)) throw UnknownVertexInPair(i, pairs[i].first);
    if (!index.contains(pairs[i].second)) throw UnknownVertexInPair(i, pairs[i].second);
  }
  std::vector<bool> answers;
  answers.reserve(pairs.size());
  for (const auto& [u, v] : pairs) answers.push_back(index.query(u, v));
  return answers;
}

}  // namespace domdraw

#endif  // DOMDRAW_QUERY_HPP
