#ifndef DOMDRAW_MATCHING_HPP
#define DOMDRAW_MATCHING_HPP

#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace domdraw {

/// Maximum-cardinality matching in a bipartite graph (Hopcroft-Karp).
///
/// Left and right sides are both indexed 0..size-1. Neighbour lists are
/// scanned in the order given, and free left vertices in index order, so the
/// matching is a deterministic function of the input.
class BipartiteMatching {
 public:
  static constexpr std::uint32_t kFree = std::numeric_limits<std::uint32_t>::max();

  explicit BipartiteMatching(std::vector<std::vector<std::uint32_t>> adjacency, std::size_t right_size)
      : adj_(std::move(adjacency)),
        match_left_(adj_.size(), kFree),
        match_right_(right_size, kFree),
        dist_(adj_.size()) {
    while (layer()) {
      for (std::uint32_t u = 0; u < adj_.size(); ++u)
        if (match_left_[u] == kFree && augment(u)) ++size_;
    }
  }

  std::size_t size() const noexcept { return size_; }
  std::uint32_t left_mate(std::uint32_t u) const { return match_left_[u]; }
  std::uint32_t right_mate(std::uint32_t v) const { return match_right_[v]; }

 private:
  static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

  bool layer() {
    std::queue<std::uint32_t> q;
    for (std::uint32_t u = 0; u < adj_.size(); ++u) {
      if (match_left_[u] == kFree) {
        dist_[u] = 0;
        q.push(u);
      } else {
        dist_[u] = kInf;
      }
    }
    bool found = false;
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      for (auto v : adj_[u]) {
        auto w = match_right_[v];
        if (w == kFree) {
          found = true;
        } else if (dist_[w] == kInf) {
          dist_[w] = dist_[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  }

  bool augment(std::uint32_t u) {
    for (auto v : adj_[u]) {
      auto w = match_right_[v];
      if (w == kFree || (dist_[w] == dist_[u] + 1 && augment(w))) {
        match_left_[u] = v;
        match_right_[v] = u;
        return true;
      }
    }
    dist_[u] = kInf;
    return false;
  }

  std::vector<std::vector<std::uint32_t>> adj_;
  std::vector<std::uint32_t> match_left_;
  std::vector<std::uint32_t> match_right_;
  std::vector<std::uint32_t> dist_;
  std::size_t size_ = 0;
};

}  // namespace domdraw

#endif  // DOMDRAW_MATCHING_HPP
