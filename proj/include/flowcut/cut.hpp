#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <limits>
#include <vector>

#include "flowcut/graph.hpp"

namespace flowcut {

enum class Side : std::uint8_t { source = 0, target = 1 };

constexpr Side opposite(Side s) { return s == Side::source ? Side::target : Side::source; }

/// Imbalance of a bipartition with the given side sizes: (large-small)/n,
/// i.e. max(0, 2*large/n - 1). Requires small <= large and n >= 1.
double achieved_epsilon(std::int64_t small_side, std::int64_t large_side);

/// Acceptance test against a user bound: large <= ceil((1+epsilon)*total/2).
bool meets_imbalance(std::int64_t large_side, std::int64_t total, double epsilon);

/// Lightweight record of one cut produced by the bisection loop. The
/// partition itself is not stored; it can be rebuilt from the emitting
/// instance via the stamp.
struct CutEmission {
  std::int64_t cut_size = 0;
  std::int64_t small_side = 0;
  std::int64_t large_side = 0;
  double achieved_epsilon = 0;
  double expansion = 0;
  Side side = Side::source;  // which reachability side was assimilated
  std::int32_t stamp = 0;    // emission index inside its instance
  std::int32_t instance = 0;
  std::int64_t sequence = 0;  // global emission order, used for tie breaks

  std::int64_t size() const { return cut_size; }
};

/// A materialized edge cut.
struct Cut {
  /// Arcs (u,v) with u on the source's side and v on the other side.
  std::vector<Edge> cut_arcs;
  std::int64_t small_side = 0;
  std::int64_t large_side = 0;
  double achieved_epsilon = 0;
  double expansion = 0;
  /// 1 for nodes on the source's side.
  std::vector<std::uint8_t> side_assignment;

  std::int64_t size() const { return static_cast<std::int64_t>(cut_arcs.size()); }
};

template <class T>
concept ParetoPoint = requires(const T& t) {
  { t.size() } -> std::convertible_to<std::int64_t>;
  { t.achieved_epsilon } -> std::convertible_to<double>;
  { t.small_side } -> std::convertible_to<std::int64_t>;
  { t.large_side } -> std::convertible_to<std::int64_t>;
};

/// Dominance-free sequence ordered by strictly increasing size and strictly
/// decreasing achieved epsilon.
template <ParetoPoint T>
class ParetoSet {
 public:
  ParetoSet() = default;

  /// Keeps the dominance-minimal elements of `items`. Elements equal in
  /// both size and epsilon keep the earliest one in `items`.
  static ParetoSet filter(std::vector<T> items) {
    std::stable_sort(items.begin(), items.end(), [](const T& a, const T& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a.achieved_epsilon < b.achieved_epsilon;
    });
    ParetoSet out;
    double best = std::numeric_limits<double>::infinity();
    for (T& item : items) {
      if (item.achieved_epsilon < best) {
        best = item.achieved_epsilon;
        out.items_.push_back(std::move(item));
      }
    }
    return out;
  }

  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const T& operator[](std::size_t i) const { return items_[i]; }
  const std::vector<T>& items() const { return items_; }

  /// Smallest member whose larger side passes the ceiling bound for
  /// `epsilon`, or nullptr.
  const T* best_within(double epsilon) const {
    for (const T& item : items_)
      if (meets_imbalance(item.large_side, item.small_side + item.large_side, epsilon)) return &item;
    return nullptr;
  }

 private:
  std::vector<T> items_;
};

template <ParetoPoint T>
ParetoSet<T> pareto_filter(std::vector<T> items) {
  return ParetoSet<T>::filter(std::move(items));
}

}  // namespace flowcut
