#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "cospec/charpoly.hpp"
#include "cospec/graph.hpp"

namespace cospec {

/// Exact multiplicities of simple cycles by length, up to max_len.
/// Only nonzero lengths are stored; count_at() reads missing entries as zero.
struct CycleCensus {
  int max_len = 0;
  std::map<int, long long> counts;
  long long total = 0;

  long long count_at(int len) const {
    auto it = counts.find(len);
    return it == counts.end() ? 0 : it->second;
  }
};

/// A simple cycle written once: rotated to start at its minimum node and
/// oriented so the second entry is the smaller of the start node's two
/// cycle neighbors.
struct CanonicalCycle {
  std::vector<int> nodes;

  int length() const { return static_cast<int>(nodes.size()); }
};

struct CensusOptions {
  int max_len = 0;
  int threads = 1;
  /// Step budget across all workers; 0 means unlimited. One step is one
  /// path-extension attempt in the backtracking search.
  long long budget = 0;
};

/// Raised when the step budget runs out; carries whatever was counted so far
/// (per-root subtotals of roots that completed).
class BudgetExceededError : public std::runtime_error {
public:
  BudgetExceededError(std::string message, CycleCensus partial_census)
      : std::runtime_error(std::move(message)), partial(std::move(partial_census)) {}

  CycleCensus partial;
};

namespace detail {

/// Backtracking enumeration of simple cycles in canonical form. Paths grow
/// from a root r through nodes > r only, so each cycle is seen exactly once
/// from its minimum node; the closure is recorded only in the orientation
/// with path[1] < last. Distances to the root inside the allowed node set
/// prune branches that can no longer close within the cap.
class CycleSearch {
public:
  CycleSearch(const Graph& g, int max_len) : g_(g), max_len_(max_len), n_(g.node_count()) {
    adj_.assign(static_cast<size_t>(n_) * static_cast<size_t>(n_), 0);
    for (auto [u, v] : g.edges()) {
      adj_[static_cast<size_t>(u) * static_cast<size_t>(n_) + static_cast<size_t>(v)] = 1;
      adj_[static_cast<size_t>(v) * static_cast<size_t>(n_) + static_cast<size_t>(u)] = 1;
    }
  }

  /// Runs the search rooted at r. Emit receives the current path (a complete
  /// canonical cycle). Returns false when the budget gave out.
  template <typename Emit>
  bool run_root(int r, Emit&& emit, const std::atomic<long long>* budget_left,
                std::atomic<long long>* budget_counter) {
    root_ = r;
    dist_.assign(static_cast<size_t>(n_), -1);
    // BFS from r restricted to {r} ∪ {v > r}.
    std::vector<int> queue{r};
    dist_[static_cast<size_t>(r)] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int v : g_.neighbors(u)) {
        if (v < r || dist_[static_cast<size_t>(v)] != -1) continue;
        dist_[static_cast<size_t>(v)] = dist_[static_cast<size_t>(u)] + 1;
        queue.push_back(v);
      }
    }
    path_.clear();
    path_.push_back(r);
    on_path_.assign(static_cast<size_t>(n_), false);
    on_path_[static_cast<size_t>(r)] = true;
    local_steps_ = 0;
    budget_left_ = budget_left;
    budget_counter_ = budget_counter;
    bool ok = true;
    for (int v : g_.neighbors(r)) {
      if (v <= r) continue;
      if (!extend(v, emit)) {
        ok = false;
        break;
      }
    }
    flush_steps();
    return ok;
  }

private:
  bool adjacent(int a, int b) const {
    return adj_[static_cast<size_t>(a) * static_cast<size_t>(n_) + static_cast<size_t>(b)] != 0;
  }

  bool charge_step() {
    if (budget_left_ == nullptr) return true;
    if (++local_steps_ < kStepBatch) return true;
    flush_steps();
    return budget_left_->load(std::memory_order_relaxed) >
           budget_counter_->load(std::memory_order_relaxed);
  }

  void flush_steps() {
    if (budget_counter_ != nullptr && local_steps_ > 0) {
      budget_counter_->fetch_add(local_steps_, std::memory_order_relaxed);
      local_steps_ = 0;
    }
  }

  template <typename Emit>
  bool extend(int v, Emit&& emit) {
    if (!charge_step()) return false;
    path_.push_back(v);
    on_path_[static_cast<size_t>(v)] = true;
    const int len = static_cast<int>(path_.size());
    if (len >= 3 && adjacent(v, root_) && path_[1] < v) emit(path_);
    if (len < max_len_) {
      for (int w : g_.neighbors(v)) {
        if (w <= root_ || on_path_[static_cast<size_t>(w)]) continue;
        if (dist_[static_cast<size_t>(w)] == -1 || len + dist_[static_cast<size_t>(w)] > max_len_)
          continue;
        if (!extend(w, emit)) {
          on_path_[static_cast<size_t>(v)] = false;
          path_.pop_back();
          return false;
        }
      }
    }
    on_path_[static_cast<size_t>(v)] = false;
    path_.pop_back();
    return true;
  }

  static constexpr long long kStepBatch = 4096;

  const Graph& g_;
  int max_len_;
  int n_;
  int root_ = 0;
  std::vector<char> adj_;
  std::vector<int> dist_;
  std::vector<int> path_;
  std::vector<bool> on_path_;
  long long local_steps_ = 0;
  const std::atomic<long long>* budget_left_ = nullptr;
  std::atomic<long long>* budget_counter_ = nullptr;
};

}  // namespace detail

/// Counts simple cycles of length 3..max_len, each exactly once. Work is
/// split by root node; per-root subtotals are merged in root order, so the
/// result is identical for any worker count.
inline CycleCensus count_cycles(const Graph& g, const CensusOptions& options) {
  if (options.max_len < 3) throw std::invalid_argument("count_cycles: need max_len >= 3");
  const int n = g.node_count();
  const int threads = std::max(1, options.threads);

  std::vector<std::vector<long long>> per_root(
      static_cast<size_t>(n), std::vector<long long>(static_cast<size_t>(options.max_len) + 1, 0));
  std::vector<char> completed(static_cast<size_t>(n), 0);

  std::atomic<long long> budget_left{options.budget > 0 ? options.budget : 0};
  std::atomic<long long> budget_counter{0};
  const std::atomic<long long>* budget_ptr = options.budget > 0 ? &budget_left : nullptr;
  std::atomic<int> next_root{0};
  std::atomic<bool> exceeded{false};

  auto work = [&]() {
    detail::CycleSearch search(g, options.max_len);
    while (true) {
      int r = next_root.fetch_add(1, std::memory_order_relaxed);
      if (r >= n || exceeded.load(std::memory_order_relaxed)) break;
      auto& row = per_root[static_cast<size_t>(r)];
      bool ok = search.run_root(
          r, [&row](const std::vector<int>& path) { ++row[path.size()]; }, budget_ptr,
          &budget_counter);
      if (!ok) {
        exceeded.store(true, std::memory_order_relaxed);
        break;
      }
      completed[static_cast<size_t>(r)] = 1;
    }
  };

  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  CycleCensus census;
  census.max_len = options.max_len;
  for (int r = 0; r < n; ++r) {
    if (!completed[static_cast<size_t>(r)]) continue;
    for (int len = 3; len <= options.max_len; ++len) {
      long long c = per_root[static_cast<size_t>(r)][static_cast<size_t>(len)];
      if (c > 0) {
        census.counts[len] += c;
        census.total += c;
      }
    }
  }
  if (exceeded.load()) throw BudgetExceededError("count_cycles: step budget exceeded", census);
  return census;
}

inline CycleCensus count_cycles(const Graph& g, int max_len) {
  return count_cycles(g, CensusOptions{max_len, 1, 0});
}

/// Every simple cycle of length <= max_len exactly once, in lexicographic
/// order of the canonical node sequence.
template <typename Visit>
inline void for_each_cycle(const Graph& g, int max_len, Visit&& visit) {
  if (max_len < 3) throw std::invalid_argument("for_each_cycle: need max_len >= 3");
  detail::CycleSearch search(g, max_len);
  for (int r = 0; r < g.node_count(); ++r)
    search.run_root(
        r, [&visit](const std::vector<int>& path) { visit(CanonicalCycle{path}); }, nullptr,
        nullptr);
}

inline std::vector<CanonicalCycle> enumerate_cycles(const Graph& g, int max_len) {
  std::vector<CanonicalCycle> out;
  for_each_cycle(g, max_len, [&out](CanonicalCycle c) { out.push_back(std::move(c)); });
  return out;
}

/// Agreement test between the backtracking census and the closed-walk trace
/// identity at the girth: every closed g-walk either traverses a g-cycle (2g
/// walks per cycle) or backtrack-reduces to nothing, so
/// N_g = (tr(A^g) - #reducible closed g-walks) / 2g.
struct CrossCheck {
  enum class Verdict { Agree, Disagree, Inconclusive };

  Verdict verdict = Verdict::Inconclusive;
  mpz_class trace;
  mpz_class tree_walks;
  mpz_class cycles_from_trace;
  long long cycles_from_census = 0;
};

namespace detail {

/// Closed k-walks from root whose backtrack reduction is empty: a step to the
/// parent of the reduced path pops, any other step pushes. Equivalently,
/// closed walks at a fixed lift of root in the universal cover.
inline long long reducible_closed_walks_from(const Graph& g, int root, int k) {
  std::vector<int> reduced{root};
  long long count = 0;
  auto dfs = [&](auto&& self, int remaining) -> void {
    const int height = static_cast<int>(reduced.size()) - 1;
    if (remaining == 0) {
      if (height == 0) ++count;
      return;
    }
    if (height > remaining || (remaining - height) % 2 != 0) return;
    int current = reduced.back();
    int parent = height > 0 ? reduced[reduced.size() - 2] : -1;
    for (int v : g.neighbors(current)) {
      if (v == parent) {
        reduced.pop_back();
        self(self, remaining - 1);
        reduced.push_back(current);
      } else {
        reduced.push_back(v);
        self(self, remaining - 1);
        reduced.pop_back();
      }
    }
  };
  dfs(dfs, k);
  return count;
}

}  // namespace detail

/// Requires k to equal the (finite) girth. Implemented for k <= 8; larger
/// girths report Inconclusive rather than an uncertain verdict.
inline CrossCheck census_cross_check(const Graph& g, int k) {
  std::optional<int> gg = girth(g);
  if (!gg.has_value()) throw std::invalid_argument("census_cross_check: graph is acyclic");
  if (*gg != k)
    throw std::invalid_argument("census_cross_check: k=" + std::to_string(k) +
                                " is not the girth " + std::to_string(*gg));
  CrossCheck out;
  out.trace = closed_walk_counts(g, k).trace(k);
  out.cycles_from_census = count_cycles(g, k).count_at(k);
  if (k > 8) return out;                                  // Inconclusive
  if (out.trace > mpz_class(1000000000000L)) return out;  // walk recursion too large

  mpz_class tree(0);
  for (int v = 0; v < g.node_count(); ++v)
    tree += mpz_class(static_cast<long>(detail::reducible_closed_walks_from(g, v, k)));
  out.tree_walks = tree;
  mpz_class numerator = out.trace - tree;
  if (numerator % (2 * k) != 0) {
    out.verdict = CrossCheck::Verdict::Disagree;
    return out;
  }
  out.cycles_from_trace = numerator / (2 * k);
  out.verdict = out.cycles_from_trace == mpz_class(static_cast<long>(out.cycles_from_census))
                    ? CrossCheck::Verdict::Agree
                    : CrossCheck::Verdict::Disagree;
  return out;
}

}  // namespace cospec
