#ifndef BMWIS_MAXFLOW_HPP
#define BMWIS_MAXFLOW_HPP

#include <cstddef>
#include <vector>

namespace bmwis {

// Dinic max flow over an arbitrary capacity type (long long for the fast
// path, BigInt when scaled weights get large). Level graph + blocking flow.
template <class Cap>
class MaxFlow {
 public:
  explicit MaxFlow(int n) : graph_(n), level_(n), iter_(n) {}

  void add_edge(int from, int to, Cap cap) {
    graph_[from].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, std::move(cap)});
    graph_[to].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, Cap(0)});
  }

  Cap run(int source, int sink) {
    Cap total(0);
    while (build_levels(source, sink)) {
      iter_.assign(iter_.size(), 0);
      while (true) {
        Cap pushed = augment(source, sink, Cap(-1));
        if (pushed == 0) break;
        total += pushed;
      }
    }
    return total;
  }

  // Vertices reachable from `source` in the residual graph (call after run).
  std::vector<bool> source_side(int source) const {
    std::vector<bool> reach(graph_.size(), false);
    std::vector<int> queue{source};
    reach[source] = true;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (int idx : graph_[queue[q]]) {
        const Arc& a = arcs_[idx];
        if (a.cap > 0 && !reach[a.to]) {
          reach[a.to] = true;
          queue.push_back(a.to);
        }
      }
    }
    return reach;
  }

 private:
  struct Arc {
    int to;
    Cap cap;
  };

  bool build_levels(int source, int sink) {
    level_.assign(level_.size(), -1);
    std::vector<int> queue{source};
    level_[source] = 0;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      int u = queue[q];
      for (int idx : graph_[u]) {
        const Arc& a = arcs_[idx];
        if (a.cap > 0 && level_[a.to] == -1) {
          level_[a.to] = level_[u] + 1;
          queue.push_back(a.to);
        }
      }
    }
    return level_[sink] != -1;
  }

  // limit < 0 means unbounded.
  Cap augment(int u, int sink, Cap limit) {
    if (u == sink) return limit;
    for (int& i = iter_[u]; i < static_cast<int>(graph_[u].size()); ++i) {
      int idx = graph_[u][i];
      Arc& a = arcs_[idx];
      if (a.cap <= 0 || level_[a.to] != level_[u] + 1) continue;
      Cap next = (limit < 0 || a.cap < limit) ? a.cap : limit;
      Cap pushed = augment(a.to, sink, next);
      if (pushed > 0) {
        a.cap -= pushed;
        arcs_[idx ^ 1].cap += pushed;
        return pushed;
      }
    }
    level_[u] = -1;
    return Cap(0);
  }

  std::vector<std::vector<int>> graph_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

}  // namespace bmwis

#endif
