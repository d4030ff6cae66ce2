#include <algorithm>
#include <limits>
#include <stdexcept>

#include "stochstab/graph.hpp"

namespace stochstab {

// Iterative form of recursive StrongConnect. A frame resumes at the arc
// after the one that spawned its child, and folds the child's lowlink and
// sink flag back in before continuing.
std::vector<VertexSet> sink_sccs(std::size_t vertex_count, std::span<const Arc> arcs) {
  constexpr std::size_t kUndefined = std::numeric_limits<std::size_t>::max();

  std::vector<std::vector<std::size_t>> out(vertex_count);
  for (const auto& [u, v] : arcs) {
    if (u >= vertex_count || v >= vertex_count) throw std::out_of_range("arc endpoint out of range");
    out[u].push_back(v);
  }

  std::vector<std::size_t> index(vertex_count, kUndefined);
  std::vector<std::size_t> lowlink(vertex_count, 0);
  std::vector<char> on_stack(vertex_count, 0);
  std::vector<char> sink(vertex_count, 1);
  std::vector<std::size_t> stack;
  std::size_t next_index = 0;
  std::vector<VertexSet> result;

  struct Frame {
    std::size_t v;
    std::size_t next_arc;
  };
  std::vector<Frame> calls;

  auto enter = [&](std::size_t v) {
    index[v] = lowlink[v] = next_index++;
    stack.push_back(v);
    on_stack[v] = 1;
    calls.push_back({v, 0});
  };

  for (std::size_t root = 0; root < vertex_count; ++root) {
    if (index[root] != kUndefined) continue;
    enter(root);
    while (!calls.empty()) {
      Frame& f = calls.back();
      const std::size_t v = f.v;
      if (f.next_arc < out[v].size()) {
        const std::size_t w = out[v][f.next_arc++];
        if (index[w] == kUndefined) {
          enter(w);
        } else if (on_stack[w]) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        } else {
          sink[v] = 0;  // w lies in an SCC popped earlier, below v's
        }
        continue;
      }

      if (lowlink[v] == index[v]) {
        VertexSet component;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          component.push_back(w);
        } while (w != v);
        if (sink[v]) {
          sink[v] = 0;
          std::sort(component.begin(), component.end());
          result.push_back(std::move(component));
        }
      }

      calls.pop_back();
      if (!calls.empty()) {
        const std::size_t parent = calls.back().v;
        lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
        sink[parent] = sink[parent] && sink[v];
      }
    }
  }

  std::sort(result.begin(), result.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
  return result;
}

}  // namespace stochstab
