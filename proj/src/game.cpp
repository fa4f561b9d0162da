#include "kernels/game.hpp"

#include <algorithm>

#include "kernels/series.hpp"  // internal_error

namespace kernels {

std::vector<int> losing_positions(const Digraph& d) {
  if (d.order() < 1) return {};
  std::vector<int> kernel = dag_kernel(d);  // rejects circuits
  // Backward induction, children first: v loses iff no move reaches a
  // losing vertex.
  std::vector<char> losing(d.order() + 1, 0);
  std::vector<int> pending(d.order() + 1, 0);
  std::vector<int> queue;
  for (int v = 1; v <= d.order(); ++v) {
    pending[v] = static_cast<int>(d.out(v).size());
    if (pending[v] == 0) queue.push_back(v);
  }
  for (size_t i = 0; i < queue.size(); ++i) {
    int v = queue[i];
    bool any_losing_child = false;
    for (int w : d.out(v))
      if (losing[w]) { any_losing_child = true; break; }
    losing[v] = !any_losing_child;
    for (int u : d.in(v))
      if (--pending[u] == 0) queue.push_back(u);
  }
  std::vector<int> result;
  for (int v = 1; v <= d.order(); ++v)
    if (losing[v]) result.push_back(v);
  if (result != kernel)
    throw internal_error("losing positions differ from the kernel");
  return result;
}

std::optional<int> optimal_move(const Digraph& d, int v) {
  if (v < 1 || v > d.order())
    throw std::invalid_argument("vertex out of range");
  std::vector<int> losing = losing_positions(d);
  const std::vector<int>& children = d.out(v);  // sorted ascending
  if (children.empty()) return std::nullopt;
  for (int w : children)
    if (std::binary_search(losing.begin(), losing.end(), w)) return w;
  return children.front();  // every move loses; smallest label for replay
}

bool first_player_wins(const Digraph& d, int v0) {
  if (v0 < 1 || v0 > d.order())
    throw std::invalid_argument("vertex out of range");
  std::vector<int> losing = losing_positions(d);
  return !std::binary_search(losing.begin(), losing.end(), v0);
}

std::optional<int> kernel_move_hint(const Digraph& d,
                                    const std::vector<int>& kernel, int v) {
  if (v < 1 || v > d.order())
    throw std::invalid_argument("vertex out of range");
  const std::vector<int>& children = d.out(v);
  if (children.empty()) return std::nullopt;
  for (int w : children)
    if (std::binary_search(kernel.begin(), kernel.end(), w)) return w;
  return children.front();
}

}  // namespace kernels
