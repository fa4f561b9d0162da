#include "kernels/digraph.hpp"

#include <algorithm>
#include <numeric>

namespace kernels {

Coloring::Coloring(int n, const std::vector<int>& red_set)
    : color_(n + 1, Color::Green) {
  for (int v : red_set) {
    if (v < 1 || v > n)
      throw std::invalid_argument("red set contains vertex " +
                                  std::to_string(v) + " outside 1.." +
                                  std::to_string(n));
    color_[v] = Color::Red;
  }
}

std::vector<int> Coloring::red_vertices() const {
  std::vector<int> r;
  for (int v = 1; v <= size(); ++v)
    if (color_[v] == Color::Red) r.push_back(v);
  return r;
}

Digraph::Digraph(int n, std::vector<Arc> arcs)
    : n_(n), arcs_(std::move(arcs)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (auto [u, v] : arcs_) {
    if (u < 1 || u > n_ || v < 1 || v > n_)
      throw std::invalid_argument("arc (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") leaves 1.." +
                                  std::to_string(n_));
    if (u == v)
      throw std::invalid_argument("loop at vertex " + std::to_string(u));
  }
  std::sort(arcs_.begin(), arcs_.end());
  if (std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end())
    throw std::invalid_argument("parallel same-direction arcs");
  out_.assign(n_ + 1, {});
  in_.assign(n_ + 1, {});
  for (auto [u, v] : arcs_) {
    out_[u].push_back(v);
    in_[v].push_back(u);
  }
}

bool Digraph::has_arc(int u, int v) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), Arc{u, v});
}

bool is_well_colored(const Digraph& d, const Coloring& c) {
  if (c.size() != d.order())
    throw std::invalid_argument("coloring is over " + std::to_string(c.size()) +
                                " vertices, digraph has " +
                                std::to_string(d.order()));
  for (int v = 1; v <= d.order(); ++v) {
    bool red_child = false;
    for (int w : d.out(v))
      if (c[w] == Color::Red) { red_child = true; break; }
    if (c[v] == Color::Red ? red_child : !red_child) return false;
  }
  return true;
}

bool is_kernel(const Digraph& d, const std::vector<int>& k) {
  if (k.empty()) return false;
  std::vector<char> in_k(d.order() + 1, 0);
  for (int v : k) {
    if (v < 1 || v > d.order())
      throw std::invalid_argument("kernel candidate contains vertex " +
                                  std::to_string(v) + " outside 1.." +
                                  std::to_string(d.order()));
    in_k[v] = 1;
  }
  for (auto [u, v] : d.arcs())
    if (in_k[u] && in_k[v]) return false;  // not independent
  for (int v = 1; v <= d.order(); ++v) {
    if (in_k[v]) continue;
    bool dominated = false;
    for (int w : d.out(v))
      if (in_k[w]) { dominated = true; break; }
    if (!dominated) return false;
  }
  return true;
}

namespace {

// Children-first order: every vertex appears after all of its out-neighbors.
// Throws circuit_error if none exists.
std::vector<int> children_first_order(const Digraph& d) {
  int n = d.order();
  std::vector<int> pending(n + 1);
  std::vector<int> order;
  order.reserve(n);
  std::vector<int> queue;
  for (int v = 1; v <= n; ++v) {
    pending[v] = static_cast<int>(d.out(v).size());
    if (pending[v] == 0) queue.push_back(v);
  }
  for (size_t i = 0; i < queue.size(); ++i) {
    int v = queue[i];
    order.push_back(v);
    for (int u : d.in(v))
      if (--pending[u] == 0) queue.push_back(u);
  }
  if (static_cast<int>(order.size()) == n) return order;

  // Leftover vertices all keep an unprocessed out-neighbor; walking those
  // arcs must revisit a vertex and closes a circuit.
  std::vector<char> left(n + 1, 1);
  for (int v : order) left[v] = 0;
  int start = 1;
  while (!left[start]) ++start;
  std::vector<int> walk;
  std::vector<int> seen_at(n + 1, -1);
  int v = start;
  while (seen_at[v] < 0) {
    seen_at[v] = static_cast<int>(walk.size());
    walk.push_back(v);
    for (int w : d.out(v))
      if (left[w]) { v = w; break; }
  }
  std::vector<int> witness(walk.begin() + seen_at[v], walk.end());
  std::string msg = "not a DAG: circuit";
  for (int x : witness) msg += " " + std::to_string(x);
  throw circuit_error(msg, witness);
}

}  // namespace

std::vector<int> dag_kernel(const Digraph& d) {
  if (d.order() < 1) throw std::invalid_argument("empty digraph has no kernel");
  std::vector<int> order = children_first_order(d);
  std::vector<char> red(d.order() + 1, 0);
  for (int v : order) {
    bool red_child = false;
    for (int w : d.out(v))
      if (red[w]) { red_child = true; break; }
    red[v] = !red_child;
  }
  std::vector<int> kernel;
  for (int v = 1; v <= d.order(); ++v)
    if (red[v]) kernel.push_back(v);
  return kernel;
}

namespace {

constexpr signed char kUnset = 0, kRed = 1, kGreen = 2;

struct SearchState {
  std::vector<signed char> col;
  std::vector<int> unset_out;       // out-neighbors not yet colored
  std::vector<char> has_red_child;  // some out-neighbor already red
};

// Color v with c and run unit propagation. Returns false on contradiction.
bool assign(const Digraph& d, SearchState& st, int v0, signed char c0) {
  std::vector<std::pair<int, signed char>> stack{{v0, c0}};
  // Green u still missing a red child and down to one undecided out-neighbor:
  // that neighbor is forced red.
  auto force_last_unset_red = [&](int u) {
    for (int w : d.out(u))
      if (st.col[w] == kUnset) { stack.emplace_back(w, kRed); return; }
  };
  while (!stack.empty()) {
    auto [v, c] = stack.back();
    stack.pop_back();
    if (st.col[v] == c) continue;
    if (st.col[v] != kUnset) return false;
    st.col[v] = c;
    if (c == kRed) {
      // Independence: no arc may join two reds, in either direction.
      for (int w : d.out(v)) stack.emplace_back(w, kGreen);
      for (int u : d.in(v)) {
        st.has_red_child[u] = 1;
        stack.emplace_back(u, kGreen);
      }
    } else if (!st.has_red_child[v]) {
      if (st.unset_out[v] == 0) return false;  // green and undominatable
      if (st.unset_out[v] == 1) force_last_unset_red(v);
    }
    for (int u : d.in(v)) {
      --st.unset_out[u];
      if (st.col[u] == kGreen && !st.has_red_child[u]) {
        if (st.unset_out[u] == 0) return false;
        if (st.unset_out[u] == 1) force_last_unset_red(u);
      }
    }
  }
  return true;
}

void search(const Digraph& d, const SearchState& st,
            std::vector<std::vector<int>>& found) {
  // Branch vertex: maximum out-degree, then smallest label.
  int branch = 0, best = -1;
  for (int v = 1; v <= d.order(); ++v)
    if (st.col[v] == kUnset && static_cast<int>(d.out(v).size()) > best) {
      best = static_cast<int>(d.out(v).size());
      branch = v;
    }
  if (branch == 0) {
    std::vector<int> kernel;
    for (int v = 1; v <= d.order(); ++v)
      if (st.col[v] == kRed) kernel.push_back(v);
    found.push_back(std::move(kernel));
    return;
  }
  for (signed char c : {kRed, kGreen}) {
    SearchState branch_state = st;
    if (assign(d, branch_state, branch, c)) search(d, branch_state, found);
  }
}

}  // namespace

std::vector<std::vector<int>> enumerate_kernels(const Digraph& d) {
  if (d.order() < 1) return {};
  SearchState st;
  st.col.assign(d.order() + 1, kUnset);
  st.unset_out.assign(d.order() + 1, 0);
  st.has_red_child.assign(d.order() + 1, 0);
  for (int v = 1; v <= d.order(); ++v)
    st.unset_out[v] = static_cast<int>(d.out(v).size());
  std::vector<std::vector<int>> found;
  search(d, st, found);
  std::sort(found.begin(), found.end());
  return found;
}

const char* family_name(Family f) {
  switch (f) {
    case Family::Tree: return "Tree";
    case Family::Dag: return "Dag";
    case Family::Unicircuit: return "Unicircuit";
    case Family::Unicycle: return "Unicycle";
    case Family::Other: return "Other";
  }
  return "?";
}

namespace {

int weak_components(const Digraph& d) {
  std::vector<int> parent(d.order() + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = d.order();
  for (auto [u, v] : d.arcs()) {
    int a = find(u), b = find(v);
    if (a != b) { parent[a] = b; --comps; }
  }
  return comps;
}

// Peel underlying-degree-<=1 vertices; the survivors are the unique cycle.
// True iff the surviving arcs form a directed circuit (a digon qualifies).
bool unique_cycle_is_circuit(const Digraph& d) {
  int n = d.order();
  std::vector<int> deg(n + 1, 0);
  for (auto [u, v] : d.arcs()) { ++deg[u]; ++deg[v]; }
  std::vector<char> alive(n + 1, 1);
  std::vector<int> queue;
  for (int v = 1; v <= n; ++v)
    if (deg[v] <= 1) queue.push_back(v);
  for (size_t i = 0; i < queue.size(); ++i) {
    int v = queue[i];
    alive[v] = 0;
    for (int w : d.out(v))
      if (alive[w] && --deg[w] == 1) queue.push_back(w);
    for (int w : d.in(v))
      if (alive[w] && --deg[w] == 1) queue.push_back(w);
  }
  std::vector<int> core_out(n + 1, 0), core_in(n + 1, 0);
  for (auto [u, v] : d.arcs())
    if (alive[u] && alive[v]) { ++core_out[u]; ++core_in[v]; }
  for (int v = 1; v <= n; ++v)
    if (alive[v] && (core_out[v] != 1 || core_in[v] != 1)) return false;
  return true;
}

bool is_dag(const Digraph& d) {
  try {
    (void)dag_kernel(d);
    return true;
  } catch (const circuit_error&) {
    return false;
  }
}

}  // namespace

FamilyKind classify(const Digraph& d) {
  if (d.order() < 1) throw std::invalid_argument("classify requires n >= 1");
  FamilyKind k;
  int comps = weak_components(d);
  k.weakly_connected = (comps == 1);
  k.cycle_count = d.arc_count() - d.order() + comps;
  if (k.weakly_connected && k.cycle_count == 1)
    k.unique_cycle_is_circuit = unique_cycle_is_circuit(d);
  if (k.weakly_connected && d.arc_count() == d.order() - 1)
    k.family = Family::Tree;
  else if (k.unique_cycle_is_circuit.has_value())
    k.family = *k.unique_cycle_is_circuit ? Family::Unicircuit
                                          : Family::Unicycle;
  else if (is_dag(d))
    k.family = Family::Dag;
  else
    k.family = Family::Other;
  return k;
}

}  // namespace kernels
