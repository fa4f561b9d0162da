#include "kernels/oracle.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <thread>

#include "kernels/generating_functions.hpp"
#include "kernels/series.hpp"

namespace kernels {

std::string to_json_line(const CountReport& r) {
  nlohmann::json j{{"n", r.n},
                   {"family", r.family},
                   {"total_graphs", r.total_graphs},
                   {"total_well_colorings", r.total_well_colorings},
                   {"graphs_with_kernel", r.graphs_with_kernel},
                   {"graphs_with_two_kernels", r.graphs_with_two_kernels}};
  return j.dump();
}

int default_jobs() {
  if (const char* env = std::getenv("KERNELS_JOBS")) {
    int j = std::atoi(env);
    if (j >= 1) return j;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

namespace {

// Decode a label sequence in [1..n]^{n-2} into tree edges (n >= 2):
// repeatedly join the smallest unused leaf to the next sequence entry.
// n is tiny, so the linear leaf scan per step is fine.
std::vector<Arc> tree_edges(int n, const std::vector<int>& seq) {
  std::vector<Arc> edges;
  edges.reserve(n - 1);
  std::vector<int> deg(n + 1, 1);
  for (int x : seq) ++deg[x];
  std::vector<char> used(n + 1, 0);
  for (int x : seq) {
    for (int v = 1; v <= n; ++v)
      if (deg[v] == 1 && !used[v]) {
        used[v] = 1;
        edges.emplace_back(v, x);
        --deg[x];
        break;
      }
  }
  int u = 0, v = 0;
  for (int w = 1; w <= n; ++w)
    if (deg[w] == 1 && !used[w]) (u == 0 ? u : v) = w;
  edges.emplace_back(u, v);
  return edges;
}

}  // namespace

void enum_directed_trees(
    int n, bool rooted, const std::function<void(const Digraph&, int)>& visit) {
  if (n < 1 || n > 9)
    throw std::invalid_argument("tree enumeration supports 1 <= n <= 9");
  if (n == 1) {
    Digraph d(1, {});
    visit(d, rooted ? 1 : 0);
    return;
  }
  std::vector<int> seq(n - 2, 1);
  while (true) {
    std::vector<Arc> edges = tree_edges(n, seq);
    for (unsigned bits = 0; bits < (1u << (n - 1)); ++bits) {
      std::vector<Arc> arcs(edges);
      for (int i = 0; i < n - 1; ++i)
        if (bits >> i & 1) std::swap(arcs[i].first, arcs[i].second);
      Digraph d(n, std::move(arcs));
      if (rooted)
        for (int root = 1; root <= n; ++root) visit(d, root);
      else
        visit(d, 0);
    }
    int i = static_cast<int>(seq.size()) - 1;
    while (i >= 0 && seq[i] == n) seq[i--] = 1;
    if (i < 0) break;
    ++seq[i];
  }
}

Digraph random_directed_tree(int n, std::mt19937& rng, int* root) {
  if (n < 1) throw std::invalid_argument("tree size must be positive");
  // Unbiased bounded draw (Lemire); keeps transcripts reproducible across
  // platforms, unlike std::uniform_int_distribution.
  auto bounded = [&rng](std::uint32_t k) -> std::uint32_t {
    std::uint64_t m = static_cast<std::uint64_t>(rng()) * k;
    auto lo = static_cast<std::uint32_t>(m);
    if (lo < k) {
      std::uint32_t t = -k % k;
      while (lo < t) {
        m = static_cast<std::uint64_t>(rng()) * k;
        lo = static_cast<std::uint32_t>(m);
      }
    }
    return static_cast<std::uint32_t>(m >> 32);
  };
  std::vector<Arc> arcs;
  if (n >= 2) {
    std::vector<int> seq(n - 2);
    for (int& x : seq) x = 1 + static_cast<int>(bounded(n));
    arcs = tree_edges(n, seq);
    for (auto& [u, v] : arcs)
      if (bounded(2)) std::swap(u, v);
  }
  if (root) *root = 1 + static_cast<int>(bounded(n));
  return Digraph(n, std::move(arcs));
}

namespace {

constexpr int kMaxUnicyclic = 7;

std::vector<Arc> ordered_pairs(int n) {
  std::vector<Arc> pairs;
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v)
      if (u != v) pairs.emplace_back(u, v);
  return pairs;
}

bool weakly_connected_arcs(int n, const Arc* arcs, int m) {
  int parent[kMaxUnicyclic + 1];
  for (int v = 1; v <= n; ++v) parent[v] = v;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = n;
  for (int i = 0; i < m; ++i) {
    int a = find(arcs[i].first), b = find(arcs[i].second);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps == 1;
}

// Number of kernels via a branchless scan of all 2^n red sets: R is a
// kernel iff union_out(R) misses R (independence) and union_in(R) covers
// the complement (domination).
int kernel_count_masks(int n, const unsigned* out_mask,
                       const unsigned* in_mask) {
  unsigned full = (1u << n) - 1;
  unsigned uout[1 << kMaxUnicyclic], uin[1 << kMaxUnicyclic];
  uout[0] = uin[0] = 0;
  int count = 0;
  for (unsigned r = 1; r <= full; ++r) {
    unsigned low = r & (r - 1);
    int i = std::countr_zero(r);
    uout[r] = uout[low] | out_mask[i];
    uin[r] = uin[low] | in_mask[i];
    count += (uout[r] & r) == 0 && (~r & full & ~uin[r]) == 0;
  }
  return count;
}

// True iff the unique cycle left after peeling underlying leaves is a
// directed circuit.
bool circuit_core(int n, const Arc* arcs, int m) {
  int deg[kMaxUnicyclic + 1] = {};
  for (int i = 0; i < m; ++i) {
    ++deg[arcs[i].first];
    ++deg[arcs[i].second];
  }
  bool alive[kMaxUnicyclic + 1];
  for (int v = 1; v <= n; ++v) alive[v] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 1; v <= n; ++v)
      if (alive[v] && deg[v] <= 1) {
        alive[v] = false;
        changed = true;
        for (int i = 0; i < m; ++i) {
          if (arcs[i].first == v && alive[arcs[i].second]) --deg[arcs[i].second];
          if (arcs[i].second == v && alive[arcs[i].first]) --deg[arcs[i].first];
        }
      }
  }
  int core_out[kMaxUnicyclic + 1] = {}, core_in[kMaxUnicyclic + 1] = {};
  for (int i = 0; i < m; ++i)
    if (alive[arcs[i].first] && alive[arcs[i].second]) {
      ++core_out[arcs[i].first];
      ++core_in[arcs[i].second];
    }
  for (int v = 1; v <= n; ++v)
    if (alive[v] && (core_out[v] != 1 || core_in[v] != 1)) return false;
  return true;
}

struct UniStats {
  long long graphs = 0, colorings = 0, with_kernel = 0, two_kernels = 0;
  long long circuit_graphs = 0, circuit_colorings = 0,
            circuit_with_kernel = 0, circuit_two_kernels = 0;

  UniStats& operator+=(const UniStats& o) {
    graphs += o.graphs;
    colorings += o.colorings;
    with_kernel += o.with_kernel;
    two_kernels += o.two_kernels;
    circuit_graphs += o.circuit_graphs;
    circuit_colorings += o.circuit_colorings;
    circuit_with_kernel += o.circuit_with_kernel;
    circuit_two_kernels += o.circuit_two_kernels;
    return *this;
  }
};

// All n-subsets of ordered pairs whose smallest member is `first`.
void scan_with_first(int n, const std::vector<Arc>& pairs, int first,
                     UniStats& stats) {
  int p = static_cast<int>(pairs.size());
  std::vector<int> idx(n);
  idx[0] = first;
  for (int i = 1; i < n; ++i) idx[i] = first + i;
  if (idx[n - 1] >= p) return;
  Arc arcs[kMaxUnicyclic];
  while (true) {
    for (int i = 0; i < n; ++i) arcs[i] = pairs[idx[i]];
    if (weakly_connected_arcs(n, arcs, n)) {
      unsigned out_mask[kMaxUnicyclic] = {}, in_mask[kMaxUnicyclic] = {};
      for (int i = 0; i < n; ++i) {
        out_mask[arcs[i].first - 1] |= 1u << (arcs[i].second - 1);
        in_mask[arcs[i].second - 1] |= 1u << (arcs[i].first - 1);
      }
      int k = kernel_count_masks(n, out_mask, in_mask);
      bool circuit = circuit_core(n, arcs, n);
      ++stats.graphs;
      stats.colorings += k;
      stats.with_kernel += k >= 1;
      stats.two_kernels += k == 2;
      if (circuit) {
        ++stats.circuit_graphs;
        stats.circuit_colorings += k;
        stats.circuit_with_kernel += k >= 1;
        stats.circuit_two_kernels += k == 2;
      }
    }
    // next combination with idx[0] pinned
    int i = n - 1;
    while (i >= 1 && idx[i] == p - n + i) --i;
    if (i < 1) break;
    ++idx[i];
    for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }
}

UniStats scan_unicyclic(int n, int jobs) {
  std::vector<Arc> pairs = ordered_pairs(n);
  int p = static_cast<int>(pairs.size());
  int firsts = p - n + 1;
  std::vector<UniStats> partial(firsts);
  if (jobs <= 1) {
    for (int f = 0; f < firsts; ++f) scan_with_first(n, pairs, f, partial[f]);
  } else {
    std::atomic<int> next{0};
    auto worker = [&] {
      for (int f = next.fetch_add(1); f < firsts; f = next.fetch_add(1))
        scan_with_first(n, pairs, f, partial[f]);
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  UniStats total;
  for (const UniStats& s : partial) total += s;  // fixed order, deterministic
  return total;
}

}  // namespace

void enum_unicyclic(int n, const std::function<void(const Digraph&)>& visit) {
  if (n < 2 || n > kMaxUnicyclic)
    throw std::invalid_argument("unicyclic enumeration supports 2 <= n <= 7");
  std::vector<Arc> pairs = ordered_pairs(n);
  int p = static_cast<int>(pairs.size());
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  Arc arcs[kMaxUnicyclic];
  while (true) {
    for (int i = 0; i < n; ++i) arcs[i] = pairs[idx[i]];
    if (weakly_connected_arcs(n, arcs, n))
      visit(Digraph(n, std::vector<Arc>(arcs, arcs + n)));
    int i = n - 1;
    while (i >= 0 && idx[i] == p - n + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }
}

WellColoringCount count_well_colorings(const Digraph& d) {
  int n = d.order();
  if (n > 30)
    throw std::invalid_argument("count_well_colorings supports n <= 30");
  long long kernels = static_cast<long long>(enumerate_kernels(d).size());
  if (n <= 12) {
    long long scan = 0;
    Coloring c(n);
    for (unsigned red = 0; red < (1u << n); ++red) {
      for (int v = 1; v <= n; ++v)
        c[v] = (red >> (v - 1)) & 1 ? Color::Red : Color::Green;
      scan += is_well_colored(d, c);
    }
    if (scan != kernels)
      throw internal_error("coloring scan disagrees with kernel enumeration");
  }
  return {kernels, kernels};
}

namespace {

struct TreeStats {
  long long trees = 0;      // oriented trees
  long long red_roots = 0;  // summed red vertices = red-rooted count
  long long vertex1_red = 0;
};

TreeStats scan_trees(int n) {
  TreeStats s;
  enum_directed_trees(n, false, [&](const Digraph& d, int) {
    std::vector<int> kernel = dag_kernel(d);
    ++s.trees;
    s.red_roots += static_cast<long long>(kernel.size());
    s.vertex1_red += !kernel.empty() && kernel.front() == 1;
  });
  return s;
}

void compare(std::vector<SeriesMismatch>& out, const std::string& family,
             const std::string& series, int n, long long oracle,
             const mpz_class& from_series) {
  mpz_class oracle_z(static_cast<long>(oracle));
  if (from_series != oracle_z)
    out.push_back({family, series, n, oracle_z, from_series});
}

}  // namespace

VerifyResult verify_family(OracleFamily family, int n_max, int jobs) {
  VerifyResult result;
  if (jobs <= 0) jobs = default_jobs();
  if (family == OracleFamily::Trees) {
    if (n_max < 1 || n_max > 9)
      throw std::invalid_argument("tree verification supports n_max <= 9");
    TreeFamily rooted = tree_system(n_max);
    UnrootedTreeFamily unrooted = unrooted_trees(n_max);
    for (int n = 1; n <= n_max; ++n) {
      TreeStats s = scan_trees(n);
      compare(result.mismatches, "trees", "T", n, s.trees * n,
              rooted.t.count(n));
      compare(result.mismatches, "trees", "Tr", n, s.red_roots,
              rooted.tr.count(n));
      compare(result.mismatches, "trees", "Tg", n, s.trees * n - s.red_roots,
              rooted.tg.count(n));
      compare(result.mismatches, "trees", "Tunr", n, s.trees,
              unrooted.t.count(n));
      compare(result.mismatches, "trees", "Trunr", n, s.vertex1_red,
              unrooted.tr.count(n));
      compare(result.mismatches, "trees", "Tgunr", n, s.trees - s.vertex1_red,
              unrooted.tg.count(n));
      result.reports.push_back({n, "trees", s.trees, s.trees, s.trees, 0});
    }
  } else {
    if (n_max < 2 || n_max > kMaxUnicyclic)
      throw std::invalid_argument("unicyclic verification supports n_max <= 7");
    Egf u = unicircuit_series(n_max);
    Egf v = unicycle_series(n_max);
    Egf d = two_kernel_series(n_max);
    UncoloredSeries fg = uncolored_series(n_max);
    for (int n = 2; n <= n_max; ++n) {
      UniStats s = scan_unicyclic(n, jobs);
      TreeStats trees = scan_trees(n);
      compare(result.mismatches, "unicyclic", "U", n,
              trees.trees + s.circuit_colorings, u.count(n));
      compare(result.mismatches, "unicyclic", "V", n,
              trees.trees + s.colorings, v.count(n));
      compare(result.mismatches, "unicyclic", "D", n, s.two_kernels,
              d.count(n));
      compare(result.mismatches, "unicyclic", "F", n,
              trees.trees + s.circuit_graphs, fg.unicircuit.count(n));
      compare(result.mismatches, "unicyclic", "G", n, trees.trees + s.graphs,
              fg.unicycle.count(n));
      result.reports.push_back({n, "unicyclic", s.graphs, s.colorings,
                                s.with_kernel, s.two_kernels});
      result.reports.push_back({n, "unicircuit", s.circuit_graphs,
                                s.circuit_colorings, s.circuit_with_kernel,
                                s.circuit_two_kernels});
    }
  }
  return result;
}

}  // namespace kernels
