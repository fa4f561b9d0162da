#pragma once

// Independent brute-force ground truth: exhaustive streams of labeled
// directed trees (label-sequence bijection times edge orientations) and of
// unicyclic digraphs (all n-subsets of ordered pairs, filtered to weak
// connectivity), with well-coloring counts, plus the harness comparing them
// against every counting series.

#include <gmpxx.h>

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "kernels/digraph.hpp"

namespace kernels {

// Exact counts for one family at one size. Labeled counting throughout;
// graphs are weighted by their number of well-colorings where noted.
struct CountReport {
  int n = 0;
  std::string family;
  long long total_graphs = 0;
  long long total_well_colorings = 0;
  long long graphs_with_kernel = 0;
  long long graphs_with_two_kernels = 0;
};

std::string to_json_line(const CountReport& r);

// Every labeled tree on n vertices (1 <= n <= 9), each of the 2^{n-1} arc
// orientations. rooted=true repeats each digraph with root marks 1..n;
// otherwise root is passed as 0. Deterministic order.
void enum_directed_trees(int n, bool rooted,
                         const std::function<void(const Digraph&, int)>& visit);

// Every weakly connected digraph with n vertices and n arcs (2 <= n <= 7),
// i.e. exactly one cycle of the underlying multigraph. Deterministic order.
void enum_unicyclic(int n, const std::function<void(const Digraph&)>& visit);

struct WellColoringCount {
  long long colorings = 0;
  long long kernels = 0;  // equal by the kernel <-> well-coloring bijection
};

// Kernel count via enumerate_kernels; independently re-checked against the
// 2^n coloring scan for n <= 12. Requires n <= 30.
WellColoringCount count_well_colorings(const Digraph& d);

// Uniform rooted directed tree: uniform label sequence, uniform orientation
// bits, uniform root.
Digraph random_directed_tree(int n, std::mt19937& rng, int* root);

enum class OracleFamily { Trees, Unicyclic };

struct SeriesMismatch {
  std::string family;
  std::string series;
  int n = 0;
  mpz_class expected;  // oracle count
  mpz_class got;       // series count
};

struct VerifyResult {
  std::vector<CountReport> reports;
  std::vector<SeriesMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// Compares oracle counts to n! [z^n] of the matching series for every
// n <= n_max: the six tree series for Trees; U, V, D, F, G for Unicyclic.
// jobs > 1 parallelizes the unicyclic scan (partitioned on the first arc
// index, deterministic reduction); jobs = 0 picks a default.
VerifyResult verify_family(OracleFamily family, int n_max, int jobs = 0);

int default_jobs();  // KERNELS_JOBS env var, else hardware concurrency

}  // namespace kernels
