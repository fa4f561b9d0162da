#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "kernels/game.hpp"
#include "kernels/oracle.hpp"

using namespace kernels;

namespace {

Digraph path3() { return Digraph(3, {{1, 2}, {2, 3}}); }

// Plain minimax without any kernel machinery: the player to move wins iff
// some move lands on a losing vertex.
bool minimax_wins(const Digraph& d, int v, std::map<int, bool>& memo) {
  auto it = memo.find(v);
  if (it != memo.end()) return it->second;
  bool wins = false;
  for (int w : d.out(v))
    if (!minimax_wins(d, w, memo)) {
      wins = true;
      break;
    }
  memo[v] = wins;
  return wins;
}

Digraph random_dag(std::mt19937& rng, int max_n) {
  int n = 1 + static_cast<int>(rng() % max_n);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i + 1;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() % 3 == 0) arcs.push_back({perm[i], perm[j]});
  return Digraph(n, std::move(arcs));
}

}  // namespace

TEST_CASE("losing positions on the worked examples") {
  CHECK(losing_positions(Digraph(1, {})) == std::vector<int>{1});
  CHECK(losing_positions(path3()) == std::vector<int>{1, 3});
  CHECK_THROWS_AS(losing_positions(Digraph(3, {{1, 2}, {2, 3}, {3, 1}})),
                  circuit_error);
}

TEST_CASE("losing positions equal the kernel and match minimax") {
  std::mt19937 rng(2718);
  for (int trial = 0; trial < 1000; ++trial) {
    Digraph d = random_dag(rng, 10);
    std::vector<int> losing = losing_positions(d);
    CHECK(losing == dag_kernel(d));
    std::map<int, bool> memo;
    for (int v = 1; v <= d.order(); ++v) {
      bool in_losing = std::binary_search(losing.begin(), losing.end(), v);
      CHECK(in_losing == !minimax_wins(d, v, memo));
      CHECK(first_player_wins(d, v) == minimax_wins(d, v, memo));
    }
  }
}

TEST_CASE("optimal_move picks winning children, smallest label first") {
  CHECK(optimal_move(path3(), 2) == 3);
  CHECK(optimal_move(path3(), 3) == std::nullopt);  // sink

  // star with a chord: kernel is {3}, so from 1 the winning move is 3
  Digraph star(3, {{1, 2}, {1, 3}, {2, 3}});
  CHECK(dag_kernel(star) == std::vector<int>{3});
  CHECK(optimal_move(star, 1) == 3);
  CHECK(optimal_move(star, 2) == 3);

  // from a losing vertex every move loses; the smallest child is returned
  Digraph p4(4, {{1, 2}, {2, 3}, {3, 4}});
  CHECK(optimal_move(p4, 2) == 3);
  std::vector<int> losing = losing_positions(p4);
  CHECK(std::binary_search(losing.begin(), losing.end(), 2));

  CHECK_THROWS_AS(optimal_move(path3(), 9), std::invalid_argument);
}

TEST_CASE("winning moves land on losing positions") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    Digraph d = random_dag(rng, 9);
    std::vector<int> losing = losing_positions(d);
    for (int v = 1; v <= d.order(); ++v) {
      std::optional<int> mv = optimal_move(d, v);
      if (first_player_wins(d, v)) {
        if (d.out(v).empty()) continue;  // unreachable: sinks lose
        REQUIRE(mv.has_value());
        CHECK(std::binary_search(losing.begin(), losing.end(), *mv));
      } else {
        for (int w : d.out(v))
          CHECK_FALSE(std::binary_search(losing.begin(), losing.end(), w));
      }
    }
  }
}

TEST_CASE("first_player_wins basics") {
  CHECK_FALSE(first_player_wins(Digraph(1, {}), 1));
  CHECK(first_player_wins(path3(), 2));
  CHECK_FALSE(first_player_wins(path3(), 1));
  CHECK_THROWS_AS(first_player_wins(path3(), 0), std::invalid_argument);
}

TEST_CASE("green-root fraction at n=3 equals the table value 15/36") {
  long long wins = 0, total = 0;
  enum_directed_trees(3, true, [&](const Digraph& d, int root) {
    ++total;
    wins += first_player_wins(d, root);
  });
  CHECK(total == 36);
  CHECK(wins == 15);  // the green-rooted count at n = 3
}

TEST_CASE("relabeling equivariance") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Digraph d = random_dag(rng, 8);
    int n = d.order();
    std::vector<int> perm(n + 1);
    for (int v = 1; v <= n; ++v) perm[v] = v;
    std::shuffle(perm.begin() + 1, perm.end(), rng);
    std::vector<Arc> relabeled;
    for (auto [u, v] : d.arcs()) relabeled.push_back({perm[u], perm[v]});
    Digraph e(n, std::move(relabeled));
    std::vector<int> mapped;
    for (int v : losing_positions(d)) mapped.push_back(perm[v]);
    std::sort(mapped.begin(), mapped.end());
    CHECK(losing_positions(e) == mapped);
    for (int v = 1; v <= n; ++v)
      CHECK(first_player_wins(d, v) == first_player_wins(e, perm[v]));
  }
}

TEST_CASE("kernel move hint works on digraphs with circuits") {
  Digraph c4(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
  CHECK(kernel_move_hint(c4, {1, 3}, 2) == 3);
  CHECK(kernel_move_hint(c4, {1, 3}, 4) == 1);
  CHECK(kernel_move_hint(c4, {2, 4}, 1) == 2);
  Digraph sink(2, {{1, 2}});
  CHECK(kernel_move_hint(sink, {2}, 2) == std::nullopt);
}
