#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kernels/generating_functions.hpp"
#include "kernels/series.hpp"

using namespace kernels;

namespace {

std::vector<long> prefix_counts(const Egf& s, int upto) {
  std::vector<long> out;
  for (int n = 1; n <= upto; ++n) out.push_back(s.count(n).get_si());
  return out;
}

Egf random_series(std::mt19937& rng, int order, bool zero_const) {
  Egf f(order);
  for (int n = zero_const ? 1 : 0; n <= order; ++n) {
    long num = static_cast<long>(rng() % 19) - 9;
    long den = 1 + static_cast<long>(rng() % 7);
    f.coeff(n) = mpq_class(num, den);
    f.coeff(n).canonicalize();
  }
  return f;
}

}  // namespace

TEST_CASE("engine identities on random rational series") {
  std::mt19937 rng(123);
  for (int trial = 0; trial < 25; ++trial) {
    Egf f = random_series(rng, 20, true);
    Egf one_plus_f = f;
    one_plus_f.coeff(0) = 1;
    CHECK(exp_series(log1p_series(f)) == one_plus_f);
    Egf expm1 = exp_series(f);
    expm1.coeff(0) = 0;
    CHECK(log1p_series(expm1) == f);
    CHECK(antiderivative(derivative(f)) == f);  // f(0) = 0 here
    Egf g = random_series(rng, 20, false);
    if (g.coeff(0) != 0) CHECK(divide(f * g, g) == f);
  }
}

TEST_CASE("composition against its reversion is the identity") {
  std::mt19937 rng(321);
  for (int trial = 0; trial < 10; ++trial) {
    Egf f = random_series(rng, 20, true);
    f.coeff(1) = mpq_class(1 + static_cast<long>(rng() % 5));
    Egf g = revert(f);
    CHECK(compose(f, g) == Egf::z(20));
    CHECK(compose(g, f) == Egf::z(20));
  }
}

TEST_CASE("exp and log demand legal constant terms") {
  Egf c(5);
  c.coeff(0) = 1;
  CHECK_THROWS_AS(exp_series(c), std::invalid_argument);
  CHECK_THROWS_AS(log1p_series(c), std::invalid_argument);
  CHECK_THROWS_AS(compose(c, c), std::invalid_argument);
  CHECK_THROWS_AS(inverse_series(Egf(5)), std::invalid_argument);
}

TEST_CASE("cayley counts n^{n-1}") {
  Egf c = cayley(8);
  CHECK(prefix_counts(c, 3) == std::vector<long>{1, 2, 9});
  CHECK(c.count(1) == 1);
  CHECK(c.count(5) == 625);
  CHECK(c.count(8) == 2097152);  // 8^7
  CHECK(c.coeff(0) == 0);
}

TEST_CASE("tree system reproduces the rooted tables") {
  TreeFamily f = tree_system(7);
  CHECK(prefix_counts(f.t, 7) ==
        std::vector<long>{1, 4, 36, 512, 10000, 248832, 7529536});
  CHECK(prefix_counts(f.tg, 7) ==
        std::vector<long>{0, 2, 15, 232, 4535, 114276, 3478083});
  CHECK(prefix_counts(f.tr, 7) ==
        std::vector<long>{1, 2, 21, 280, 5465, 134556, 4051453});
}

TEST_CASE("tree routes agree and satisfy the defining identities") {
  TreeFamily sys = tree_system(24);
  TreeFamily fast = tree_family(24);
  CHECK(sys.t == fast.t);
  CHECK(sys.tg == fast.tg);
  CHECK(sys.tr == fast.tr);
  CHECK(sys.t == sys.tg + sys.tr);
  CHECK(sys.tr == sys.t * exp_series(-sys.tr));
  // a_n(T) = (2n)^{n-1}
  mpz_class expect;
  for (int n = 1; n <= 24; ++n) {
    mpz_ui_pow_ui(expect.get_mpz_t(), 2 * n, n - 1);
    CHECK(fast.t.count(n) == expect);
  }
}

TEST_CASE("unrooted tables") {
  UnrootedTreeFamily u = unrooted_trees(7);
  CHECK(prefix_counts(u.t, 7) ==
        std::vector<long>{1, 2, 12, 128, 2000, 41472, 1075648});
  CHECK(prefix_counts(u.tr, 7) ==
        std::vector<long>{1, 1, 7, 70, 1093, 22426, 578779});
  CHECK(prefix_counts(u.tg, 7) ==
        std::vector<long>{0, 1, 5, 58, 907, 19046, 496869});
  // rooted-to-unrooted: a_n(T_r^unr) = a_n(T_r) / n
  TreeFamily f = tree_family(7);
  for (int n = 1; n <= 7; ++n) CHECK(u.tr.count(n) * n == f.tr.count(n));
}

TEST_CASE("circuit and cycle series") {
  Egf l = circuit_series(7);
  CHECK(prefix_counts(l, 7) == std::vector<long>{1, 3, 8, 42, 264, 2160, 20880});
  CHECK(l.count(4) == 6 * 7);  // 3! Lucas_4
  Egf cy = cycle_series(7);
  CHECK(prefix_counts(cy, 7) ==
        std::vector<long>{2, 12, 64, 672, 8448, 138240, 2672640});
}

TEST_CASE("unicircuit series U") {
  Egf u = unicircuit_series(7);
  CHECK(prefix_counts(u, 7) ==
        std::vector<long>{1, 4, 30, 452, 8840, 224832, 6909784});
  CHECK(u.count(1) == 1);
  CHECK(u.count(3) == 30);
}

TEST_CASE("unicycle series V (corrected table)") {
  // Both printed forms of V agree with each other and with the exhaustive
  // enumerator on these counts; see test_oracle for the enumerator side.
  Egf v = unicycle_series(7);
  CHECK(prefix_counts(v, 7) ==
        std::vector<long>{1, 4, 36, 638, 14480, 414312, 14088424});
  CHECK(v.count(1) == 1);
  CHECK(v.count(2) == 4);
}

TEST_CASE("two-kernel series D") {
  Egf d = two_kernel_series(8);
  CHECK(prefix_counts(d, 8) ==
        std::vector<long>{0, 1, 6, 102, 1940, 49320, 1499022, 53786320});
  CHECK(d.count(1) == 0);
  CHECK(d.count(2) == 1);   // the digon
  CHECK(d.count(4) >= 3);   // at least the labeled 4-circuits
}

TEST_CASE("uncolored series F and G") {
  UncoloredSeries fg = uncolored_series(7);
  CHECK(prefix_counts(fg.unicircuit, 7) ==
        std::vector<long>{1, 3, 26, 374, 7464, 189912, 5865712});
  CHECK(prefix_counts(fg.unicycle, 7) ==
        std::vector<long>{1, 3, 32, 560, 13104, 379392, 13044352});
  for (int n = 1; n <= 7; ++n)
    CHECK(fg.unicycle.count(n) >= fg.unicircuit.count(n));
}

TEST_CASE("multiplicity bounds relate colored and uncolored counts") {
  int order = 12;
  Egf u = unicircuit_series(order);
  Egf v = unicycle_series(order);
  Egf d = two_kernel_series(order);
  UncoloredSeries fg = uncolored_series(order);
  for (int n = 1; n <= order; ++n) {
    CHECK(u.count(n) <= fg.unicircuit.count(n) + d.count(n));
    CHECK(v.count(n) <= fg.unicycle.count(n) + d.count(n));
    // every unicycle digraph splits into kernel-less, one-kernel, two-kernel
    CHECK(v.count(n) == u.count(n) + fg.unicycle.count(n) -
                            fg.unicircuit.count(n));
  }
}

TEST_CASE("all published families are counting series") {
  int order = 10;
  CHECK(tree_system(order).t.is_counting());
  CHECK(tree_system(order).tg.is_counting());
  CHECK(tree_system(order).tr.is_counting());
  CHECK(unrooted_trees(order).t.is_counting());
  CHECK(unrooted_trees(order).tg.is_counting());
  CHECK(unrooted_trees(order).tr.is_counting());
  CHECK(circuit_series(order).is_counting());
  CHECK(cycle_series(order).is_counting());
  CHECK(unicircuit_series(order).is_counting());
  CHECK(unicycle_series(order).is_counting());
  CHECK(two_kernel_series(order).is_counting());
  CHECK(uncolored_series(order).unicircuit.is_counting());
  CHECK(uncolored_series(order).unicycle.is_counting());
}

TEST_CASE("internal consistency never fires across orders") {
  for (int order : {1, 2, 3, 5, 13, 25}) {
    CHECK_NOTHROW(unicycle_series(order));
    CHECK_NOTHROW(unicircuit_series(order));
    CHECK_NOTHROW(two_kernel_series(order));
    CHECK_NOTHROW(tree_system(order));
  }
}

TEST_CASE("bivariate circuit series marks red vertices") {
  BivariateEgf biv = red_circuit_bivariate(40);
  Egf marginal = biv.at_u1();
  Egf l = circuit_series(40);
  CHECK(marginal == l);
  Egf du = biv.du_at_u1();
  std::vector<long> duc;
  for (int n = 1; n <= 7; ++n) duc.push_back(du.count(n).get_si());
  CHECK(duc == std::vector<long>{0, 2, 6, 48, 360, 3600, 40320});
  // per-vertex red proportion approaches 1/2 - 1/(2 sqrt 5) = 0.2763932...
  mpq_class ratio(du.count(40), 40 * l.count(40));
  ratio.canonicalize();
  double r = ratio.get_d();
  CHECK(r > 0.2762);
  CHECK(r < 0.2766);
}

TEST_CASE("count view rejects non-integer coefficients") {
  Egf f(3);
  f.coeff(2) = mpq_class(1, 3);
  CHECK_THROWS_AS(f.count(2), internal_error);
  CHECK_FALSE(f.is_counting());
}
