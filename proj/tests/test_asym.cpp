#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kernels/asym.hpp"
#include "kernels/series.hpp"

using namespace kernels;

namespace {

double approx(const Decimal& d) { return d.value().get_d(); }

}  // namespace

TEST_CASE("decimal arithmetic propagates error bounds outward") {
  Decimal a(mpq_class(1, 3), mpq_class(1, 1000));
  Decimal b(mpq_class(2, 3), mpq_class(1, 2000));
  CHECK((a + b).err() == mpq_class(3, 2000));
  CHECK((a - b).value() == mpq_class(-1, 3));
  Decimal p = a * b;
  CHECK(p.value() == mpq_class(2, 9));
  CHECK(p.err() >= mpq_class(1, 2000));
  CHECK_THROWS_AS(a / Decimal(mpq_class(0), mpq_class(1, 10)),
                  std::invalid_argument);
}

TEST_CASE("decimal rendering") {
  CHECK(Decimal(mpq_class(1, 3)).to_string(6) == "0.333333");
  CHECK(Decimal(mpq_class(2, 3)).to_string(6) == "0.666667");
  CHECK(Decimal(mpq_class(-1, 8)).to_string(3) == "-0.125");
  CHECK(Decimal(5).to_string(0) == "5");
  CHECK(Decimal(mpq_class(1, 2)).to_string(2) == "0.50");
}

TEST_CASE("transcendental helpers hit reference digits") {
  CHECK(exp_neg(Decimal(1), 30).to_string(12) == "0.367879441171");
  CHECK(exp_neg(Decimal(0), 30).to_string(6) == "1.000000");
  CHECK(sqrt_decimal(Decimal(2), 30).to_string(12) == "1.414213562373");
  CHECK(sqrt_decimal(Decimal(5), 30).to_string(12) == "2.236067977500");
  CHECK(pi_decimal(30).to_string(12) == "3.141592653590");
}

TEST_CASE("lambda solves 2x = exp(-x) to certified precision") {
  Decimal lambda = solve_lambda(50);
  CHECK(lambda.to_string(12) == "0.351733711249");
  CHECK(lambda.to_string(12).substr(0, 8) == "0.351733");  // leading digits
  CHECK(lambda.err() <= mpq_class(1, 1000000) * mpq_class(1, 1000000));

  // residual |2l - e^{-l}| below 1e-12
  Decimal e = exp_neg(lambda, 50);
  Decimal residual = Decimal(2) * lambda - e;
  mpq_class bound = abs(residual.value()) + residual.err();
  mpq_class tol(1, 1000000);
  tol *= tol;  // 1e-12
  CHECK(bound < tol);
}

TEST_CASE("closed-form constants match the published percentages") {
  Decimal lambda = solve_lambda(50);
  AsymptoticConstants c = constants(lambda);
  CHECK(c.green_root_limit.to_string(6) == "0.479581");
  CHECK(c.red_circuit_limit.to_string(7) == "0.2763932");
  CHECK(c.unicircuit_limit.to_string(6) == "0.926526");
  CHECK(c.green_root_1n_coeff.to_string(6) == "-0.119298");
  double sq = approx(c.unicycle_sqrt_coeff);
  CHECK(sq > 0.058);
  CHECK(sq < 0.059);

  // each printed 4-digit percentage is within 0.005 on the proportion scale
  CHECK(std::abs(approx(c.green_root_limit) - 0.4795) < 0.005);
  CHECK(std::abs(approx(c.red_circuit_limit) - 0.2763) < 0.005);
  CHECK(std::abs(approx(c.unicircuit_limit) - 0.9265) < 0.005);
}

TEST_CASE("singular expansions are additive and anchored at lambda") {
  Decimal lambda = solve_lambda(40);
  SingularExpansions s = singular_expansions(lambda);
  CHECK(s.t.constant.value() == mpq_class(1, 2));
  CHECK(s.tr.constant.to_string(12).substr(0, 8) == "0.351733");
  CHECK(s.tg.constant.to_string(6) == "0.148266");
  CHECK(s.t.sqrt_coeff.to_string(6) == "-0.707107");
  CHECK(s.tr.sqrt_coeff.to_string(4) == "-0.3680");
  CHECK(s.tg.sqrt_coeff.to_string(4) == "-0.3391");
}

TEST_CASE("green-root ratio table") {
  RatioTable t = ratio_table(RatioKind::GreenRoot, 60);
  CHECK(t.rows.size() == 59);  // n = 2..60
  CHECK(t.warnings.empty());   // monotone over the computed range
  const RatioRow& r7 = t.rows[5];
  CHECK(r7.n == 7);
  CHECK(r7.numerator == 3478083);
  CHECK(r7.denominator == 7529536);
  CHECK(r7.ratio.substr(0, 7) == "0.46192");
  // residual is negative and approaches the predicted coefficient
  Decimal res = t.scaled_residual_value(t.rows.back());
  CHECK(res.value() < 0);
  CHECK(approx(res) > -0.2);
  CHECK(approx(res) < -0.1);
}

TEST_CASE("red-circuit ratio table converges fast") {
  RatioTable t = ratio_table(RatioKind::RedCircuit, 40);
  CHECK(t.rows.back().ratio.substr(0, 8) == "0.276393");
  CHECK(t.limit.to_string(7) == "0.2763932");
}

TEST_CASE("unicircuit and unicycle tables carry exact counts") {
  RatioTable u = ratio_table(RatioKind::Unicircuit, 30);
  // ratio at n=30 is already within half a percent of the limit
  Decimal res = u.scaled_residual_value(u.rows.back());
  CHECK(std::abs(approx(res) * 30) < 0.2 * 30);  // sanity scale
  CHECK(u.rows.back().ratio.substr(0, 4) == "0.92");

  RatioTable v = ratio_table(RatioKind::Unicycle, 30);
  CHECK(v.sqrt_law);
  // (1 - ratio) * sqrt(n) sits near the predicted coefficient magnitude
  Decimal vres = v.scaled_residual_value(v.rows.back());
  CHECK(approx(vres) < 0);
  CHECK(approx(vres) > -0.12);
}

TEST_CASE("ratio table bounds") {
  CHECK_THROWS_AS(ratio_table(RatioKind::GreenRoot, 1), std::invalid_argument);
  CHECK_THROWS_AS(ratio_table(RatioKind::GreenRoot, 401),
                  std::invalid_argument);
}
