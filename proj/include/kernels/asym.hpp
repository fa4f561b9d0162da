#pragma once

// High-precision evaluation of the asymptotic constants governing
// well-colored digraph families, and tables of exact coefficient ratios
// converging to them. Everything is anchored to lambda, the unique real
// root of 2*lambda = exp(-lambda).

#include <gmpxx.h>

#include <string>
#include <vector>

namespace kernels {

// Arbitrary-precision decimal with a certified bound: |true - value| <= err.
// Values are exact rationals; only the transcendental constructors
// (exp_neg, sqrt_decimal, pi_decimal, solve_lambda) introduce error, which
// is then propagated outward through arithmetic.
class Decimal {
 public:
  Decimal() : value_(0), err_(0) {}
  Decimal(long v) : value_(v), err_(0) {}  // NOLINT: implicit by design
  Decimal(mpq_class value, mpq_class err = mpq_class(0));

  const mpq_class& value() const { return value_; }
  const mpq_class& err() const { return err_; }

  // Fixed-point rendering with the given number of fractional digits,
  // rounded half away from zero.
  std::string to_string(int digits) const;

  // Snap the value to the 10^-digits grid; the error bound widens by one
  // grid step.
  Decimal rounded(int digits) const;

  Decimal operator-() const { return Decimal(-value_, err_); }
  friend Decimal operator+(const Decimal& a, const Decimal& b);
  friend Decimal operator-(const Decimal& a, const Decimal& b);
  friend Decimal operator*(const Decimal& a, const Decimal& b);
  friend Decimal operator/(const Decimal& a, const Decimal& b);

 private:
  mpq_class value_;
  mpq_class err_;
};

// e^{-x} for 0 <= x <= 1, by exact Taylor summation; the bound covers both
// truncation and the input's own error.
Decimal exp_neg(const Decimal& x, int digits);
Decimal sqrt_decimal(const Decimal& x, int digits);
Decimal pi_decimal(int digits);

// Newton iteration on f(y) = 2y - e^{-y}; the result is certified by an
// exact sign change of f across [value - err, value + err].
Decimal solve_lambda(int digits = 50);

struct AsymptoticConstants {
  Decimal green_root_limit;     // (1-l)/(1+l), fraction of green roots
  Decimal green_root_1n_coeff;  // -l^2(l+4)/(1+l)^5, the 1/n term
  Decimal red_circuit_limit;    // 1/2 - 1/(2 sqrt 5)
  Decimal unicircuit_limit;     // (3l^3+l^2-l-1)/((1+l)^2(l-1))
  // First-order 1/n coefficient of the unicircuit ratio, proportion scale.
  // The literature value is the 2-digit -0.12 with no closed form; the
  // ratio table confirms it empirically.
  Decimal unicircuit_1n_coeff;
  Decimal unicycle_sqrt_coeff;  // 2l^3 sqrt2 / ((1+l)^2 (1-l) sqrt(pi))
};

AsymptoticConstants constants(const Decimal& lambda, int digits = 50);

struct SingularTerm {
  Decimal constant;    // value at z = 1/(2e)
  Decimal sqrt_coeff;  // coefficient of sqrt(1-2ez)
};

struct SingularExpansions {
  SingularTerm t, tr, tg;
};

// Leading singular data of T, T_r, T_g at z = 1/(2e); additivity
// T = T_r + T_g is asserted within the error bounds.
SingularExpansions singular_expansions(const Decimal& lambda, int digits = 50);

enum class RatioKind { GreenRoot, RedCircuit, Unicircuit, Unicycle };

const char* ratio_kind_name(RatioKind kind);

struct RatioRow {
  int n = 0;
  mpz_class numerator;    // exact count
  mpz_class denominator;  // exact count
  std::string ratio;
  std::string scaled_residual;  // (ratio - limit) * n, or * sqrt(n)
};

struct RatioTable {
  RatioKind kind{};
  bool sqrt_law = false;  // residual scale: sqrt(n) instead of n
  Decimal limit;
  Decimal coeff;  // predicted first-order coefficient
  std::vector<RatioRow> rows;
  std::vector<std::string> warnings;

  // Exact residual of one row, already scaled by n or sqrt(n).
  Decimal scaled_residual_value(const RatioRow& row) const;
};

// Exact numerators/denominators from the series engine; only the display
// columns divide. n runs 2..n_max (n_max <= 400).
RatioTable ratio_table(RatioKind kind, int n_max, int display_digits = 12);

}  // namespace kernels
