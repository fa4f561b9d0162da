#pragma once

// Exact truncated power-series arithmetic over the rationals, used with
// exponential-generating-function semantics: a series sum c_n z^n carries
// labeled counts a_n = c_n * n!. No floating point anywhere.

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

namespace kernels {

// A consistency check between two supposedly-equal computation routes
// failed. Must never fire; tests exist to prove it.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

mpz_class factorial_mpz(int n);

// Truncated exponential generating function: coefficients c_0..c_order of
// sum c_n z^n, exact rationals. Immutable in spirit; operations return new
// values.
class Egf {
 public:
  explicit Egf(int order) : c_(order + 1) {}
  Egf(int order, std::vector<mpq_class> coeffs);

  static Egf z(int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const mpq_class& coeff(int n) const { return c_[n]; }
  mpq_class& coeff(int n) { return c_[n]; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  // Count view a_n = c_n * n!; throws internal_error if not an integer.
  mpz_class count(int n) const;
  std::vector<mpz_class> counts() const;  // a_1..a_order
  bool is_counting() const;               // all a_n nonnegative integers

  Egf truncated(int new_order) const;

  bool operator==(const Egf& o) const { return c_ == o.c_; }

 private:
  std::vector<mpq_class> c_;
};

Egf operator+(const Egf& a, const Egf& b);
Egf operator-(const Egf& a, const Egf& b);
Egf operator-(const Egf& a);
Egf operator*(const Egf& a, const Egf& b);  // truncated at min order
Egf operator*(const mpq_class& s, const Egf& a);

// exp(f), requires f(0) = 0.
Egf exp_series(const Egf& f);
// ln(1+f), requires f(0) = 0.
Egf log1p_series(const Egf& f);
// ln(1/(1-f)), requires f(0) = 0; the labeled-cycle construction.
Egf cyc_series(const Egf& f);
Egf derivative(const Egf& f);
Egf antiderivative(const Egf& f);  // constant term 0
// g(f(z)), requires f(0) = 0.
Egf compose(const Egf& g, const Egf& f);
// 1/f, requires f(0) != 0.
Egf inverse_series(const Egf& f);
Egf divide(const Egf& a, const Egf& b);  // a/b, b(0) != 0
// Compositional inverse: g with f(g(z)) = z; requires f(0)=0, f'(0) != 0.
Egf revert(const Egf& f);
// f(s*z).
Egf scale_arg(const Egf& f, const mpq_class& s);

// Bivariate series, exponential in z and ordinary in the marking variable
// u: coefficient of z^n u^k at (n, k), k <= n.
class BivariateEgf {
 public:
  explicit BivariateEgf(int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const mpq_class& coeff(int n, int k) const;
  void set_coeff(int n, int k, const mpq_class& v);

  Egf at_u1() const;     // substitute u = 1
  Egf du_at_u1() const;  // d/du, then u = 1

 private:
  std::vector<std::vector<mpq_class>> c_;  // c_[n] has degree <= n in u
};

// ln(1/(1-f)) for a bivariate f with no z-constant term.
BivariateEgf bivariate_cyc(const BivariateEgf& f);

}  // namespace kernels
