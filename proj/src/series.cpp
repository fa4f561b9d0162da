#include "kernels/series.hpp"

#include <algorithm>

namespace kernels {

mpz_class factorial_mpz(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

Egf::Egf(int order, std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
  c_.resize(order + 1);
}

Egf Egf::z(int order) {
  Egf r(order);
  if (order >= 1) r.c_[1] = 1;
  return r;
}

mpz_class Egf::count(int n) const {
  mpq_class a = c_[n] * mpq_class(factorial_mpz(n));
  if (a.get_den() != 1)
    throw internal_error("coefficient of z^" + std::to_string(n) +
                         " times n! is not an integer");
  return a.get_num();
}

std::vector<mpz_class> Egf::counts() const {
  std::vector<mpz_class> a;
  a.reserve(order());
  mpz_class fact = 1;
  for (int n = 1; n <= order(); ++n) {
    fact *= n;
    mpq_class v = c_[n] * mpq_class(fact);
    if (v.get_den() != 1)
      throw internal_error("non-integer count at n=" + std::to_string(n));
    a.push_back(v.get_num());
  }
  return a;
}

bool Egf::is_counting() const {
  mpz_class fact = 1;
  for (int n = 0; n <= order(); ++n) {
    if (n > 0) fact *= n;
    mpq_class v = c_[n] * mpq_class(fact);
    if (v.get_den() != 1 || v < 0) return false;
  }
  return true;
}

Egf Egf::truncated(int new_order) const {
  Egf r(new_order);
  for (int n = 0; n <= std::min(order(), new_order); ++n) r.c_[n] = c_[n];
  return r;
}

Egf operator+(const Egf& a, const Egf& b) {
  int ord = std::min(a.order(), b.order());
  Egf r(ord);
  for (int n = 0; n <= ord; ++n) r.coeff(n) = a.coeff(n) + b.coeff(n);
  return r;
}

Egf operator-(const Egf& a, const Egf& b) {
  int ord = std::min(a.order(), b.order());
  Egf r(ord);
  for (int n = 0; n <= ord; ++n) r.coeff(n) = a.coeff(n) - b.coeff(n);
  return r;
}

Egf operator-(const Egf& a) {
  Egf r(a.order());
  for (int n = 0; n <= a.order(); ++n) r.coeff(n) = -a.coeff(n);
  return r;
}

Egf operator*(const Egf& a, const Egf& b) {
  int ord = std::min(a.order(), b.order());
  Egf r(ord);
  for (int i = 0; i <= ord; ++i) {
    if (a.coeff(i) == 0) continue;
    for (int j = 0; i + j <= ord; ++j)
      if (b.coeff(j) != 0) r.coeff(i + j) += a.coeff(i) * b.coeff(j);
  }
  return r;
}

Egf operator*(const mpq_class& s, const Egf& a) {
  Egf r(a.order());
  for (int n = 0; n <= a.order(); ++n) r.coeff(n) = s * a.coeff(n);
  return r;
}

Egf exp_series(const Egf& f) {
  if (f.coeff(0) != 0)
    throw std::invalid_argument("exp_series needs zero constant term");
  int ord = f.order();
  Egf e(ord);
  e.coeff(0) = 1;
  // n e_n = sum_{k=1}^{n} k f_k e_{n-k}
  for (int n = 1; n <= ord; ++n) {
    mpq_class s = 0;
    for (int k = 1; k <= n; ++k)
      if (f.coeff(k) != 0) s += k * f.coeff(k) * e.coeff(n - k);
    e.coeff(n) = s / n;
  }
  return e;
}

Egf log1p_series(const Egf& f) {
  if (f.coeff(0) != 0)
    throw std::invalid_argument("log1p_series needs zero constant term");
  int ord = f.order();
  Egf g(ord);
  // n g_n = n f_n - sum_{k=1}^{n-1} k g_k f_{n-k}
  for (int n = 1; n <= ord; ++n) {
    mpq_class s = n * f.coeff(n);
    for (int k = 1; k < n; ++k)
      if (f.coeff(n - k) != 0) s -= k * g.coeff(k) * f.coeff(n - k);
    g.coeff(n) = s / n;
  }
  return g;
}

Egf cyc_series(const Egf& f) { return -log1p_series(-f); }

Egf derivative(const Egf& f) {
  Egf r(f.order());
  for (int n = 1; n <= f.order(); ++n) r.coeff(n - 1) = n * f.coeff(n);
  return r;
}

Egf antiderivative(const Egf& f) {
  Egf r(f.order());
  for (int n = 1; n <= f.order(); ++n) r.coeff(n) = f.coeff(n - 1) / n;
  return r;
}

Egf compose(const Egf& g, const Egf& f) {
  if (f.coeff(0) != 0)
    throw std::invalid_argument("compose needs inner constant term zero");
  int ord = std::min(g.order(), f.order());
  Egf r(ord);
  for (int k = ord; k >= 0; --k) {  // Horner
    r = r * f;
    r.coeff(0) += g.coeff(k);
  }
  return r;
}

Egf inverse_series(const Egf& f) {
  if (f.coeff(0) == 0)
    throw std::invalid_argument("inverse_series needs nonzero constant term");
  int ord = f.order();
  Egf r(ord);
  r.coeff(0) = 1 / f.coeff(0);
  for (int n = 1; n <= ord; ++n) {
    mpq_class s = 0;
    for (int k = 0; k < n; ++k)
      if (f.coeff(n - k) != 0) s += r.coeff(k) * f.coeff(n - k);
    r.coeff(n) = -s / f.coeff(0);
  }
  return r;
}

Egf divide(const Egf& a, const Egf& b) { return a * inverse_series(b); }

Egf revert(const Egf& f) {
  if (f.coeff(0) != 0 || f.order() < 1 || f.coeff(1) == 0)
    throw std::invalid_argument("revert needs f(0)=0 and f'(0) != 0");
  int ord = f.order();
  // Lagrange inversion: [z^n] g = (1/n) [z^{n-1}] (z/f)^n.
  Egf u(ord);  // f/z
  for (int n = 1; n <= ord; ++n) u.coeff(n - 1) = f.coeff(n);
  Egf w = inverse_series(u);  // z/f
  Egf pw(ord);
  pw.coeff(0) = 1;
  Egf g(ord);
  for (int n = 1; n <= ord; ++n) {
    pw = pw * w;  // (z/f)^n
    g.coeff(n) = pw.coeff(n - 1) / n;
  }
  return g;
}

Egf scale_arg(const Egf& f, const mpq_class& s) {
  Egf r(f.order());
  mpq_class p = 1;
  for (int n = 0; n <= f.order(); ++n) {
    r.coeff(n) = p * f.coeff(n);
    p *= s;
  }
  return r;
}

BivariateEgf::BivariateEgf(int order) : c_(order + 1) {
  for (int n = 0; n <= order; ++n) c_[n].assign(n + 1, mpq_class(0));
}

const mpq_class& BivariateEgf::coeff(int n, int k) const { return c_[n][k]; }

void BivariateEgf::set_coeff(int n, int k, const mpq_class& v) {
  c_[n][k] = v;
}

Egf BivariateEgf::at_u1() const {
  Egf r(order());
  for (int n = 0; n <= order(); ++n)
    for (const mpq_class& v : c_[n]) r.coeff(n) += v;
  return r;
}

Egf BivariateEgf::du_at_u1() const {
  Egf r(order());
  for (int n = 0; n <= order(); ++n)
    for (int k = 1; k <= n; ++k) r.coeff(n) += k * c_[n][k];
  return r;
}

BivariateEgf bivariate_cyc(const BivariateEgf& f) {
  if (f.coeff(0, 0) != 0)
    throw std::invalid_argument("bivariate_cyc needs zero z-constant term");
  int ord = f.order();
  BivariateEgf g(ord);
  // d/dz of ln(1/(1-f)) = f'/(1-f):  n g_n = n f_n + sum_{k<n} k g_k f_{n-k},
  // with polynomial coefficients in u.
  for (int n = 1; n <= ord; ++n) {
    std::vector<mpq_class> acc(n + 1);
    for (int k = 0; k <= n; ++k) acc[k] = n * f.coeff(n, k);
    for (int k = 1; k < n; ++k) {
      int m = n - k;  // f_m factor
      for (int a = 0; a <= k; ++a) {
        if (g.coeff(k, a) == 0) continue;
        for (int b = 0; b <= m; ++b)
          if (f.coeff(m, b) != 0) acc[a + b] += k * g.coeff(k, a) * f.coeff(m, b);
      }
    }
    for (int k = 0; k <= n; ++k)
      g.set_coeff(n, k, acc[k] / n);
  }
  return g;
}

}  // namespace kernels
