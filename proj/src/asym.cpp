#include "kernels/asym.hpp"

#include <algorithm>
#include <stdexcept>

#include "kernels/generating_functions.hpp"
#include "kernels/series.hpp"

namespace kernels {

namespace {

mpq_class pow10q(int digits) {  // 10^-digits as an exact rational
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  return mpq_class(1, p);
}

mpz_class pow10z(int digits) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  return p;
}

}  // namespace

Decimal::Decimal(mpq_class value, mpq_class err)
    : value_(std::move(value)), err_(std::move(err)) {
  if (err_ < 0) throw std::invalid_argument("negative error bound");
}

std::string Decimal::to_string(int digits) const {
  mpq_class scaled = value_ * mpq_class(pow10z(digits));
  mpz_class twice_num = 2 * scaled.get_num();
  mpz_class rounded_int;
  // round half away from zero
  mpz_class den = scaled.get_den();
  mpz_class q = (abs(twice_num) + den) / (2 * den);
  rounded_int = twice_num < 0 ? mpz_class(-q) : q;
  bool neg = rounded_int < 0;
  mpz_class mag = abs(rounded_int);
  mpz_class ip = mag / pow10z(digits);
  std::string s = neg ? "-" : "";
  s += ip.get_str();
  if (digits > 0) {
    mpz_class fp = mag % pow10z(digits);
    std::string frac = fp.get_str();
    frac.insert(frac.begin(), digits - frac.size(), '0');
    s += "." + frac;
  }
  return s;
}

Decimal Decimal::rounded(int digits) const {
  mpz_class scale = pow10z(digits);
  mpq_class scaled = value_ * mpq_class(scale);
  mpz_class floor_v = scaled.get_num() / scaled.get_den();
  if (scaled < 0 && floor_v * scaled.get_den() != scaled.get_num()) --floor_v;
  mpq_class snapped(floor_v, scale);
  snapped.canonicalize();
  return Decimal(snapped, err_ + pow10q(digits));
}

Decimal operator+(const Decimal& a, const Decimal& b) {
  return Decimal(a.value_ + b.value_, a.err_ + b.err_);
}

Decimal operator-(const Decimal& a, const Decimal& b) {
  return Decimal(a.value_ - b.value_, a.err_ + b.err_);
}

Decimal operator*(const Decimal& a, const Decimal& b) {
  mpq_class err = abs(a.value_) * b.err_ + abs(b.value_) * a.err_ +
                  a.err_ * b.err_;
  return Decimal(a.value_ * b.value_, err);
}

Decimal operator/(const Decimal& a, const Decimal& b) {
  mpq_class babs = abs(b.value_);
  if (babs <= b.err_)
    throw std::invalid_argument("division by an interval containing zero");
  mpq_class q = a.value_ / b.value_;
  mpq_class err = (a.err_ + abs(q) * b.err_) / (babs - b.err_);
  return Decimal(q, err);
}

Decimal exp_neg(const Decimal& x, int digits) {
  if (x.value() < 0 || x.value() > 1)
    throw std::invalid_argument("exp_neg expects 0 <= x <= 1");
  mpq_class tol = pow10q(digits + 8);
  mpq_class term = 1, sum = 1;
  // Alternating series with decreasing terms: truncation <= first omitted.
  for (int k = 1; k <= 4 * digits + 64; ++k) {
    term *= x.value();
    term /= k;
    if (k % 2)
      sum -= term;
    else
      sum += term;
    if (term < tol) break;
  }
  // |d/dx e^{-x}| <= 1 on x >= 0.
  return Decimal(sum, term + x.err()).rounded(digits + 6);
}

Decimal sqrt_decimal(const Decimal& x, int digits) {
  if (x.value() < 0) throw std::invalid_argument("sqrt of a negative value");
  int m = digits + 6;
  mpz_class scale = pow10z(m);
  mpq_class scaled = x.value() * mpq_class(scale * scale);
  mpz_class a = scaled.get_num() / scaled.get_den();
  mpz_class s;
  mpz_sqrt(s.get_mpz_t(), a.get_mpz_t());
  mpq_class value(s, scale);
  value.canonicalize();
  mpq_class err = 2 * pow10q(m);
  if (x.err() > 0) {
    mpq_class lower = value - err;  // conservative lower bound on sqrt(x)
    if (lower <= 0)
      throw std::invalid_argument("sqrt interval reaches zero");
    err += x.err() / (2 * lower);
  }
  return Decimal(value, err);
}

Decimal pi_decimal(int digits) {
  // Machin: pi = 16 atan(1/5) - 4 atan(1/239), exact partial sums.
  auto atan_inv = [&](unsigned long m) {
    mpq_class tol = pow10q(digits + 10);
    mpq_class acc = 0;
    mpq_class power(1, m);  // (1/m)^{2k+1}
    mpq_class mm(1, m);
    mpq_class term;
    for (int k = 0;; ++k) {
      term = power / (2 * k + 1);
      if (k % 2)
        acc -= term;
      else
        acc += term;
      power *= mm * mm;
      if (term < tol) break;
    }
    return std::pair<mpq_class, mpq_class>(acc, term);
  };
  auto [a5, e5] = atan_inv(5);
  auto [a239, e239] = atan_inv(239);
  return Decimal(16 * a5 - 4 * a239, 16 * e5 + 4 * e239).rounded(digits + 6);
}

Decimal solve_lambda(int digits) {
  if (digits < 1 || digits > 1000)
    throw std::invalid_argument("lambda precision must be 1..1000 digits");
  int work = digits + 10;
  mpq_class x(35, 100);
  mpq_class step_tol = pow10q(digits + 5);
  for (int it = 0; it < 200; ++it) {
    Decimal e = exp_neg(Decimal(x), work);
    mpq_class f = 2 * x - e.value();
    mpq_class fp = 2 + e.value();
    mpq_class next = x - f / fp;
    // keep the iterate on the decimal grid so numerators stay small
    next = Decimal(next).rounded(work).value();
    mpq_class diff = abs(next - x);
    x = next;
    if (diff < step_tol) break;
  }
  // Certify by sign change of f(y) = 2y - e^{-y} across x +- err.
  mpq_class err = pow10q(digits);
  for (int widen = 0; widen < 4; ++widen) {
    Decimal elo = exp_neg(Decimal(x - err), work);
    Decimal ehi = exp_neg(Decimal(x + err), work);
    mpq_class flo = 2 * (x - err) - elo.value();
    mpq_class fhi = 2 * (x + err) - ehi.value();
    if (flo + elo.err() < 0 && fhi - ehi.err() > 0) return Decimal(x, err);
    err *= 10;
  }
  throw internal_error("lambda could not be certified by a sign change");
}

AsymptoticConstants constants(const Decimal& lambda, int digits) {
  const Decimal one(1), two(2), half(mpq_class(1, 2));
  Decimal onep = one + lambda;
  Decimal onem = one - lambda;
  Decimal l2 = lambda * lambda;
  Decimal l3 = l2 * lambda;
  AsymptoticConstants c;
  c.green_root_limit = onem / onep;
  Decimal onep5 = onep * onep * onep * onep * onep;
  c.green_root_1n_coeff = -(l2 * (lambda + Decimal(4))) / onep5;
  c.red_circuit_limit =
      half - one / (two * sqrt_decimal(Decimal(5), digits));
  c.unicircuit_limit = (Decimal(3) * l3 + l2 - lambda - one) /
                       (onep * onep * (lambda - one));
  c.unicircuit_1n_coeff = Decimal(mpq_class(-12, 100), mpq_class(1, 200));
  c.unicycle_sqrt_coeff =
      (two * l3 * sqrt_decimal(Decimal(2), digits)) /
      (onep * onep * onem * sqrt_decimal(pi_decimal(digits), digits));
  return c;
}

SingularExpansions singular_expansions(const Decimal& lambda, int digits) {
  const Decimal one(1), half(mpq_class(1, 2));
  Decimal sqrt2 = sqrt_decimal(Decimal(2), digits);
  Decimal onep = one + lambda;
  SingularExpansions s;
  s.t = {half, -(one / sqrt2)};
  s.tr = {lambda, -(lambda * sqrt2) / onep};
  s.tg = {half - lambda, -((one - lambda) / (sqrt2 * onep))};
  Decimal dc = s.t.constant - s.tr.constant - s.tg.constant;
  Decimal dk = s.t.sqrt_coeff - s.tr.sqrt_coeff - s.tg.sqrt_coeff;
  if (abs(dc.value()) > dc.err() || abs(dk.value()) > dk.err())
    throw internal_error("singular expansions of T_r and T_g do not add to T");
  return s;
}

const char* ratio_kind_name(RatioKind kind) {
  switch (kind) {
    case RatioKind::GreenRoot: return "green_root";
    case RatioKind::RedCircuit: return "red_circuit";
    case RatioKind::Unicircuit: return "unicircuit";
    case RatioKind::Unicycle: return "unicycle";
  }
  return "?";
}

Decimal RatioTable::scaled_residual_value(const RatioRow& row) const {
  mpq_class ratio(row.numerator, row.denominator);
  ratio.canonicalize();
  Decimal residual = Decimal(ratio) - limit;
  if (!sqrt_law) return residual * Decimal(row.n);
  return residual * sqrt_decimal(Decimal(row.n), 30);
}

RatioTable ratio_table(RatioKind kind, int n_max, int display_digits) {
  if (n_max < 2 || n_max > 400)
    throw std::invalid_argument("ratio tables support 2 <= n_max <= 400");
  const int prec = 40;
  Decimal lambda = solve_lambda(prec);
  AsymptoticConstants cs = constants(lambda, prec);

  RatioTable table;
  table.kind = kind;
  std::vector<std::pair<mpz_class, mpz_class>> fractions;
  switch (kind) {
    case RatioKind::GreenRoot: {
      TreeFamily fam = tree_family(n_max);
      for (int n = 2; n <= n_max; ++n)
        fractions.emplace_back(fam.tg.count(n), fam.t.count(n));
      table.limit = cs.green_root_limit;
      table.coeff = cs.green_root_1n_coeff;
      break;
    }
    case RatioKind::RedCircuit: {
      BivariateEgf biv = red_circuit_bivariate(n_max);
      Egf du = biv.du_at_u1();
      Egf l = biv.at_u1();
      for (int n = 2; n <= n_max; ++n)
        fractions.emplace_back(du.count(n), n * l.count(n));
      table.limit = cs.red_circuit_limit;
      table.coeff = Decimal(0);  // converges faster than any 1/n law
      break;
    }
    case RatioKind::Unicircuit: {
      Egf u = unicircuit_series(n_max);
      Egf d = two_kernel_series(n_max);
      Egf f = uncolored_series(n_max).unicircuit;
      for (int n = 2; n <= n_max; ++n)
        fractions.emplace_back(u.count(n) - d.count(n), f.count(n));
      table.limit = cs.unicircuit_limit;
      table.coeff = cs.unicircuit_1n_coeff;
      break;
    }
    case RatioKind::Unicycle: {
      Egf v = unicycle_series(n_max);
      Egf d = two_kernel_series(n_max);
      Egf g = uncolored_series(n_max).unicycle;
      for (int n = 2; n <= n_max; ++n)
        fractions.emplace_back(v.count(n) - d.count(n), g.count(n));
      table.sqrt_law = true;
      table.limit = Decimal(1);
      table.coeff = -cs.unicycle_sqrt_coeff;
      break;
    }
  }
  mpq_class prev_ratio = -1;
  bool monotone = true;
  for (size_t i = 0; i < fractions.size(); ++i) {
    int n = static_cast<int>(i) + 2;
    RatioRow row;
    row.n = n;
    row.numerator = fractions[i].first;
    row.denominator = fractions[i].second;
    mpq_class ratio(row.numerator, row.denominator);
    ratio.canonicalize();
    row.ratio = Decimal(ratio).to_string(display_digits);
    row.scaled_residual =
        table.scaled_residual_value(row).to_string(display_digits);
    if (kind == RatioKind::GreenRoot && n >= 10) {
      if (prev_ratio >= 0 && ratio < prev_ratio) monotone = false;
      prev_ratio = ratio;
    }
    table.rows.push_back(std::move(row));
  }
  if (kind == RatioKind::GreenRoot && !monotone)
    table.warnings.push_back(
        "green-root ratios are not monotone over the computed range");
  return table;
}

}  // namespace kernels
