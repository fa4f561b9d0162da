#include "kernels/generating_functions.hpp"

#include <algorithm>

namespace kernels {

namespace {

// Composition-based cross-checks are O(order^3); past this order the fast
// recurrences carry the coefficients and the check runs on a prefix.
constexpr int kComposeCheckOrder = 64;

Egf cayley_closed(int order) {
  Egf c(order);
  for (int n = 1; n <= order; ++n) {
    mpz_class num;
    mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(n),
                  static_cast<unsigned long>(n - 1));
    mpq_class q(num, factorial_mpz(n));
    q.canonicalize();
    c.coeff(n) = q;
  }
  return c;
}

}  // namespace

Egf cayley(int order) {
  Egf closed = cayley_closed(order);
  Egf it(order);
  int rounds = 0;
  for (; rounds <= order + 1; ++rounds) {
    Egf next = Egf::z(order) * exp_series(it);
    if (next == it) break;
    it = next;
  }
  if (rounds > order + 1)
    throw internal_error("Cayley fixed point did not stabilize");
  if (!(it == closed))
    throw internal_error("Cayley closed form disagrees with fixed point");
  return closed;
}

TreeFamily tree_system(int order) {
  if (order < 1) throw std::invalid_argument("tree_system needs order >= 1");
  Egf t(order), tg(order), tr(order);
  const Egf z = Egf::z(order);
  int rounds = 0;
  for (; rounds <= order + 1; ++rounds) {
    Egf e_mixed = z * exp_series(t + tg);  // z e^{T+T_g} feeds both unknowns
    Egf tr_next = e_mixed;
    Egf tg_next = z * exp_series(mpq_class(2) * t) - e_mixed;
    Egf t_next = tg_next + tr_next;
    if (t_next == t && tg_next == tg && tr_next == tr) break;
    t = t_next;
    tg = tg_next;
    tr = tr_next;
  }
  if (rounds > order + 1)
    throw internal_error("tree system did not stabilize in order+1 rounds");

  // Closed forms of Theorem-1 shape: T = C(2z)/2, T_r = -C(-C(2z)/2).
  Egf ca = cayley(order);
  Egf t_closed = mpq_class(1, 2) * scale_arg(ca, 2);
  Egf a = compose(ca, -t_closed);
  if (!(t == t_closed) || !(tr == -a) || !(tg == t_closed + a))
    throw internal_error("tree closed forms disagree with fixed point");
  return {t, tg, tr};
}

TreeFamily tree_family(int order) {
  if (order < 1) throw std::invalid_argument("tree_family needs order >= 1");
  Egf t(order);
  for (int n = 1; n <= order; ++n) {
    mpz_class num;
    mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(2 * n),
                  static_cast<unsigned long>(n - 1));
    mpq_class q(num, factorial_mpz(n));
    q.canonicalize();
    t.coeff(n) = q;
  }
  // T = T_r exp(T_r): peel T_r and exp(T_r) together, one coefficient at a
  // time.
  Egf tr(order), e(order);
  e.coeff(0) = 1;
  for (int n = 1; n <= order; ++n) {
    mpq_class s = 0;
    for (int k = 1; k < n; ++k)
      if (tr.coeff(k) != 0) s += tr.coeff(k) * e.coeff(n - k);
    tr.coeff(n) = t.coeff(n) - s;
    mpq_class se = 0;
    for (int k = 1; k <= n; ++k)
      if (tr.coeff(k) != 0) se += k * tr.coeff(k) * e.coeff(n - k);
    e.coeff(n) = se / n;
  }
  return {t, t - tr, tr};
}

UnrootedTreeFamily unrooted_trees(int order) {
  // One extra order: T/T_r factors a power of z out of each, so its
  // coefficient at z^order needs T up to z^{order+1}.
  TreeFamily f = tree_family(order + 1);
  Egf t_unr = (f.t - f.t * f.t).truncated(order);
  // 2T - 2T T_r + T_r - 2T/T_r + T_r^2/2
  Egf t_over_z(order), tr_over_z(order);
  for (int n = 1; n <= order + 1; ++n) {
    t_over_z.coeff(n - 1) = f.t.coeff(n);
    tr_over_z.coeff(n - 1) = f.tr.coeff(n);
  }
  Egf ratio = divide(t_over_z, tr_over_z);
  Egf tr_unr = (mpq_class(2) * f.t - mpq_class(2) * (f.t * f.tr) + f.tr +
                mpq_class(1, 2) * (f.tr * f.tr))
                   .truncated(order) -
               mpq_class(2) * ratio;
  if (tr_unr.coeff(0) != -2)
    throw internal_error("unrooted red-tree constant term is not -2");
  tr_unr.coeff(0) = 0;
  return {t_unr, t_unr - tr_unr, tr_unr};
}

Egf circuit_series(int order) {
  Egf arg(order);
  if (order >= 1) arg.coeff(1) = 1;
  if (order >= 2) arg.coeff(2) = 1;
  Egf l = cyc_series(arg);
  // a_n = (n-1)! Lucas_n with Lucas_1 = 1, Lucas_2 = 3.
  mpz_class lp = 1, lq = 3, fact = 1;
  for (int n = 1; n <= order; ++n) {
    mpz_class lucas = n == 1 ? lp : n == 2 ? lq : lp + lq;
    if (n > 2) {
      lp = lq;
      lq = lucas;
    }
    if (l.count(n) != fact * lucas)
      throw internal_error("circuit counts break the Lucas identity");
    fact *= n;
  }
  return l;
}

Egf cycle_series(int order) {
  Egf arg(order);
  if (order >= 1) arg.coeff(1) = 2;
  if (order >= 2) arg.coeff(2) = 4;
  Egf cy = cyc_series(arg);
  Egf l = circuit_series(order);
  mpz_class pow2 = 1;
  for (int n = 1; n <= order; ++n) {
    pow2 *= 2;
    if (cy.count(n) != pow2 * l.count(n))
      throw internal_error("cycle counts are not 2^n times circuit counts");
  }
  return cy;
}

Egf unicircuit_series(int order) {
  if (order < 1) throw std::invalid_argument("order >= 1");
  TreeFamily f = tree_family(order);
  Egf t_unr = f.t - f.t * f.t;
  Egf u = t_unr - f.tg + cyc_series(f.tg + f.t * f.tr);

  // Theorem-3 closed form via explicit Cayley substitution.
  int m = std::min(order, kComposeCheckOrder);
  Egf ca = cayley(m);
  Egf t2 = mpq_class(1, 2) * scale_arg(ca, 2);  // C(2z)/2
  Egf a = compose(ca, -t2);                     // C(-C(2z)/2)
  Egf closed = -(t2 * t2) - a + cyc_series(t2 + a - a * t2);
  if (!(u.truncated(m) == closed))
    throw internal_error("unicircuit closed form disagrees");
  return u;
}

Egf unicycle_series(int order) {
  if (order < 1) throw std::invalid_argument("order >= 1");
  TreeFamily f = tree_family(order);
  const Egf& t = f.t;
  const Egf& tg = f.tg;
  const Egf& tr = f.tr;
  Egf t_unr = t - t * t;
  const mpq_class half(1, 2);

  Egf simplified = t_unr - t + tr - half * (t * t) - log1p_series(tr) +
                   half * cyc_series(mpq_class(2) * t);

  // Brick decomposition; T_{g_r} = T by the root-with-no-red-child bijection.
  Egf one_minus_2tg = -(mpq_class(2) * tg);
  one_minus_2tg.coeff(0) = 1;
  Egf geom = inverse_series(one_minus_2tg);
  Egf bricks = mpq_class(2) * (tr * t) +
               (tr * tg + tr * t + mpq_class(2) * (tr * t * tg) +
                mpq_class(2) * (tr * (t * t))) *
                   geom;
  Egf brick_form = t_unr + half * cyc_series(mpq_class(2) * tg) - tg -
                   half * (tg * tg) - half * (tr * tg) - half * (tr * t) +
                   half * cyc_series(bricks);
  if (!(brick_form == simplified))
    throw internal_error("unicycle brick form disagrees with closed form");
  return simplified;
}

Egf two_kernel_series(int order) {
  if (order < 1) throw std::invalid_argument("order >= 1");
  TreeFamily f = tree_family(order);
  Egf d = mpq_class(1, 2) * cyc_series(f.tr * f.tr);
  for (int n = 1; n <= order; ++n)
    if (d.count(n) < 0)
      throw internal_error("two-kernel series has a negative count");
  return d;
}

UncoloredSeries uncolored_series(int order) {
  if (order < 1) throw std::invalid_argument("order >= 1");
  TreeFamily fam = tree_family(order);
  Egf t_unr = fam.t - fam.t * fam.t;
  Egf f = t_unr + cyc_series(fam.t) - fam.t;
  Egf g = t_unr + mpq_class(1, 2) * cyc_series(mpq_class(2) * fam.t) - fam.t -
          mpq_class(1, 2) * (fam.t * fam.t);
  return {f, g};
}

BivariateEgf red_circuit_bivariate(int order) {
  BivariateEgf f(order);
  if (order >= 1) f.set_coeff(1, 0, 1);  // z
  if (order >= 2) f.set_coeff(2, 1, 1);  // u z^2
  return bivariate_cyc(f);
}

}  // namespace kernels
