#pragma once

// The generating functions of well-colored digraph families, each computed
// by at least two independent routes that are asserted equal:
//
//   T, T_g, T_r      rooted directed trees (all / green root / red root)
//   T^unr family     the unrooted equivalents
//   L, cycle         possible well-colored circuits and cycles
//   U                unicircuit well-colored digraphs
//   V                unicycle well-colored digraphs
//   D                unicycle digraphs with two kernels
//   F, G             uncolored unicircuit / unicycle digraphs
//
// Counts are exact integers throughout (a_n = n! [z^n]).

#include "kernels/series.hpp"

namespace kernels {

// Rooted labeled trees, C = z exp(C), a_n = n^{n-1}. Computed both from the
// closed coefficient formula and by fixed-point iteration; asserted equal.
Egf cayley(int order);

struct TreeFamily {
  Egf t, tg, tr;
};

// Fixed-point solution of  T_g = z e^{2T} - z e^{T+T_g},
// T_r = z e^{T+T_g}, T = T_g + T_r,  cross-checked against the closed forms
// T = C(2z)/2, T_r = -C(-C(2z)/2), T_g = T - T_r. O(order^3) rational work.
TreeFamily tree_system(int order);

// Same series by the O(order^2) route: a_n(T) = (2n)^{n-1} and T_r extracted
// from T = T_r exp(T_r). Equality with tree_system is pinned by tests.
TreeFamily tree_family(int order);

struct UnrootedTreeFamily {
  Egf t, tg, tr;
};

// T^unr = T - T^2;  T_r^unr from 2T - 2T T_r + T_r - 2T/T_r + T_r^2/2 with
// the constant term (exactly -2) normalized away;  T_g^unr = difference.
UnrootedTreeFamily unrooted_trees(int order);

// L = -ln(1-z-z^2); counts (n-1)! Lucas_n, verified internally.
Egf circuit_series(int order);
// -ln(1-2z-4z^2); counts 2^n a_n(L), verified internally.
Egf cycle_series(int order);

// U = T^unr - T_g + ln(1/(1-(T_g + T T_r))). The Cayley-substituted closed
// form of the same series is asserted equal up to min(order, 64).
Egf unicircuit_series(int order);

// V by the brick decomposition and by the simplified closed form
// V = T^unr - T + T_r - T^2/2 - ln(1+T_r) - ln(1-2T)/2, asserted equal at
// full order. Note: the correct counts are 1,4,36,638,14480,414312,...
Egf unicycle_series(int order);

// D = ln(1/(1-T_r^2))/2, the nonnegative reading of the Cyc(T_r^2)/2
// decomposition; throws if any count is negative.
Egf two_kernel_series(int order);

struct UncoloredSeries {
  Egf unicircuit;  // F = T^unr + ln(1/(1-T)) - T
  Egf unicycle;    // G = T^unr + ln(1/(1-2T))/2 - T - T^2/2
};
UncoloredSeries uncolored_series(int order);

// ln(1/(1-(z+u z^2))), u marking red vertices on a possible circuit.
// at_u1() recovers L.
BivariateEgf red_circuit_bivariate(int order);

}  // namespace kernels
