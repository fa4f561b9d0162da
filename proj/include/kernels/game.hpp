#pragma once

// The Nim-type token game: players alternate moving a token along arcs, the
// first player unable to move loses. On a DAG the losing positions are
// exactly the kernel vertices.

#include <optional>
#include <vector>

#include "kernels/digraph.hpp"

namespace kernels {

// Vertices from which the player to move loses, by backward induction.
// Throws circuit_error on non-DAGs; the result is asserted to coincide with
// dag_kernel(d).
std::vector<int> losing_positions(const Digraph& d);

// From v: the smallest child that is a losing position (a winning move) if
// one exists, otherwise the smallest child, otherwise nothing (v is a sink).
std::optional<int> optimal_move(const Digraph& d, int v);

// True iff the player to move from v0 wins under optimal play, i.e. v0 is
// not a losing position (on a well-colored tree: v0 is green).
bool first_player_wins(const Digraph& d, int v0);

// Kernel-guided move on an arbitrary digraph with a known kernel: smallest
// child inside the kernel if any, else smallest child. No optimality claim
// outside DAGs.
std::optional<int> kernel_move_hint(const Digraph& d,
                                    const std::vector<int>& kernel, int v);

}  // namespace kernels
