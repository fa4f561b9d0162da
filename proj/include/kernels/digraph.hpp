#pragma once

// Digraph data model and kernel machinery: the well-coloring predicate,
// the unique-kernel algorithm for DAGs, exhaustive kernel enumeration by
// backtracking with unit propagation, and structural classification
// (tree / DAG / unicircuit / unicycle).
//
// Vertices are labeled 1..n throughout. A kernel is a nonempty independent
// dominating vertex set; equivalently, the red class of a coloring in which
// no red vertex has a red out-neighbor and every green vertex has one.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kernels {

enum class Color : unsigned char { Red, Green };

// Total color assignment for vertices 1..n (slot 0 unused).
class Coloring {
 public:
  explicit Coloring(int n, Color fill = Color::Green) : color_(n + 1, fill) {}
  Coloring(int n, const std::vector<int>& red_set);

  int size() const { return static_cast<int>(color_.size()) - 1; }
  Color operator[](int v) const { return color_[v]; }
  Color& operator[](int v) { return color_[v]; }

  std::vector<int> red_vertices() const;

 private:
  std::vector<Color> color_;
};

// Raised by DAG-only operations when the input contains a directed circuit;
// carries one circuit as a witness.
class circuit_error : public std::domain_error {
 public:
  circuit_error(const std::string& what, std::vector<int> witness)
      : std::domain_error(what), circuit_(std::move(witness)) {}
  const std::vector<int>& circuit() const { return circuit_; }

 private:
  std::vector<int> circuit_;
};

using Arc = std::pair<int, int>;

// Directed graph without loops or same-direction parallel arcs. Opposite
// pairs u->v, v->u (digons) are legal and count as a length-2 circuit.
// Immutable after construction.
class Digraph {
 public:
  Digraph(int n, std::vector<Arc> arcs);

  int order() const { return n_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<int>& out(int v) const { return out_[v]; }
  const std::vector<int>& in(int v) const { return in_[v]; }
  bool has_arc(int u, int v) const;

 private:
  int n_;
  std::vector<Arc> arcs_;             // sorted, unique
  std::vector<std::vector<int>> out_; // out_[v] sorted
  std::vector<std::vector<int>> in_;
};

// True iff every green vertex has a red out-neighbor and no red vertex has
// a red out-neighbor. The red class of such a coloring is a kernel.
bool is_well_colored(const Digraph& d, const Coloring& c);

// True iff k is nonempty, independent and dominating. Members must be
// vertices of d.
bool is_kernel(const Digraph& d, const std::vector<int>& k);

// The unique kernel of a DAG: vertices are processed children-first, a
// vertex turns red exactly when all of its out-neighbors are green.
// Throws circuit_error (with a witness) if d has a circuit.
std::vector<int> dag_kernel(const Digraph& d);

// All kernels of d, sorted lexicographically by member list; empty if d has
// none. Backtracking over vertex colors with unit propagation of the two
// coloring rules.
std::vector<std::vector<int>> enumerate_kernels(const Digraph& d);

enum class Family { Tree, Dag, Unicircuit, Unicycle, Other };

struct FamilyKind {
  Family family = Family::Other;
  bool weakly_connected = false;
  // Cyclomatic number of the underlying multigraph (a digon contributes two
  // parallel edges): |arcs| - n + #weak components.
  int cycle_count = 0;
  // Set when weakly connected with exactly one cycle.
  std::optional<bool> unique_cycle_is_circuit;
};

const char* family_name(Family f);

// Most specific label first: Tree, then Unicircuit/Unicycle (one cycle,
// split on whether it is a directed circuit), then Dag, else Other.
FamilyKind classify(const Digraph& d);

}  // namespace kernels
