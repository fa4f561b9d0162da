#pragma once

// Text and DOT serialization of digraphs.
//
// Text format: first line "n m", then m lines "u v" (arc u->v, labels
// 1-based). Anything from '#' to end of line is a comment.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "kernels/digraph.hpp"

namespace kernels {

class parse_error : public std::runtime_error {
 public:
  parse_error(int line, int column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

Digraph parse_digraph(std::istream& is);
Digraph parse_digraph(const std::string& text);

std::string to_text(const Digraph& d);

// DOT rendering; red vertices are drawn filled when a coloring is given.
std::string to_dot(const Digraph& d, const Coloring* coloring = nullptr);

}  // namespace kernels
