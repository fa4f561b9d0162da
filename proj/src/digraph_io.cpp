#include "kernels/digraph_io.hpp"

#include <istream>
#include <sstream>

namespace kernels {

namespace {

// Reads the next integer on the (comment-stripped) line, tracking columns.
bool next_int(const std::string& line, size_t& pos, int line_no, long& out) {
  while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos])))
    ++pos;
  if (pos >= line.size()) return false;
  size_t start = pos;
  if (line[pos] == '-' || line[pos] == '+') ++pos;
  while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos])))
    ++pos;
  if (pos == start + (line[start] == '-' || line[start] == '+' ? 1 : 0))
    throw parse_error(line_no, static_cast<int>(start) + 1,
                      "expected an integer");
  out = std::stol(line.substr(start, pos - start));
  return true;
}

struct LineReader {
  std::istream& is;
  int line_no = 0;
  std::string line;
  size_t pos = 0;

  // Advances to the next line with content; false at EOF.
  bool next_content_line() {
    while (std::getline(is, line)) {
      ++line_no;
      if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
      pos = 0;
      for (char ch : line)
        if (!std::isspace(static_cast<unsigned char>(ch))) return true;
    }
    return false;
  }

  long read_int(const char* what) {
    long v;
    while (true) {
      if (pos < line.size() && next_int(line, pos, line_no, v)) return v;
      if (!next_content_line())
        throw parse_error(line_no, static_cast<int>(pos) + 1,
                          std::string("unexpected end of input, expected ") +
                              what);
    }
  }
};

}  // namespace

Digraph parse_digraph(std::istream& is) {
  LineReader r{is};
  long n = r.read_int("vertex count");
  long m = r.read_int("arc count");
  if (n < 0 || n > 1'000'000)
    throw parse_error(r.line_no, 1, "vertex count out of range");
  if (m < 0)
    throw parse_error(r.line_no, 1, "negative arc count");
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<size_t>(m));
  for (long i = 0; i < m; ++i) {
    long u = r.read_int("arc tail");
    long v = r.read_int("arc head");
    arcs.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  try {
    return Digraph(static_cast<int>(n), std::move(arcs));
  } catch (const std::invalid_argument& e) {
    throw parse_error(r.line_no, 1, e.what());
  }
}

Digraph parse_digraph(const std::string& text) {
  std::istringstream is(text);
  return parse_digraph(is);
}

std::string to_text(const Digraph& d) {
  std::ostringstream os;
  os << d.order() << ' ' << d.arc_count() << '\n';
  for (auto [u, v] : d.arcs()) os << u << ' ' << v << '\n';
  return os.str();
}

std::string to_dot(const Digraph& d, const Coloring* coloring) {
  std::ostringstream os;
  os << "digraph {\n";
  for (int v = 1; v <= d.order(); ++v) {
    os << "  " << v;
    if (coloring && (*coloring)[v] == Color::Red) os << " [style=filled]";
    os << ";\n";
  }
  for (auto [u, v] : d.arcs()) os << "  " << u << " -> " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace kernels
