#include "zonomtt/graph.hpp"

#include <sstream>
#include <stdexcept>

namespace zonomtt {

bool Graph::is_connected() const {
  if (n == 0) return false;
  std::vector<char> seen(n + 1, 0);
  std::vector<std::size_t> stack{1};
  seen[1] = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (const auto& [t, h] : edges) {
      std::size_t w = 0;
      if (t == v) w = h;
      else if (h == v) w = t;
      if (w && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  for (std::size_t v = 1; v <= n; ++v)
    if (!seen[v]) return false;
  return true;
}

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
  throw std::invalid_argument("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  Graph g;
  bool have_n = false;
  bool have_weights = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok[0] == '#') continue;
    if (!have_n) {
      try {
        g.n = std::stoul(tok);
      } catch (const std::exception&) {
        parse_fail(line_no, "expected vertex count, got '" + tok + "'");
      }
      have_n = true;
      continue;
    }
    std::size_t tail, head;
    try {
      tail = std::stoul(tok);
    } catch (const std::exception&) {
      parse_fail(line_no, "bad tail vertex '" + tok + "'");
    }
    std::string tok2;
    if (!(ls >> tok2)) parse_fail(line_no, "missing head vertex");
    try {
      head = std::stoul(tok2);
    } catch (const std::exception&) {
      parse_fail(line_no, "bad head vertex '" + tok2 + "'");
    }
    if (tail == 0 || tail > g.n || head == 0 || head > g.n)
      parse_fail(line_no, "vertex index out of range [1, " +
                              std::to_string(g.n) + "]");
    std::string wtok;
    if (ls >> wtok) {
      Rat w;
      try {
        w = parse_rat(wtok);
      } catch (const std::exception&) {
        parse_fail(line_no, "bad weight '" + wtok + "'");
      }
      if (!g.weights) {
        if (!g.edges.empty())
          parse_fail(line_no, "weight given after unweighted edges");
        g.weights.emplace();
      }
      g.weights->push_back(w);
      have_weights = true;
    } else if (have_weights) {
      parse_fail(line_no, "missing weight on weighted graph edge");
    }
    g.edges.emplace_back(tail, head);
  }
  if (!have_n) throw std::invalid_argument("empty graph file");
  return g;
}

IntMat incidence_matrix(const Graph& g) {
  IntMat n(g.n, g.edges.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    auto [tail, head] = g.edges[e];
    if (tail == head) continue;  // loop: zero column
    n(tail - 1, e) = -1;
    n(head - 1, e) = 1;
  }
  return n;
}

IntMat laplacian(const Graph& g) {
  IntMat n = incidence_matrix(g);
  return n * n.transpose();
}

RatMat weighted_laplacian(const Graph& g) {
  if (!g.weights) throw std::invalid_argument("weighted_laplacian: no weights");
  RatMat n = to_rat(incidence_matrix(g));
  RatMat nd = n;
  for (std::size_t j = 0; j < nd.cols(); ++j)
    for (std::size_t i = 0; i < nd.rows(); ++i) nd(i, j) *= (*g.weights)[j];
  return nd * n.transpose();
}

namespace {

// Deletion-contraction on a multigraph given as an edge list over vertex
// labels; weights of 1 make it the plain spanning tree count.
Rat tree_sum(std::size_t n_vertices,
             std::vector<std::pair<std::size_t, std::size_t>> edges,
             std::vector<Rat> weights) {
  // strip loops
  for (std::size_t e = 0; e < edges.size();) {
    if (edges[e].first == edges[e].second) {
      edges.erase(edges.begin() + e);
      weights.erase(weights.begin() + e);
    } else {
      ++e;
    }
  }
  if (edges.empty()) return n_vertices <= 1 ? Rat(1) : Rat(0);

  auto [u, v] = edges.back();
  Rat w = weights.back();
  edges.pop_back();
  weights.pop_back();

  Rat deleted = tree_sum(n_vertices, edges, weights);

  // contract v into u
  for (auto& [a, b] : edges) {
    if (a == v) a = u;
    if (b == v) b = u;
  }
  Rat contracted = tree_sum(n_vertices - 1, std::move(edges), std::move(weights));
  return deleted + w * contracted;
}

Rat tree_sum_of(const Graph& g, bool weighted) {
  if (!g.is_connected()) return 0;
  std::vector<Rat> w(g.edges.size(), Rat(1));
  if (weighted) {
    if (!g.weights) throw std::invalid_argument("weighted_tree_sum: no weights");
    w = *g.weights;
  }
  return tree_sum(g.n, g.edges, std::move(w));
}

}  // namespace

Int spanning_tree_count(const Graph& g) {
  Rat s = tree_sum_of(g, false);
  return num(s);
}

Rat weighted_tree_sum(const Graph& g) { return tree_sum_of(g, true); }

IntMat reduced_incidence(const Graph& g, std::size_t drop_vertex) {
  if (!g.is_connected())
    throw std::invalid_argument("reduced_incidence: graph is not connected");
  if (drop_vertex == 0 || drop_vertex > g.n)
    throw std::invalid_argument("reduced_incidence: vertex out of range");
  IntMat n = incidence_matrix(g);
  IntMat r(g.n - 1, n.cols());
  std::size_t ri = 0;
  for (std::size_t i = 0; i < g.n; ++i) {
    if (i + 1 == drop_vertex) continue;
    for (std::size_t j = 0; j < n.cols(); ++j) r(ri, j) = n(i, j);
    ++ri;
  }
  return r;
}

RatMat parse_matrix(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0, rows = 0, cols = 0, row = 0;
  RatMat m;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok[0] == '#') continue;
    if (!have_header) {
      std::string tok2;
      if (!(ls >> tok2)) parse_fail(line_no, "expected 'rows cols'");
      try {
        rows = std::stoul(tok);
        cols = std::stoul(tok2);
      } catch (const std::exception&) {
        parse_fail(line_no, "bad matrix header");
      }
      m = RatMat(rows, cols);
      have_header = true;
      continue;
    }
    if (row >= rows) parse_fail(line_no, "more rows than declared");
    for (std::size_t j = 0; j < cols; ++j) {
      if (j > 0 && !(ls >> tok)) parse_fail(line_no, "row too short");
      try {
        m(row, j) = parse_rat(tok);
      } catch (const std::exception&) {
        parse_fail(line_no, "bad entry '" + tok + "'");
      }
    }
    ++row;
  }
  if (!have_header) throw std::invalid_argument("empty matrix file");
  if (row != rows) throw std::invalid_argument("fewer rows than declared");
  return m;
}

std::string format_matrix(const RatMat& m) {
  std::ostringstream out;
  out << m.rows() << " " << m.cols() << "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      out << (j ? " " : "") << to_string(m(i, j));
    out << "\n";
  }
  return out.str();
}

}  // namespace zonomtt
