#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zonomtt/theorems.hpp"

namespace py = pybind11;
using namespace zonomtt;

namespace {

// Matrices cross the boundary as nested lists; entries are ints or
// `p/q` strings, results come back as strings to stay exact.
RatMat mat_from_py(const std::vector<std::vector<py::object>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows[0].size() : 0;
  RatMat m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged matrix");
    for (std::size_t j = 0; j < c; ++j) {
      const py::object& v = rows[i][j];
      if (py::isinstance<py::int_>(v))
        m(i, j) = Rat(Int(py::str(v).cast<std::string>()));
      else
        m(i, j) = parse_rat(v.cast<std::string>());
    }
  }
  return m;
}

std::vector<std::vector<std::string>> mat_to_py(const RatMat& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out[i].resize(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = to_string(m(i, j));
  }
  return out;
}

Graph graph_from_py(std::size_t n,
                    const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                    const std::optional<std::vector<std::string>>& weights) {
  Graph g;
  g.n = n;
  g.edges = edges;
  if (weights) {
    std::vector<Rat> w;
    for (const auto& s : *weights) w.push_back(parse_rat(s));
    g.weights = std::move(w);
  }
  return g;
}

py::dict report_to_py(const CheckReport& r) {
  py::dict q;
  for (const auto& [k, v] : r.quantities) q[py::str(k)] = v;
  py::dict d;
  d["theorem"] = r.theorem_id;
  d["passed"] = r.passed;
  d["quantities"] = q;
  d["notes"] = r.notes;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact zonotope volume and matrix tree theorem checks";

  using Rows = std::vector<std::vector<py::object>>;
  using Edges = std::vector<std::pair<std::size_t, std::size_t>>;
  using Weights = std::optional<std::vector<std::string>>;

  m.def("det", [](const Rows& a) { return to_string(det(mat_from_py(a))); });
  m.def("rank", [](const Rows& a) { return rank(mat_from_py(a)); });
  m.def("char_poly", [](const Rows& a) {
    Poly p = char_poly(mat_from_py(a));
    std::vector<std::string> out;
    for (const Rat& c : p.coefficients) out.push_back(to_string(c));
    return out;
  });
  m.def("product_nonzero_eigenvalues", [](const Rows& a) {
    return to_string(product_nonzero_eigenvalues(mat_from_py(a)));
  });
  m.def("hnf", [](const Rows& a) {
    return mat_to_py(to_rat(hnf(to_int(mat_from_py(a)))));
  });
  m.def("lattices_equal", [](const Rows& a, const Rows& b) {
    return lattices_equal(to_int(mat_from_py(a)), to_int(mat_from_py(b)));
  });
  m.def("is_unimodular",
        [](const Rows& a) { return is_unimodular(to_int(mat_from_py(a))); });
  m.def("is_totally_unimodular", [](const Rows& a) {
    return is_totally_unimodular(to_int(mat_from_py(a)));
  });
  m.def("bases", [](const Rows& a) {
    RepMatroid mt(to_int(mat_from_py(a)));
    std::vector<std::vector<std::size_t>> out(mt.bases().begin(),
                                              mt.bases().end());
    return out;
  });
  m.def("cocircuits", [](const Rows& a) {
    RepMatroid mt(to_int(mat_from_py(a)));
    std::vector<std::vector<int>> out;
    for (const auto& c : mt.cocircuits()) out.push_back(c.entries);
    return out;
  });
  m.def("volume",
        [](const Rows& a) { return to_string(volume(mat_from_py(a))); });
  m.def("contains", [](const Rows& a, const std::vector<std::string>& p) {
    std::vector<Rat> point;
    for (const auto& s : p) point.push_back(parse_rat(s));
    return contains(mat_from_py(a), point);
  });
  m.def(
      "incidence_matrix",
      [](std::size_t n, const Edges& edges) {
        return mat_to_py(to_rat(incidence_matrix(graph_from_py(n, edges, {}))));
      },
      py::arg("n"), py::arg("edges"));
  m.def(
      "laplacian",
      [](std::size_t n, const Edges& edges) {
        return mat_to_py(to_rat(laplacian(graph_from_py(n, edges, {}))));
      },
      py::arg("n"), py::arg("edges"));
  m.def(
      "spanning_tree_count",
      [](std::size_t n, const Edges& edges) {
        return spanning_tree_count(graph_from_py(n, edges, {})).str();
      },
      py::arg("n"), py::arg("edges"));
  m.def(
      "weighted_tree_sum",
      [](std::size_t n, const Edges& edges, const std::vector<std::string>& w) {
        return to_string(weighted_tree_sum(graph_from_py(n, edges, w)));
      },
      py::arg("n"), py::arg("edges"), py::arg("weights"));
  m.def(
      "check_matroid_mtt",
      [](const Rows& a) {
        return report_to_py(check_matroid_mtt(to_int(mat_from_py(a))));
      });
  m.def(
      "check_classical_mtt",
      [](std::size_t n, const Edges& edges) {
        return report_to_py(check_classical_mtt(graph_from_py(n, edges, {})));
      },
      py::arg("n"), py::arg("edges"));
  m.def("check_cocircuit_lattice", [](const Rows& a) {
    return report_to_py(check_cocircuit_lattice(to_int(mat_from_py(a))));
  });
  m.def("check_barycenter_lattice", [](const Rows& a) {
    return report_to_py(check_barycenter_lattice(to_int(mat_from_py(a))));
  });
  m.def("check_thm4", [](const Rows& a) {
    return report_to_py(check_thm4(mat_from_py(a)));
  });
}
