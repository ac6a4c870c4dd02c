#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "zonomtt/theorems.hpp"

namespace {

using nlohmann::json;
using namespace zonomtt;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct Inputs {
  std::string matrix_path, graph_path, weights_path;
  std::optional<RatMat> matrix;
  std::optional<Graph> graph;
  std::optional<std::vector<Rat>> weights;

  void load() {
    if (matrix_path.empty() == graph_path.empty())
      throw std::invalid_argument("exactly one of --matrix or --graph is required");
    if (!matrix_path.empty()) matrix = parse_matrix(slurp(matrix_path));
    if (!graph_path.empty()) graph = parse_graph(slurp(graph_path));
    if (!weights_path.empty()) {
      std::istringstream in(slurp(weights_path));
      std::vector<Rat> w;
      std::string tok;
      while (in >> tok) w.push_back(parse_rat(tok));
      weights = std::move(w);
    } else if (graph && graph->weights) {
      weights = graph->weights;
    }
  }

  IntMat as_int_matrix() const {
    if (matrix) return to_int(*matrix);
    return incidence_matrix(*graph);
  }
};

json report_to_json(const CheckReport& r) {
  json q = json::object();
  for (const auto& [k, v] : r.quantities) q[k] = v;
  return json{{"theorem", r.theorem_id},
              {"passed", r.passed},
              {"quantities", q},
              {"notes", r.notes}};
}

void print_report(const CheckReport& r, bool as_json) {
  if (as_json) {
    std::cout << report_to_json(r).dump(2) << "\n";
    return;
  }
  std::cout << "theorem: " << r.theorem_id << "\n"
            << "passed:  " << (r.passed ? "yes" : "no") << "\n";
  for (const auto& [k, v] : r.quantities)
    std::cout << "  " << k << " = " << v << "\n";
  if (!r.notes.empty()) std::cout << "  notes: " << r.notes << "\n";
}

std::vector<Int> integer_diagonal(const std::vector<Rat>& w) {
  std::vector<Int> d;
  d.reserve(w.size());
  for (const Rat& x : w) {
    if (!is_integer(x))
      throw std::invalid_argument("scaled check needs an integer diagonal");
    d.push_back(num(x));
  }
  return d;
}

CheckReport run_check(const std::string& name, const Inputs& in,
                      const CheckOptions& opt) {
  if (name == "mtt") {
    if (in.graph) return check_classical_mtt(*in.graph, opt);
    return check_matroid_mtt(in.as_int_matrix(), opt);
  }
  if (name == "cocircuit-lattice")
    return check_cocircuit_lattice(in.as_int_matrix(), opt);
  if (name == "barycenter-lattice")
    return check_barycenter_lattice(in.as_int_matrix(), opt);
  if (name == "scaled") {
    IntMat m = in.graph ? reduced_incidence(*in.graph, 1)
                        : row_lattice_basis(in.as_int_matrix());
    std::vector<Rat> w =
        in.weights ? *in.weights : std::vector<Rat>(m.cols(), Rat(1));
    return check_scaled(m, integer_diagonal(w), opt);
  }
  if (name == "weighted") {
    IntMat m = in.graph ? reduced_incidence(*in.graph, 1)
                        : row_lattice_basis(in.as_int_matrix());
    std::vector<Rat> w =
        in.weights ? *in.weights : std::vector<Rat>(m.cols(), Rat(1));
    return check_weighted(m, w, opt);
  }
  if (name == "zl-decomposition")
    return check_zl_decomposition(in.as_int_matrix(), opt);
  if (name == "corank") return check_corank_mtt(in.as_int_matrix(), opt);
  if (name == "rearrange") {
    IntMat m = in.graph ? reduced_incidence(*in.graph, 1)
                        : row_lattice_basis(in.as_int_matrix());
    return check_rearrange(m, opt);
  }
  if (name == "mcmullen") return check_mcmullen(in.as_int_matrix(), opt);
  if (name == "prism") {
    if (!in.graph) throw std::invalid_argument("prism check needs --graph");
    return check_prism(*in.graph, opt);
  }
  if (name == "thm4") {
    RatMat b;
    if (in.graph) {
      IntMat l = laplacian(*in.graph);
      for (std::size_t i = 0; i < l.rows(); ++i)
        for (std::size_t j = 0; j < l.cols(); ++j) l(i, j) += 1;
      b = to_rat(l);
    } else {
      b = *in.matrix;
    }
    return check_thm4(b, opt);
  }
  throw std::invalid_argument("unknown check: " + name);
}

const std::vector<std::string> kAllChecks = {
    "mtt",          "cocircuit-lattice", "barycenter-lattice", "scaled",
    "weighted",     "zl-decomposition",  "corank",             "rearrange",
    "mcmullen",     "prism",             "thm4"};

std::vector<CheckReport> run_suite(const Inputs& in, const CheckOptions& opt) {
  std::vector<CheckReport> reports;
  for (const auto& name : kAllChecks) {
    if (name == "prism" && !in.graph) continue;
    if (name == "thm4" && !in.graph) {
      if (in.matrix->rows() != in.matrix->cols() || det(*in.matrix) == 0)
        continue;
    }
    reports.push_back(run_check(name, in, opt));
    if (name == "mtt" && in.graph) {
      // the graph route runs the classical theorem; add the matroid form
      // on the reduced incidence matrix as well
      Inputs reduced;
      reduced.matrix = to_rat(reduced_incidence(*in.graph, 1));
      reports.push_back(run_check("mtt", reduced, opt));
    }
  }
  std::sort(reports.begin(), reports.end(),
            [](const CheckReport& a, const CheckReport& b) {
              return a.theorem_id < b.theorem_id;
            });
  return reports;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zonomtt: exact checks for the polyhedral matrix tree theorem"};
  app.require_subcommand(1);

  Inputs in;
  CheckOptions opt;
  std::string format = "text";
  std::string check_name;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--matrix", in.matrix_path, "matrix file");
    cmd->add_option("--graph", in.graph_path, "graph file");
    cmd->add_option("--weights", in.weights_path, "weights file, one rational per line");
    cmd->add_option("--seed", opt.seed, "sampling seed");
    cmd->add_option("--samples", opt.samples, "sample count");
    cmd->add_option("--tol", opt.tol, "numeric tolerance");
    cmd->add_option("--cap", opt.cap, "enumeration cap");
    cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  auto* volume_cmd = app.add_subcommand("volume", "lattice-normalized zonotope volume");
  add_common(volume_cmd);
  auto* bases_cmd = app.add_subcommand("bases", "bases of the column matroid");
  add_common(bases_cmd);
  auto* cocircuits_cmd = app.add_subcommand("cocircuits", "canonical signed cocircuits");
  add_common(cocircuits_cmd);
  auto* laplacian_cmd = app.add_subcommand("laplacian", "graph Laplacian matrix");
  add_common(laplacian_cmd);
  auto* check_cmd = app.add_subcommand("check", "run one theorem checker");
  check_cmd->add_option("name", check_name, "checker name")->required();
  add_common(check_cmd);
  auto* suite_cmd = app.add_subcommand("suite", "run every checker");
  add_common(suite_cmd);

  CLI11_PARSE(app, argc, argv);

  try {
    in.load();
    bool as_json = format == "json";

    if (volume_cmd->parsed()) {
      RatMat m = in.matrix ? *in.matrix : to_rat(incidence_matrix(*in.graph));
      Rat v = volume(m, opt.cap);
      if (as_json)
        std::cout << json{{"volume", to_string(v)}}.dump(2) << "\n";
      else
        std::cout << to_string(v) << "\n";
      return 0;
    }
    if (bases_cmd->parsed()) {
      RepMatroid m(in.as_int_matrix(), opt.cap);
      const auto& bs = m.bases();
      if (as_json) {
        json arr = json::array();
        for (const auto& b : bs) {
          json idx = json::array();
          for (std::size_t j : b) idx.push_back(j + 1);
          arr.push_back(idx);
        }
        std::cout << json{{"count", bs.size()}, {"bases", arr}}.dump(2) << "\n";
      } else {
        std::cout << bs.size() << "\n";
        for (const auto& b : bs) {
          for (std::size_t k = 0; k < b.size(); ++k)
            std::cout << (k ? " " : "") << b[k] + 1;
          std::cout << "\n";
        }
      }
      return 0;
    }
    if (cocircuits_cmd->parsed()) {
      RepMatroid m(in.as_int_matrix(), opt.cap);
      const auto& cs = m.cocircuits();
      if (as_json) {
        json arr = json::array();
        for (const auto& c : cs) arr.push_back(c.entries);
        std::cout << json{{"count", cs.size()}, {"cocircuits", arr}}.dump(2)
                  << "\n";
      } else {
        std::cout << cs.size() << "\n";
        for (const auto& c : cs) {
          for (std::size_t k = 0; k < c.entries.size(); ++k)
            std::cout << (k ? " " : "") << c.entries[k];
          std::cout << "\n";
        }
      }
      return 0;
    }
    if (laplacian_cmd->parsed()) {
      if (!in.graph) throw std::invalid_argument("laplacian needs --graph");
      RatMat l = in.graph->weights ? weighted_laplacian(*in.graph)
                                   : to_rat(laplacian(*in.graph));
      if (as_json) {
        json rows = json::array();
        for (std::size_t i = 0; i < l.rows(); ++i) {
          json row = json::array();
          for (std::size_t j = 0; j < l.cols(); ++j)
            row.push_back(to_string(l(i, j)));
          rows.push_back(row);
        }
        std::cout << json{{"laplacian", rows}}.dump(2) << "\n";
      } else {
        std::cout << format_matrix(l);
      }
      return 0;
    }
    if (check_cmd->parsed()) {
      CheckReport r = run_check(check_name, in, opt);
      print_report(r, as_json);
      return r.passed ? 0 : 1;
    }
    if (suite_cmd->parsed()) {
      auto reports = run_suite(in, opt);
      bool all = true;
      if (as_json) {
        json arr = json::array();
        for (const auto& r : reports) {
          arr.push_back(report_to_json(r));
          all = all && r.passed;
        }
        std::cout << arr.dump(2) << "\n";
      } else {
        for (const auto& r : reports) {
          print_report(r, false);
          std::cout << "\n";
          all = all && r.passed;
        }
      }
      return all ? 0 : 1;
    }
  } catch (const cap_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
