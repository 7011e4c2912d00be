#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qws/analysis.hpp"
#include "qws/errors.hpp"
#include "qws/report.hpp"
#include "qws/simulate.hpp"
#include "qws/verify.hpp"

namespace {

// Exit codes: 0 success, 1 criterion failure, 2 configuration error,
// 3 numerical-consistency error, 4 I/O error.
enum ExitCode { kOk = 0, kCriterionFail = 1, kConfig = 2, kNumerical = 3, kIo = 4 };

struct FamilyOptions {
  std::string family;
  int n = 0;       // complete/bipartite N, hypercube n
  int dim = 2;     // torus D
  int side = 0;    // torus L
  std::string graph_file;
  std::string marked = "first";
};

void add_family_options(CLI::App* cmd, FamilyOptions& opt) {
  cmd->add_option("--family", opt.family,
                  "complete | hypercube | bipartite | torus | custom")
      ->required();
  cmd->add_option("--n", opt.n, "vertex count N (complete, bipartite) or dimension n (hypercube)");
  cmd->add_option("--dim", opt.dim, "torus dimension D (default 2)");
  cmd->add_option("--side", opt.side, "torus side length L");
  cmd->add_option("--graph", opt.graph_file, "adjacency-list file (custom family)");
  cmd->add_option("--marked", opt.marked,
                  "comma-separated vertex indices, or 'first' or 'antipodal'");
}

qws::RegularGraph build_graph(const FamilyOptions& opt) {
  if (opt.family == "complete") return qws::build_complete(opt.n);
  if (opt.family == "hypercube") return qws::build_hypercube(opt.n);
  if (opt.family == "bipartite") return qws::build_complete_bipartite(opt.n);
  if (opt.family == "torus") {
    if (opt.side <= 0)
      throw qws::invalid_parameter("torus needs --side (and optionally --dim)");
    return qws::build_torus(opt.dim, opt.side);
  }
  if (opt.family == "custom") {
    if (opt.graph_file.empty())
      throw qws::invalid_parameter("custom family needs --graph FILE");
    return qws::load_graph(opt.graph_file);
  }
  throw qws::invalid_parameter("unknown family: " + opt.family);
}

qws::MarkedSet parse_marked(const qws::RegularGraph& g, const std::string& spec) {
  if (spec == "first") return qws::make_marked(g, {0});
  if (spec == "antipodal") return qws::antipodal_marks(g);
  std::vector<int> vertices;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      vertices.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw qws::invalid_parameter("bad marked vertex: " + item);
    }
  }
  return qws::make_marked(g, vertices);
}

void emit_json(const qws::json& j, const std::string& out) {
  if (out.empty() || out == "-")
    std::cout << j.dump(2) << '\n';
  else
    qws::write_json(j, out);
}

int parse_steps(const std::string& steps, const qws::RegularGraph& g) {
  if (steps == "auto") return qws::auto_steps(g);
  int value = 0;
  try {
    value = std::stoi(steps);
  } catch (const std::exception&) {
    throw qws::invalid_parameter("steps must be an integer or 'auto'");
  }
  return value;  // run_search rejects values < 1
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coined quantum-walk search: simulation, subspace reduction, "
               "spectral analysis"};
  app.require_subcommand(1);

  FamilyOptions sim_opt;
  std::string sim_steps = "auto";
  bool record_basis = false;
  std::string sim_out;
  CLI::App* sim = app.add_subcommand(
      "simulate", "run the search walk and write the per-step series as CSV");
  add_family_options(sim, sim_opt);
  sim->add_option("--steps", sim_steps, "step count or 'auto'");
  sim->add_flag("--record-basis", record_basis,
                "record reduced-basis probabilities per step");
  sim->add_option("--out", sim_out, "output CSV path (default stdout)");

  FamilyOptions red_opt;
  std::string red_out;
  CLI::App* red = app.add_subcommand(
      "reduce", "emit the type partition, basis counts and reduced operators");
  add_family_options(red, red_opt);
  red->add_option("--out", red_out, "output JSON path (default stdout)");

  FamilyOptions spec_opt;
  std::string spec_out;
  CLI::App* spec = app.add_subcommand(
      "spectrum", "eigendecompose the reduced search operator");
  add_family_options(spec, spec_opt);
  spec->add_option("--out", spec_out, "output JSON path (default stdout)");

  std::string dbl_family;
  std::vector<int> dbl_sizes;
  int dbl_dim = 2;
  std::string dbl_marked = "first";
  std::string dbl_out;
  CLI::App* dbl = app.add_subcommand(
      "check-doubling", "evaluate the coupling ratio over a size ladder");
  dbl->add_option("--family", dbl_family,
                  "complete | hypercube | bipartite | torus")
      ->required();
  dbl->add_option("--sizes", dbl_sizes, "size ladder (N, n, or L per family)")
      ->required()
      ->delimiter(',');
  dbl->add_option("--dim", dbl_dim, "torus dimension D (default 2)");
  dbl->add_option("--marked", dbl_marked, "'first' or 'antipodal'");
  dbl->add_option("--out", dbl_out, "output JSON path (default stdout)");

  CLI::App* ver = app.add_subcommand(
      "verify", "run the acceptance suite and print per-criterion results");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }

  try {
    if (sim->parsed()) {
      const qws::RegularGraph g = build_graph(sim_opt);
      const qws::MarkedSet m = parse_marked(g, sim_opt.marked);
      const int steps = parse_steps(sim_steps, g);
      const qws::SimulationSeries series =
          qws::run_search(g, m, steps, record_basis);
      if (sim_out.empty() || sim_out == "-")
        qws::write_csv(series, std::cout);
      else
        qws::write_csv(series, sim_out);
    } else if (red->parsed()) {
      const qws::RegularGraph g = build_graph(red_opt);
      const qws::MarkedSet m = parse_marked(g, red_opt.marked);
      const qws::ReducedSystem rs = qws::reduce_system(g, m);
      const qws::ReducedOperator u0 =
          qws::reduced_operator(rs.partition, rs.basis, false);
      const qws::ReducedOperator u =
          qws::reduced_operator(rs.partition, rs.basis, true);
      emit_json(qws::reduced_report(g, rs.partition, rs.basis, u0, u), red_out);
    } else if (spec->parsed()) {
      const qws::RegularGraph g = build_graph(spec_opt);
      const qws::MarkedSet m = parse_marked(g, spec_opt.marked);
      const qws::ReducedSystem rs = qws::reduce_system(g, m);
      const qws::SpectralReport rep =
          qws::spectrum(qws::reduced_operator(rs.partition, rs.basis, true));
      emit_json(qws::spectral_report_json(rep), spec_out);
    } else if (dbl->parsed()) {
      std::vector<std::pair<qws::RegularGraph, qws::MarkedSet>> ladder;
      for (int size : dbl_sizes) {
        FamilyOptions opt;
        opt.family = dbl_family;
        opt.dim = dbl_dim;
        if (dbl_family == "torus")
          opt.side = size;
        else
          opt.n = size;
        qws::RegularGraph g = build_graph(opt);
        qws::MarkedSet m = parse_marked(g, dbl_marked);
        ladder.emplace_back(std::move(g), std::move(m));
      }
      const qws::DoublingReport rep = qws::doubling_condition(ladder);
      emit_json(qws::doubling_report_json(rep), dbl_out);
    } else if (ver->parsed()) {
      bool all_pass = true;
      for (const qws::CriterionResult& r : qws::run_all_criteria()) {
        all_pass = all_pass && r.pass;
        std::printf("criterion %2d %-26s %s  %s\n", r.id, r.name.c_str(),
                    r.pass ? "PASS" : "FAIL", r.detail.c_str());
      }
      std::printf("%s\n", all_pass ? "all criteria pass" : "criteria failed");
      return all_pass ? kOk : kCriterionFail;
    }
  } catch (const qws::invalid_parameter& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfig;
  } catch (const qws::dimension_mismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfig;
  } catch (const qws::numerical_error& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kNumerical;
  } catch (const qws::io_error& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kIo;
  }
  return kOk;
}
