#include "qws/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>

#include "qws/analysis.hpp"
#include "qws/errors.hpp"
#include "qws/simulate.hpp"

namespace qws {

namespace {

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list args;
  va_start(args, f);
  std::vsnprintf(buf, sizeof buf, f, args);
  va_end(args);
  return buf;
}

struct TimedRun {
  SimulationSeries series;
  double seconds = 0.0;
};

// Criteria 1-3 and 8 share the same 80-step run on the 1024-vertex complete
// graph with basis recording.
const TimedRun& complete_1024_run() {
  static const TimedRun run = [] {
    const auto t0 = std::chrono::steady_clock::now();
    const RegularGraph g = build_complete(1024);
    const MarkedSet m = make_marked(g, {0});
    TimedRun r;
    r.series = run_search(g, m, 80, true);
    r.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    return r;
  }();
  return run;
}

int argmax_boosted(const SimulationSeries& s) {
  int best = 0;
  for (const StepRecord& rec : s.steps)
    if (rec.report.boosted_success > s.steps[best].report.boosted_success)
      best = rec.t;
  return best;
}

WalkState random_state(const RegularGraph& g, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  WalkState s;
  s.amp.resize(g.arc_count());
  for (cplx& a : s.amp) a = cplx(dist(rng), dist(rng));
  const double n = s.norm();
  for (cplx& a : s.amp) a /= n;
  return s;
}

CriterionResult c01_success_curve() {
  const TimedRun& run = complete_1024_run();
  const int iab = 0, iba = 1;  // basis order: ab, ba, bb
  const StepRecord& rec = run.series.steps[36];
  const double pab = rec.basis_probs[iab], pba = rec.basis_probs[iba];
  const bool pass = rec.t == 36 && pab >= 0.47 && pab <= 0.53 && pba >= 0.47 &&
                    pba <= 0.53 && run.seconds < 10.0;
  return {1, criterion_name(1), pass,
          fmt("P_ab(36)=%.6f P_ba(36)=%.6f elapsed=%.2fs", pab, pba,
              run.seconds)};
}

CriterionResult c02_boosted_success() {
  const TimedRun& run = complete_1024_run();
  const StepRecord& rec = run.series.steps[36];
  const double pos = rec.report.position_success;
  const double boo = rec.report.boosted_success;
  const bool pass = boo >= 0.95 && pos >= 0.47 && pos <= 0.53;
  return {2, criterion_name(2), pass,
          fmt("position(36)=%.6f boosted(36)=%.6f", pos, boo)};
}

CriterionResult c03_difference_bound() {
  const TimedRun& run = complete_1024_run();
  const DifferenceBound db = difference_bound_check(run.series, 1024);
  return {3, criterion_name(3), db.pass,
          fmt("max|P_ab-P_ba|=%.6f bound+slack=%.6f", db.max_diff,
              db.bound + db.slack)};
}

CriterionResult c04_hypercube_doubling() {
  const RegularGraph g = build_hypercube(10);
  const MarkedSet single = make_marked(g, {0});
  const SimulationSeries s1 = run_search(g, single, 36, false);
  const double pos = s1.steps[36].report.position_success;
  const double boo = s1.steps[36].report.boosted_success;
  const bool single_ok =
      pos >= 0.40 && pos <= 0.60 && boo >= 2.0 * pos - 0.05;

  const MarkedSet anti = antipodal_marks(g);
  const SimulationSeries s2 = run_search(g, anti, 40, false);
  const int peak = argmax_boosted(s2);
  const double apos = s2.steps[peak].report.position_success;
  const double aboo = s2.steps[peak].report.boosted_success;
  const bool anti_ok = aboo >= 1.8 * apos;

  return {4, criterion_name(4), single_ok && anti_ok,
          fmt("single: pos(36)=%.6f boo(36)=%.6f; antipodal peak t=%d "
              "pos=%.6f boo=%.6f",
              pos, boo, peak, apos, aboo)};
}

CriterionResult c05_reduced_full_equivalence() {
  struct Case {
    const char* name;
    RegularGraph g;
  };
  const std::vector<Case> cases = {
      {"complete8", build_complete(8)},     {"complete32", build_complete(32)},
      {"hypercube3", build_hypercube(3)},   {"hypercube4", build_hypercube(4)},
      {"bipartite8", build_complete_bipartite(8)},
      {"bipartite16", build_complete_bipartite(16)},
      {"torus2x4", build_torus(2, 4)},      {"torus2x6", build_torus(2, 6)},
  };
  double worst_col = 0.0, worst_res = 0.0;
  for (const Case& c : cases) {
    const MarkedSet m = make_marked(c.g, {0});
    const ReducedSystem rs = reduce_system(c.g, m);
    for (const bool with_oracle : {true, false}) {
      const ReducedOperator op =
          reduced_operator(rs.partition, rs.basis, with_oracle);
      for (int i = 0; i < rs.basis.dimension(); ++i) {
        Eigen::VectorXcd e = Eigen::VectorXcd::Zero(rs.basis.dimension());
        e[i] = 1.0;
        const WalkState full = embed(c.g, rs.partition, rs.basis, e);
        const WalkState next = step(c.g, m, full, with_oracle);
        const Projection proj = project(c.g, rs.partition, rs.basis, next);
        worst_res = std::max(worst_res, proj.residual);
        worst_col = std::max(
            worst_col,
            (proj.coords - op.matrix.col(i)).cwiseAbs().maxCoeff());
      }
    }
  }
  const bool pass = worst_col <= 1e-10 && worst_res <= 1e-10;
  return {5, criterion_name(5), pass,
          fmt("max column error=%.2e max residual=%.2e over %zu graphs",
              worst_col, worst_res, cases.size())};
}

CriterionResult c06_reduced_matrix_golden() {
  double worst = 0.0;
  for (const int n : {6, 64, 1024}) {
    const RegularGraph g = build_complete(n);
    const MarkedSet m = make_marked(g, {0});
    const ReducedSystem rs = reduce_system(g, m);
    const ReducedOperator op = reduced_operator(rs.partition, rs.basis, true);
    const double c = static_cast<double>(n - 3) / (n - 1);
    const double s = 2.0 * std::sqrt(static_cast<double>(n - 2)) / (n - 1);
    Eigen::MatrixXcd expected(3, 3);
    expected << 0, -c, s, -1, 0, 0, 0, s, c;
    worst = std::max(worst, (op.matrix - expected).cwiseAbs().maxCoeff());
  }
  return {6, criterion_name(6), worst <= 1e-12,
          fmt("max entry error=%.2e over N in {6,64,1024}", worst)};
}

CriterionResult c07_spectral_closed_form() {
  double worst = 0.0;
  bool all_present = true;
  for (const int n : {16, 64, 256, 1024}) {
    const RegularGraph g = build_complete(n);
    const MarkedSet m = make_marked(g, {0});
    const ReducedSystem rs = reduce_system(g, m);
    const SpectralReport rep =
        spectrum(reduced_operator(rs.partition, rs.basis, true));
    if (!rep.closed_form) {
      all_present = false;
      continue;
    }
    worst = std::max(worst, rep.closed_form->max_residual);
  }
  const bool pass = all_present && worst <= 1e-10;
  return {7, criterion_name(7), pass,
          fmt("max eigenphase residual=%.2e over N in {16,64,256,1024}%s",
              worst, all_present ? "" : " (closed form missing)")};
}

CriterionResult c08_perturbation_prediction() {
  const int n = 1024;
  const RegularGraph g = build_complete(n);
  const MarkedSet m = make_marked(g, {0});
  const ReducedSystem rs = reduce_system(g, m);
  const ReducedOperator op = reduced_operator(rs.partition, rs.basis, true);
  const ReducedOperator prime = plus_minus_basis(
      op, op.basis.index_of("ab"), op.basis.index_of("ba"));
  const PerturbationResult pr = degenerate_perturbation(
      prime, prime.basis.index_of("-"), prime.basis.index_of("bb"));

  const double coupling = std::sqrt(2.0 / n);
  const cplx target(1.0, coupling);
  const double e_err = std::abs(pr.e_plus - target);
  const int empirical = argmax_boosted(complete_1024_run().series);
  const double t_err = std::abs(pr.predicted_runtime - empirical);
  const bool pass = e_err <= 0.05 * coupling && t_err <= 1.0;
  return {8, criterion_name(8), pass,
          fmt("E+=%.6f%+.6fi |E+-(1+i sqrt(2/N))|=%.2e (allowed %.2e); "
              "t*=%.3f empirical argmax=%d",
              pr.e_plus.real(), pr.e_plus.imag(), e_err, 0.05 * coupling,
              pr.predicted_runtime, empirical)};
}

CriterionResult c09_oracle_error_norm() {
  double worst = 0.0;
  for (const int n : {4, 64, 1024}) {
    const RegularGraph g = build_complete(n);
    const MarkedSet m = make_marked(g, {0});
    const double norm = oracle_perturbation_norm(g, m);
    worst = std::max(worst, std::abs(norm - 2.0 / std::sqrt(n)));
  }
  return {9, criterion_name(9), worst <= 1e-12,
          fmt("max | ||(U-U0)psi0|| - 2/sqrt(N) | = %.2e", worst)};
}

CriterionResult c10_condition_values() {
  struct Ladder {
    const char* name;
    std::vector<std::pair<RegularGraph, MarkedSet>> instances;
    std::vector<std::pair<long long, long long>> expected;  // c per size
    DoublingVerdict expected_verdict;
  };
  auto single = [](RegularGraph g) {
    MarkedSet m = make_marked(g, {0});
    return std::make_pair(std::move(g), std::move(m));
  };
  auto anti = [](RegularGraph g) {
    MarkedSet m = antipodal_marks(g);
    return std::make_pair(std::move(g), std::move(m));
  };
  std::vector<Ladder> ladders;
  ladders.push_back({"complete",
                     {single(build_complete(64)), single(build_complete(256)),
                      single(build_complete(1024))},
                     {{2, 63}, {2, 255}, {2, 1023}},
                     DoublingVerdict::Satisfied});
  ladders.push_back({"hypercube",
                     {single(build_hypercube(6)), single(build_hypercube(8)),
                      single(build_hypercube(10))},
                     {{2, 6}, {2, 8}, {2, 10}},
                     DoublingVerdict::Satisfied});
  ladders.push_back({"hypercube-antipodal",
                     {anti(build_hypercube(6)), anti(build_hypercube(8)),
                      anti(build_hypercube(10))},
                     {{2, 6}, {2, 8}, {2, 10}},
                     DoublingVerdict::Satisfied});
  ladders.push_back({"bipartite",
                     {single(build_complete_bipartite(16)),
                      single(build_complete_bipartite(32)),
                      single(build_complete_bipartite(64))},
                     {{4, 16}, {4, 32}, {4, 64}},
                     DoublingVerdict::Satisfied});
  ladders.push_back({"torus",
                     {single(build_torus(2, 8)), single(build_torus(2, 16)),
                      single(build_torus(2, 32))},
                     {{1, 2}, {1, 2}, {1, 2}},
                     DoublingVerdict::Violated});

  bool pass = true;
  std::string detail;
  for (const Ladder& l : ladders) {
    const DoublingReport rep = doubling_condition(l.instances);
    bool ok = rep.verdict == l.expected_verdict;
    for (std::size_t i = 0; i < l.expected.size() && ok; ++i) {
      const auto [en, ed] = l.expected[i];
      // rational equality against the stored lowest-term fraction
      ok = rep.entries[i].num * ed == en * rep.entries[i].den;
    }
    pass = pass && ok;
    if (!detail.empty()) detail += "; ";
    detail += fmt("%s=%s%s", l.name, verdict_name(rep.verdict),
                  ok ? "" : " (MISMATCH)");
  }
  return {10, criterion_name(10), pass, detail};
}

CriterionResult c11_lattice_expansion() {
  const RegularGraph g = build_torus(2, 8);
  const MarkedSet m = make_marked(g, {0});
  const ReducedSystem rs = reduce_system(g, m);
  const ReducedOperator op = reduced_operator(rs.partition, rs.basis, true);
  const int iba = op.basis.index_of("ba");
  const Eigen::VectorXcd col = op.matrix.col(iba);
  const int iab = op.basis.index_of("ab");
  const int icb = op.basis.index_of("cb");
  const int idb = op.basis.index_of("db");
  double worst = 0.0;
  worst = std::max(worst, std::abs(col[iab] - cplx(-0.5)));
  worst = std::max(worst, std::abs(col[icb] - cplx(1.0 / std::sqrt(2.0))));
  worst = std::max(worst, std::abs(col[idb] - cplx(0.5)));
  for (int r = 0; r < op.basis.dimension(); ++r)
    if (r != iab && r != icb && r != idb)
      worst = std::max(worst, std::abs(col[r]));
  return {11, criterion_name(11), worst <= 1e-12,
          fmt("U|ba>: ab=%.6f cb=%.6f db=%.6f max error=%.2e",
              col[iab].real(), col[icb].real(), col[idb].real(), worst)};
}

CriterionResult c12_property_suite() {
  const auto t0 = std::chrono::steady_clock::now();
  int checks = 0, failed = 0;
  auto expect = [&](bool ok) {
    ++checks;
    if (!ok) ++failed;
  };

  // 1000-step unitarity drift.
  double drift = 0.0;
  {
    const RegularGraph g = build_complete(64);
    const MarkedSet m = make_marked(g, {0});
    WalkState psi = initial_state(g);
    for (int t = 0; t < 1000; ++t) psi = step(g, m, psi, true);
    drift = std::abs(psi.norm() - 1.0);
    expect(drift <= 1e-9);
  }

  const std::vector<RegularGraph> graphs = {
      build_complete(64), build_hypercube(6), build_complete_bipartite(16),
      build_torus(2, 6)};
  for (const RegularGraph& g : graphs) {
    const MarkedSet m = make_marked(g, {0});
    const WalkState psi0 = initial_state(g);
    const WalkState r = random_state(g, 20240u);
    // sub-step involutions
    WalkState s = r;
    apply_coin(g, s);
    apply_coin(g, s);
    double err = 0.0;
    for (std::size_t i = 0; i < s.amp.size(); ++i)
      err = std::max(err, std::abs(s.amp[i] - r.amp[i]));
    expect(err <= 1e-12);
    s = r;
    apply_shift(g, s);
    apply_shift(g, s);
    expect(s.amp == r.amp);
    s = r;
    apply_oracle(g, m, s);
    apply_oracle(g, m, s);
    expect(s.amp == r.amp);
    // U0 fixes the uniform state
    const WalkState u0 = step(g, m, psi0, false);
    err = 0.0;
    for (std::size_t i = 0; i < u0.amp.size(); ++i)
      err = std::max(err, std::abs(u0.amp[i] - psi0.amp[i]));
    expect(err <= 1e-12);
    // sum over pairs |x| |x->y| = N d
    const ReducedSystem rs = reduce_system(g, m);
    long long total = 0;
    for (const auto& [x, y] : rs.basis.pairs)
      total += rs.partition.count(x) * rs.partition.ports(x, y);
    expect(total == static_cast<long long>(g.arc_count()));
    // boosted dominance on random states
    for (unsigned seed : {1u, 2u, 3u}) {
      const WalkState rnd = random_state(g, seed);
      const MeasurementReport rep = measure_boosted_success(g, m, rnd);
      expect(rep.boosted_success >= rep.position_success - 1e-15);
    }
  }
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
  const bool pass = failed == 0 && secs < 60.0;
  return {12, criterion_name(12), pass,
          fmt("%d/%d checks pass, drift=%.2e, elapsed=%.2fs", checks - failed,
              checks, drift, secs)};
}

}  // namespace

int criterion_count() { return 12; }

std::string criterion_name(int id) {
  switch (id) {
    case 1: return "success-curve";
    case 2: return "boosted-success";
    case 3: return "difference-bound";
    case 4: return "hypercube-doubling";
    case 5: return "reduced-full-equivalence";
    case 6: return "reduced-matrix-golden";
    case 7: return "spectral-closed-form";
    case 8: return "perturbation-prediction";
    case 9: return "oracle-error-norm";
    case 10: return "condition-values";
    case 11: return "lattice-expansion";
    case 12: return "property-suite";
  }
  throw invalid_parameter("unknown criterion id");
}

CriterionResult run_criterion(int id) {
  switch (id) {
    case 1: return c01_success_curve();
    case 2: return c02_boosted_success();
    case 3: return c03_difference_bound();
    case 4: return c04_hypercube_doubling();
    case 5: return c05_reduced_full_equivalence();
    case 6: return c06_reduced_matrix_golden();
    case 7: return c07_spectral_closed_form();
    case 8: return c08_perturbation_prediction();
    case 9: return c09_oracle_error_norm();
    case 10: return c10_condition_values();
    case 11: return c11_lattice_expansion();
    case 12: return c12_property_suite();
  }
  throw invalid_parameter("unknown criterion id");
}

std::vector<CriterionResult> run_all_criteria() {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= criterion_count(); ++id)
    out.push_back(run_criterion(id));
  return out;
}

}  // namespace qws
