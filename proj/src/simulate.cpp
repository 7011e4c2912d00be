#include "qws/simulate.hpp"

#include <cmath>
#include <numbers>

#include "qws/errors.hpp"

namespace qws {

ReducedSystem reduce_system(const RegularGraph& g, const MarkedSet& marked) {
  ReducedSystem rs;
  rs.partition = compute_partition(g, marked);
  rs.basis = reduced_basis(rs.partition);
  return rs;
}

SimulationSeries run_search(const RegularGraph& g, const MarkedSet& marked,
                            int steps, bool record_basis) {
  if (steps < 1) throw invalid_parameter("steps must be >= 1");
  SimulationSeries series;
  ReducedSystem rs;
  if (record_basis) {
    rs = reduce_system(g, marked);
    series.basis_labels = rs.basis.labels;
  }
  WalkState psi = initial_state(g);
  series.steps.reserve(steps + 1);
  for (int t = 0; t <= steps; ++t) {
    StepRecord rec;
    rec.t = t;
    rec.report = measure_boosted_success(g, marked, psi);
    if (record_basis) {
      const Projection proj = project(g, rs.partition, rs.basis, psi);
      rec.basis_probs.resize(rs.basis.dimension());
      for (int i = 0; i < rs.basis.dimension(); ++i)
        rec.basis_probs[i] = std::norm(proj.coords[i]);
    }
    series.steps.push_back(std::move(rec));
    if (t < steps) psi = step(g, marked, psi, true);
  }
  return series;
}

int auto_steps(const RegularGraph& g) {
  switch (g.family) {
    case Family::Complete:
    case Family::Hypercube:
    case Family::CompleteBipartite:
      break;
    default:
      throw invalid_parameter(
          "steps=auto is only defined for complete, hypercube and bipartite "
          "families; pass an explicit step count");
  }
  const double t =
      std::numbers::pi * std::sqrt(static_cast<double>(g.n_vertices)) /
      (2.0 * std::sqrt(2.0));
  return std::max(1, static_cast<int>(std::lround(t)));
}

}  // namespace qws
