#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "qws/graph.hpp"

namespace qws {

using cplx = std::complex<double>;

// Unit-norm amplitude vector over arcs, indexed v*degree + p.
struct WalkState {
  std::vector<cplx> amp;
  double norm() const;
};

struct MeasurementReport {
  double position_success = 0.0;
  double boosted_success = 0.0;
  std::vector<double> per_vertex;
};

struct StepRecord {
  int t = 0;
  MeasurementReport report;
  std::vector<double> basis_probs;  // aligned with SimulationSeries::basis_labels
};

struct SimulationSeries {
  std::vector<std::string> basis_labels;  // empty when basis recording is off
  std::vector<StepRecord> steps;
};

WalkState initial_state(const RegularGraph& g);

// One application of U = S (I x C0) (R_w x I): oracle sign flip on arcs
// leaving marked vertices, Grover coin per vertex block, flip-flop shift.
// with_oracle=false applies the unmarked walk U0. Pure: returns a new state.
WalkState step(const RegularGraph& g, const MarkedSet& marked,
               const WalkState& s, bool with_oracle);

// In-place sub-steps. Parallelized over vertex blocks / arc pairs; every
// output amplitude has exactly one writer, so any schedule produces results
// bit-identical to the serial reference in qws::ref.
void apply_oracle(const RegularGraph& g, const MarkedSet& marked, WalkState& s);
void apply_coin(const RegularGraph& g, WalkState& s);
void apply_shift(const RegularGraph& g, WalkState& s);

std::vector<double> position_distribution(const RegularGraph& g,
                                          const WalkState& s);

// Probability that the two-stage protocol (measure position; if unmarked,
// measure the coin direction and output the indicated neighbor) returns a
// marked vertex.
MeasurementReport measure_boosted_success(const RegularGraph& g,
                                          const MarkedSet& marked,
                                          const WalkState& s);

// ||(U - U0) psi0|| by direct evaluation from the uniform state.
double oracle_perturbation_norm(const RegularGraph& g, const MarkedSet& marked);

// CSV: header "t,p_position,p_boosted[,<basis-label>...]", one row per step,
// probabilities with 16 significant digits; byte-deterministic.
void write_csv(const SimulationSeries& series, std::ostream& out);
void write_csv(const SimulationSeries& series, const std::string& path);

// Serial reference implementation of the same kernels, kept for equivalence
// tests and benchmarks.
namespace ref {
WalkState step(const RegularGraph& g, const MarkedSet& marked,
               const WalkState& s, bool with_oracle);
void apply_oracle(const RegularGraph& g, const MarkedSet& marked, WalkState& s);
void apply_coin(const RegularGraph& g, WalkState& s);
void apply_shift(const RegularGraph& g, WalkState& s);
}  // namespace ref

}  // namespace qws
