#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qws/graph.hpp"
#include "qws/quotient.hpp"
#include "qws/walk.hpp"

namespace qws {

enum class DoublingVerdict { Satisfied, Violated, OutsideAssumptions };

// One ladder entry: c = (2/d) |b->a| where b is the unmarked type adjacent to
// the marked type a. Stored in lowest terms (num/den) alongside the float.
struct DoublingEntry {
  int n_vertices = 0;
  int degree = 0;
  long long num = 0;
  long long den = 1;
  double ratio = 0.0;
};

struct DoublingReport {
  std::vector<DoublingEntry> entries;
  DoublingVerdict verdict = DoublingVerdict::OutsideAssumptions;
  bool single_neighbor_type = false;  // marked type adjacent to one unmarked type
  bool low_confidence = false;        // fewer than two ladder sizes
};

// Verdict over a size ladder. Satisfied requires strictly decreasing ratios
// that vanish in trend: either the last ratio is below 0.1 or the lowest-term
// fractions share one numerator over strictly growing denominators (exact
// 1/d scaling). A constant ratio is Violated; a failed neighbor-type
// assumption is OutsideAssumptions.
DoublingReport doubling_condition(
    const std::vector<std::pair<RegularGraph, MarkedSet>>& ladder);

const char* verdict_name(DoublingVerdict v);

// Closed-form eigensystem of the 3-dimensional reduced search operator:
// phases {+phi, -phi, pi} with cos(phi) = (1 + cos(theta))/2.
struct ClosedFormSpectrum {
  double cos_theta = 0.0;
  double sin_theta = 0.0;
  double cos_phi = 0.0;
  double sin_phi = 0.0;
  double phi = 0.0;
  double max_residual = 0.0;  // worst |measured phase - closed form|
};

struct SpectralReport {
  std::vector<double> eigenphases;  // ascending, in (-pi, pi]
  Eigen::MatrixXcd eigenvectors;    // column k pairs with eigenphases[k]
  std::optional<ClosedFormSpectrum> closed_form;
};

SpectralReport spectrum(const ReducedOperator& op);

// Conjugate by the involution T that maps the (ab, ba) coordinates to
// (|ab> +/- |ba>)/sqrt(2); labels renamed to "+" and "-".
ReducedOperator plus_minus_basis(const ReducedOperator& op, int ab_index,
                                 int ba_index);

struct PerturbationResult {
  double sigma = 0.0;          // |arg E+|
  cplx e_plus, e_minus;        // conjugate eigenvalue pair
  Eigen::Matrix2cd block_vectors;  // columns: coefficients for E+, E-
  double predicted_runtime = 0.0;  // pi / (2 sigma)
};

// Exact eigensolve of the 2x2 near-degenerate block on the chosen pair of
// basis directions (both diagonal entries must lie within 0.2 of 1).
PerturbationResult degenerate_perturbation(const ReducedOperator& op_prime,
                                           int i, int j);

struct DifferenceBound {
  double max_diff = 0.0;
  double bound = 0.0;  // 1/sqrt(2N)
  double slack = 0.0;
  bool pass = false;
};

// max_t |P_ab(t) - P_ba(t)| against 1/sqrt(2N) plus slack 0.01.
DifferenceBound difference_bound_check(const SimulationSeries& series,
                                       int n_vertices);

}  // namespace qws
