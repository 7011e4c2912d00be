#include "qws/analysis.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "qws/errors.hpp"

namespace qws {

namespace {

constexpr double pi = std::numbers::pi;

// Eigenphase convention: (-pi, pi], with values at the branch cut pinned to
// +pi so a -1 eigenvalue cannot flip sign under roundoff.
double eigenphase(const cplx& z) {
  double a = std::arg(z);
  if (a <= -pi + 1e-9) a += 2 * pi;
  return a;
}

}  // namespace

DoublingReport doubling_condition(
    const std::vector<std::pair<RegularGraph, MarkedSet>>& ladder) {
  if (ladder.empty()) throw invalid_parameter("doubling check needs at least one size");
  DoublingReport rep;
  rep.single_neighbor_type = true;
  for (const auto& [g, marked] : ladder) {
    const TypePartition part = compute_partition(g, marked);
    rep.single_neighbor_type =
        rep.single_neighbor_type && single_neighbor_type(part);
    // b = first unmarked type with ports into the marked set; |b->a| counts
    // all of b's ports into marked types.
    long long into_marked = 0;
    for (int b = 0; b < part.n_types; ++b) {
      if (part.is_marked_type(b)) continue;
      long long total = 0;
      for (int a : part.marked_types) total += part.ports(b, a);
      if (total > 0) {
        into_marked = total;
        break;
      }
    }
    if (into_marked == 0)
      throw invalid_parameter("no unmarked type is adjacent to the marked set");
    DoublingEntry e;
    e.n_vertices = g.n_vertices;
    e.degree = g.degree;
    const long long gcd = std::gcd(2 * into_marked, static_cast<long long>(g.degree));
    e.num = 2 * into_marked / gcd;
    e.den = g.degree / gcd;
    e.ratio = static_cast<double>(e.num) / static_cast<double>(e.den);
    rep.entries.push_back(e);
  }

  rep.low_confidence = rep.entries.size() < 2;
  bool constant = true, decreasing = true;
  bool same_num = true, growing_den = true;
  for (std::size_t i = 1; i < rep.entries.size(); ++i) {
    const auto& prev = rep.entries[i - 1];
    const auto& cur = rep.entries[i];
    if (prev.num * cur.den != cur.num * prev.den) constant = false;
    if (prev.num * cur.den <= cur.num * prev.den) decreasing = false;
    if (prev.num != cur.num) same_num = false;
    if (prev.den >= cur.den) growing_den = false;
  }
  const DoublingEntry& last = rep.entries.back();
  const bool below_threshold = 10 * last.num < last.den;
  const bool vanishing =
      below_threshold || (rep.entries.size() >= 2 && same_num && growing_den);

  if (!rep.single_neighbor_type) {
    rep.verdict = DoublingVerdict::OutsideAssumptions;
  } else if (rep.entries.size() == 1) {
    rep.verdict = below_threshold ? DoublingVerdict::Satisfied
                                  : DoublingVerdict::Violated;
  } else if (constant) {
    rep.verdict = DoublingVerdict::Violated;
  } else if (decreasing && vanishing) {
    rep.verdict = DoublingVerdict::Satisfied;
  } else {
    rep.verdict = DoublingVerdict::Violated;
  }
  return rep;
}

const char* verdict_name(DoublingVerdict v) {
  switch (v) {
    case DoublingVerdict::Satisfied: return "Satisfied";
    case DoublingVerdict::Violated: return "Violated";
    case DoublingVerdict::OutsideAssumptions: return "OutsideAssumptions";
  }
  return "unknown";
}

SpectralReport spectrum(const ReducedOperator& op) {
  const Eigen::MatrixXcd& m = op.matrix;
  const int dim = static_cast<int>(m.rows());
  if (dim == 0 || m.cols() != dim)
    throw invalid_parameter("spectrum requires a square operator");
  const double unitary_err =
      (m.adjoint() * m - Eigen::MatrixXcd::Identity(dim, dim))
          .cwiseAbs()
          .maxCoeff();
  if (unitary_err > 1e-8)
    throw numerical_error("operator is not unitary within tolerance");

  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(m, true);
  if (schur.info() != Eigen::Success)
    throw numerical_error("Schur decomposition failed");
  // A unitary matrix is normal, so the Schur form is diagonal up to roundoff
  // and the Schur vectors are eigenvectors.
  Eigen::VectorXcd values = schur.matrixT().diagonal();
  Eigen::MatrixXcd vectors = schur.matrixU();

  std::vector<int> order(dim);
  for (int i = 0; i < dim; ++i) order[i] = i;
  std::vector<double> phases(dim);
  for (int i = 0; i < dim; ++i) phases[i] = eigenphase(values[i]);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return phases[a] < phases[b]; });

  SpectralReport rep;
  rep.eigenvectors.resize(dim, dim);
  for (int i = 0; i < dim; ++i) {
    rep.eigenphases.push_back(phases[order[i]]);
    rep.eigenvectors.col(i) = vectors.col(order[i]);
  }

  Eigen::VectorXcd sorted_values(dim);
  for (int i = 0; i < dim; ++i)
    sorted_values[i] = std::polar(1.0, rep.eigenphases[i]);
  const double recombine_err =
      (m * rep.eigenvectors - rep.eigenvectors * sorted_values.asDiagonal())
          .cwiseAbs()
          .maxCoeff();
  if (recombine_err > 1e-8)
    throw numerical_error("eigendecomposition residual beyond tolerance");

  // Recognize the 3-dimensional (ab, ba, bb) search operator and attach the
  // closed-form comparison.
  if (dim == 3 && op.with_oracle && op.basis.labels.size() == 3 &&
      op.basis.labels[0] == "ab" && op.basis.labels[1] == "ba" &&
      op.basis.labels[2] == "bb") {
    const double c = m(2, 2).real();
    const double s = m(2, 1).real();
    Eigen::MatrixXcd pattern(3, 3);
    pattern << 0, -c, s, -1, 0, 0, 0, s, c;
    if (std::abs(c * c + s * s - 1.0) <= 1e-9 &&
        (m - pattern).cwiseAbs().maxCoeff() <= 1e-9) {
      ClosedFormSpectrum cf;
      cf.cos_theta = c;
      cf.sin_theta = s;
      cf.cos_phi = (1.0 + c) / 2.0;
      cf.sin_phi = std::sqrt(std::max(0.0, 1.0 - cf.cos_phi * cf.cos_phi));
      cf.phi = std::acos(cf.cos_phi);
      const double expected[3] = {-cf.phi, cf.phi, pi};
      cf.max_residual = 0.0;
      for (int i = 0; i < 3; ++i)
        cf.max_residual = std::max(
            cf.max_residual, std::abs(rep.eigenphases[i] - expected[i]));
      rep.closed_form = cf;
    }
  }
  return rep;
}

ReducedOperator plus_minus_basis(const ReducedOperator& op, int ab_index,
                                 int ba_index) {
  const int dim = static_cast<int>(op.matrix.rows());
  if (ab_index < 0 || ab_index >= dim || ba_index < 0 || ba_index >= dim ||
      ab_index == ba_index)
    throw invalid_parameter("plus/minus transform needs two distinct indices");
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXcd t = Eigen::MatrixXcd::Identity(dim, dim);
  t(ab_index, ab_index) = r;
  t(ab_index, ba_index) = r;
  t(ba_index, ab_index) = r;
  t(ba_index, ba_index) = -r;
  ReducedOperator out;
  out.basis = op.basis;
  out.basis.labels[ab_index] = "+";
  out.basis.labels[ba_index] = "-";
  out.with_oracle = op.with_oracle;
  out.matrix = t * op.matrix * t;  // T is its own inverse
  return out;
}

PerturbationResult degenerate_perturbation(const ReducedOperator& op_prime,
                                           int i, int j) {
  const int dim = static_cast<int>(op_prime.matrix.rows());
  if (i < 0 || i >= dim || j < 0 || j >= dim || i == j)
    throw invalid_parameter("perturbation block needs two distinct indices");
  const cplx a = op_prime.matrix(i, i);
  const cplx b = op_prime.matrix(i, j);
  const cplx c = op_prime.matrix(j, i);
  const cplx d = op_prime.matrix(j, j);
  if (std::abs(a - 1.0) > 0.2 || std::abs(d - 1.0) > 0.2)
    throw invalid_parameter(
        "block diagonal is not near-degenerate at eigenvalue 1");

  const cplx half_tr = (a + d) / 2.0;
  const cplx disc = std::sqrt(half_tr * half_tr - (a * d - b * c));
  cplx e1 = half_tr + disc, e2 = half_tr - disc;
  if (std::abs(e1 - e2) < 1e-12)
    throw numerical_error("degenerate block does not split");
  if (eigenphase(e1) < eigenphase(e2)) std::swap(e1, e2);

  PerturbationResult res;
  res.e_plus = e1;
  res.e_minus = e2;
  res.sigma = std::abs(eigenphase(e1));
  if (res.sigma < 1e-12)
    throw numerical_error("block splitting carries no phase");
  res.predicted_runtime = pi / (2.0 * res.sigma);

  auto vec_for = [&](const cplx& e) {
    Eigen::Vector2cd v;
    if (std::abs(b) >= std::abs(c)) {
      v << b, e - a;
    } else {
      v << e - d, c;
    }
    const double n = v.norm();
    if (n < 1e-14) v << 1.0, 0.0;
    else v /= n;
    return v;
  };
  res.block_vectors.col(0) = vec_for(e1);
  res.block_vectors.col(1) = vec_for(e2);
  return res;
}

DifferenceBound difference_bound_check(const SimulationSeries& series,
                                       int n_vertices) {
  int iab = -1, iba = -1;
  for (std::size_t i = 0; i < series.basis_labels.size(); ++i) {
    if (series.basis_labels[i] == "ab") iab = static_cast<int>(i);
    if (series.basis_labels[i] == "ba") iba = static_cast<int>(i);
  }
  if (iab < 0 || iba < 0)
    throw invalid_parameter("series lacks ab/ba basis probabilities");
  DifferenceBound db;
  db.bound = 1.0 / std::sqrt(2.0 * n_vertices);
  db.slack = 0.01;
  for (const StepRecord& rec : series.steps)
    db.max_diff = std::max(
        db.max_diff, std::abs(rec.basis_probs[iab] - rec.basis_probs[iba]));
  db.pass = db.max_diff <= db.bound + db.slack;
  return db;
}

}  // namespace qws
