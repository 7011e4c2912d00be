#include "qws/walk.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <utility>

#include "qws/errors.hpp"

namespace qws {

namespace {

void check_state(const RegularGraph& g, const WalkState& s) {
  if (s.amp.size() != g.arc_count())
    throw dimension_mismatch("state length does not match graph arc count");
}

}  // namespace

double WalkState::norm() const {
  double s = 0.0;
  for (const cplx& a : amp) s += std::norm(a);
  return std::sqrt(s);
}

WalkState initial_state(const RegularGraph& g) {
  WalkState s;
  const double a = 1.0 / std::sqrt(static_cast<double>(g.arc_count()));
  s.amp.assign(g.arc_count(), cplx(a, 0.0));
  return s;
}

void apply_oracle(const RegularGraph& g, const MarkedSet& marked, WalkState& s) {
  const int d = g.degree;
  const int k = marked.count();
#pragma omp parallel for if (k > 64) schedule(static)
  for (int i = 0; i < k; ++i) {
    cplx* a = s.amp.data() + g.arc(marked.vertices[i], 0);
    for (int p = 0; p < d; ++p) a[p] = -a[p];
  }
}

void apply_coin(const RegularGraph& g, WalkState& s) {
  const int n = g.n_vertices, d = g.degree;
  const double two_over_d = 2.0 / d;
#pragma omp parallel for if (n > 256) schedule(static)
  for (int v = 0; v < n; ++v) {
    cplx* a = s.amp.data() + g.arc(v, 0);
    cplx sum(0.0, 0.0);
    for (int p = 0; p < d; ++p) sum += a[p];
    const cplx twice_mean = two_over_d * sum;
    for (int p = 0; p < d; ++p) a[p] = twice_mean - a[p];
  }
}

void apply_shift(const RegularGraph& g, WalkState& s) {
  const int n = g.n_vertices, d = g.degree;
  // Arc reversal is an involution; swap each 2-cycle once (i < j). Each pair
  // is touched by exactly one loop iteration.
#pragma omp parallel for if (n > 256) schedule(static)
  for (int v = 0; v < n; ++v) {
    for (int p = 0; p < d; ++p) {
      const std::size_t i = g.arc(v, p);
      const std::size_t j = g.arc(g.neighbor[i], g.reverse_port[i]);
      if (i < j) std::swap(s.amp[i], s.amp[j]);
    }
  }
}

WalkState step(const RegularGraph& g, const MarkedSet& marked,
               const WalkState& s, bool with_oracle) {
  check_state(g, s);
  WalkState out = s;
  if (with_oracle) apply_oracle(g, marked, out);
  apply_coin(g, out);
  apply_shift(g, out);
  return out;
}

std::vector<double> position_distribution(const RegularGraph& g,
                                          const WalkState& s) {
  check_state(g, s);
  const int n = g.n_vertices, d = g.degree;
  std::vector<double> p(n, 0.0);
  for (int v = 0; v < n; ++v) {
    const cplx* a = s.amp.data() + g.arc(v, 0);
    double acc = 0.0;
    for (int q = 0; q < d; ++q) acc += std::norm(a[q]);
    p[v] = acc;
  }
  return p;
}

MeasurementReport measure_boosted_success(const RegularGraph& g,
                                          const MarkedSet& marked,
                                          const WalkState& s) {
  if (marked.vertices.empty())
    throw invalid_parameter("boosted measurement requires a marked set");
  check_state(g, s);
  MeasurementReport r;
  r.per_vertex = position_distribution(g, s);
  std::vector<char> mask(g.n_vertices, 0);
  for (int v : marked.vertices) {
    mask[v] = 1;
    r.position_success += r.per_vertex[v];
  }
  double extra = 0.0;
  const int n = g.n_vertices, d = g.degree;
  for (int v = 0; v < n; ++v) {
    if (mask[v]) continue;
    const cplx* a = s.amp.data() + g.arc(v, 0);
    for (int p = 0; p < d; ++p)
      if (mask[g.nbr(v, p)]) extra += std::norm(a[p]);
  }
  r.boosted_success = r.position_success + extra;
  return r;
}

double oracle_perturbation_norm(const RegularGraph& g, const MarkedSet& marked) {
  const WalkState psi0 = initial_state(g);
  const WalkState with = step(g, marked, psi0, true);
  const WalkState without = step(g, marked, psi0, false);
  double s = 0.0;
  for (std::size_t i = 0; i < with.amp.size(); ++i)
    s += std::norm(with.amp[i] - without.amp[i]);
  return std::sqrt(s);
}

void write_csv(const SimulationSeries& series, std::ostream& out) {
  std::string line = "t,p_position,p_boosted";
  for (const std::string& label : series.basis_labels) {
    line += ',';
    line += label;
  }
  line += '\n';
  out << line;
  char buf[40];
  for (const StepRecord& rec : series.steps) {
    line = std::to_string(rec.t);
    std::snprintf(buf, sizeof buf, ",%.15e", rec.report.position_success);
    line += buf;
    std::snprintf(buf, sizeof buf, ",%.15e", rec.report.boosted_success);
    line += buf;
    for (double p : rec.basis_probs) {
      std::snprintf(buf, sizeof buf, ",%.15e", p);
      line += buf;
    }
    line += '\n';
    out << line;
  }
}

void write_csv(const SimulationSeries& series, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open output file: " + path);
  write_csv(series, out);
  out.flush();
  if (!out) throw io_error("write failed: " + path);
}

}  // namespace qws
