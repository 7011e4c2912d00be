// Serial reference for the walk kernels. Mirrors src/walk.cpp with the
// parallel pragmas removed; the two must stay arithmetically identical
// statement for statement so the equivalence tests can require bit-equal
// output.
#include <utility>

#include "qws/errors.hpp"
#include "qws/walk.hpp"

namespace qws::ref {

void apply_oracle(const RegularGraph& g, const MarkedSet& marked, WalkState& s) {
  const int d = g.degree;
  for (int v : marked.vertices) {
    cplx* a = s.amp.data() + g.arc(v, 0);
    for (int p = 0; p < d; ++p) a[p] = -a[p];
  }
}

void apply_coin(const RegularGraph& g, WalkState& s) {
  const int n = g.n_vertices, d = g.degree;
  const double two_over_d = 2.0 / d;
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
  if (s.amp.size() != g.arc_count())
    throw dimension_mismatch("state length does not match graph arc count");
  WalkState out = s;
  if (with_oracle) ref::apply_oracle(g, marked, out);
  ref::apply_coin(g, out);
  ref::apply_shift(g, out);
  return out;
}

}  // namespace qws::ref
