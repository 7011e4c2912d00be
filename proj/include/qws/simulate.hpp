#pragma once

#include "qws/graph.hpp"
#include "qws/quotient.hpp"
#include "qws/walk.hpp"

namespace qws {

// Cached reduction of a (graph, marked) pair.
struct ReducedSystem {
  TypePartition partition;
  ReducedBasis basis;
};

ReducedSystem reduce_system(const RegularGraph& g, const MarkedSet& marked);

// t = 0..steps applications of the search operator from the uniform state,
// recording both measurement protocols per step and, optionally, the
// reduced-basis probabilities.
SimulationSeries run_search(const RegularGraph& g, const MarkedSet& marked,
                            int steps, bool record_basis);

// round(pi sqrt(N) / (2 sqrt 2)), defined for the families where the
// two-level perturbation analysis predicts the runtime (complete, hypercube,
// complete bipartite); other families need an explicit step count.
int auto_steps(const RegularGraph& g);

}  // namespace qws
