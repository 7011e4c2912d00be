#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qws/graph.hpp"
#include "qws/walk.hpp"

namespace qws {

// Equitable vertex typing refined from the marked/unmarked coloring.
// port_count[x][y] = |x->y|, the number of ports any single type-x vertex has
// into type-y vertices (well defined exactly because the partition is
// equitable). Types are canonically ordered: marked types first, then by
// distance from the marked set, neighbor-distance profile, smallest vertex.
struct TypePartition {
  int n_types = 0;
  std::vector<int> type_of;              // per vertex
  std::vector<long long> type_count;     // |x|
  std::vector<long long> port_count;     // |x->y|, row-major n_types x n_types
  std::vector<int> marked_types;         // sorted

  long long count(int x) const { return type_count[x]; }
  long long ports(int x, int y) const {
    return port_count[static_cast<std::size_t>(x) * n_types + y];
  }
  bool is_marked_type(int x) const;
};

// Ordered list of type pairs (x,y) with |x->y| > 0; the span of the
// corresponding |xy> vectors is invariant under the walk.
struct ReducedBasis {
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::string> labels;  // "ab", "ba", ...
  int dimension() const { return static_cast<int>(pairs.size()); }
  int index_of(const std::string& label) const;  // -1 when absent
};

struct ReducedOperator {
  ReducedBasis basis;
  Eigen::MatrixXcd matrix;
  bool with_oracle = false;
};

// Coarsest equitable partition refining {marked, unmarked}, by iterated
// color refinement; the result is verified vertex-exhaustively.
TypePartition compute_partition(const RegularGraph& g, const MarkedSet& marked);

std::string type_label(int t);
std::string pair_label(int x, int y);

ReducedBasis reduced_basis(const TypePartition& part);

// Coefficient of |xy> in the uniform state: sqrt(|x| * |x->y|) / sqrt(N d).
Eigen::VectorXd initial_in_basis(const TypePartition& part,
                                 const ReducedBasis& basis);

// Walk operator restricted to the reduced basis. Column |xy> has
// (2/d)|x->y| - 1 in row |yx> and (2/d)sqrt(|x->y| |x->z|) in rows |zx> for
// the other types z adjacent to x; with_oracle negates columns whose source
// type is marked.
ReducedOperator reduced_operator(const TypePartition& part,
                                 const ReducedBasis& basis, bool with_oracle);

// Full-space state sum_i coords[i] |x_i y_i>.
WalkState embed(const RegularGraph& g, const TypePartition& part,
                const ReducedBasis& basis, const Eigen::VectorXcd& coords);

struct Projection {
  Eigen::VectorXcd coords;  // <xy|state> per basis vector
  double residual = 0.0;    // ||state - embed(coords)||
};

Projection project(const RegularGraph& g, const TypePartition& part,
                   const ReducedBasis& basis, const WalkState& s);

// True when the marked vertices form one type, that type has no ports into
// marked vertices, and all its ports land in a single unmarked type.
bool single_neighbor_type(const TypePartition& part);

}  // namespace qws
