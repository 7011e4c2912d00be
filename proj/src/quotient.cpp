#include "qws/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>

#include "qws/errors.hpp"

namespace qws {

bool TypePartition::is_marked_type(int x) const {
  return std::binary_search(marked_types.begin(), marked_types.end(), x);
}

int ReducedBasis::index_of(const std::string& label) const {
  for (int i = 0; i < dimension(); ++i)
    if (labels[i] == label) return i;
  return -1;
}

std::string type_label(int t) {
  if (t < 26) return std::string(1, static_cast<char>('a' + t));
  return "t" + std::to_string(t);
}

std::string pair_label(int x, int y) {
  if (x < 26 && y < 26) return type_label(x) + type_label(y);
  return type_label(x) + "_" + type_label(y);
}

TypePartition compute_partition(const RegularGraph& g, const MarkedSet& marked) {
  if (marked.vertices.empty())
    throw invalid_parameter("partition requires a non-empty marked set");
  const int n = g.n_vertices, d = g.degree;

  std::vector<int> color(n, 1);
  for (int v : marked.vertices) color[v] = 0;
  int n_colors = marked.count() == n ? 1 : 2;

  // Refine by (own color, sorted neighbor colors) until stable. Each round
  // only splits classes, so an unchanged color count means a fixed point.
  std::vector<int> sig;
  sig.reserve(d + 1);
  for (;;) {
    std::map<std::vector<int>, int> ids;
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) {
      sig.clear();
      sig.push_back(color[v]);
      for (int p = 0; p < d; ++p) sig.push_back(color[g.nbr(v, p)]);
      std::sort(sig.begin() + 1, sig.end());
      auto [it, inserted] = ids.emplace(sig, static_cast<int>(ids.size()));
      next[v] = it->second;
    }
    const int count = static_cast<int>(ids.size());
    color.swap(next);
    if (count == n_colors) break;
    n_colors = count;
  }

  // Multi-source BFS distance from the marked set; constant on each class.
  std::vector<int> dist(n, -1);
  std::deque<int> queue;
  for (int v : marked.vertices) {
    dist[v] = 0;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int p = 0; p < d; ++p) {
      const int u = g.nbr(v, p);
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  for (int v = 0; v < n; ++v)
    if (dist[v] < 0)
      throw invalid_parameter("graph is not connected to the marked set");

  // Canonical type order: marked first, then (distance, sorted profile of
  // neighbor distances, smallest member). All keys are class-constant.
  struct Key {
    int unmarked, dist;
    std::vector<int> profile;
    int min_vertex;
    bool operator<(const Key& o) const {
      return std::tie(unmarked, dist, profile, min_vertex) <
             std::tie(o.unmarked, o.dist, o.profile, o.min_vertex);
    }
  };
  std::vector<int> rep(n_colors, -1);
  for (int v = n - 1; v >= 0; --v) rep[color[v]] = v;
  std::vector<std::pair<Key, int>> order;
  order.reserve(n_colors);
  for (int c = 0; c < n_colors; ++c) {
    const int v = rep[c];
    Key k;
    k.unmarked = marked.contains(v) ? 0 : 1;
    k.dist = dist[v];
    for (int p = 0; p < d; ++p) k.profile.push_back(dist[g.nbr(v, p)]);
    std::sort(k.profile.begin(), k.profile.end());
    k.min_vertex = v;
    order.emplace_back(std::move(k), c);
  }
  std::sort(order.begin(), order.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<int> remap(n_colors);
  for (int i = 0; i < n_colors; ++i) remap[order[i].second] = i;

  TypePartition part;
  part.n_types = n_colors;
  part.type_of.resize(n);
  part.type_count.assign(n_colors, 0);
  part.port_count.assign(static_cast<std::size_t>(n_colors) * n_colors, 0);
  for (int v = 0; v < n; ++v) {
    part.type_of[v] = remap[color[v]];
    ++part.type_count[part.type_of[v]];
  }
  for (int c = 0; c < n_colors; ++c) {
    const int v = rep[order[c].second];
    for (int p = 0; p < d; ++p)
      ++part.port_count[static_cast<std::size_t>(c) * n_colors +
                        part.type_of[g.nbr(v, p)]];
  }
  for (int v : marked.vertices) part.marked_types.push_back(part.type_of[v]);
  std::sort(part.marked_types.begin(), part.marked_types.end());
  part.marked_types.erase(
      std::unique(part.marked_types.begin(), part.marked_types.end()),
      part.marked_types.end());

  // Exhaustive equitability verification.
  std::vector<long long> row(n_colors);
  for (int v = 0; v < n; ++v) {
    std::fill(row.begin(), row.end(), 0);
    for (int p = 0; p < d; ++p) ++row[part.type_of[g.nbr(v, p)]];
    for (int y = 0; y < n_colors; ++y)
      if (row[y] != part.ports(part.type_of[v], y))
        throw numerical_error("partition is not equitable");
  }
  return part;
}

namespace {

int partition_degree(const TypePartition& part) {
  long long d = 0;
  for (int y = 0; y < part.n_types; ++y) d += part.ports(0, y);
  return static_cast<int>(d);
}

std::vector<int> pair_index(const TypePartition& part, const ReducedBasis& basis) {
  std::vector<int> idx(static_cast<std::size_t>(part.n_types) * part.n_types, -1);
  for (int i = 0; i < basis.dimension(); ++i) {
    const auto [x, y] = basis.pairs[i];
    idx[static_cast<std::size_t>(x) * part.n_types + y] = i;
  }
  return idx;
}

}  // namespace

ReducedBasis reduced_basis(const TypePartition& part) {
  ReducedBasis b;
  for (int x = 0; x < part.n_types; ++x)
    for (int y = 0; y < part.n_types; ++y)
      if (part.ports(x, y) > 0) {
        b.pairs.emplace_back(x, y);
        b.labels.push_back(pair_label(x, y));
      }
  return b;
}

Eigen::VectorXd initial_in_basis(const TypePartition& part,
                                 const ReducedBasis& basis) {
  long long total = 0;  // N d = sum |x| |x->y|
  for (const auto& [x, y] : basis.pairs)
    total += part.count(x) * part.ports(x, y);
  Eigen::VectorXd v(basis.dimension());
  for (int i = 0; i < basis.dimension(); ++i) {
    const auto [x, y] = basis.pairs[i];
    v[i] = std::sqrt(static_cast<double>(part.count(x) * part.ports(x, y)) /
                     static_cast<double>(total));
  }
  return v;
}

ReducedOperator reduced_operator(const TypePartition& part,
                                 const ReducedBasis& basis, bool with_oracle) {
  const int dim = basis.dimension();
  const int d = partition_degree(part);
  for (int x = 1; x < part.n_types; ++x) {
    long long row = 0;
    for (int y = 0; y < part.n_types; ++y) row += part.ports(x, y);
    if (row != d) throw numerical_error("partition is not equitable");
  }
  const std::vector<int> idx = pair_index(part, basis);
  auto at = [&](int x, int y) {
    return idx[static_cast<std::size_t>(x) * part.n_types + y];
  };

  ReducedOperator op;
  op.basis = basis;
  op.with_oracle = with_oracle;
  op.matrix = Eigen::MatrixXcd::Zero(dim, dim);
  for (int col = 0; col < dim; ++col) {
    const auto [x, y] = basis.pairs[col];
    const double sign =
        with_oracle && part.is_marked_type(x) ? -1.0 : 1.0;
    op.matrix(at(y, x), col) +=
        sign * (2.0 / d * static_cast<double>(part.ports(x, y)) - 1.0);
    for (int z = 0; z < part.n_types; ++z) {
      if (z == y || part.ports(x, z) == 0) continue;
      op.matrix(at(z, x), col) +=
          sign * (2.0 / d) *
          std::sqrt(static_cast<double>(part.ports(x, y) * part.ports(x, z)));
    }
  }

  const double unitary_err =
      (op.matrix.adjoint() * op.matrix -
       Eigen::MatrixXcd::Identity(dim, dim))
          .cwiseAbs()
          .maxCoeff();
  if (unitary_err > 1e-10)
    throw numerical_error("reduced operator is not unitary");
  return op;
}

WalkState embed(const RegularGraph& g, const TypePartition& part,
                const ReducedBasis& basis, const Eigen::VectorXcd& coords) {
  if (coords.size() != basis.dimension())
    throw dimension_mismatch("coordinate vector does not match basis");
  const std::vector<int> idx = pair_index(part, basis);
  WalkState s;
  s.amp.resize(g.arc_count());
  const int n = g.n_vertices, d = g.degree;
  for (int v = 0; v < n; ++v) {
    const int x = part.type_of[v];
    for (int p = 0; p < d; ++p) {
      const int y = part.type_of[g.nbr(v, p)];
      const int i = idx[static_cast<std::size_t>(x) * part.n_types + y];
      s.amp[g.arc(v, p)] =
          coords[i] /
          std::sqrt(static_cast<double>(part.count(x) * part.ports(x, y)));
    }
  }
  return s;
}

Projection project(const RegularGraph& g, const TypePartition& part,
                   const ReducedBasis& basis, const WalkState& s) {
  if (s.amp.size() != g.arc_count())
    throw dimension_mismatch("state length does not match graph arc count");
  const std::vector<int> idx = pair_index(part, basis);
  Projection proj;
  proj.coords = Eigen::VectorXcd::Zero(basis.dimension());
  const int n = g.n_vertices, d = g.degree;
  for (int v = 0; v < n; ++v) {
    const int x = part.type_of[v];
    for (int p = 0; p < d; ++p) {
      const int y = part.type_of[g.nbr(v, p)];
      const int i = idx[static_cast<std::size_t>(x) * part.n_types + y];
      proj.coords[i] +=
          s.amp[g.arc(v, p)] /
          std::sqrt(static_cast<double>(part.count(x) * part.ports(x, y)));
    }
  }
  const WalkState back = embed(g, part, basis, proj.coords);
  double res = 0.0;
  for (std::size_t i = 0; i < s.amp.size(); ++i)
    res += std::norm(s.amp[i] - back.amp[i]);
  proj.residual = std::sqrt(res);
  return proj;
}

bool single_neighbor_type(const TypePartition& part) {
  if (part.marked_types.size() != 1) return false;
  const int m = part.marked_types.front();
  int unmarked_neighbors = 0;
  for (int y = 0; y < part.n_types; ++y) {
    if (part.ports(m, y) == 0) continue;
    if (part.is_marked_type(y)) return false;
    ++unmarked_neighbors;
  }
  return unmarked_neighbors == 1;
}

}  // namespace qws
