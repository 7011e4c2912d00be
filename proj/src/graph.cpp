#include "qws/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>

#include "qws/errors.hpp"

namespace qws {

bool MarkedSet::contains(int v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

namespace {

RegularGraph empty_graph(int n, int d, Family f, int pa, int pb) {
  RegularGraph g;
  g.n_vertices = n;
  g.degree = d;
  g.family = f;
  g.param_a = pa;
  g.param_b = pb;
  g.neighbor.assign(static_cast<std::size_t>(n) * d, 0);
  g.reverse_port.assign(static_cast<std::size_t>(n) * d, 0);
  return g;
}

}  // namespace

RegularGraph build_complete(int n) {
  if (n < 3) throw invalid_parameter("complete graph requires N >= 3");
  RegularGraph g = empty_graph(n, n - 1, Family::Complete, n, 0);
  for (int v = 0; v < n; ++v) {
    for (int p = 0; p < n - 1; ++p) {
      const int u = p < v ? p : p + 1;  // p-th element of [0,N) \ {v}
      g.neighbor[g.arc(v, p)] = u;
      g.reverse_port[g.arc(v, p)] = v < u ? v : v - 1;
    }
  }
  return g;
}

RegularGraph build_hypercube(int n) {
  if (n < 2) throw invalid_parameter("hypercube requires n >= 2");
  if (n > 24) throw invalid_parameter("hypercube dimension too large");
  const int nv = 1 << n;
  RegularGraph g = empty_graph(nv, n, Family::Hypercube, n, 0);
  for (int v = 0; v < nv; ++v) {
    for (int p = 0; p < n; ++p) {
      g.neighbor[g.arc(v, p)] = v ^ (1 << p);
      g.reverse_port[g.arc(v, p)] = p;
    }
  }
  return g;
}

RegularGraph build_complete_bipartite(int n) {
  if (n < 4 || n % 2 != 0)
    throw invalid_parameter("complete bipartite graph requires even N >= 4");
  const int d = n / 2;
  RegularGraph g = empty_graph(n, d, Family::CompleteBipartite, n, 0);
  for (int v = 0; v < n; ++v) {
    for (int p = 0; p < d; ++p) {
      g.neighbor[g.arc(v, p)] = v < d ? d + p : p;
      g.reverse_port[g.arc(v, p)] = v < d ? v : v - d;
    }
  }
  return g;
}

RegularGraph build_torus(int dim, int side) {
  if (dim < 1) throw invalid_parameter("torus requires D >= 1");
  if (side < 3) throw invalid_parameter("torus requires L >= 3");
  long long nv = 1;
  for (int i = 0; i < dim; ++i) {
    nv *= side;
    if (nv > (1LL << 30)) throw invalid_parameter("torus too large");
  }
  const int n = static_cast<int>(nv);
  RegularGraph g = empty_graph(n, 2 * dim, Family::Torus, dim, side);
  for (int v = 0; v < n; ++v) {
    int stride = 1;
    for (int i = 0; i < dim; ++i) {
      const int c = (v / stride) % side;
      const int up = v + (c + 1 == side ? (1 - side) : 1) * stride;
      const int dn = v + (c == 0 ? (side - 1) : -1) * stride;
      g.neighbor[g.arc(v, 2 * i)] = up;      // +1 along axis i
      g.neighbor[g.arc(v, 2 * i + 1)] = dn;  // -1 along axis i
      g.reverse_port[g.arc(v, 2 * i)] = 2 * i + 1;
      g.reverse_port[g.arc(v, 2 * i + 1)] = 2 * i;
      stride *= side;
    }
  }
  return g;
}

RegularGraph build_custom(std::istream& in) {
  int n = 0, d = 0;
  if (!(in >> n >> d)) throw invalid_parameter("adjacency list: missing N d header");
  if (n < 2 || d < 1) throw invalid_parameter("adjacency list: need N >= 2, d >= 1");
  RegularGraph g = empty_graph(n, d, Family::Custom, n, d);
  for (int v = 0; v < n; ++v) {
    for (int p = 0; p < d; ++p) {
      int u = 0;
      if (!(in >> u)) throw invalid_parameter("adjacency list: truncated row");
      if (u < 0 || u >= n) throw invalid_parameter("adjacency list: neighbor out of range");
      if (u == v) throw invalid_parameter("adjacency list: self-loop");
      g.neighbor[g.arc(v, p)] = u;
    }
  }
  // Derive reverse ports; fails when the neighbor relation is not symmetric
  // or a vertex lists a neighbor twice.
  for (int v = 0; v < n; ++v) {
    for (int p = 0; p < d; ++p) {
      for (int p2 = p + 1; p2 < d; ++p2)
        if (g.nbr(v, p) == g.nbr(v, p2))
          throw invalid_parameter("adjacency list: duplicate neighbor");
    }
  }
  for (int v = 0; v < n; ++v) {
    for (int p = 0; p < d; ++p) {
      const int u = g.nbr(v, p);
      int q = -1;
      for (int pu = 0; pu < d; ++pu)
        if (g.nbr(u, pu) == v) { q = pu; break; }
      if (q < 0) throw invalid_parameter("adjacency list: edge not symmetric");
      g.reverse_port[g.arc(v, p)] = q;
    }
  }
  validate(g);
  return g;
}

RegularGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open graph file: " + path);
  return build_custom(in);
}

MarkedSet make_marked(const RegularGraph& g, std::vector<int> vertices) {
  if (vertices.empty()) throw invalid_parameter("marked set must be non-empty");
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  for (int v : vertices)
    if (v < 0 || v >= g.n_vertices)
      throw invalid_parameter("marked vertex out of range");
  return MarkedSet{std::move(vertices)};
}

MarkedSet antipodal_marks(const RegularGraph& g) {
  if (g.family != Family::Hypercube)
    throw invalid_parameter("antipodal marks are defined for hypercubes only");
  return make_marked(g, {0, (1 << g.param_a) - 1});
}

void validate(const RegularGraph& g) {
  const int n = g.n_vertices, d = g.degree;
  if (n < 2 || d < 1) throw invalid_parameter("graph: need N >= 2, d >= 1");
  if (g.neighbor.size() != g.arc_count() || g.reverse_port.size() != g.arc_count())
    throw invalid_parameter("graph: arc table size mismatch");
  std::vector<char> seen(n, 0);
  for (int v = 0; v < n; ++v) {
    for (int p = 0; p < d; ++p) {
      const int u = g.nbr(v, p);
      const int q = g.rev(v, p);
      if (u < 0 || u >= n) throw invalid_parameter("graph: neighbor out of range");
      if (u == v) throw invalid_parameter("graph: self-loop");
      if (q < 0 || q >= d) throw invalid_parameter("graph: port out of range");
      if (g.nbr(u, q) != v || g.rev(u, q) != p)
        throw invalid_parameter("graph: arc reversal is not an involution");
    }
    for (int p = 0; p < d; ++p) {
      const int u = g.nbr(v, p);
      if (seen[u]) throw invalid_parameter("graph: duplicate neighbor");
      seen[u] = 1;
    }
    for (int p = 0; p < d; ++p) seen[g.nbr(v, p)] = 0;
  }
}

const char* family_name(Family f) {
  switch (f) {
    case Family::Complete: return "complete";
    case Family::Hypercube: return "hypercube";
    case Family::CompleteBipartite: return "bipartite";
    case Family::Torus: return "torus";
    case Family::Custom: return "custom";
  }
  return "unknown";
}

}  // namespace qws
