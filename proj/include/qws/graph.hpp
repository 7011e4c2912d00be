#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qws {

enum class Family { Complete, Hypercube, CompleteBipartite, Torus, Custom };

// Arc-labeled regular graph. An arc is an ordered (vertex, port) pair,
// indexed as v*degree + p. reverse_port(v,p) is the port q at
// u = neighbor(v,p) with neighbor(u,q) = v, so arc reversal is an involution.
struct RegularGraph {
  int n_vertices = 0;
  int degree = 0;
  std::vector<std::int32_t> neighbor;      // n_vertices * degree entries
  std::vector<std::int32_t> reverse_port;  // n_vertices * degree entries
  Family family = Family::Custom;
  int param_a = 0;  // Complete/CompleteBipartite: N, Hypercube: n, Torus: D
  int param_b = 0;  // Torus: L

  std::size_t arc_count() const {
    return static_cast<std::size_t>(n_vertices) * degree;
  }
  std::size_t arc(int v, int p) const {
    return static_cast<std::size_t>(v) * degree + p;
  }
  int nbr(int v, int p) const { return neighbor[arc(v, p)]; }
  int rev(int v, int p) const { return reverse_port[arc(v, p)]; }
};

struct MarkedSet {
  std::vector<int> vertices;  // sorted, unique, non-empty
  int count() const { return static_cast<int>(vertices.size()); }
  bool contains(int v) const;
};

RegularGraph build_complete(int n);
RegularGraph build_hypercube(int n);
RegularGraph build_complete_bipartite(int n);
RegularGraph build_torus(int dim, int side);

// Adjacency-list format: first line "N d", then N lines of d space-separated
// neighbor indices; ports are positional. Rejects irregular, non-symmetric,
// self-looped or multi-edged inputs.
RegularGraph build_custom(std::istream& in);
RegularGraph load_graph(const std::string& path);

MarkedSet make_marked(const RegularGraph& g, std::vector<int> vertices);

// The all-zeros / all-ones bit strings of a hypercube.
MarkedSet antipodal_marks(const RegularGraph& g);

// Exhaustive structural check (regular ports, involution, no self-loops,
// per-vertex injectivity); throws invalid_parameter on violation.
void validate(const RegularGraph& g);

const char* family_name(Family f);

}  // namespace qws
