#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"

#include "qws/errors.hpp"
#include "qws/quotient.hpp"
#include "qws/simulate.hpp"
#include "qws/walk.hpp"

using namespace qws;

namespace {

std::vector<long long> counts(const TypePartition& p) {
  return p.type_count;
}

Eigen::VectorXcd unit(int dim, int k) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  v[k] = 1.0;
  return v;
}

}  // namespace

TEST_SUITE("quotient") {

TEST_CASE("complete graph collapses to two types") {
  const RegularGraph g = build_complete(6);
  const TypePartition part = compute_partition(g, make_marked(g, {0}));
  REQUIRE(part.n_types == 2);
  CHECK(counts(part) == std::vector<long long>{1, 5});
  CHECK(part.marked_types == std::vector<int>{0});
  CHECK(part.is_marked_type(0));
  CHECK_FALSE(part.is_marked_type(1));
  CHECK(part.ports(0, 1) == 5);
  CHECK(part.ports(1, 0) == 1);
  CHECK(part.ports(1, 1) == 4);
  CHECK(part.ports(0, 0) == 0);

  const ReducedBasis basis = reduced_basis(part);
  REQUIRE(basis.dimension() == 3);
  CHECK(basis.labels == std::vector<std::string>{"ab", "ba", "bb"});
  CHECK(basis.index_of("bb") == 2);
  CHECK(basis.index_of("zz") == -1);
  CHECK(single_neighbor_type(part));

  // source-count / port-count table behind each basis vector
  const long long src[3] = {1, 5, 5};
  const long long prt[3] = {5, 1, 4};
  for (int i = 0; i < 3; ++i) {
    const auto [x, y] = basis.pairs[i];
    CHECK(part.count(x) == src[i]);
    CHECK(part.ports(x, y) == prt[i]);
  }
}

TEST_CASE("hypercube types follow the distance classes") {
  const RegularGraph g = build_hypercube(4);
  const TypePartition part = compute_partition(g, make_marked(g, {0}));
  REQUIRE(part.n_types == 5);
  CHECK(counts(part) == std::vector<long long>{1, 4, 6, 4, 1});
  const ReducedBasis basis = reduced_basis(part);
  CHECK(basis.labels == std::vector<std::string>{"ab", "ba", "bc", "cb", "cd",
                                                 "dc", "de", "ed"});
  CHECK(single_neighbor_type(part));
}

TEST_CASE("antipodal pair on the hypercube") {
  const RegularGraph g = build_hypercube(4);
  const TypePartition part = compute_partition(g, antipodal_marks(g));
  REQUIRE(part.n_types == 3);
  CHECK(counts(part) == std::vector<long long>{2, 8, 6});
  const ReducedBasis basis = reduced_basis(part);
  CHECK(basis.labels == std::vector<std::string>{"ab", "ba", "bc", "cb"});
  CHECK(part.ports(0, 1) == 4);
  CHECK(part.ports(1, 0) == 1);
  CHECK(part.ports(1, 2) == 3);
  CHECK(part.ports(2, 1) == 4);
  CHECK(single_neighbor_type(part));
}

TEST_CASE("complete bipartite graph has three types") {
  const RegularGraph g = build_complete_bipartite(8);
  const TypePartition part = compute_partition(g, make_marked(g, {0}));
  REQUIRE(part.n_types == 3);
  CHECK(counts(part) == std::vector<long long>{1, 4, 3});
  CHECK(reduced_basis(part).labels ==
        std::vector<std::string>{"ab", "ba", "bc", "cb"});
  CHECK(single_neighbor_type(part));
}

TEST_CASE("small torus matches the hypercube structure") {
  const RegularGraph g = build_torus(2, 4);
  const TypePartition part = compute_partition(g, make_marked(g, {0}));
  REQUIRE(part.n_types == 5);
  CHECK(counts(part) == std::vector<long long>{1, 4, 6, 4, 1});
  CHECK(reduced_basis(part).dimension() == 8);
}

TEST_CASE("8x8 torus splits the diagonal and straight classes") {
  const RegularGraph g = build_torus(2, 8);
  const TypePartition part = compute_partition(g, make_marked(g, {0}));
  CHECK(part.n_types == 15);
  const ReducedBasis basis = reduced_basis(part);
  CHECK(basis.dimension() == 40);

  // column |ba>: distance-1 vertices see the mark once, the diagonal
  // distance-2 type twice and the straight distance-2 type once
  const ReducedOperator op = reduced_operator(part, basis, true);
  const int col = basis.index_of("ba");
  REQUIRE(col >= 0);
  const int row_ab = basis.index_of("ab");
  const int row_cb = basis.index_of("cb");
  const int row_db = basis.index_of("db");
  REQUIRE(row_ab >= 0);
  REQUIRE(row_cb >= 0);
  REQUIRE(row_db >= 0);
  CHECK(std::abs(op.matrix(row_ab, col) - cplx(-0.5)) <= 1e-12);
  CHECK(std::abs(op.matrix(row_cb, col) - cplx(1.0 / std::sqrt(2.0))) <=
        1e-12);
  CHECK(std::abs(op.matrix(row_db, col) - cplx(0.5)) <= 1e-12);
  for (int r = 0; r < basis.dimension(); ++r)
    if (r != row_ab && r != row_cb && r != row_db)
      CHECK(std::abs(op.matrix(r, col)) <= 1e-12);
}

TEST_CASE("labels past z switch to the indexed form") {
  CHECK(type_label(0) == "a");
  CHECK(type_label(25) == "z");
  CHECK(type_label(26) == "t26");
  CHECK(pair_label(0, 1) == "ab");
  CHECK(pair_label(26, 0) == "t26_a");

  const RegularGraph g = build_torus(2, 32);
  const TypePartition part = compute_partition(g, make_marked(g, {0}));
  CHECK(part.n_types == 153);
  const ReducedBasis basis = reduced_basis(part);
  bool saw_underscore = false;
  for (const std::string& l : basis.labels)
    if (l.find('_') != std::string::npos) saw_underscore = true;
  CHECK(saw_underscore);
}

TEST_CASE("initial state coordinates") {
  const RegularGraph g6 = build_complete(6);
  const TypePartition p6 = compute_partition(g6, make_marked(g6, {0}));
  const ReducedBasis b6 = reduced_basis(p6);
  const Eigen::VectorXd v6 = initial_in_basis(p6, b6);
  CHECK(v6[0] == doctest::Approx(1.0 / std::sqrt(6.0)).epsilon(1e-14));
  CHECK(v6[1] == doctest::Approx(1.0 / std::sqrt(6.0)).epsilon(1e-14));
  CHECK(v6[2] == doctest::Approx(2.0 / std::sqrt(6.0)).epsilon(1e-14));
  CHECK(v6.norm() == doctest::Approx(1.0).epsilon(1e-13));

  const RegularGraph g3 = build_complete(3);
  const TypePartition p3 = compute_partition(g3, make_marked(g3, {0}));
  const Eigen::VectorXd v3 = initial_in_basis(p3, reduced_basis(p3));
  for (int i = 0; i < 3; ++i)
    CHECK(v3[i] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));

  // projecting the full uniform state recovers the same coordinates
  const Projection proj = project(g6, p6, b6, initial_state(g6));
  CHECK(proj.residual <= 1e-13);
  for (int i = 0; i < 3; ++i)
    CHECK(std::abs(proj.coords[i] - cplx(v6[i])) <= 1e-13);
}

TEST_CASE("embedding basis vectors") {
  const RegularGraph g = build_complete(4);
  const TypePartition part = compute_partition(g, make_marked(g, {0}));
  const ReducedBasis basis = reduced_basis(part);
  const WalkState e_ab = embed(g, part, basis, unit(basis.dimension(), 0));
  REQUIRE(basis.labels[0] == "ab");
  for (int p = 0; p < 3; ++p)
    CHECK(std::abs(e_ab.amp[g.arc(0, p)] - cplx(1.0 / std::sqrt(3.0))) <=
          1e-14);
  for (int v = 1; v < 4; ++v)
    for (int p = 0; p < 3; ++p) CHECK(std::abs(e_ab.amp[g.arc(v, p)]) == 0.0);

  const RegularGraph h = build_hypercube(3);
  const TypePartition hp = compute_partition(h, make_marked(h, {0}));
  const ReducedBasis hb = reduced_basis(hp);
  const int ba = hb.index_of("ba");
  REQUIRE(ba >= 0);
  const WalkState e_ba = embed(h, hp, hb, unit(hb.dimension(), ba));
  // the three arcs pointing from the distance-1 shell back at vertex 0
  for (int b = 0; b < 3; ++b)
    CHECK(std::abs(e_ba.amp[h.arc(1 << b, b)] - cplx(1.0 / std::sqrt(3.0))) <=
          1e-14);
  CHECK(e_ba.norm() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("project is the left inverse of embed") {
  const RegularGraph g = build_torus(2, 4);
  const TypePartition part = compute_partition(g, make_marked(g, {0}));
  const ReducedBasis basis = reduced_basis(part);
  std::mt19937 rng(99);
  std::normal_distribution<double> dist;
  Eigen::VectorXcd coords(basis.dimension());
  for (int i = 0; i < basis.dimension(); ++i)
    coords[i] = cplx(dist(rng), dist(rng));
  coords /= coords.norm();
  const Projection back = project(g, part, basis, embed(g, part, basis, coords));
  CHECK(back.residual <= 1e-12);
  CHECK((back.coords - coords).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("the walk preserves the reduced subspace") {
  const RegularGraph g = build_complete(64);
  const MarkedSet m = make_marked(g, {0});
  const ReducedSystem sys = reduce_system(g, m);
  WalkState psi = initial_state(g);
  for (int t = 0; t < 5; ++t) psi = step(g, m, psi, true);
  CHECK(project(g, sys.partition, sys.basis, psi).residual <= 1e-10);
}

TEST_CASE("reduced operator columns for the complete graph") {
  const RegularGraph g = build_complete(6);
  const TypePartition part = compute_partition(g, make_marked(g, {0}));
  const ReducedBasis basis = reduced_basis(part);
  const ReducedOperator walk = reduced_operator(part, basis, false);
  const ReducedOperator search = reduced_operator(part, basis, true);

  // |a| = 1 and |a->b| = d, so the coin acts trivially on column |ab> and the
  // shift sends it straight to |ba>; the oracle flips its sign.
  CHECK(std::abs(walk.matrix(1, 0) - cplx(1.0)) <= 1e-14);
  CHECK(std::abs(search.matrix(1, 0) - cplx(-1.0)) <= 1e-14);
  CHECK(std::abs(walk.matrix(0, 0)) <= 1e-14);
  CHECK(std::abs(walk.matrix(2, 0)) <= 1e-14);

  // entries are real; both operators are orthogonal
  for (const ReducedOperator* op : {&walk, &search}) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        CHECK(op->matrix(i, j).imag() == 0.0);
    const Eigen::MatrixXcd gram =
        op->matrix.adjoint() * op->matrix - Eigen::MatrixXcd::Identity(3, 3);
    CHECK(gram.cwiseAbs().maxCoeff() <= 1e-12);
  }

  // the unmarked walk fixes the uniform coordinates
  const Eigen::VectorXd init = initial_in_basis(part, basis);
  CHECK((walk.matrix * init.cast<cplx>() - init.cast<cplx>())
            .cwiseAbs()
            .maxCoeff() <= 1e-12);
}

TEST_CASE("pair counting identities") {
  for (const RegularGraph& g :
       {build_complete(8), build_hypercube(4), build_complete_bipartite(8),
        build_torus(2, 6)}) {
    const TypePartition part = compute_partition(g, make_marked(g, {0}));
    const ReducedBasis basis = reduced_basis(part);
    long long total = 0;
    for (const auto& [x, y] : basis.pairs) {
      total += part.count(x) * part.ports(x, y);
      // arcs from x to y match arcs from y to x one for one
      CHECK(part.count(x) * part.ports(x, y) ==
            part.count(y) * part.ports(y, x));
    }
    CHECK(total == static_cast<long long>(g.arc_count()));
  }
}

TEST_CASE("reduced and full dynamics agree on every basis column") {
  for (const RegularGraph& g :
       {build_complete(6), build_hypercube(3), build_complete_bipartite(8),
        build_torus(2, 4)}) {
    const MarkedSet m = make_marked(g, {0});
    const TypePartition part = compute_partition(g, m);
    const ReducedBasis basis = reduced_basis(part);
    for (const bool with_oracle : {false, true}) {
      const ReducedOperator op = reduced_operator(part, basis, with_oracle);
      for (int j = 0; j < basis.dimension(); ++j) {
        const Eigen::VectorXcd reduced = op.matrix.col(j);
        const WalkState full =
            step(g, m, embed(g, part, basis, unit(basis.dimension(), j)),
                 with_oracle);
        const Projection proj = project(g, part, basis, full);
        CHECK(proj.residual <= 1e-10);
        CHECK((proj.coords - reduced).cwiseAbs().maxCoeff() <= 1e-10);
      }
    }
  }
}

TEST_CASE("marked pairs in the complete graph break the assumption") {
  const RegularGraph g = build_complete(6);
  const TypePartition part = compute_partition(g, make_marked(g, {0, 1}));
  REQUIRE(part.n_types == 2);
  CHECK(counts(part) == std::vector<long long>{2, 4});
  CHECK(part.ports(0, 0) == 1);  // marked vertices see each other
  CHECK_FALSE(single_neighbor_type(part));
}

TEST_CASE("partition requires reaching every vertex") {
  std::istringstream two_squares(
      "8 2\n"
      "1 3\n2 0\n3 1\n0 2\n"
      "5 7\n6 4\n7 5\n4 6\n");
  const RegularGraph g = build_custom(two_squares);
  CHECK_THROWS_AS(compute_partition(g, make_marked(g, {0})), invalid_parameter);
}

}  // TEST_SUITE
