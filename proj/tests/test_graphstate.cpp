#include <doctest.h>

#include <random>

#include "gmew/eval.hpp"
#include "gmew/graphstate.hpp"
#include "gmew/tensor.hpp"

using namespace gmew;

namespace {

// Dense stabilizer g_i = X_i prod_{j in N(i)} Z_j.
Mat stabilizer(const Graph& g, int i) {
  const std::int64_t dim = std::int64_t{1} << g.n;
  Mat s = Mat::Zero(dim, dim);
  const std::int64_t xbit = std::int64_t{1} << (g.n - 1 - i);
  for (std::int64_t x = 0; x < dim; ++x) {
    double sign = 1.0;
    for (int j = 0; j < g.n; ++j)
      if (g.edge(i, j) && (x & (std::int64_t{1} << (g.n - 1 - j)))) sign = -sign;
    s(x ^ xbit, x) = sign;
  }
  return s;
}

// Brute-force V_k oracle: largest subset of 1-positions at pairwise
// distance >= 3 by explicit subset enumeration.
int vk_bruteforce(std::uint32_t label, int n) {
  std::vector<int> ones;
  for (int i = 0; i < n; ++i)
    if ((label >> i) & 1u) ones.push_back(i);
  int best = 0;
  for (std::uint32_t sub = 0; sub < (1u << ones.size()); ++sub) {
    std::vector<int> pick;
    for (std::size_t j = 0; j < ones.size(); ++j)
      if ((sub >> j) & 1u) pick.push_back(ones[j]);
    bool ok = true;
    for (std::size_t x = 0; x < pick.size() && ok; ++x)
      for (std::size_t y = x + 1; y < pick.size(); ++y)
        if (pick[y] - pick[x] < 3) {
          ok = false;
          break;
        }
    if (ok) best = std::max(best, static_cast<int>(pick.size()));
  }
  return best;
}

std::uint32_t label_from_string(const std::string& s) {
  std::uint32_t label = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] == '1') label |= 1u << i;
  return label;
}

}  // namespace

TEST_SUITE_BEGIN("graphstate");

TEST_CASE("cluster graph state satisfies its stabilizers") {
  for (int n : {2, 4, 6}) {
    const Graph g = cluster_graph(n);
    const PureState psi = graph_state_dense(g);
    for (int i = 0; i < n; ++i) {
      const Vec applied = stabilizer(g, i) * psi.amps();
      CHECK((applied - psi.amps()).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("two-qubit cluster is Bell-equivalent") {
  const PureState psi = graph_state_dense(cluster_graph(2));
  const auto sd = schmidt(psi, Bipartition(1, 2));
  CHECK(sd.rank == 2);
  CHECK(sd.coeffs[0] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  CHECK(sd.coeffs[1] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
}

TEST_CASE("graph basis states carry the stabilizer signs") {
  const Graph g = cluster_graph(3);
  for (std::uint32_t label = 0; label < 8; ++label) {
    const PureState basis = graph_basis_state(g, label);
    for (int i = 0; i < 3; ++i) {
      const double sign = ((label >> i) & 1u) ? -1.0 : 1.0;
      const Vec applied = stabilizer(g, i) * basis.amps();
      CHECK((applied - sign * basis.amps()).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("vk_class on reference labels") {
  CHECK(vk_class(label_from_string("1101100"), 7) == 2);
  CHECK(vk_class(label_from_string("1001011"), 7) == 3);
  CHECK(vk_class(0, 7) == 0);  // target label signal
}

TEST_CASE("vk_class matches brute force and the n=4 reference sets") {
  for (int n : {4, 6, 8, 10})
    for (std::uint32_t a = 1; a < (1u << n); ++a)
      CHECK(vk_class(a, n) == vk_bruteforce(a, n));

  // Reference n=4 classification.
  std::vector<std::string> v1 = {"0001", "0010", "0011", "0100", "0101", "0110",
                                 "0111", "1000", "1010", "1100", "1110"};
  std::vector<std::string> v2 = {"1001", "1011", "1101", "1111"};
  for (const auto& s : v1) CHECK(vk_class(label_from_string(s), 4) == 1);
  for (const auto& s : v2) CHECK(vk_class(label_from_string(s), 4) == 2);
}

TEST_CASE("vk classes partition the nonzero labels and respect reversal") {
  for (int n : {5, 9, 12}) {
    std::int64_t total = 0;
    const int kmax = (n + 2) / 3;
    std::vector<std::int64_t> counts(kmax + 1, 0);
    for (std::uint32_t a = 1; a < (1u << n); ++a) {
      const int k = vk_class(a, n);
      REQUIRE(k >= 1);
      REQUIRE(k <= kmax);
      ++counts[k];
      ++total;

      std::uint32_t rev = 0;
      for (int i = 0; i < n; ++i)
        if ((a >> i) & 1u) rev |= 1u << (n - 1 - i);
      CHECK(vk_class(rev, n) == k);
    }
    CHECK(total == (1 << n) - 1);
  }
}

TEST_CASE("gf2_rank basics and cluster boundary examples") {
  CHECK(gf2_rank({0u, 0u, 0u}, 3) == 0);

  const Graph g6 = cluster_graph(6);
  // 1-based cut {1,2,3}|{4,5,6} -> vertices {0,1,2}: single boundary edge.
  CHECK(boundary_rank(g6, Bipartition(0b000111, 6)) == 1);
  // 1-based cut {1,2,4,5}|{3,6} -> vertices {0,1,3,4}.
  CHECK(boundary_rank(g6, Bipartition(0b011011, 6)) == 2);
}

TEST_CASE("Schmidt rank equals 2^boundary_rank for cluster cuts") {
  for (int n : {4, 5, 6, 8}) {
    const Graph g = cluster_graph(n);
    const PureState psi = graph_state_dense(g);
    for (const Bipartition& cut : enumerate_bipartitions(n)) {
      const int k = boundary_rank(g, cut);
      const auto sd = schmidt(psi, cut);
      CHECK(sd.rank == (1 << k));
    }
  }
}

TEST_CASE("cluster witness: expectation, trace, n=4 tolerance") {
  const DiagonalGraphWitness w4 = cluster_witness(4);
  CHECK(w4.target_expectation() == -1.0);
  CHECK(w4.class_counts()[0] == 11);
  CHECK(w4.class_counts()[1] == 4);
  CHECK(w4.trace() == doctest::Approx(11.0 + 4.0 / 3.0 - 1.0).epsilon(1e-12));
  CHECK(cluster_noise_tolerance(4) == doctest::Approx(24.0 / 41.0).epsilon(1e-12));
  CHECK_THROWS_AS(cluster_witness(3), std::invalid_argument);
}

TEST_CASE("cluster witness dense form equals the graph-family lift for n=4,5,6") {
  for (int n : {4, 5, 6}) {
    const Graph g = cluster_graph(n);
    const PureState psi = graph_state_dense(g);
    const TaggedVectorSet s = harvest(psi, graph_bew_family(g));
    const LiftedWitness lifted = assemble(psi, s, group(s));
    CHECK((lifted.dense() - cluster_witness(n).dense()).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("cluster tolerance: closed form vs dense bisection for n <= 8") {
  for (int n : {4, 5, 6, 7, 8}) {
    const DiagonalGraphWitness w = cluster_witness(n);
    const PureState psi = graph_state_dense(cluster_graph(n));
    const double closed = w.noise_tolerance();
    const double bisect = white_noise_tolerance_bisect(w.dense(), psi);
    CHECK(closed == doctest::Approx(bisect).epsilon(1e-10));
  }
}

TEST_CASE("cluster tolerance monotonicity and fidelity comparison") {
  for (int n = 4; n < 20; ++n)
    CHECK(cluster_noise_tolerance(n + 1) > cluster_noise_tolerance(n));
  for (int n = 4; n <= 20; ++n)
    CHECK(cluster_noise_tolerance(n) > 0.5 / (1.0 - std::pow(2.0, -n)));
}

TEST_CASE("optimal n=4 fixture is finer and more tolerant") {
  const DiagonalGraphWitness base = cluster_witness(4);
  const DiagonalGraphWitness opt = cluster4_opt_witness();
  CHECK(opt.noise_tolerance() == doctest::Approx(16.0 / 26.0).epsilon(1e-12));
  const auto rep = finer_than(base.dense(), opt.dense());
  CHECK(rep.finer);
  CHECK(rep.margin >= -1e-12);
}

TEST_CASE("local complementation: triangle, path, involution") {
  const Graph triangle = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  const LocalComplementation lc = local_complementation(triangle, 0);
  CHECK(!lc.graph.edge(1, 2));
  CHECK(lc.graph.edge(0, 1));
  CHECK(lc.graph.edge(0, 2));

  // Path 1-2-3 (vertices 0-1-2), complement at the middle adds edge 0-2.
  const Graph path = cluster_graph(3);
  const LocalComplementation mid = local_complementation(path, 1);
  CHECK(mid.graph.edge(0, 2));

  const LocalComplementation twice = local_complementation(mid.graph, 1);
  for (int u = 0; u < 3; ++u) CHECK(twice.graph.adj[u] == path.adj[u]);

  CHECK_THROWS_AS(local_complementation(path, 5), std::invalid_argument);
}

TEST_CASE("local complementation unitary maps |G> to |tau(G)> up to phase") {
  for (int n : {3, 4, 5}) {
    const Graph g = cluster_graph(n);
    for (int v = 0; v < n; ++v) {
      const LocalComplementation lc = local_complementation(g, v);
      const Vec lhs = local_complementation_unitary(g, v) * graph_state_dense(g).amps();
      const Vec rhs = graph_state_dense(lc.graph).amps();
      const cxd phase = rhs.dot(lhs);
      CHECK(std::abs(std::abs(phase) - 1.0) < 1e-9);
      CHECK((lhs - phase * rhs).cwiseAbs().maxCoeff() < 1e-9);
    }
  }
}

TEST_CASE("local complementation relabeling transports graph-basis labels") {
  const Graph g = cluster_graph(4);
  const LocalComplementation lc = local_complementation(g, 1);
  const Mat u = local_complementation_unitary(g, 1);
  for (std::uint32_t label : {0b0010u, 0b1011u, 0b0111u, 0b1101u}) {
    const Vec lhs = u * graph_basis_state(g, label).amps();
    const Vec rhs = graph_basis_state(lc.graph, lc.relabel(label)).amps();
    const cxd phase = rhs.dot(lhs);
    CHECK(std::abs(std::abs(phase) - 1.0) < 1e-9);
    CHECK((lhs - phase * rhs).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("graph bipartite witness: label count and certificate role") {
  const Graph g = cluster_graph(4);
  for (const Bipartition& cut : enumerate_bipartitions(4)) {
    const BipartiteWitness w = graph_bipartite_witness(g, cut);
    const int k = boundary_rank(g, cut);
    CHECK(static_cast<int>(w.positive_part.size()) == (1 << (2 * k)) - 1);
    CHECK(w.target_expectation() == doctest::Approx(-1.0).epsilon(1e-10));
    // PSD positive part, witness negative only on the target direction.
    for (const auto& term : w.positive_part) CHECK(term.coeff > 0.0);
  }
}

TEST_SUITE_END();
