#ifndef GMEW_GRAPHSTATE_HPP
#define GMEW_GRAPHSTATE_HPP

#include <cstdint>
#include <vector>

#include "gmew/bipartite.hpp"
#include "gmew/types.hpp"

namespace gmew {

/// Simple graph on up to 30 vertices, adjacency stored one bitmask row per
/// vertex (bit j of row i set iff edge (i, j) exists).
struct Graph {
  int n = 0;
  std::vector<std::uint32_t> adj;

  bool edge(int u, int v) const { return (adj[u] >> v) & 1u; }
  void toggle_edge(int u, int v);
  std::uint32_t neighbors(int v) const { return adj[v]; }
};

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges);

/// Path graph 0-1-2-...-(n-1) defining the linear cluster state.
Graph cluster_graph(int n);

/// Dense |G>: C-Z gates per edge applied to |+>^n. Limited to n <= 16.
PureState graph_state_dense(const Graph& g);

/// Dense graph-basis state |a>_G = prod_i Z_i^{a_i} |G>. Labels use bit i for
/// vertex i (LSB = vertex 0).
PureState graph_basis_state(const Graph& g, std::uint32_t label);

/// V_k classification of nonzero labels: the largest number of 1-positions
/// with pairwise distance >= 3, found by greedy left-to-right selection
/// (optimal for interval constraints). Returns 0 for the all-zero label.
int vk_class(std::uint32_t label, int n);

/// Rank of a binary matrix over GF(2); rows are bitmasks over `cols` columns.
int gf2_rank(std::vector<std::uint32_t> rows, int cols);

/// Rank of the boundary block Gamma_{A|Abar} of the adjacency matrix.
int boundary_rank(const Graph& g, const Bipartition& cut);

/// Graph-basis-diagonal bipartite witness for |G> across one cut, normalized
/// to Tr(W |G><G|) = -1: coefficient 1/(2^k - 1) on every nonzero graph-basis
/// label inside the Schmidt-product span of the cut (k = boundary rank).
/// Dense construction, n <= 12.
BipartiteWitness graph_bipartite_witness(const Graph& g, const Bipartition& cut);

std::vector<BipartiteWitness> graph_bew_family(const Graph& g);

/// Cluster witness in graph-basis-diagonal form, scalable to n ~ 24:
/// coefficient 1/(2^k - 1) on the labels of class V_k.
class DiagonalGraphWitness {
 public:
  DiagonalGraphWitness(int n, std::vector<double> class_coeffs);

  int n() const { return n_; }
  int max_class() const { return static_cast<int>(class_coeffs_.size()); }
  double class_coeff(int k) const { return class_coeffs_.at(k - 1); }
  const std::vector<std::int64_t>& class_counts() const { return counts_; }

  double trace() const;
  double target_expectation() const { return -1.0; }
  double noise_tolerance() const;
  /// Dense computational-basis form for n <= 12 (needs the cluster graph).
  Mat dense() const;

 private:
  int n_;
  std::vector<double> class_coeffs_;   // [k-1] applies to labels in V_k
  std::vector<std::int64_t> counts_;   // |V_k|, from full 2^n enumeration
};

/// The Eq.-type witness sum_k sum_{a in V_k} 1/(2^k - 1) |a><a|_G - proj.
DiagonalGraphWitness cluster_witness(int n);

/// Comparison fixture: the four-qubit witness with the V_1 term only.
DiagonalGraphWitness cluster4_opt_witness();

/// The two hand-tuned replacement bipartite witnesses (cuts 13|24 and 14|23,
/// 1-based) that recover the fixture above through the generic lift.
std::vector<BipartiteWitness> cluster4_opt_replacements();

/// White-noise tolerance p* = 1 / (1 + T/2^n), T = sum_k |V_k|/(2^k-1) - 1.
double cluster_noise_tolerance(int n);

/// Local complementation at `vertex`: toggles all edges inside the
/// neighborhood. relabel() transports graph-basis labels: the stabilizer
/// transfer g_b -> g_a g_b for b in N(a) flips the neighborhood bits of any
/// label with bit `vertex` set.
struct LocalComplementation {
  Graph graph;
  int vertex;
  std::uint32_t neighbor_mask;

  std::uint32_t relabel(std::uint32_t label) const {
    return ((label >> vertex) & 1u) ? (label ^ neighbor_mask) : label;
  }
};

LocalComplementation local_complementation(const Graph& g, int vertex);

/// Dense unitary (-iX_a)^(1/2) prod_{b in N(a)} (iZ_b)^(1/2) implementing the
/// complementation; used by tests (n <= 8).
Mat local_complementation_unitary(const Graph& g, int vertex);

}  // namespace gmew

#endif
