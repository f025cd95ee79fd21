#include "gmew/graphstate.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "gmew/tensor.hpp"

namespace gmew {

namespace {

// Index-space mask of a label: party/vertex i sits at bit (n-1-i) of the
// computational index (big-endian), while labels keep vertex i at bit i.
std::uint32_t index_mask(std::uint32_t label, int n) {
  std::uint32_t m = 0;
  for (int i = 0; i < n; ++i)
    if ((label >> i) & 1u) m |= 1u << (n - 1 - i);
  return m;
}

Vec apply_label_signs(const Vec& base, std::uint32_t label, int n) {
  Vec amps = base;
  const std::uint32_t zmask = index_mask(label, n);
  for (std::int64_t x = 0; x < amps.size(); ++x)
    if (std::popcount(static_cast<std::uint32_t>(x) & zmask) & 1) amps[x] = -amps[x];
  return amps;
}

}  // namespace

void Graph::toggle_edge(int u, int v) {
  adj[u] ^= 1u << v;
  adj[v] ^= 1u << u;
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1 || n > 30) throw std::invalid_argument("make_graph: bad vertex count");
  Graph g{n, std::vector<std::uint32_t>(n, 0u)};
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw std::invalid_argument("make_graph: bad edge");
    g.adj[u] |= 1u << v;
    g.adj[v] |= 1u << u;
  }
  return g;
}

Graph cluster_graph(int n) {
  if (n < 2) throw std::invalid_argument("cluster_graph: n >= 2 required");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return make_graph(n, edges);
}

PureState graph_state_dense(const Graph& g) {
  if (g.n > 16)
    throw std::length_error("graph_state_dense: n > 16 is too large to densify");
  const std::int64_t dim = std::int64_t{1} << g.n;
  Vec amps = Vec::Constant(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v) {
      if (!g.edge(u, v)) continue;
      const std::int64_t bu = std::int64_t{1} << (g.n - 1 - u);
      const std::int64_t bv = std::int64_t{1} << (g.n - 1 - v);
      for (std::int64_t x = 0; x < dim; ++x)
        if ((x & bu) && (x & bv)) amps[x] = -amps[x];
    }
  return PureState(std::vector<int>(g.n, 2), std::move(amps));
}

PureState graph_basis_state(const Graph& g, std::uint32_t label) {
  const PureState base = graph_state_dense(g);
  return PureState(base.dims(), apply_label_signs(base.amps(), label, g.n));
}

int vk_class(std::uint32_t label, int n) {
  int k = 0;
  int last = -3;
  for (int i = 0; i < n; ++i) {
    if (((label >> i) & 1u) && i - last >= 3) {
      ++k;
      last = i;
    }
  }
  return k;
}

int gf2_rank(std::vector<std::uint32_t> rows, int cols) {
  int rank = 0;
  for (int c = 0; c < cols; ++c) {
    const std::uint32_t bit = 1u << c;
    std::size_t pivot = rank;
    while (pivot < rows.size() && !(rows[pivot] & bit)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != static_cast<std::size_t>(rank) && (rows[r] & bit)) rows[r] ^= rows[rank];
    ++rank;
  }
  return rank;
}

int boundary_rank(const Graph& g, const Bipartition& cut) {
  const auto a = cut.parties_a();
  const auto b = cut.parties_b();
  std::vector<std::uint32_t> rows;
  rows.reserve(a.size());
  for (int u : a) {
    std::uint32_t row = 0;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (g.edge(u, b[j])) row |= 1u << j;
    rows.push_back(row);
  }
  return gf2_rank(std::move(rows), static_cast<int>(b.size()));
}

BipartiteWitness graph_bipartite_witness(const Graph& g, const Bipartition& cut) {
  if (g.n > 12)
    throw std::length_error("graph_bipartite_witness: dense route limited to n <= 12");
  const PureState psi = graph_state_dense(g);
  const int k = boundary_rank(g, cut);
  if (k < 1)
    throw std::domain_error("graph_bipartite_witness: graph state is product across " +
                            cut.to_string());
  const SchmidtDecomposition sd = schmidt(psi, cut);
  if (sd.rank != (1 << k))
    throw std::runtime_error("graph_bipartite_witness: Schmidt rank != 2^boundary rank");

  // Membership of |a>_G in the Schmidt-product span, tested via the squared
  // Frobenius norm of its coefficient matrix in the product basis.
  const Mat l = [&] {
    Mat m(sd.left_basis[0].size(), sd.rank);
    for (int i = 0; i < sd.rank; ++i) m.col(i) = sd.left_basis[i];
    return m;
  }();
  const Mat r = [&] {
    Mat m(sd.right_basis[0].size(), sd.rank);
    for (int i = 0; i < sd.rank; ++i) m.col(i) = sd.right_basis[i];
    return m;
  }();

  BipartiteWitness w{WitnessKind::GraphDiagonal, cut, psi, {}, 0.0, {}, {}};
  const double coeff = 1.0 / ((1 << k) - 1);
  const std::uint32_t labels = 1u << g.n;
  for (std::uint32_t a = 1; a < labels; ++a) {
    const PureState basis(psi.dims(), apply_label_signs(psi.amps(), a, g.n));
    const Mat coeffs = l.adjoint() * reshape_to_cut(basis, cut) * r.conjugate();
    if (coeffs.squaredNorm() > 0.5)
      w.positive_part.push_back({coeff, basis.amps()});
  }
  if (static_cast<int>(w.positive_part.size()) != (1 << (2 * k)) - 1)
    throw std::runtime_error("graph_bipartite_witness: label count != 4^k - 1");
  w.sd = sd;
  return w;
}

std::vector<BipartiteWitness> graph_bew_family(const Graph& g) {
  std::vector<BipartiteWitness> out;
  for (const Bipartition& cut : enumerate_bipartitions(g.n))
    out.push_back(graph_bipartite_witness(g, cut));
  return out;
}

DiagonalGraphWitness::DiagonalGraphWitness(int n, std::vector<double> class_coeffs)
    : n_(n), class_coeffs_(std::move(class_coeffs)) {
  if (n < 4 || n > 24)
    throw std::invalid_argument("DiagonalGraphWitness: n outside [4, 24]");
  const int kmax = (n + 2) / 3;  // ceil(n/3)
  if (static_cast<int>(class_coeffs_.size()) != kmax)
    throw std::invalid_argument("DiagonalGraphWitness: need one coefficient per class");
  counts_.assign(kmax, 0);
  const std::uint32_t labels = 1u << n;
  for (std::uint32_t a = 1; a < labels; ++a) ++counts_[vk_class(a, n) - 1];
}

double DiagonalGraphWitness::trace() const {
  double acc = -1.0;
  for (std::size_t k = 0; k < class_coeffs_.size(); ++k)
    acc += class_coeffs_[k] * static_cast<double>(counts_[k]);
  return acc;
}

double DiagonalGraphWitness::noise_tolerance() const {
  const double dim = std::pow(2.0, n_);
  return 1.0 / (1.0 + trace() / dim);
}

Mat DiagonalGraphWitness::dense() const {
  if (n_ > 12)
    throw std::length_error("DiagonalGraphWitness::dense: n > 12");
  const Graph g = cluster_graph(n_);
  const std::int64_t dim = std::int64_t{1} << n_;
  // W = U D U^H with U the graph-basis column matrix; all amplitudes are
  // +-1/sqrt(dim), so build U from the base state and label signs.
  const PureState base = graph_state_dense(g);
  Mat u(dim, dim);
  for (std::int64_t a = 0; a < dim; ++a) {
    const std::uint32_t zmask = index_mask(static_cast<std::uint32_t>(a), n_);
    for (std::int64_t x = 0; x < dim; ++x) {
      const bool flip = std::popcount(static_cast<std::uint32_t>(x) & zmask) & 1;
      u(x, a) = flip ? -base.amps()[x] : base.amps()[x];
    }
  }
  RVec diag(dim);
  diag[0] = -1.0;
  for (std::int64_t a = 1; a < dim; ++a)
    diag[a] = class_coeffs_[vk_class(static_cast<std::uint32_t>(a), n_) - 1];
  return u * diag.asDiagonal() * u.adjoint();
}

DiagonalGraphWitness cluster_witness(int n) {
  if (n < 4) throw std::invalid_argument("cluster_witness: n >= 4 required");
  const int kmax = (n + 2) / 3;
  std::vector<double> coeffs(kmax);
  for (int k = 1; k <= kmax; ++k) coeffs[k - 1] = 1.0 / ((std::int64_t{1} << k) - 1);
  return DiagonalGraphWitness(n, std::move(coeffs));
}

DiagonalGraphWitness cluster4_opt_witness() {
  return DiagonalGraphWitness(4, {1.0, 0.0});
}

std::vector<BipartiteWitness> cluster4_opt_replacements() {
  const Graph g = cluster_graph(4);
  const PureState psi = graph_state_dense(g);
  // Hand-tuned label sets for the cuts 13|24 and 14|23 (msb-first strings
  // over qubits 1..4; vertex i maps to label bit i-1).
  const std::vector<std::vector<std::uint32_t>> labels = {
      {0b1000, 0b0010, 0b1010, 0b1100, 0b0110, 0b1110},   // 0001,0100,0101,0011,0110,0111
      {0b1000, 0b0100, 0b1010, 0b1100, 0b0110, 0b1110}};  // 0001,0010,0101,0011,0110,0111
  const std::vector<Bipartition> cuts = {Bipartition(0b0101, 4), Bipartition(0b1001, 4)};
  std::vector<BipartiteWitness> out;
  for (int i = 0; i < 2; ++i) {
    BipartiteWitness w{WitnessKind::GraphDiagonal, cuts[i], psi, {}, 0.0, {}, {}};
    for (std::uint32_t a : labels[i])
      w.positive_part.push_back({1.0, graph_basis_state(g, a).amps()});
    out.push_back(std::move(w));
  }
  return out;
}

double cluster_noise_tolerance(int n) {
  if (n < 4 || n > 24)
    throw std::invalid_argument("cluster_noise_tolerance: n outside [4, 24]");
  return cluster_witness(n).noise_tolerance();
}

LocalComplementation local_complementation(const Graph& g, int vertex) {
  if (vertex < 0 || vertex >= g.n)
    throw std::invalid_argument("local_complementation: vertex out of range");
  LocalComplementation out{g, vertex, g.neighbors(vertex)};
  for (int u = 0; u < g.n; ++u) {
    if (!((out.neighbor_mask >> u) & 1u)) continue;
    for (int v = u + 1; v < g.n; ++v)
      if ((out.neighbor_mask >> v) & 1u) out.graph.toggle_edge(u, v);
  }
  return out;
}

Mat local_complementation_unitary(const Graph& g, int vertex) {
  if (g.n > 8) throw std::length_error("local_complementation_unitary: n > 8");
  const std::int64_t dim = std::int64_t{1} << g.n;
  const cxd im(0.0, 1.0);
  const double s = 1.0 / std::sqrt(2.0);

  // (-iX)^(1/2) = (I - iX)/sqrt(2) on `vertex`.
  Mat u = Mat::Zero(dim, dim);
  const std::int64_t bit = std::int64_t{1} << (g.n - 1 - vertex);
  for (std::int64_t x = 0; x < dim; ++x) {
    u(x, x) += s;
    u(x ^ bit, x) += -im * s;
  }
  // (iZ)^(1/2) = (I + iZ)/sqrt(2) on every neighbor.
  for (int b = 0; b < g.n; ++b) {
    if (!g.edge(vertex, b)) continue;
    const std::int64_t zbit = std::int64_t{1} << (g.n - 1 - b);
    Vec diag(dim);
    for (std::int64_t x = 0; x < dim; ++x)
      diag[x] = (x & zbit) ? s * (1.0 - im) : s * (1.0 + im);
    u = diag.asDiagonal() * u;
  }
  return u;
}

}  // namespace gmew
