#include "gmew/lift.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace gmew {

namespace {

// Union-find with path halving.
struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

void push_merged(TaggedVectorSet& set, double coeff, Vec vector,
                 const Bipartition& origin) {
  // The harvested set is a set of rays: a vector that already appears (up to
  // phase) only raises the stored coefficient, keeping the cut it came from.
  for (TaggedVector& e : set.entries) {
    if (std::abs(e.vector.dot(vector)) >= 1.0 - 1e-9) {
      if (coeff > e.coeff) {
        e.coeff = coeff;
        e.origin = origin;
      }
      return;
    }
  }
  set.entries.push_back({coeff, std::move(vector), origin});
}

}  // namespace

SpVec sparse_from_dense(const Vec& v, double prune) {
  SpVec s(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (std::abs(v[i]) > prune) s.insertBack(i) = v[i];
  return s;
}

Mat LiftedWitness::dense(std::int64_t dense_limit) const {
  const std::int64_t d = dim();
  if (d > dense_limit)
    throw std::length_error("LiftedWitness::dense: dimension exceeds dense limit");
  Mat w = Mat::Zero(d, d);
  for (const WitnessBlock& blk : blocks)
    for (const SpVec& b : blk.basis) {
      const Vec bd = Vec(b);
      w += blk.coeff * (bd * bd.adjoint());
    }
  w -= target.projector();
  return w;
}

double LiftedWitness::trace() const {
  double acc = -1.0;
  for (const WitnessBlock& blk : blocks)
    acc += blk.coeff * static_cast<double>(blk.dim());
  return acc;
}

double LiftedWitness::expectation_pure(const Vec& phi) const {
  double acc = -std::norm(target.amps().dot(phi));
  for (const WitnessBlock& blk : blocks) {
    double block_weight = 0.0;
    for (const SpVec& b : blk.basis) {
      cxd overlap = 0.0;
      for (SpVec::InnerIterator it(b); it; ++it)
        overlap += std::conj(it.value()) * phi[it.index()];
      block_weight += std::norm(overlap);
    }
    acc += blk.coeff * block_weight;
  }
  return acc;
}

TaggedVectorSet harvest(const PureState& state,
                        const std::vector<Bipartition>& cuts, double tol) {
  if (cuts.empty()) throw std::invalid_argument("harvest: no cuts given");
  TaggedVectorSet set{state.dims(), {}, false, false};
  for (const Bipartition& cut : cuts) {
    const SchmidtDecomposition sd = schmidt(state, cut, tol);
    if (sd.rank < 2) {
      set.has_rank_one_cut = true;
      Vec v = embed_product(sd.left_basis[0], sd.right_basis[0], cut, state.dims());
      push_merged(set, sd.lambda(0), std::move(v), cut);
      continue;
    }
    for (int i = 0; i < sd.rank; ++i)
      for (int j = 0; j < sd.rank; ++j) {
        Vec v = embed_product(sd.left_basis[i], sd.right_basis[j], cut, state.dims());
        push_merged(set, sd.coeffs[i] * sd.coeffs[j], std::move(v), cut);
      }
  }
  set.complete_family =
      cuts.size() == (1u << (state.parties() - 1)) - 1u;
  return set;
}

TaggedVectorSet harvest(const PureState& state,
                        const std::vector<BipartiteWitness>& witnesses) {
  if (witnesses.empty()) throw std::invalid_argument("harvest: no witnesses given");
  TaggedVectorSet set{state.dims(), {}, false, false};
  for (const BipartiteWitness& w : witnesses) {
    if (w.kind == WitnessKind::Fidelity)
      throw std::invalid_argument("harvest: fidelity witnesses carry no vector decomposition");
    if ((w.target.amps() - state.amps()).norm() > 1e-9)
      throw std::invalid_argument("harvest: witness target differs from state");
    for (const WeightedVector& term : w.positive_part)
      push_merged(set, term.coeff, term.vector, w.cut);
  }
  set.complete_family =
      witnesses.size() == (1u << (state.parties() - 1)) - 1u;
  return set;
}

OrthoPartition group(const TaggedVectorSet& s, double orth_tol) {
  const int n = static_cast<int>(s.entries.size());
  if (n == 0) throw std::invalid_argument("group: empty set");
  DisjointSets ds(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(s.entries[i].vector.dot(s.entries[j].vector)) > orth_tol)
        ds.unite(i, j);

  std::vector<int> root_to_group(n, -1);
  OrthoPartition p;
  for (int i = 0; i < n; ++i) {
    const int r = ds.find(i);
    if (root_to_group[r] < 0) {
      root_to_group[r] = static_cast<int>(p.groups.size());
      p.groups.emplace_back();
    }
    p.groups[root_to_group[r]].push_back(i);
  }
  return p;
}

LiftedWitness assemble(const PureState& state, const TaggedVectorSet& s,
                       const OrthoPartition& p) {
  std::size_t covered = 0;
  for (const auto& g : p.groups) covered += g.size();
  if (covered != s.entries.size())
    throw std::invalid_argument("assemble: partition does not cover the set");

  LiftedWitness w{state, {}, true, ""};
  for (const auto& g : p.groups) {
    WitnessBlock blk;
    blk.coeff = 0.0;
    std::vector<Vec> vectors;
    vectors.reserve(g.size());
    for (int idx : g) {
      blk.coeff = std::max(blk.coeff, s.entries[idx].coeff);
      vectors.push_back(s.entries[idx].vector);
    }
    for (const Vec& b : orthonormalize(vectors))
      blk.basis.push_back(sparse_from_dense(b));
    w.blocks.push_back(std::move(blk));
  }
  if (s.has_rank_one_cut) {
    w.gme = false;
    w.tag = "rank1-cut";
  } else if (!s.complete_family) {
    w.gme = false;
    w.tag = "partial-cuts";
  }
  return w;
}

CertificateReport certify(const PureState& state, const LiftedWitness& lifted,
                          const std::vector<BipartiteWitness>& witnesses,
                          double cert_tol) {
  if ((lifted.target.amps() - state.amps()).norm() > 1e-9)
    throw std::invalid_argument("certify: witness target differs from state");
  const Mat what = lifted.dense();
  CertificateReport report;
  report.min_margin = std::numeric_limits<double>::infinity();
  for (const BipartiteWitness& bw : witnesses) {
    if ((bw.target.amps() - state.amps()).norm() > 1e-9)
      throw std::invalid_argument("certify: bipartite witness target differs from state");
    const double m = min_eigenvalue(Mat(what - bw.dense()));
    report.margins.push_back({bw.cut, m});
    report.min_margin = std::min(report.min_margin, m);
  }
  report.pass = report.min_margin >= -cert_tol;
  return report;
}

std::vector<BipartiteWitness> optimal_bew_family(const PureState& state,
                                                 const std::vector<Bipartition>& cuts,
                                                 double tol) {
  std::vector<BipartiteWitness> out;
  for (const Bipartition& cut : cuts) {
    const SchmidtDecomposition sd = schmidt(state, cut, tol);
    if (sd.rank < 2) continue;
    out.push_back(optimal_bew(state, cut, tol));
  }
  return out;
}

LiftedWitness lift_state(const PureState& state, double tol, double orth_tol) {
  const auto cuts = enumerate_bipartitions(state.parties());
  const TaggedVectorSet s = harvest(state, cuts, tol);
  return assemble(state, s, group(s, orth_tol));
}

}  // namespace gmew
