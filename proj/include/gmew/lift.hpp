#ifndef GMEW_LIFT_HPP
#define GMEW_LIFT_HPP

#include <string>
#include <vector>

#include "gmew/bipartite.hpp"
#include "gmew/tensor.hpp"
#include "gmew/types.hpp"

namespace gmew {

/// One harvested vector with the coefficient it carries and the cut that
/// produced it. Entries that coincide as rays across different cuts are
/// merged, keeping the largest coefficient.
struct TaggedVector {
  double coeff;
  Vec vector;  // normalized, global computational basis
  Bipartition origin;
};

struct TaggedVectorSet {
  std::vector<int> dims;
  std::vector<TaggedVector> entries;
  bool has_rank_one_cut = false;
  bool complete_family = false;  // harvested from all 2^(n-1)-1 cuts
};

/// Partition of the tagged set into mutually orthogonal groups (finest such
/// division; connected components of the non-orthogonality graph).
struct OrthoPartition {
  std::vector<std::vector<int>> groups;
};

struct WitnessBlock {
  double coeff;               // c_k = max coefficient inside the group
  std::vector<SpVec> basis;   // orthonormal basis of the spanned subspace V_k
  std::int64_t dim() const { return static_cast<std::int64_t>(basis.size()); }
};

/// GME witness sum_k c_k I_k - |psi><psi| with block-diagonal positive part.
struct LiftedWitness {
  PureState target;
  std::vector<WitnessBlock> blocks;
  bool gme = true;     // false for partial families or rank-1 cuts
  std::string tag;     // "", "partial-cuts" or "rank1-cut"

  std::int64_t dim() const { return target.dim(); }
  Mat dense(std::int64_t dense_limit = 4096) const;
  double trace() const;                   // sum_k c_k dim(V_k) - 1
  double expectation_pure(const Vec& phi) const;
  double target_expectation() const { return expectation_pure(target.amps()); }
};

/// Step 1 of the construction: Schmidt-decompose the state across every cut
/// and collect the r^2 product vectors with coefficients sqrt(li*lj).
/// Rank-1 cuts contribute their single product with coefficient 1 and mark
/// the set as not certifying GME.
TaggedVectorSet harvest(const PureState& state,
                        const std::vector<Bipartition>& cuts,
                        double tol = kRankTol);

/// Same harvest but driven by explicit bipartite witnesses (e.g. the
/// graph-basis family for cluster states, or hand-tuned replacements).
TaggedVectorSet harvest(const PureState& state,
                        const std::vector<BipartiteWitness>& witnesses);

/// Step 2: finest division such that vectors from different subsets are
/// orthogonal. Union-find over pairs with |<u|v>| > orth_tol; identical to
/// the iterative absorption loop but order-free.
OrthoPartition group(const TaggedVectorSet& s, double orth_tol = kOrthTol);

/// Steps 3-4: orthonormalize each group and attach the maximal coefficient.
LiftedWitness assemble(const PureState& state, const TaggedVectorSet& s,
                       const OrthoPartition& p);

struct CutMargin {
  Bipartition cut;
  double margin;  // min eig(W_hat - W_cut)
};

struct CertificateReport {
  std::vector<CutMargin> margins;
  double min_margin = 0.0;
  bool pass = false;
};

/// Domination certificate: W_hat - W_cut must be PSD for
/// every bipartite witness that fed the lift.
CertificateReport certify(const PureState& state, const LiftedWitness& lifted,
                          const std::vector<BipartiteWitness>& witnesses,
                          double cert_tol = kCertTol);

/// Convenience: the bipartite family used by harvest(state, cuts) for
/// certification purposes. Rank-1 cuts are skipped.
std::vector<BipartiteWitness> optimal_bew_family(const PureState& state,
                                                 const std::vector<Bipartition>& cuts,
                                                 double tol = kRankTol);

/// Full pipeline over all bipartitions with the optimal PT family.
LiftedWitness lift_state(const PureState& state, double tol = kRankTol,
                         double orth_tol = kOrthTol);

SpVec sparse_from_dense(const Vec& v, double prune = 1e-14);

}  // namespace gmew

#endif
