#ifndef GMEW_BIPARTITE_HPP
#define GMEW_BIPARTITE_HPP

#include <optional>
#include <vector>

#include "gmew/tensor.hpp"
#include "gmew/types.hpp"

namespace gmew {

enum class WitnessKind { OptimalPT, GeneralizedPT, Fidelity, GraphDiagonal };

/// One (coefficient, vector) term of the positive part of a witness.
struct WeightedVector {
  double coeff;
  Vec vector;  // normalized, in the global computational basis
};

/// Bipartite entanglement witness W = sum_i c_i |v_i><v_i| - |psi><psi|.
/// The fidelity kind keeps a symbolic identity term (identity_coeff) instead
/// of enumerating basis vectors.
struct BipartiteWitness {
  WitnessKind kind;
  Bipartition cut;
  PureState target;
  std::vector<WeightedVector> positive_part;
  double identity_coeff = 0.0;
  std::optional<SchmidtDecomposition> sd;  // kept for optimality span checks
  // Generalized kind: (alpha_ij, beta_ij) per Schmidt pair i<j, row-major.
  std::vector<std::pair<double, double>> alpha_beta;

  Mat dense() const;
  double target_expectation() const;  // Tr(W |psi><psi|)
  double trace() const;
};

/// Optimal decomposable witness from the partial transpose of the singlet-like
/// positive operator: positive part sqrt(lambda_i lambda_j) over all Schmidt
/// index pairs of the cut.
BipartiteWitness optimal_bew(const PureState& state, const Bipartition& cut,
                             double tol = kRankTol);

/// Generalized family: per pair i<j, terms alpha_ij^2 |ij> and beta_ij^2 |ji>
/// with alpha_ij * beta_ij = sqrt(lambda_i lambda_j), plus the diagonal
/// lambda_i |ii> terms. alphas are row-major over pairs (0,1), (0,2), ...
BipartiteWitness generalized_bew(const PureState& state, const Bipartition& cut,
                                 const std::vector<double>& alphas,
                                 double tol = kRankTol);

/// lambda_0 I - |psi><psi| for the given cut.
BipartiteWitness fidelity_bew(const PureState& state, const Bipartition& cut);

struct SpanCheckReport {
  int span_rank = 0;
  std::int64_t full_rank = 0;  // dimA * dimB
  double max_abs_expectation = 0.0;
  int states_checked = 0;
  double monte_carlo_min = 0.0;  // min Tr(W rho_prod) over random probes
  bool pass = false;
};

/// Executable optimality certificate: builds the canonical zero-expectation
/// product states (four per Schmidt pair, in the cut's
/// Schmidt bases; rank-deficient directions are completed with products from
/// the orthogonal complement), verifies each expectation vanishes and that
/// the whole set spans H_A (x) H_Abar. `samples` extra random product states
/// are probed for non-negativity as a side check.
SpanCheckReport optimality_span_check(const BipartiteWitness& w, int samples = 0,
                                      std::uint64_t seed = 42);

}  // namespace gmew

#endif
