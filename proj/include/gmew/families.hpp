#ifndef GMEW_FAMILIES_HPP
#define GMEW_FAMILIES_HPP

#include <cstdint>
#include <vector>

#include "gmew/lift.hpp"
#include "gmew/types.hpp"

namespace gmew {

/// Projector onto the n-qubit computational strings with exactly `ones` 1s,
/// kept as a list of basis indices (diagonal, never densified by default).
struct SymmetricProjector {
  int n;
  int ones;
  std::vector<std::int64_t> indices;  // C(n, ones) strings
};

SymmetricProjector symmetric_projector(int n, int ones);

/// Parameters of the four-qubit singlet a|psi-_12 psi-_34> + e^{i theta} b
/// |psi-_13 psi-_24>, constrained by a^2 + b^2 + cos(theta) a b = 1.
struct SingletParams {
  double a;
  double b;
  double theta;
};

/// Solve the normalization constraint for b > 0 given (a, theta).
SingletParams singlet_params(double a, double theta);

PureState w_state(int n);
PureState ghz_state(int d, int n);
/// sum_i sqrt(lambda_i) |i>^{(x)n}; lambdas are sorted descending internally.
PureState schmidt_state(std::vector<double> lambdas, int n);
PureState singlet4_state(const SingletParams& p);
PureState singlet6_state();

/// Witness ((n-1)/n) P1 + (sqrt(floor(n/2)(n-floor(n/2)))/n)(P0 + P2) - proj.
LiftedWitness w_witness(int n);

/// Diagonal-plus-projector witness for Schmidt-decomposable states: cross
/// strings pi(i^r j^(n-r)) carry sqrt(li*lj), pure strings |i^n> carry li.
LiftedWitness schmidt_witness(std::vector<double> lambdas, int n);

LiftedWitness singlet4_witness(const SingletParams& p);
LiftedWitness singlet6_witness();

/// GME fidelity witness lambda I - proj with lambda = max_cut lambda_0.
struct FidelityWitness {
  double lambda;
  PureState target;
  double trace() const { return lambda * static_cast<double>(target.dim()) - 1.0; }
  double target_expectation() const { return lambda - 1.0; }
  Mat dense() const;
};

FidelityWitness fidelity_gme_witness(const PureState& state);

/// Closed-form white-noise tolerance of schmidt_witness (lambdas descending).
double schmidt_witness_tolerance(const std::vector<double>& lambdas, int n);
/// Closed-form tolerance of the fidelity witness lambda_0 I - proj.
double schmidt_fidelity_tolerance(const std::vector<double>& lambdas, int n);

/// Coefficients of the four-qubit singlet witness (c2, c1, c0).
struct Singlet4Coefficients {
  double c2, c1, c0;
};
Singlet4Coefficients singlet4_coefficients(const SingletParams& p);

}  // namespace gmew

#endif
