#ifndef GMEW_APPLICATIONS_HPP
#define GMEW_APPLICATIONS_HPP

#include <cstdint>
#include <vector>

#include "gmew/types.hpp"

namespace gmew {

/// Schmidt spectrum of a bipartite pure state: non-negative, descending,
/// summing to 1.
class SchmidtSpectrum {
 public:
  explicit SchmidtSpectrum(std::vector<double> lambdas);

  int d() const { return static_cast<int>(lambdas_.size()); }
  const std::vector<double>& lambdas() const { return lambdas_; }
  double sum_sqrt() const;  // sum_i sqrt(lambda_i)
  double sum_sq() const;    // sum_i lambda_i^2

 private:
  std::vector<double> lambdas_;
};

/// White-noise tolerance of the maximally-entangled fidelity witness
/// W_m = I/d - |phi_d^+><phi_d^+| (the bipartite faithfulness threshold).
double pf(const SchmidtSpectrum& spec);
/// White-noise tolerance of the optimal PT witness for the same state.
double po(const SchmidtSpectrum& spec);
/// Separability threshold d^2 sqrt(l0 l1) / (1 + d^2 sqrt(l0 l1)).
double pe(const SchmidtSpectrum& spec);

/// Upper bound (1 - 1/d)/(1 - 1/d^n) on the tolerance of any fidelity
/// witness; beating it certifies detection of unfaithful states.
double fidelity_tolerance_bound(int d, int n);

struct LdResult {
  double value = 0.0;                 // best found po - pf
  std::vector<double> lambdas;        // arg max spectrum, descending
  int starts = 0;
};

/// Maximal unfaithful length: multi-start Nelder-Mead over square-root
/// coordinates projected to the unit sphere. Best-found semantics.
LdResult ld_maximize(int d, int starts = 200, int budget = 4000,
                     std::uint64_t seed = 42);

struct UnfaithfulAverages {
  double gap = 0.0;     // avg(po - pf)
  double window = 0.0;  // avg(pe - pf)
  double ratio = 0.0;   // avg((po - pf)/(pe - pf))
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Monte Carlo averages over sqrt(lambda) drawn uniformly from the positive
/// orthant of the unit sphere. Deterministic chunked accumulation.
UnfaithfulAverages unfaithful_average(int d, std::int64_t samples,
                                      std::uint64_t seed = 42);

/// Fidelity-route lower bound on the geometric measure of rho_{n,d}(p):
/// eps_f = 1 - gamma(S)/d with S = max{1, d(1-p) + p/d^(n-1)} and
/// gamma(S) = [sqrt(S) + sqrt((d-1)(d-S))]^2 / d, clamped at 0. The literal
/// normalization 1 - gamma(S) (which misses the pure-state endpoint) is kept
/// behind `printed_form` for comparison.
double gamma_bound(int d, int n, double p, bool printed_form = false);

/// Closed-form Legendre transform hat{E}_G(r W_o) for the GHZ witness; r <= 0.
double ehat_closed(int d, double r);

struct MeasureBoundResult {
  double p = 0.0;
  double w = 0.0;      // witness expectation on rho(p)
  double eps_f = 0.0;  // fidelity-route bound
  double eps_o = 0.0;  // lifted-witness bound
  double r_star = 0.0; // optimizer location
};

/// Reusable evaluator for one (d, n): the witness statistics are computed
/// once from the structured witness, then eps_o(p) is a golden-section
/// maximization of r w - hat{E}(r) over r <= 0 with automatic window growth.
class MeasureBound {
 public:
  MeasureBound(int d, int n);
  MeasureBoundResult at(double p) const;
  double witness_tolerance() const;

 private:
  int d_, n_;
  double trace_, target_exp_, dim_;
};

MeasureBoundResult eps_o(int d, int n, double p);

/// Numerical hat{E}_G(r W) by see-saw over biseparable states: the inner step
/// is the top eigenvalue of r W + |phi><phi| (rank-1 secular update), the
/// outer step moves phi to the closest product state of the top eigenvector.
double ehat_numeric(const Mat& w, const std::vector<int>& dims, double r,
                    int restarts = 64, int iters = 200, std::uint64_t seed = 42);

}  // namespace gmew

#endif
