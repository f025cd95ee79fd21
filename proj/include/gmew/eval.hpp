#ifndef GMEW_EVAL_HPP
#define GMEW_EVAL_HPP

#include <cstdint>
#include <vector>

#include "gmew/bipartite.hpp"
#include "gmew/families.hpp"
#include "gmew/graphstate.hpp"
#include "gmew/lift.hpp"
#include "gmew/types.hpp"

namespace gmew {

/// rho(p) = p I/D + (1-p) |psi><psi|.
struct NoisyStateModel {
  PureState target;
  double p;

  std::int64_t total_dim() const { return target.dim(); }
  Mat dense() const;
};

/// Exact expectation p Tr(W)/D + (1-p) <psi|W|psi> without densification.
double expectation(const LiftedWitness& w, const NoisyStateModel& rho);
double expectation(const BipartiteWitness& w, const NoisyStateModel& rho);
double expectation(const FidelityWitness& w, const NoisyStateModel& rho);
/// Diagonal graph witnesses evaluate against noise around their own target.
double expectation(const DiagonalGraphWitness& w, double p);
double expectation(const Mat& w, const Mat& rho);

/// Critical p with Tr(W rho(p)) = 0, from the structured trace and target
/// expectation: p* = -w_psi / (Tr(W)/D - w_psi), clamped to [0, 1].
double white_noise_tolerance(double trace, double target_expectation,
                             double total_dim);
double white_noise_tolerance(const LiftedWitness& w);
double white_noise_tolerance(const DiagonalGraphWitness& w);
double white_noise_tolerance(const FidelityWitness& w);
double white_noise_tolerance(const BipartiteWitness& w);
/// Dense path, used to cross-check the structured one.
double white_noise_tolerance_dense(const Mat& w, const PureState& target);
/// Independent oracle: bisection on p of the dense trace.
double white_noise_tolerance_bisect(const Mat& w, const PureState& target,
                                    double tol = 1e-13);

struct FinerReport {
  bool finer;     // w2 is finer than w1 (w1 - w2 is PSD)
  double margin;  // min eig(w1 - w2)
};

/// Checks whether w2 is finer than w1 at lambda = 1: w1 - w2 >= 0.
FinerReport finer_than(const Mat& w1, const Mat& w2, double tol = 1e-10);

double trace_of(const LiftedWitness& w);
double trace_of(const DiagonalGraphWitness& w);
double trace_of(const FidelityWitness& w);
double trace_of(const BipartiteWitness& w);

/// Approximate minimum of <a b|W|a b> over product states across `cut` by
/// alternating eigenvector updates (see-saw). Deterministic for fixed
/// (seed, restarts, iters); the result is an upper bound on the true minimum.
double biseparable_min(const Mat& w, const std::vector<int>& dims,
                       const Bipartition& cut, int restarts = 64,
                       int iters = 200, std::uint64_t seed = 42);

/// Minimum of biseparable_min over every bipartition.
double biseparable_min_all_cuts(const Mat& w, const std::vector<int>& dims,
                                int restarts = 64, int iters = 200,
                                std::uint64_t seed = 42);

}  // namespace gmew

#endif
