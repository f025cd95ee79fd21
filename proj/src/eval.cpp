#include "gmew/eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "gmew/tensor.hpp"

namespace gmew {

Mat NoisyStateModel::dense() const {
  const std::int64_t d = target.dim();
  return p / static_cast<double>(d) * Mat::Identity(d, d) +
         (1.0 - p) * target.projector();
}

namespace {

double mix(double trace, double target_expectation, double p, double dim) {
  return p * trace / dim + (1.0 - p) * target_expectation;
}

}  // namespace

double expectation(const LiftedWitness& w, const NoisyStateModel& rho) {
  if (w.dim() != rho.total_dim())
    throw std::invalid_argument("expectation: dimension mismatch");
  return mix(w.trace(), w.expectation_pure(rho.target.amps()), rho.p,
             static_cast<double>(rho.total_dim()));
}

double expectation(const BipartiteWitness& w, const NoisyStateModel& rho) {
  if (w.target.dim() != rho.total_dim())
    throw std::invalid_argument("expectation: dimension mismatch");
  double target_exp = -std::norm(w.target.amps().dot(rho.target.amps()));
  if (w.kind == WitnessKind::Fidelity) {
    target_exp += w.identity_coeff;
  } else {
    for (const auto& term : w.positive_part)
      target_exp += term.coeff * std::norm(term.vector.dot(rho.target.amps()));
  }
  return mix(w.trace(), target_exp, rho.p, static_cast<double>(rho.total_dim()));
}

double expectation(const FidelityWitness& w, const NoisyStateModel& rho) {
  if (w.target.dim() != rho.total_dim())
    throw std::invalid_argument("expectation: dimension mismatch");
  const double target_exp =
      w.lambda - std::norm(w.target.amps().dot(rho.target.amps()));
  return mix(w.trace(), target_exp, rho.p, static_cast<double>(rho.total_dim()));
}

double expectation(const DiagonalGraphWitness& w, double p) {
  return mix(w.trace(), w.target_expectation(), p, std::pow(2.0, w.n()));
}

double expectation(const Mat& w, const Mat& rho) {
  if (w.rows() != rho.rows())
    throw std::invalid_argument("expectation: dimension mismatch");
  return std::real((w * rho).trace());
}

double white_noise_tolerance(double trace, double target_expectation,
                             double total_dim) {
  if (target_expectation >= 0.0)
    throw std::domain_error("white_noise_tolerance: witness does not detect the target");
  const double p = -target_expectation / (trace / total_dim - target_expectation);
  return std::clamp(p, 0.0, 1.0);
}

double white_noise_tolerance(const LiftedWitness& w) {
  return white_noise_tolerance(w.trace(), w.target_expectation(),
                               static_cast<double>(w.dim()));
}

double white_noise_tolerance(const DiagonalGraphWitness& w) {
  return white_noise_tolerance(w.trace(), w.target_expectation(), std::pow(2.0, w.n()));
}

double white_noise_tolerance(const FidelityWitness& w) {
  return white_noise_tolerance(w.trace(), w.target_expectation(),
                               static_cast<double>(w.target.dim()));
}

double white_noise_tolerance(const BipartiteWitness& w) {
  return white_noise_tolerance(w.trace(), w.target_expectation(),
                               static_cast<double>(w.target.dim()));
}

double white_noise_tolerance_dense(const Mat& w, const PureState& target) {
  const double trace = std::real(w.trace());
  const double wpsi = std::real(target.amps().dot(w * target.amps()));
  return white_noise_tolerance(trace, wpsi, static_cast<double>(target.dim()));
}

double white_noise_tolerance_bisect(const Mat& w, const PureState& target,
                                    double tol) {
  const std::int64_t d = target.dim();
  auto value = [&](double p) {
    const Mat rho = p / static_cast<double>(d) * Mat::Identity(d, d) +
                    (1.0 - p) * target.projector();
    return expectation(w, rho);
  };
  double lo = 0.0, hi = 1.0;
  if (value(0.0) >= 0.0)
    throw std::domain_error("white_noise_tolerance_bisect: not detecting at p = 0");
  if (value(1.0) < 0.0) return 1.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (value(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

FinerReport finer_than(const Mat& w1, const Mat& w2, double tol) {
  if (w1.rows() != w2.rows())
    throw std::invalid_argument("finer_than: dimension mismatch");
  const double margin = min_eigenvalue(Mat(w1 - w2));
  return {margin >= -tol, margin};
}

double trace_of(const LiftedWitness& w) { return w.trace(); }
double trace_of(const DiagonalGraphWitness& w) { return w.trace(); }
double trace_of(const FidelityWitness& w) { return w.trace(); }
double trace_of(const BipartiteWitness& w) { return w.trace(); }

namespace {

Vec random_unit(std::mt19937_64& rng, std::int64_t dim) {
  std::normal_distribution<double> gauss;
  Vec v(dim);
  for (std::int64_t i = 0; i < dim; ++i) v[i] = cxd(gauss(rng), gauss(rng));
  return v / v.norm();
}

// W permuted to cut-major order, viewed as blocks of size dB x dB.
struct SeeSawContext {
  Mat w;
  std::int64_t da, db;

  Mat contract_b(const Vec& b) const {
    Mat m(da, da);
    for (std::int64_t i = 0; i < da; ++i)
      for (std::int64_t k = 0; k < da; ++k)
        m(i, k) = b.dot(w.block(i * db, k * db, db, db) * b);
    return m;
  }

  Mat contract_a(const Vec& a) const {
    Mat m = Mat::Zero(db, db);
    for (std::int64_t i = 0; i < da; ++i)
      for (std::int64_t k = 0; k < da; ++k)
        m += std::conj(a[i]) * a[k] * w.block(i * db, k * db, db, db);
    return m;
  }
};

Vec min_eigvec(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> es((m + m.adjoint()) / 2.0);
  return es.eigenvectors().col(0);
}

}  // namespace

double biseparable_min(const Mat& w, const std::vector<int>& dims,
                       const Bipartition& cut, int restarts, int iters,
                       std::uint64_t seed) {
  const std::int64_t d = total_dim(dims);
  if (w.rows() != d)
    throw std::invalid_argument("biseparable_min: dims do not match matrix");
  const auto perm = cut_major_permutation(dims, cut);
  const CutIndexer ix(dims, cut);
  SeeSawContext ctx{Mat(d, d), ix.dim_a(), ix.dim_b()};
  for (std::int64_t r = 0; r < d; ++r)
    for (std::int64_t c = 0; c < d; ++c) ctx.w(perm[r], perm[c]) = w(r, c);

  double best = std::numeric_limits<double>::infinity();
  for (int r = 0; r < restarts; ++r) {
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ull * (r + 1));
    Vec b = random_unit(rng, ctx.db);
    double value = std::numeric_limits<double>::infinity();
    for (int it = 0; it < iters; ++it) {
      const Vec a = min_eigvec(ctx.contract_b(b));
      const Mat nb = ctx.contract_a(a);
      b = min_eigvec(nb);
      const double now = std::real(b.dot(nb * b));
      if (std::abs(value - now) < 1e-12) {
        value = now;
        break;
      }
      value = now;
    }
    best = std::min(best, value);
  }
  return best;
}

double biseparable_min_all_cuts(const Mat& w, const std::vector<int>& dims,
                                int restarts, int iters, std::uint64_t seed) {
  double best = std::numeric_limits<double>::infinity();
  for (const Bipartition& cut : enumerate_bipartitions(static_cast<int>(dims.size())))
    best = std::min(best, biseparable_min(w, dims, cut, restarts, iters, seed));
  return best;
}

}  // namespace gmew
