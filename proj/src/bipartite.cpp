#include "gmew/bipartite.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include <Eigen/SVD>

namespace gmew {

Mat BipartiteWitness::dense() const {
  const std::int64_t d = target.dim();
  Mat w = Mat::Zero(d, d);
  if (kind == WitnessKind::Fidelity) {
    w = identity_coeff * Mat::Identity(d, d);
  } else {
    for (const auto& term : positive_part)
      w += term.coeff * (term.vector * term.vector.adjoint());
  }
  w -= target.projector();
  return w;
}

double BipartiteWitness::target_expectation() const {
  if (kind == WitnessKind::Fidelity) return identity_coeff - 1.0;
  double acc = -1.0;
  for (const auto& term : positive_part)
    acc += term.coeff * std::norm(term.vector.dot(target.amps()));
  return acc;
}

double BipartiteWitness::trace() const {
  if (kind == WitnessKind::Fidelity)
    return identity_coeff * static_cast<double>(target.dim()) - 1.0;
  double acc = -1.0;
  for (const auto& term : positive_part) acc += term.coeff;
  return acc;
}

BipartiteWitness optimal_bew(const PureState& state, const Bipartition& cut,
                             double tol) {
  SchmidtDecomposition sd = schmidt(state, cut, tol);
  if (sd.rank < 2)
    throw std::domain_error("optimal_bew: state is not entangled across " +
                            cut.to_string());
  BipartiteWitness w{WitnessKind::OptimalPT, cut, state, {}, 0.0, {}, {}};
  w.positive_part.reserve(static_cast<std::size_t>(sd.rank) * sd.rank);
  for (int i = 0; i < sd.rank; ++i)
    for (int j = 0; j < sd.rank; ++j)
      w.positive_part.push_back(
          {sd.coeffs[i] * sd.coeffs[j],
           embed_product(sd.left_basis[i], sd.right_basis[j], cut, state.dims())});
  w.sd = std::move(sd);
  return w;
}

BipartiteWitness generalized_bew(const PureState& state, const Bipartition& cut,
                                 const std::vector<double>& alphas, double tol) {
  SchmidtDecomposition sd = schmidt(state, cut, tol);
  if (sd.rank < 2)
    throw std::domain_error("generalized_bew: state is not entangled across " +
                            cut.to_string());
  const int r = sd.rank;
  const std::size_t pairs = static_cast<std::size_t>(r) * (r - 1) / 2;
  if (alphas.size() != pairs)
    throw std::invalid_argument("generalized_bew: need one alpha per Schmidt pair");
  for (double a : alphas)
    if (!(a > 0.0))
      throw std::domain_error("generalized_bew: alphas must be positive");

  BipartiteWitness w{WitnessKind::GeneralizedPT, cut, state, {}, 0.0, {}, {}};
  auto product = [&](int i, int j) {
    return embed_product(sd.left_basis[i], sd.right_basis[j], cut, state.dims());
  };
  std::size_t p = 0;
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j, ++p) {
      const double alpha = alphas[p];
      const double beta = sd.coeffs[i] * sd.coeffs[j] / alpha;
      w.positive_part.push_back({alpha * alpha, product(i, j)});
      w.positive_part.push_back({beta * beta, product(j, i)});
      w.alpha_beta.emplace_back(alpha, beta);
    }
    w.positive_part.push_back({sd.lambda(i), product(i, i)});
  }
  w.sd = std::move(sd);
  return w;
}

BipartiteWitness fidelity_bew(const PureState& state, const Bipartition& cut) {
  SchmidtDecomposition sd = schmidt(state, cut);
  BipartiteWitness w{WitnessKind::Fidelity, cut, state, {}, sd.lambda(0), {}, {}};
  w.sd = std::move(sd);
  return w;
}

SpanCheckReport optimality_span_check(const BipartiteWitness& w, int samples,
                                      std::uint64_t seed) {
  if (w.kind != WitnessKind::OptimalPT && w.kind != WitnessKind::GeneralizedPT)
    throw std::invalid_argument("optimality_span_check: PT-kind witness required");
  const SchmidtDecomposition& sd = *w.sd;
  const Bipartition& cut = w.cut;
  const std::vector<int>& dims = w.target.dims();
  const Mat wd = w.dense();
  const int r = sd.rank;

  std::vector<Vec> states;
  auto prod = [&](const Vec& a, const Vec& b) {
    Vec v = embed_product(a, b, cut, dims);
    return Vec(v / v.norm());
  };
  const cxd im(0.0, 1.0);
  std::size_t pair = 0;
  for (int e = 0; e < r; ++e) {
    for (int f = e + 1; f < r; ++f, ++pair) {
      const Vec& le = sd.left_basis[e];
      const Vec& lf = sd.left_basis[f];
      const Vec& re = sd.right_basis[e];
      const Vec& rf = sd.right_basis[f];
      double alpha = 1.0, beta = 1.0;
      if (w.kind == WitnessKind::GeneralizedPT) {
        alpha = w.alpha_beta[pair].first;
        beta = w.alpha_beta[pair].second;
      }
      const double sa = std::sqrt(alpha), sb = std::sqrt(beta);
      states.push_back(prod(le, re));
      states.push_back(prod(lf, rf));
      states.push_back(prod(sb * le + sa * lf, sa * re + sb * rf));
      states.push_back(prod(sb * le + im * sa * lf, sa * re - im * sb * rf));
    }
  }

  // Rank-deficient states: any product with a factor outside the Schmidt
  // support has zero expectation and completes the span.
  const CutIndexer ix(dims, cut);
  auto complement = [&](const std::vector<Vec>& support, std::int64_t dim) {
    std::vector<Vec> all(support.begin(), support.begin() + r);
    for (std::int64_t k = 0; k < dim; ++k) {
      Vec e = Vec::Zero(dim);
      e[k] = 1.0;
      all.push_back(e);
    }
    auto basis = orthonormalize(all, 1e-9);
    return std::vector<Vec>(basis.begin() + r, basis.end());
  };
  if (r < ix.dim_a() || r < ix.dim_b()) {
    const auto compl_a = complement(sd.left_basis, ix.dim_a());
    const auto compl_b = complement(sd.right_basis, ix.dim_b());
    for (const Vec& xa : compl_a)
      for (std::int64_t k = 0; k < ix.dim_b(); ++k) {
        Vec e = Vec::Zero(ix.dim_b());
        e[k] = 1.0;
        states.push_back(prod(xa, e));
      }
    for (std::int64_t k = 0; k < ix.dim_a(); ++k)
      for (const Vec& yb : compl_b) {
        Vec e = Vec::Zero(ix.dim_a());
        e[k] = 1.0;
        states.push_back(prod(e, yb));
      }
  }

  SpanCheckReport report;
  report.full_rank = ix.dim_a() * ix.dim_b();
  report.states_checked = static_cast<int>(states.size());
  for (const Vec& s : states) {
    const double expect = std::real(s.dot(wd * s));
    report.max_abs_expectation = std::max(report.max_abs_expectation, std::abs(expect));
  }

  Mat packed(w.target.dim(), states.size());
  for (std::size_t i = 0; i < states.size(); ++i) packed.col(i) = states[i];
  Eigen::JacobiSVD<Mat> svd(packed);
  const double cutoff = 1e-7 * svd.singularValues()[0];
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()[i] > cutoff) ++report.span_rank;

  if (samples > 0) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    auto random_unit = [&](std::int64_t d) {
      Vec v(d);
      for (std::int64_t k = 0; k < d; ++k) v[k] = cxd(gauss(rng), gauss(rng));
      return Vec(v / v.norm());
    };
    double lo = 0.0;
    for (int s = 0; s < samples; ++s) {
      const Vec p = prod(random_unit(ix.dim_a()), random_unit(ix.dim_b()));
      lo = std::min(lo, std::real(p.dot(wd * p)));
    }
    report.monte_carlo_min = lo;
  }

  report.pass = report.max_abs_expectation <= 1e-9 &&
                report.span_rank == report.full_rank &&
                report.monte_carlo_min >= -1e-9;
  if (report.max_abs_expectation > 1e-9)
    throw std::runtime_error("optimality_span_check: listed state has nonzero expectation");
  return report;
}

}  // namespace gmew
