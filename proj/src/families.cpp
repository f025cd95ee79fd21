#include "gmew/families.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "gmew/tensor.hpp"

namespace gmew {

namespace {

SpVec unit_vector(std::int64_t dim, std::int64_t index) {
  SpVec v(dim);
  v.insertBack(index) = 1.0;
  return v;
}

WitnessBlock projector_block(double coeff, const SymmetricProjector& p) {
  WitnessBlock blk;
  blk.coeff = coeff;
  const std::int64_t dim = std::int64_t{1} << p.n;
  for (std::int64_t idx : p.indices) blk.basis.push_back(unit_vector(dim, idx));
  return blk;
}

// Apply a two-qubit singlet (|01>-|10>)/sqrt(2) on parties (p, q) of an
// n-qubit amplitude vector under the big-endian index convention.
Vec pair_singlet_product(int n, const std::vector<std::pair<int, int>>& pairs) {
  const std::int64_t dim = std::int64_t{1} << n;
  const double s = 1.0 / std::sqrt(2.0);
  Vec out = Vec::Zero(dim);
  for (std::int64_t g = 0; g < dim; ++g) {
    double amp = 1.0;
    for (auto [p, q] : pairs) {
      const int bp = (g >> (n - 1 - p)) & 1;
      const int bq = (g >> (n - 1 - q)) & 1;
      if (bp == bq) {
        amp = 0.0;
        break;
      }
      amp *= (bp == 0) ? s : -s;
    }
    out[g] = amp;
  }
  return out;
}

std::vector<double> sorted_spectrum(std::vector<double> lambdas) {
  if (lambdas.size() < 2)
    throw std::invalid_argument("spectrum: need at least two coefficients");
  double sum = 0.0;
  for (double l : lambdas) {
    if (l < -1e-12) throw std::domain_error("spectrum: negative coefficient");
    sum += l;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::domain_error("spectrum: coefficients must sum to 1");
  std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
  return lambdas;
}

}  // namespace

SymmetricProjector symmetric_projector(int n, int ones) {
  if (n < 1 || ones < 0 || ones > n)
    throw std::invalid_argument("symmetric_projector: bad arguments");
  SymmetricProjector p{n, ones, {}};
  const std::int64_t dim = std::int64_t{1} << n;
  for (std::int64_t g = 0; g < dim; ++g)
    if (std::popcount(static_cast<std::uint64_t>(g)) == ones)
      p.indices.push_back(g);
  return p;
}

SingletParams singlet_params(double a, double theta) {
  // b^2 + cos(theta) a b + a^2 - 1 = 0, positive root.
  const double c = std::cos(theta);
  const double disc = c * c * a * a - 4.0 * (a * a - 1.0);
  if (disc < 0.0)
    throw std::domain_error("singlet_params: no real normalization for given (a, theta)");
  const double b = (-c * a + std::sqrt(disc)) / 2.0;
  if (!(b > 0.0))
    throw std::domain_error("singlet_params: constraint has no positive b");
  return {a, b, theta};
}

PureState w_state(int n) {
  if (n < 2) throw std::invalid_argument("w_state: n >= 2 required");
  const std::int64_t dim = std::int64_t{1} << n;
  Vec amps = Vec::Zero(dim);
  const double s = 1.0 / std::sqrt(static_cast<double>(n));
  for (int p = 0; p < n; ++p) amps[std::int64_t{1} << (n - 1 - p)] = s;
  return PureState(std::vector<int>(n, 2), std::move(amps));
}

PureState ghz_state(int d, int n) {
  if (d < 2 || n < 2) throw std::invalid_argument("ghz_state: d, n >= 2 required");
  return schmidt_state(std::vector<double>(d, 1.0 / d), n);
}

PureState schmidt_state(std::vector<double> lambdas, int n) {
  if (n < 2) throw std::invalid_argument("schmidt_state: n >= 2 required");
  const auto l = sorted_spectrum(std::move(lambdas));
  const int d = static_cast<int>(l.size());
  const std::vector<int> dims(n, d);
  const std::int64_t dim = total_dim(dims);
  Vec amps = Vec::Zero(dim);
  // |i...i> has index i * (d^n - 1) / (d - 1) = i * sum_k d^k.
  std::int64_t rep = 0;
  for (int k = 0; k < n; ++k) rep = rep * d + 1;
  for (int i = 0; i < d; ++i) amps[i * rep] = std::sqrt(l[i]);
  return PureState(dims, std::move(amps));
}

PureState singlet4_state(const SingletParams& p) {
  const double constraint = p.a * p.a + p.b * p.b + std::cos(p.theta) * p.a * p.b;
  if (std::abs(constraint - 1.0) > 1e-10)
    throw std::domain_error("singlet4_state: a^2 + b^2 + cos(theta) a b != 1");
  const Vec t1 = pair_singlet_product(4, {{0, 1}, {2, 3}});
  const Vec t2 = pair_singlet_product(4, {{0, 2}, {1, 3}});
  const cxd phase = std::polar(1.0, p.theta);
  Vec amps = p.a * t1 + p.b * phase * t2;
  return PureState(std::vector<int>(4, 2), std::move(amps));
}

PureState singlet6_state() {
  const cxd im(0.0, 1.0);
  Vec amps = 0.5 * (pair_singlet_product(6, {{0, 1}, {2, 3}, {4, 5}}) +
                    im * pair_singlet_product(6, {{0, 2}, {1, 3}, {4, 5}}) +
                    im * pair_singlet_product(6, {{0, 1}, {2, 4}, {3, 5}}) -
                    pair_singlet_product(6, {{0, 2}, {1, 4}, {3, 5}}));
  return PureState(std::vector<int>(6, 2), std::move(amps));
}

LiftedWitness w_witness(int n) {
  if (n < 3) throw std::invalid_argument("w_witness: n >= 3 required");
  const double c1 = static_cast<double>(n - 1) / n;
  const double c02 = std::sqrt(static_cast<double>((n / 2)) * (n - n / 2)) / n;
  LiftedWitness w{w_state(n), {}, true, ""};
  w.blocks.push_back(projector_block(c1, symmetric_projector(n, 1)));
  w.blocks.push_back(projector_block(c02, symmetric_projector(n, 0)));
  w.blocks.push_back(projector_block(c02, symmetric_projector(n, 2)));
  return w;
}

LiftedWitness schmidt_witness(std::vector<double> lambdas, int n) {
  const auto l = sorted_spectrum(std::move(lambdas));
  const int d = static_cast<int>(l.size());
  int nonzero = 0;
  for (double x : l)
    if (x > 1e-12) ++nonzero;
  if (nonzero < 2)
    throw std::domain_error("schmidt_witness: fewer than two nonzero coefficients");
  if (n < 2) throw std::invalid_argument("schmidt_witness: n >= 2 required");
  const std::vector<int> dims(n, d);
  const std::int64_t dim = total_dim(dims);
  if (dim > (std::int64_t{1} << 22))
    throw std::length_error("schmidt_witness: total dimension too large");

  LiftedWitness w{schmidt_state(l, n), {}, true, ""};
  std::int64_t rep = 0;
  for (int k = 0; k < n; ++k) rep = rep * d + 1;

  // Every cross string pi(i^r j^(n-r)) is its own orthogonal block.
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const double c = std::sqrt(l[i] * l[j]);
      for (std::int64_t pattern = 1; pattern + 1 < (std::int64_t{1} << n); ++pattern) {
        std::int64_t idx = 0;
        for (int q = 0; q < n; ++q)
          idx = idx * d + (((pattern >> (n - 1 - q)) & 1) ? j : i);
        WitnessBlock blk;
        blk.coeff = c;
        blk.basis.push_back(unit_vector(dim, idx));
        w.blocks.push_back(std::move(blk));
      }
    }
  }
  for (int i = 0; i < d; ++i) {
    WitnessBlock blk;
    blk.coeff = l[i];
    blk.basis.push_back(unit_vector(dim, i * rep));
    w.blocks.push_back(std::move(blk));
  }
  return w;
}

Singlet4Coefficients singlet4_coefficients(const SingletParams& p) {
  const double a2 = p.a * p.a, b2 = p.b * p.b;
  const double c2 = std::max({1.0 - 0.75 * a2, 1.0 - 0.75 * b2,
                              0.75 * (a2 + b2) - 0.5});
  const double c0 = std::max({0.5 - 0.25 * (a2 + b2), 0.25 * a2, 0.25 * b2});
  return {c2, 0.5, c0};
}

LiftedWitness singlet4_witness(const SingletParams& p) {
  const auto [c2, c1, c0] = singlet4_coefficients(p);
  LiftedWitness w{singlet4_state(p), {}, true, ""};
  w.blocks.push_back(projector_block(c2, symmetric_projector(4, 2)));
  w.blocks.push_back(projector_block(c1, symmetric_projector(4, 1)));
  w.blocks.push_back(projector_block(c1, symmetric_projector(4, 3)));
  w.blocks.push_back(projector_block(c0, symmetric_projector(4, 0)));
  w.blocks.push_back(projector_block(c0, symmetric_projector(4, 4)));
  return w;
}

LiftedWitness singlet6_witness() {
  LiftedWitness w{singlet6_state(), {}, true, ""};
  const double c[4] = {5.0 / 8.0, 0.5, 0.25, 0.125};
  w.blocks.push_back(projector_block(c[0], symmetric_projector(6, 3)));
  for (int off = 1; off <= 3; ++off) {
    w.blocks.push_back(projector_block(c[off], symmetric_projector(6, 3 - off)));
    w.blocks.push_back(projector_block(c[off], symmetric_projector(6, 3 + off)));
  }
  return w;
}

Mat FidelityWitness::dense() const {
  const std::int64_t d = target.dim();
  return lambda * Mat::Identity(d, d) - target.projector();
}

FidelityWitness fidelity_gme_witness(const PureState& state) {
  double lambda = 0.0;
  for (const Bipartition& cut : enumerate_bipartitions(state.parties()))
    lambda = std::max(lambda, schmidt(state, cut).lambda(0));
  return {lambda, state};
}

double schmidt_witness_tolerance(const std::vector<double>& lambdas, int n) {
  const auto l = sorted_spectrum(lambdas);
  double sum_sq = 0.0, sum_sqrt = 0.0;
  for (double x : l) {
    sum_sq += x * x;
    sum_sqrt += std::sqrt(x);
  }
  const double d = static_cast<double>(l.size());
  const double cross = (std::pow(2.0, n - 1) - 1.0) / std::pow(d, n) *
                       (sum_sqrt * sum_sqrt - 1.0);
  return (1.0 - sum_sq) / (1.0 - sum_sq + cross);
}

double schmidt_fidelity_tolerance(const std::vector<double>& lambdas, int n) {
  const auto l = sorted_spectrum(lambdas);
  const double d = static_cast<double>(l.size());
  return (1.0 - l[0]) / (1.0 - std::pow(d, -n));
}

}  // namespace gmew
