#include "gmew/applications.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "gmew/eval.hpp"
#include "gmew/families.hpp"
#include "gmew/tensor.hpp"

namespace gmew {

SchmidtSpectrum::SchmidtSpectrum(std::vector<double> lambdas)
    : lambdas_(std::move(lambdas)) {
  if (lambdas_.size() < 2)
    throw std::invalid_argument("SchmidtSpectrum: d >= 2 required");
  double sum = 0.0;
  for (double l : lambdas_) {
    if (l < -1e-12) throw std::domain_error("SchmidtSpectrum: negative entry");
    sum += l;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::domain_error("SchmidtSpectrum: entries must sum to 1");
  std::sort(lambdas_.begin(), lambdas_.end(), std::greater<>());
}

double SchmidtSpectrum::sum_sqrt() const {
  double s = 0.0;
  for (double l : lambdas_) s += std::sqrt(std::max(l, 0.0));
  return s;
}

double SchmidtSpectrum::sum_sq() const {
  double s = 0.0;
  for (double l : lambdas_) s += l * l;
  return s;
}

namespace {

void require_entangled(const SchmidtSpectrum& spec) {
  if (spec.lambdas()[1] <= 1e-14)
    throw std::domain_error("spectrum has a single nonzero coefficient (separable)");
}

}  // namespace

double pf(const SchmidtSpectrum& spec) {
  require_entangled(spec);
  const double s2 = spec.sum_sqrt() * spec.sum_sqrt();
  return (s2 - 1.0) / (s2 - 1.0 / spec.d());
}

double po(const SchmidtSpectrum& spec) {
  require_entangled(spec);
  const double s2 = spec.sum_sqrt() * spec.sum_sqrt();
  const double q = spec.sum_sq();
  const double d = spec.d();
  return (1.0 - q) / (1.0 - q + (s2 - 1.0) / (d * d));
}

double pe(const SchmidtSpectrum& spec) {
  require_entangled(spec);
  const double d = spec.d();
  const double x = d * d * std::sqrt(spec.lambdas()[0] * spec.lambdas()[1]);
  return x / (1.0 + x);
}

double fidelity_tolerance_bound(int d, int n) {
  if (d < 2 || n < 2)
    throw std::invalid_argument("fidelity_tolerance_bound: d, n >= 2 required");
  return (1.0 - 1.0 / d) / (1.0 - std::pow(static_cast<double>(d), -n));
}

namespace {

std::vector<double> sphere_to_spectrum(const RVec& x) {
  std::vector<double> l(x.size());
  double nrm = x.squaredNorm();
  if (nrm < 1e-300) nrm = 1.0;
  for (int i = 0; i < x.size(); ++i) l[i] = x[i] * x[i] / nrm;
  std::sort(l.begin(), l.end(), std::greater<>());
  return l;
}

double gap_objective(const RVec& x) {
  const auto l = sphere_to_spectrum(x);
  if (l[1] <= 1e-14) return 0.0;
  const SchmidtSpectrum spec(l);
  return po(spec) - pf(spec);
}

// Nelder-Mead maximization; returns best point found within the eval budget.
std::pair<RVec, double> nelder_mead_max(const std::function<double(const RVec&)>& f,
                                        const RVec& start, int budget) {
  const int n = static_cast<int>(start.size());
  struct Pt {
    RVec x;
    double v;
  };
  std::vector<Pt> simplex;
  int evals = 0;
  auto eval = [&](const RVec& x) {
    ++evals;
    return f(x);
  };
  simplex.push_back({start, eval(start)});
  for (int i = 0; i < n; ++i) {
    RVec x = start;
    x[i] += (std::abs(x[i]) > 1e-3 ? 0.1 * x[i] : 0.05);
    simplex.push_back({x, eval(x)});
  }
  auto by_value = [](const Pt& a, const Pt& b) { return a.v > b.v; };
  while (evals < budget) {
    std::sort(simplex.begin(), simplex.end(), by_value);
    if (std::abs(simplex.front().v - simplex.back().v) < 1e-13) break;
    RVec centroid = RVec::Zero(n);
    for (int i = 0; i < n; ++i) centroid += simplex[i].x;
    centroid /= n;
    const Pt& worst = simplex.back();
    const RVec refl = centroid + (centroid - worst.x);
    const double frefl = eval(refl);
    if (frefl > simplex.front().v) {
      const RVec expd = centroid + 2.0 * (centroid - worst.x);
      const double fexpd = eval(expd);
      simplex.back() = fexpd > frefl ? Pt{expd, fexpd} : Pt{refl, frefl};
    } else if (frefl > simplex[n - 1].v) {
      simplex.back() = {refl, frefl};
    } else {
      const RVec contr = centroid + 0.5 * (worst.x - centroid);
      const double fcontr = eval(contr);
      if (fcontr > worst.v) {
        simplex.back() = {contr, fcontr};
      } else {
        for (int i = 1; i <= n; ++i) {
          simplex[i].x = simplex[0].x + 0.5 * (simplex[i].x - simplex[0].x);
          simplex[i].v = eval(simplex[i].x);
        }
      }
    }
  }
  std::sort(simplex.begin(), simplex.end(), by_value);
  return {simplex.front().x, simplex.front().v};
}

}  // namespace

LdResult ld_maximize(int d, int starts, int budget, std::uint64_t seed) {
  if (d < 2) throw std::invalid_argument("ld_maximize: d >= 2 required");
  LdResult best;
  best.starts = starts;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  for (int s = 0; s < starts; ++s) {
    RVec x(d);
    for (int i = 0; i < d; ++i) x[i] = gauss(rng);
    x /= x.norm();
    auto [xb, vb] = nelder_mead_max(gap_objective, x, budget);
    if (vb > best.value) {
      best.value = vb;
      best.lambdas = sphere_to_spectrum(xb);
    }
  }
  return best;
}

UnfaithfulAverages unfaithful_average(int d, std::int64_t samples,
                                      std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("unfaithful_average: samples >= 1");
  constexpr std::int64_t kChunk = 8192;
  UnfaithfulAverages out;
  out.samples = samples;
  out.seed = seed;
  double gap_sum = 0.0, window_sum = 0.0, ratio_sum = 0.0;
  std::vector<double> l(d);
  // Fixed-size chunks with per-chunk seeds keep the reduction order (and the
  // resulting CSV bytes) independent of any parallel scheduling.
  for (std::int64_t chunk = 0, done = 0; done < samples; ++chunk) {
    const std::int64_t count = std::min(kChunk, samples - done);
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ull * (chunk + 1));
    std::normal_distribution<double> gauss;
    double cg = 0.0, cw = 0.0, cr = 0.0;
    for (std::int64_t s = 0; s < count; ++s) {
      double nrm = 0.0;
      for (int i = 0; i < d; ++i) {
        const double g = gauss(rng);
        l[i] = g * g;
        nrm += l[i];
      }
      for (int i = 0; i < d; ++i) l[i] /= nrm;
      std::sort(l.begin(), l.end(), std::greater<>());
      const SchmidtSpectrum spec(l);
      const double gap = po(spec) - pf(spec);
      const double window = pe(spec) - pf(spec);
      cg += gap;
      cw += window;
      cr += window > 1e-15 ? gap / window : 0.0;
    }
    gap_sum += cg;
    window_sum += cw;
    ratio_sum += cr;
    done += count;
  }
  out.gap = gap_sum / samples;
  out.window = window_sum / samples;
  out.ratio = ratio_sum / samples;
  return out;
}

double gamma_bound(int d, int n, double p, bool printed_form) {
  if (d < 2 || n < 2) throw std::invalid_argument("gamma_bound: d, n >= 2 required");
  if (p < 0.0 || p > 1.0) throw std::domain_error("gamma_bound: p outside [0, 1]");
  const double s = std::max(1.0, d * (1.0 - p) + p / std::pow(static_cast<double>(d), n - 1));
  const double gamma =
      std::pow(std::sqrt(s) + std::sqrt((d - 1.0) * std::max(d - s, 0.0)), 2) / d;
  const double eps = printed_form ? 1.0 - gamma : 1.0 - gamma / d;
  return std::max(eps, 0.0);
}

namespace {

// Stable objective r w - hat{E}(r) in terms of u = 1 - r >= 1 and the
// recentred slope cw = w + 1 - 1/d:
//   obj(u) = (1-u) cw + g / (2 (u + sqrt(u^2 - g))),  g = 4(u-1)(d-1)/d
// (the direct form cancels catastrophically for large |r|).
double measure_objective(double u, double cw, int d) {
  const double g = 4.0 * (u - 1.0) * (d - 1.0) / d;
  const double root = std::sqrt(std::max(u * u - g, 0.0));
  return (1.0 - u) * cw + g / (2.0 * (u + root));
}

// Golden-section maximization of a concave function on [lo, hi].
std::pair<double, double> golden_max(const std::function<double(double)>& f,
                                     double lo, double hi, double tol) {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = f(x1);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, f(x)};
}

}  // namespace

double ehat_closed(int d, double r) {
  if (d < 2) throw std::invalid_argument("ehat_closed: d >= 2 required");
  if (r > 1e-12) throw std::domain_error("ehat_closed: r <= 0 required");
  const double u = 1.0 - r;
  const double g = 4.0 * (u - 1.0) * (d - 1.0) / d;
  return u / 2.0 + 0.5 * std::sqrt(std::max(u * u - g, 0.0)) + r / d - 1.0;
}

MeasureBound::MeasureBound(int d, int n) : d_(d), n_(n) {
  if (d < 2 || n < 2) throw std::invalid_argument("MeasureBound: d, n >= 2 required");
  const LiftedWitness w = schmidt_witness(std::vector<double>(d, 1.0 / d), n);
  trace_ = w.trace();
  target_exp_ = w.target_expectation();
  dim_ = std::pow(static_cast<double>(d), n);
}

double MeasureBound::witness_tolerance() const {
  return white_noise_tolerance(trace_, target_exp_, dim_);
}

MeasureBoundResult MeasureBound::at(double p) const {
  MeasureBoundResult res;
  res.p = p;
  res.w = p * trace_ / dim_ + (1.0 - p) * target_exp_;
  res.eps_f = gamma_bound(d_, n_, p);
  if (res.w >= 0.0) {
    res.eps_o = 0.0;
    res.r_star = 0.0;
    return res;
  }
  // At p = 0 the slope w - (1/d - 1) vanishes analytically; snapping the
  // rounding residue to zero keeps the supremum from being capped (or
  // overshot) by an O(1e-16) tilt over the huge r window.
  double cw = res.w + 1.0 - 1.0 / d_;
  if (std::abs(cw) < 1e-12) cw = 0.0;
  double reach = 64.0;
  constexpr double kMaxReach = 1.7e10;
  double u_best = 1.0, val = 0.0;
  while (true) {
    auto [u, v] = golden_max(
        [&](double u_) { return measure_objective(u_, cw, d_); }, 1.0,
        1.0 + reach, std::max(1e-10, 1e-13 * reach));
    u_best = u;
    val = v;
    if (u < 1.0 + 0.99 * reach || reach >= kMaxReach) break;
    reach *= 2.0;
  }
  res.eps_o = std::max(val, 0.0);
  res.r_star = 1.0 - u_best;
  return res;
}

MeasureBoundResult eps_o(int d, int n, double p) { return MeasureBound(d, n).at(p); }

namespace {

// Largest eigenvalue (and eigenvector coefficients) of diag(w) + z z^H via
// the secular equation f(x) = 1 - sum |z_i|^2 / (x - w_i) on (w_max, inf).
std::pair<double, Vec> largest_eig_rank1(const RVec& w, const Vec& z) {
  const int n = static_cast<int>(w.size());
  int top = 0;
  for (int i = 1; i < n; ++i)
    if (w[i] > w[top]) top = i;
  const double wmax = w[top];
  const double znorm2 = z.squaredNorm();
  const double scale = std::max({1.0, std::abs(wmax), znorm2});
  auto secular = [&](double x) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += std::norm(z[i]) / (x - w[i]);
    return 1.0 - s;
  };
  double lo = wmax + 1e-13 * scale;
  if (secular(lo) >= 0.0) {
    // z has (numerically) no weight on the top eigenspace; the update leaves
    // the top eigenpair untouched.
    Vec v = Vec::Zero(n);
    v[top] = 1.0;
    return {wmax, v};
  }
  double hi = wmax + znorm2 + 1e-15;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (secular(mid) < 0.0 ? lo : hi) = mid;
  }
  const double x = 0.5 * (lo + hi);
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = z[i] / (x - w[i]);
  const double nrm = v.norm();
  if (nrm > 1e-150) v /= nrm;
  return {x, v};
}

}  // namespace

double ehat_numeric(const Mat& w, const std::vector<int>& dims, double r,
                    int restarts, int iters, std::uint64_t seed) {
  const std::int64_t d = total_dim(dims);
  if (w.rows() != d)
    throw std::invalid_argument("ehat_numeric: dims do not match matrix");
  if (d > 4096) throw std::length_error("ehat_numeric: dense size limit exceeded");

  Eigen::SelfAdjointEigenSolver<Mat> es(Mat(r * w));
  const RVec evals = es.eigenvalues();
  const Mat& q = es.eigenvectors();

  double best = -std::numeric_limits<double>::infinity();
  for (const Bipartition& cut : enumerate_bipartitions(static_cast<int>(dims.size()))) {
    const CutIndexer ix(dims, cut);
    const auto perm = cut_major_permutation(dims, cut);

    for (int restart = 0; restart < restarts; ++restart) {
      std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ull * (restart + 1));
      std::normal_distribution<double> gauss;
      auto random_unit = [&](std::int64_t dim) {
        Vec v(dim);
        for (std::int64_t i = 0; i < dim; ++i) v[i] = cxd(gauss(rng), gauss(rng));
        return Vec(v / v.norm());
      };
      Vec a = random_unit(ix.dim_a());
      Vec b = random_unit(ix.dim_b());
      double value = -std::numeric_limits<double>::infinity();
      for (int it = 0; it < iters; ++it) {
        Vec phi(d);
        for (std::int64_t g = 0; g < d; ++g) {
          const std::int64_t cm = perm[g];
          phi[g] = a[cm / ix.dim_b()] * b[cm % ix.dim_b()];
        }
        const auto [lam, coeffs] = largest_eig_rank1(evals, Vec(q.adjoint() * phi));
        const Vec psi = q * coeffs;
        // Closest product state to psi across the cut: top singular pair.
        Mat m(ix.dim_a(), ix.dim_b());
        for (std::int64_t g = 0; g < d; ++g)
          m(perm[g] / ix.dim_b(), perm[g] % ix.dim_b()) = psi[g];
        Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
        a = svd.matrixU().col(0);
        b = svd.matrixV().col(0).conjugate();
        if (std::abs(lam - value) < 1e-12) {
          value = lam;
          break;
        }
        value = lam;
      }
      best = std::max(best, value);
    }
  }
  return best - 1.0;
}

}  // namespace gmew
