#include "gmew/tensor.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace gmew {

namespace {

std::vector<std::int64_t> global_strides(const std::vector<int>& dims) {
  const int n = static_cast<int>(dims.size());
  std::vector<std::int64_t> stride(n);
  std::int64_t s = 1;
  for (int p = n - 1; p >= 0; --p) {
    stride[p] = s;
    s *= dims[p];
  }
  return stride;
}

}  // namespace

CutIndexer::CutIndexer(const std::vector<int>& dims, const Bipartition& cut)
    : dims_(dims),
      parties_a_(cut.parties_a()),
      parties_b_(cut.parties_b()),
      stride_(global_strides(dims)) {
  if (cut.parties() != static_cast<int>(dims.size()))
    throw std::invalid_argument("CutIndexer: cut arity does not match dims");
  auto side_strides = [&](const std::vector<int>& parties,
                          std::vector<std::int64_t>& out) {
    out.resize(parties.size());
    std::int64_t s = 1;
    for (int i = static_cast<int>(parties.size()) - 1; i >= 0; --i) {
      out[i] = s;
      s *= dims_[parties[i]];
    }
    return s;
  };
  dim_a_ = side_strides(parties_a_, stride_a_);
  dim_b_ = side_strides(parties_b_, stride_b_);
}

std::pair<std::int64_t, std::int64_t> CutIndexer::split(std::int64_t g) const {
  std::int64_t a = 0, b = 0;
  for (std::size_t i = 0; i < parties_a_.size(); ++i) {
    const int p = parties_a_[i];
    a += ((g / stride_[p]) % dims_[p]) * stride_a_[i];
  }
  for (std::size_t i = 0; i < parties_b_.size(); ++i) {
    const int p = parties_b_[i];
    b += ((g / stride_[p]) % dims_[p]) * stride_b_[i];
  }
  return {a, b};
}

std::int64_t CutIndexer::fuse(std::int64_t a, std::int64_t b) const {
  std::int64_t g = 0;
  for (std::size_t i = 0; i < parties_a_.size(); ++i) {
    const int p = parties_a_[i];
    g += ((a / stride_a_[i]) % dims_[p]) * stride_[p];
  }
  for (std::size_t i = 0; i < parties_b_.size(); ++i) {
    const int p = parties_b_[i];
    g += ((b / stride_b_[i]) % dims_[p]) * stride_[p];
  }
  return g;
}

std::vector<Bipartition> enumerate_bipartitions(int parties) {
  if (parties < 2)
    throw std::invalid_argument("enumerate_bipartitions: need at least 2 parties");
  std::vector<Bipartition> cuts;
  const std::uint32_t half = 1u << (parties - 1);
  cuts.reserve(half - 1);
  // Masks with party 0 fixed on side A; the full set is excluded.
  for (std::uint32_t rest = 0; rest + 1 < half; ++rest)
    cuts.emplace_back(1u | (rest << 1), parties);
  return cuts;
}

Mat reshape_to_cut(const PureState& state, const Bipartition& cut) {
  const CutIndexer ix(state.dims(), cut);
  Mat m = Mat::Zero(ix.dim_a(), ix.dim_b());
  for (std::int64_t g = 0; g < state.dim(); ++g) {
    auto [a, b] = ix.split(g);
    m(a, b) = state.amps()[g];
  }
  return m;
}

std::vector<std::int64_t> cut_major_permutation(const std::vector<int>& dims,
                                                const Bipartition& cut) {
  const CutIndexer ix(dims, cut);
  std::vector<std::int64_t> perm(total_dim(dims));
  for (std::int64_t g = 0; g < static_cast<std::int64_t>(perm.size()); ++g) {
    auto [a, b] = ix.split(g);
    perm[g] = a * ix.dim_b() + b;
  }
  return perm;
}

namespace {

// Rotate a degenerate Schmidt block so that it diagonalizes the given real
// diagonal operator restricted to the block. Left columns get Q, right
// columns the conjugate rotation, which preserves sum_i l_i (x) r_i.
struct BlockCanonicalizer {
  std::vector<Vec>& left;
  std::vector<Vec>& right;

  void split(int begin, int end, int level) {
    const int size = end - begin;
    if (size <= 1 || level > 3) return;
    const bool use_left = (level % 2 == 0);
    auto& side = use_left ? left : right;
    Mat b = Mat::Zero(size, size);
    for (int i = 0; i < size; ++i)
      for (int j = i; j < size; ++j) {
        cxd acc = 0.0;
        const Vec& vi = side[begin + i];
        const Vec& vj = side[begin + j];
        for (int k = 0; k < vi.size(); ++k)
          acc += std::conj(vi[k]) * weight(k, level) * vj[k];
        b(i, j) = acc;
        b(j, i) = std::conj(acc);
      }
    Eigen::SelfAdjointEigenSolver<Mat> es(b);
    rotate(begin, size, es.eigenvectors(), use_left);
    // Recurse into eigenvalue clusters that are still degenerate.
    const RVec ev = es.eigenvalues();
    const double tol = 1e-9 * std::max(1.0, ev.cwiseAbs().maxCoeff());
    int run = 0;
    for (int i = 1; i <= size; ++i) {
      if (i == size || ev[i] - ev[run] > tol) {
        if (i - run > 1) split(begin + run, begin + i, level + 1);
        run = i;
      }
    }
  }

 private:
  static double weight(int k, int level) {
    if (level < 2) return static_cast<double>(k);
    // Fallback splitter: a fixed irrational comb, distinct almost surely.
    return std::fmod(static_cast<double>(k) * 0.6180339887498949, 1.0);
  }

  void rotate(int begin, int size, const Mat& q, bool q_on_left) {
    auto apply = [&](std::vector<Vec>& cols, const Mat& rot) {
      Mat packed(cols[begin].size(), size);
      for (int i = 0; i < size; ++i) packed.col(i) = cols[begin + i];
      packed = packed * rot;
      for (int i = 0; i < size; ++i) cols[begin + i] = packed.col(i);
    };
    apply(left, q_on_left ? q : q.conjugate());
    apply(right, q_on_left ? q.conjugate() : q);
  }
};

}  // namespace

SchmidtDecomposition schmidt(const PureState& state, const Bipartition& cut,
                             double tol) {
  if (cut.parties() != state.parties())
    throw std::invalid_argument("schmidt: cut arity does not match state");
  if (!(tol > 0.0) || tol > 1e-6)
    throw std::domain_error("schmidt: tol must lie in (0, 1e-6]");
  if (std::abs(state.amps().norm() - 1.0) > 1e-9)
    throw std::domain_error("schmidt: state is not normalized");

  const Mat m = reshape_to_cut(state, cut);
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);

  SchmidtDecomposition out{cut, svd.singularValues(), {}, {}, 0};
  const int count = static_cast<int>(out.coeffs.size());
  out.left_basis.reserve(count);
  out.right_basis.reserve(count);
  for (int i = 0; i < count; ++i) {
    out.left_basis.push_back(svd.matrixU().col(i));
    out.right_basis.push_back(svd.matrixV().col(i).conjugate());
  }

  // Canonicalize degenerate singular-value blocks (see header).
  BlockCanonicalizer canon{out.left_basis, out.right_basis};
  int run = 0;
  for (int i = 1; i <= count; ++i) {
    if (i == count || out.coeffs[run] - out.coeffs[i] > 1e-9) {
      if (i - run > 1 && out.coeffs[run] > tol) canon.split(run, i, 0);
      run = i;
    }
  }

  for (int i = 0; i < count; ++i)
    if (out.coeffs[i] > tol) ++out.rank;
  return out;
}

HermOperator partial_transpose(const HermOperator& op, const Bipartition& cut) {
  if (cut.parties() != static_cast<int>(op.dims().size()))
    throw std::invalid_argument("partial_transpose: cut arity does not match dims");
  const CutIndexer ix(op.dims(), cut);
  const Mat& in = op.matrix();
  Mat out(in.rows(), in.cols());
  for (std::int64_t r = 0; r < in.rows(); ++r) {
    auto [ra, rb] = ix.split(r);
    for (std::int64_t c = 0; c < in.cols(); ++c) {
      auto [ca, cb] = ix.split(c);
      out(ix.fuse(ca, rb), ix.fuse(ra, cb)) = in(r, c);
    }
  }
  return HermOperator(op.dims(), std::move(out));
}

double min_eigenvalue(const Mat& hermitian) {
  const double dev = (hermitian - hermitian.adjoint()).cwiseAbs().maxCoeff();
  if (dev > kHermTol)
    throw std::invalid_argument("min_eigenvalue: operator not Hermitian within 1e-10");
  Eigen::SelfAdjointEigenSolver<Mat> es(hermitian, Eigen::EigenvaluesOnly);
  return es.eigenvalues()[0];
}

double min_eigenvalue(const HermOperator& op) { return min_eigenvalue(op.matrix()); }

double max_eigenvalue(const Mat& hermitian) {
  Eigen::SelfAdjointEigenSolver<Mat> es(hermitian, Eigen::EigenvaluesOnly);
  return es.eigenvalues()[es.eigenvalues().size() - 1];
}

std::vector<Vec> orthonormalize(const std::vector<Vec>& vectors, double tol) {
  if (vectors.empty())
    throw std::invalid_argument("orthonormalize: empty input");
  const auto len = vectors.front().size();
  for (const Vec& v : vectors)
    if (v.size() != len)
      throw std::invalid_argument("orthonormalize: mixed vector lengths");

  std::vector<Vec> basis;
  for (const Vec& v : vectors) {
    Vec w = v;
    for (int pass = 0; pass < 2; ++pass)
      for (const Vec& b : basis) w -= b.dot(w) * b;
    const double nrm = w.norm();
    if (nrm > tol) basis.push_back(w / nrm);
  }
  if (basis.empty())
    throw std::domain_error("orthonormalize: input spans the zero space");
  return basis;
}

Vec embed_product(const Vec& va, const Vec& vb, const Bipartition& cut,
                  const std::vector<int>& dims) {
  const CutIndexer ix(dims, cut);
  if (va.size() != ix.dim_a() || vb.size() != ix.dim_b())
    throw std::invalid_argument("embed_product: factor sizes do not match cut");
  Vec out(total_dim(dims));
  for (std::int64_t g = 0; g < out.size(); ++g) {
    auto [a, b] = ix.split(g);
    out[g] = va[a] * vb[b];
  }
  return out;
}

}  // namespace gmew
