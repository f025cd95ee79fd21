#ifndef GMEW_TENSOR_HPP
#define GMEW_TENSOR_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "gmew/types.hpp"

namespace gmew {

/// Schmidt decomposition of a pure state across one bipartition.
/// coeffs are the singular values sqrt(lambda_i), sorted descending;
/// rank counts coefficients above the threshold passed to schmidt().
struct SchmidtDecomposition {
  Bipartition cut;
  RVec coeffs;                  // sqrt(lambda), descending
  std::vector<Vec> left_basis;  // orthonormal on H_A
  std::vector<Vec> right_basis; // orthonormal on H_Abar
  int rank = 0;

  double lambda(int i) const { return coeffs[i] * coeffs[i]; }
};

/// Index bookkeeping for one cut: split/compose global indices into the
/// (A, Abar) mixed-radix pair. Parties inside each side keep ascending order.
class CutIndexer {
 public:
  CutIndexer(const std::vector<int>& dims, const Bipartition& cut);

  std::int64_t dim_a() const { return dim_a_; }
  std::int64_t dim_b() const { return dim_b_; }
  std::pair<std::int64_t, std::int64_t> split(std::int64_t global) const;
  std::int64_t fuse(std::int64_t a, std::int64_t b) const;

 private:
  std::vector<int> dims_;
  std::vector<int> parties_a_, parties_b_;
  std::vector<std::int64_t> stride_;    // global stride per party
  std::vector<std::int64_t> stride_a_, stride_b_;
  std::int64_t dim_a_, dim_b_;
};

/// All 2^(n-1) - 1 canonical bipartitions (party 0 on side A).
std::vector<Bipartition> enumerate_bipartitions(int parties);

/// Schmidt decomposition via SVD of the cut-reshaped amplitude matrix.
///
/// Degenerate singular-value blocks are canonicalized by diagonalizing a
/// fixed sequence of diagonal index operators restricted to the block, so
/// repeated runs (and states with symmetric spectra such as GHZ or W at a
/// balanced cut) always yield the same, maximally sparse bases.
SchmidtDecomposition schmidt(const PureState& state, const Bipartition& cut,
                             double tol = kRankTol);

HermOperator partial_transpose(const HermOperator& op, const Bipartition& cut);

double min_eigenvalue(const HermOperator& op);
double min_eigenvalue(const Mat& hermitian);
double max_eigenvalue(const Mat& hermitian);

/// Orthonormal spanning set of the input span. Two-pass Gram-Schmidt;
/// vectors whose residual norm falls below tol are dropped, so the output
/// size equals the numerical rank at tol.
std::vector<Vec> orthonormalize(const std::vector<Vec>& vectors,
                                double tol = kRankTol);

/// Embed a product vector va (on H_A) x vb (on H_Abar) into the global
/// big-endian party order.
Vec embed_product(const Vec& va, const Vec& vb, const Bipartition& cut,
                  const std::vector<int>& dims);

/// Reshape the state into its dimA x dimB matrix for the given cut.
Mat reshape_to_cut(const PureState& state, const Bipartition& cut);

/// Permutation table mapping original global indices to cut-major order
/// (side-A digits first). perm[g_old] = g_new.
std::vector<std::int64_t> cut_major_permutation(const std::vector<int>& dims,
                                                const Bipartition& cut);

}  // namespace gmew

#endif
