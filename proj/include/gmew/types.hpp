#ifndef GMEW_TYPES_HPP
#define GMEW_TYPES_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace gmew {

using cxd = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;
using SpVec = Eigen::SparseVector<cxd>;

// Default numerical tolerances used across the library.
constexpr double kNormTol = 1e-12;
constexpr double kHermTol = 1e-10;
constexpr double kRankTol = 1e-9;     // singular-value threshold
constexpr double kOrthTol = 1e-8;     // overlap threshold for grouping
constexpr double kCertTol = 1e-9;     // certificate margin tolerance

/// Pure state of an n-party qudit register with per-party local dimensions.
///
/// Index convention is big-endian: party 0 is the most significant factor,
/// i.e. basis index g decomposes as g = (((i0*d1 + i1)*d2 + i2)...). Every
/// reshape in the library relies on this single convention.
class PureState {
 public:
  PureState(std::vector<int> dims, Vec amps);

  const std::vector<int>& dims() const { return dims_; }
  int parties() const { return static_cast<int>(dims_.size()); }
  std::int64_t dim() const { return static_cast<std::int64_t>(amps_.size()); }
  const Vec& amps() const { return amps_; }

  Mat projector() const { return amps_ * amps_.adjoint(); }

 private:
  std::vector<int> dims_;
  Vec amps_;
};

/// Subset mask A of the n parties defining the cut A|Ā.
/// Bit i of mask() corresponds to party i. Canonical form always contains
/// party 0, so complements never appear twice.
class Bipartition {
 public:
  Bipartition(std::uint32_t mask, int parties);

  std::uint32_t mask() const { return mask_; }
  int parties() const { return parties_; }
  bool contains(int party) const { return (mask_ >> party) & 1u; }
  int size_a() const;

  std::vector<int> parties_a() const;
  std::vector<int> parties_b() const;

  std::string to_string() const;  // e.g. "02|13"

 private:
  std::uint32_t mask_;
  int parties_;
};

/// Hermitian operator over a multi-qudit register (dense).
class HermOperator {
 public:
  HermOperator(std::vector<int> dims, Mat matrix);

  const std::vector<int>& dims() const { return dims_; }
  std::int64_t dim() const { return matrix_.rows(); }
  const Mat& matrix() const { return matrix_; }

 private:
  std::vector<int> dims_;
  Mat matrix_;
};

std::int64_t total_dim(const std::vector<int>& dims);

}  // namespace gmew

#endif
