#include "gmew/types.hpp"

#include <bit>
#include <stdexcept>

namespace gmew {

std::int64_t total_dim(const std::vector<int>& dims) {
  std::int64_t d = 1;
  for (int x : dims) d *= x;
  return d;
}

PureState::PureState(std::vector<int> dims, Vec amps)
    : dims_(std::move(dims)), amps_(std::move(amps)) {
  if (dims_.empty()) throw std::invalid_argument("PureState: empty dims");
  for (int d : dims_) {
    if (d < 2) throw std::invalid_argument("PureState: local dimension < 2");
  }
  if (amps_.size() != total_dim(dims_))
    throw std::invalid_argument("PureState: amplitude length != product of dims");
  const double nrm = amps_.norm();
  if (nrm < 1e-14)
    throw std::domain_error("PureState: zero vector cannot be normalized");
  amps_ /= nrm;
}

Bipartition::Bipartition(std::uint32_t mask, int parties) : parties_(parties) {
  if (parties < 2 || parties > 30)
    throw std::invalid_argument("Bipartition: party count out of range");
  const std::uint32_t full = (parties == 32) ? ~0u : ((1u << parties) - 1u);
  mask &= full;
  if (mask == 0u || mask == full)
    throw std::invalid_argument("Bipartition: side A must be a non-empty proper subset");
  // Canonical form keeps party 0 on side A.
  mask_ = (mask & 1u) ? mask : (full & ~mask);
}

int Bipartition::size_a() const { return std::popcount(mask_); }

std::vector<int> Bipartition::parties_a() const {
  std::vector<int> out;
  for (int p = 0; p < parties_; ++p)
    if (contains(p)) out.push_back(p);
  return out;
}

std::vector<int> Bipartition::parties_b() const {
  std::vector<int> out;
  for (int p = 0; p < parties_; ++p)
    if (!contains(p)) out.push_back(p);
  return out;
}

std::string Bipartition::to_string() const {
  std::string s;
  for (int p : parties_a()) s += std::to_string(p);
  s += '|';
  for (int p : parties_b()) s += std::to_string(p);
  return s;
}

HermOperator::HermOperator(std::vector<int> dims, Mat matrix)
    : dims_(std::move(dims)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols())
    throw std::invalid_argument("HermOperator: matrix not square");
  if (matrix_.rows() != total_dim(dims_))
    throw std::invalid_argument("HermOperator: side length != product of dims");
  const double dev = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  if (dev > kHermTol)
    throw std::invalid_argument("HermOperator: input not Hermitian within 1e-10");
}

}  // namespace gmew
