#include <doctest.h>

#include <random>

#include "gmew/families.hpp"
#include "gmew/tensor.hpp"

using namespace gmew;

namespace {

PureState random_state(const std::vector<int>& dims, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  Vec v(total_dim(dims));
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = cxd(gauss(rng), gauss(rng));
  return PureState(dims, std::move(v));
}

PureState reconstruct(const SchmidtDecomposition& sd, const std::vector<int>& dims) {
  Vec amps = Vec::Zero(total_dim(dims));
  for (Eigen::Index i = 0; i < sd.coeffs.size(); ++i)
    amps += sd.coeffs[i] *
            embed_product(sd.left_basis[i], sd.right_basis[i], sd.cut, dims);
  return PureState(dims, std::move(amps));
}

}  // namespace

TEST_SUITE_BEGIN("tensor");

TEST_CASE("enumerate_bipartitions counts and canonical form") {
  CHECK(enumerate_bipartitions(2).size() == 1);
  CHECK(enumerate_bipartitions(3).size() == 3);

  // Brute-force oracle: subsets of {0..4} containing party 0, proper.
  int count = 0;
  for (std::uint32_t m = 1; m < 31; m += 2) ++count;
  CHECK(enumerate_bipartitions(5).size() == static_cast<std::size_t>(count));
  CHECK(count == 15);

  for (const Bipartition& cut : enumerate_bipartitions(4)) {
    CHECK(cut.contains(0));
    CHECK(cut.size_a() >= 1);
    CHECK(cut.size_a() <= 3);
  }
  CHECK(enumerate_bipartitions(3)[0].to_string() == "0|12");
  CHECK_THROWS_AS(enumerate_bipartitions(1), std::invalid_argument);
}

TEST_CASE("bipartition canonicalization folds complements") {
  const Bipartition a(0b0110, 4);  // {1,2} -> complement {0,3}
  CHECK(a.contains(0));
  CHECK(a.contains(3));
  CHECK(!a.contains(1));
  CHECK_THROWS_AS(Bipartition(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(Bipartition(0b111, 3), std::invalid_argument);
}

TEST_CASE("schmidt of GHZ_3 at cut 0|12") {
  const auto sd = schmidt(ghz_state(2, 3), Bipartition(1, 3));
  CHECK(sd.rank == 2);
  CHECK(sd.coeffs[0] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  CHECK(sd.coeffs[1] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
}

TEST_CASE("schmidt of a product state has rank 1 at every cut") {
  Vec amps = Vec::Zero(8);
  amps[0] = 1.0;  // |000>
  const PureState psi(std::vector<int>(3, 2), std::move(amps));
  for (const Bipartition& cut : enumerate_bipartitions(3)) {
    const auto sd = schmidt(psi, cut);
    CHECK(sd.rank == 1);
    CHECK(sd.coeffs[0] == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("schmidt of W_3: reduced eigenvalues 2/3 and 1/3") {
  // Oracle: eigenvalues of the 2x2 reduced density matrix of party 0.
  const PureState w3 = w_state(3);
  Mat rho = Mat::Zero(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int rest = 0; rest < 4; ++rest)
        rho(i, j) += w3.amps()[i * 4 + rest] * std::conj(w3.amps()[j * 4 + rest]);
  Eigen::SelfAdjointEigenSolver<Mat> es(rho);
  const double lo = es.eigenvalues()[0], hi = es.eigenvalues()[1];
  CHECK(hi == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(lo == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

  const auto sd = schmidt(w3, Bipartition(1, 3));
  CHECK(sd.lambda(0) == doctest::Approx(hi).epsilon(1e-10));
  CHECK(sd.lambda(1) == doctest::Approx(lo).epsilon(1e-10));
}

TEST_CASE("schmidt reconstruction and normalization invariants") {
  std::mt19937_64 seeds(7);
  for (const auto& dims : std::vector<std::vector<int>>{
           {2, 2, 2}, {2, 3, 2}, {3, 3, 3}, {2, 2, 2, 2}, {4, 2, 3}, {2, 2, 2, 2, 2}}) {
    const PureState psi = random_state(dims, seeds());
    for (const Bipartition& cut : enumerate_bipartitions(static_cast<int>(dims.size()))) {
      const auto sd = schmidt(psi, cut);
      double sum = 0.0;
      for (Eigen::Index i = 0; i < sd.coeffs.size(); ++i) sum += sd.lambda(i);
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
      const PureState back = reconstruct(sd, dims);
      // Compare as operators to ignore the irrelevant global phase.
      CHECK((back.projector() - psi.projector()).cwiseAbs().maxCoeff() < 1e-10);

      // Orthonormality of both bases.
      for (int i = 0; i < sd.rank; ++i)
        for (int j = 0; j < sd.rank; ++j) {
          const cxd gl = sd.left_basis[i].dot(sd.left_basis[j]);
          const cxd gr = sd.right_basis[i].dot(sd.right_basis[j]);
          CHECK(std::abs(gl - (i == j ? 1.0 : 0.0)) < 1e-10);
          CHECK(std::abs(gr - (i == j ? 1.0 : 0.0)) < 1e-10);
        }
    }
  }
}

TEST_CASE("schmidt canonicalization keeps degenerate GHZ bases sparse") {
  // All Schmidt vectors of GHZ(3,3) must stay single computational strings
  // even though the spectrum is fully degenerate.
  const auto sd = schmidt(ghz_state(3, 3), Bipartition(1, 3));
  for (int i = 0; i < sd.rank; ++i) {
    int support = 0;
    for (Eigen::Index k = 0; k < sd.left_basis[i].size(); ++k)
      if (std::abs(sd.left_basis[i][k]) > 1e-9) ++support;
    CHECK(support == 1);
  }
}

TEST_CASE("schmidt rejects bad tolerance") {
  CHECK_THROWS_AS(schmidt(ghz_state(2, 2), Bipartition(1, 2), 1e-3), std::domain_error);
  CHECK_THROWS_AS(schmidt(ghz_state(2, 2), Bipartition(1, 2), 0.0), std::domain_error);
}

TEST_CASE("partial transpose: identity, product rule, involution") {
  const std::vector<int> dims{2, 2};
  const Bipartition cut(1, 2);

  const HermOperator id(dims, Mat::Identity(4, 4));
  CHECK((partial_transpose(id, cut).matrix() - Mat::Identity(4, 4)).norm() == 0.0);

  std::mt19937_64 rng(3);
  std::normal_distribution<double> gauss;
  auto rand_herm = [&](int d) {
    Mat m(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m(i, j) = cxd(gauss(rng), gauss(rng));
    return Mat((m + m.adjoint()) / 2.0);
  };
  const Mat a = rand_herm(2), b = rand_herm(2);
  Mat kron(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) kron.block(2 * i, 2 * j, 2, 2) = a(i, j) * b;
  Mat kron_t(4, 4);
  const Mat at = a.transpose();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) kron_t.block(2 * i, 2 * j, 2, 2) = at(i, j) * b;
  const HermOperator prod(dims, kron);
  CHECK((partial_transpose(prod, cut).matrix() - kron_t).cwiseAbs().maxCoeff() < 1e-14);

  const HermOperator twice =
      partial_transpose(partial_transpose(prod, cut), cut);
  CHECK((twice.matrix() - kron).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("partial transpose of the Bell projector has min eigenvalue -1/2") {
  const PureState bell = ghz_state(2, 2);
  const HermOperator proj({2, 2}, bell.projector());
  const HermOperator pt = partial_transpose(proj, Bipartition(1, 2));
  // Oracle: full diagonalization.
  Eigen::SelfAdjointEigenSolver<Mat> es(pt.matrix());
  CHECK(es.eigenvalues()[0] == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(min_eigenvalue(pt) == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("min_eigenvalue basics and hermiticity gate") {
  CHECK(min_eigenvalue(Mat(Mat::Identity(5, 5))) == doctest::Approx(1.0));
  Mat proj = Mat::Zero(2, 2);
  proj(0, 0) = 1.0;
  CHECK(min_eigenvalue(proj) == doctest::Approx(0.0));
  Mat bad = Mat::Zero(2, 2);
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(min_eigenvalue(bad), std::invalid_argument);
}

TEST_CASE("orthonormalize: duplicates, rank, Gram identity") {
  Vec e0 = Vec::Zero(2), e1 = Vec::Zero(2);
  e0[0] = 1.0;
  e1[1] = 1.0;
  CHECK(orthonormalize({e0, e0}).size() == 1);
  CHECK(orthonormalize({e0, e1}).size() == 2);

  // Rank oracle via singular values.
  Vec v00 = Vec::Zero(4), vbell = Vec::Zero(4);
  v00[0] = 1.0;
  vbell[0] = vbell[3] = 1.0 / std::sqrt(2.0);
  Mat packed(4, 2);
  packed.col(0) = v00;
  packed.col(1) = vbell;
  Eigen::JacobiSVD<Mat> svd(packed);
  int rank = 0;
  for (int i = 0; i < 2; ++i)
    if (svd.singularValues()[i] > 1e-9) ++rank;
  CHECK(rank == 2);
  const auto basis = orthonormalize({v00, vbell});
  CHECK(static_cast<int>(basis.size()) == rank);

  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      CHECK(std::abs(basis[i].dot(basis[j]) - (i == j ? 1.0 : 0.0)) < 1e-10);

  CHECK_THROWS_AS(orthonormalize({Vec(Vec::Zero(3))}), std::domain_error);
  CHECK_THROWS_AS(orthonormalize({}), std::invalid_argument);
}

TEST_CASE("heterogeneous local dimensions round-trip") {
  const PureState psi = random_state({2, 3, 4}, 11);
  const Bipartition cut(0b010, 3);  // canonicalizes to {0,2}|{1}
  const auto sd = schmidt(psi, cut);
  CHECK((reconstruct(sd, psi.dims()).projector() - psi.projector())
            .cwiseAbs()
            .maxCoeff() < 1e-10);
}

TEST_SUITE_END();
