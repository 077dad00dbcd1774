#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slantlab/operators.hpp"
#include "test_support.hpp"

using namespace slantlab;
using namespace slantlab::testing;

namespace {
double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}
}  // namespace

TEST_CASE("slant compression on monomial spaces follows the matrix rule") {
  const int band = 64;
  const ModelSpacePtr ka = ModelSpace::build(FiniteBlaschke::power(4), band);
  const ModelSpacePtr kb = ModelSpace::build(FiniteBlaschke::power(2), band);
  const OperatorMatrix U = slant_compression(monomial(band, 1), ka, kb, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(dist(U.entries(i, j), (i == 1 && j == 1) ? 1.0 : 0.0) == 0.0);

  Rng rng(41);
  for (int t = 0; t < 10; ++t) {
    const int P = rng.uniform_int(1, 8), Q = rng.uniform_int(1, 8);
    const int k = rng.uniform_int(1, 4);
    const CircleFunction phi = random_trig_poly(rng, band, 12);
    const ModelSpacePtr da = ModelSpace::build(FiniteBlaschke::power(P), band);
    const ModelSpacePtr db = ModelSpace::build(FiniteBlaschke::power(Q), band);
    const OperatorMatrix V = slant_compression(phi, da, db, k);
    for (int i = 0; i < Q; ++i)
      for (int j = 0; j < P; ++j)
        CHECK(dist(V.entries(i, j), phi.coeff(k * i - j)) < 1e-12);
  }
}

TEST_CASE("unit symbol at order one is the identity") {
  const ModelSpacePtr ka = ModelSpace::build(FiniteBlaschke::power(3), 32);
  const OperatorMatrix U = slant_compression(monomial(32, 0), ka, ka, 1);
  CHECK((U.entries - Eigen::MatrixXcd::Identity(3, 3)).norm() == 0.0);
}

TEST_CASE("symbols in the kill set give the zero operator") {
  const ModelSpacePtr ka = ModelSpace::build(FiniteBlaschke::power(2), 32);
  const OperatorMatrix U = slant_compression(monomial(32, -3), ka, ka, 1);
  CHECK(U.frob() == 0.0);
}

TEST_CASE("symbol band must cover the space band") {
  const ModelSpacePtr ka = ModelSpace::build(FiniteBlaschke::power(2), 32);
  CHECK_THROWS_AS(slant_compression(monomial(16, 0), ka, ka, 1),
                  std::invalid_argument);
}

TEST_CASE("truncated Toeplitz operators on monomial spaces") {
  const int band = 32;
  const ModelSpacePtr k3 = ModelSpace::build(FiniteBlaschke::power(3), band);
  const OperatorMatrix S = truncated_toeplitz(monomial(band, 1), k3, k3);
  Eigen::MatrixXcd jordan = Eigen::MatrixXcd::Zero(3, 3);
  jordan(1, 0) = jordan(2, 1) = 1.0;
  CHECK((S.entries - jordan).norm() == 0.0);

  const OperatorMatrix Sstar = truncated_toeplitz(monomial(band, -1), k3, k3);
  CHECK((Sstar.entries - jordan.adjoint()).norm() == 0.0);
}

TEST_CASE("kernel-symbol operator matches its defining action") {
  Rng rng(42);
  const ModelSpacePtr ka = ModelSpace::build(random_blaschke(rng, 3, 0.7), 256);
  const CircleFunction k0 = ka->kernel(0.0, 0).fn();
  const OperatorMatrix A = truncated_toeplitz(k0, ka, ka);
  for (int j = 0; j < ka->dim(); ++j) {
    const SpaceElement direct =
        ka->project(multiply(k0, ka->basis_fn(j)));
    const SpaceElement via =
        A.apply(ka->element(Eigen::VectorXcd::Unit(ka->dim(), j)));
    CHECK((direct - via).norm() < 1e-12);
  }
}

TEST_CASE("compressed shift powers, both routes") {
  const ModelSpacePtr k4 = ModelSpace::build(FiniteBlaschke::power(4), 32);
  const OperatorMatrix S = compressed_shift_pow(k4, 1);
  CHECK(dist(S.entries(1, 0), 1.0) == 0.0);
  CHECK(dist(S.entries(0, 1), 0.0) == 0.0);

  Rng rng(43);
  for (int t = 0; t < 6; ++t) {
    const ModelSpacePtr ka = ModelSpace::build(random_blaschke(rng, 4, 0.8), 256);
    const int m = rng.uniform_int(1, 3);
    const OperatorMatrix direct = compressed_shift_pow(ka, m);
    CHECK((direct - shift_pow_via_kernels(ka, m)).frob() < 1e-10);
    CHECK((direct.adjoint() - backshift_pow_via_kernels(ka, m)).frob() < 1e-10);
    // adjoint route as a compression of conj(z)^m
    const OperatorMatrix bs = truncated_toeplitz(monomial(256, -m), ka, ka);
    CHECK((direct.adjoint() - bs).frob() < 1e-12);
    // powers compose
    OperatorMatrix pow = identity_on(ka);
    for (int i = 0; i < m; ++i) pow = pow * compressed_shift_pow(ka, 1);
    CHECK((pow - direct).frob() < 1e-12);
  }
}

TEST_CASE("rank-one operators") {
  const ModelSpacePtr k3 = ModelSpace::build(FiniteBlaschke::power(3), 32);
  const SpaceElement e0 = k3->element(Eigen::VectorXcd::Unit(3, 0));
  const OperatorMatrix E00 = rank_one(e0, e0);
  CHECK(dist(E00.entries(0, 0), 1.0) == 0.0);
  CHECK(E00.frob() == 1.0);

  Rng rng(44);
  const SpaceElement u = random_element(rng, k3);
  const SpaceElement v = random_element(rng, k3);
  const SpaceElement f = random_element(rng, k3);
  const SpaceElement lhs = rank_one(u, v).apply(f);
  const SpaceElement rhs = inner_product(f, v) * u;
  CHECK((lhs - rhs).norm() < 1e-13);
}

TEST_CASE("defect identities for the compressed shift") {
  const ModelSpacePtr k3 = ModelSpace::build(FiniteBlaschke::power(3), 32);
  const OperatorMatrix S = compressed_shift_pow(k3, 1);
  const SpaceElement k0 = k3->kernel(0.0, 0);
  CHECK((identity_on(k3) - S * S.adjoint() - rank_one(k0, k0)).frob() < 1e-14);

  Rng rng(45);
  const ModelSpacePtr ka = ModelSpace::build(random_blaschke(rng, 3, 0.8), 256);
  const OperatorMatrix Sa = compressed_shift_pow(ka, 1);
  const SpaceElement ck0 = ka->conjugate_kernel(0.0, 0);
  CHECK((identity_on(ka) - Sa.adjoint() * Sa - rank_one(ck0, ck0)).frob() < 1e-10);
}

TEST_CASE("iterated defect identities") {
  Rng rng(46);
  for (int t = 0; t < 4; ++t) {
    const ModelSpacePtr ka =
        ModelSpace::build(random_blaschke(rng, rng.uniform_int(2, 6), 0.8), 256);
    const int m = rng.uniform_int(1, 4);
    const OperatorMatrix Sm = compressed_shift_pow(ka, m);
    OperatorMatrix acc_k{ka, ka, 1,
                         Eigen::MatrixXcd::Zero(ka->dim(), ka->dim())};
    OperatorMatrix acc_ck = acc_k;
    for (int j = 0; j < m; ++j) {
      const double w = 1.0 / factorial(j);
      const SpaceElement kj = ka->kernel(0.0, j);
      const SpaceElement ckj = ka->conjugate_kernel(0.0, j);
      acc_k += Complex(w * w, 0.0) * rank_one(kj, kj);
      acc_ck += Complex(w * w, 0.0) * rank_one(ckj, ckj);
    }
    CHECK((identity_on(ka) - Sm * Sm.adjoint() - acc_k).frob() < 1e-9);
    CHECK((identity_on(ka) - Sm.adjoint() * Sm - acc_ck).frob() < 1e-9);

    // S^j applied to the kernel at the origin stays a kernel
    for (int j = 1; j <= m; ++j) {
      const SpaceElement lhs =
          compressed_shift_pow(ka, j).apply(ka->kernel(0.0, 0));
      const SpaceElement rhs =
          Complex(1.0 / factorial(j), 0.0) * ka->kernel(0.0, j);
      CHECK((lhs - rhs).norm() < 1e-10);
    }
  }
}

TEST_CASE("apply matches the entrywise definition") {
  Rng rng(47);
  const ModelSpacePtr ka = ModelSpace::build(random_blaschke(rng, 4, 0.8), 256);
  const ModelSpacePtr kb = ModelSpace::build(random_blaschke(rng, 2, 0.8), 256);
  const CircleFunction phi = random_trig_poly(rng, 256, 10);
  const OperatorMatrix U = slant_compression(phi, ka, kb, 2);
  for (int j = 0; j < ka->dim(); ++j) {
    const SpaceElement col =
        U.apply(ka->element(Eigen::VectorXcd::Unit(ka->dim(), j)));
    const SpaceElement direct =
        kb->project(slant_w(multiply(phi, ka->basis_fn(j)), 2));
    CHECK((col - direct).norm() < 1e-13);
  }
}
