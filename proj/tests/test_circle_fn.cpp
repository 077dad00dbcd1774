#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace slantlab;
using namespace slantlab::testing;

TEST_CASE("multiply on monomials") {
  const int M = 8;
  CHECK(dist(multiply(monomial(M, 1), monomial(M, 1)).coeff(2), 1.0) == 0.0);

  const CircleFunction f = monomial(M, 3, Complex(2.0, -1.0));
  const CircleFunction one = monomial(M, 0);
  CHECK((multiply(f, one) - f).norm() == 0.0);

  // (z + conj(z)) * (z - conj(z)) = z^2 - conj(z)^2
  CircleFunction a(M), b(M);
  a.set_coeff(1, 1.0);
  a.set_coeff(-1, 1.0);
  b.set_coeff(1, 1.0);
  b.set_coeff(-1, -1.0);
  const CircleFunction p = multiply(a, b);
  CHECK(dist(p.coeff(2), 1.0) == 0.0);
  CHECK(dist(p.coeff(-2), -1.0) == 0.0);
  CHECK(dist(p.coeff(0), 0.0) == 0.0);
}

TEST_CASE("multiply against the brute-force convolution oracle") {
  Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    const CircleFunction f = random_trig_poly(rng, 16, rng.uniform_int(0, 6));
    const CircleFunction g = random_trig_poly(rng, 16, rng.uniform_int(0, 6));
    double dropped = 0.0;
    const CircleFunction p = multiply(f, g, &dropped);
    double drop_oracle = 0.0;
    for (const auto& [freq, c] : conv_oracle(f, g)) {
      if (freq >= -16 && freq <= 16)
        CHECK(dist(p.coeff(freq), c) < 1e-14);
      else
        drop_oracle += std::norm(c);
    }
    CHECK(std::abs(dropped - drop_oracle) < 1e-14);
  }
}

TEST_CASE("multiply truncation reports discarded energy") {
  const int M = 4;
  double dropped = 0.0;
  const CircleFunction p = multiply(monomial(M, 4), monomial(M, 4), &dropped);
  CHECK(p.norm() == 0.0);
  CHECK(dropped == 1.0);
}

TEST_CASE("multiply requires matching bands") {
  CHECK_THROWS_AS(multiply(monomial(4, 0), monomial(5, 0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(inner_product(monomial(4, 0), monomial(5, 0)),
                  std::invalid_argument);
}

TEST_CASE("multiply is commutative and bilinear") {
  Rng rng(12);
  const CircleFunction f = random_trig_poly(rng, 12, 5);
  const CircleFunction g = random_trig_poly(rng, 12, 5);
  const CircleFunction h = random_trig_poly(rng, 12, 5);
  CHECK((multiply(f, g) - multiply(g, f)).norm() < 1e-14);
  const Complex c(0.7, -0.3);
  const CircleFunction lhs = multiply(f, c * g + h);
  const CircleFunction rhs = c * multiply(f, g) + multiply(f, h);
  CHECK((lhs - rhs).norm() < 1e-13);
}

TEST_CASE("riesz projection") {
  const int M = 6;
  CircleFunction f(M);
  f.set_coeff(-1, 1.0);
  f.set_coeff(0, 1.0);
  f.set_coeff(1, 1.0);
  const CircleFunction p = riesz_project(f);
  CHECK(dist(p.coeff(-1), 0.0) == 0.0);
  CHECK(dist(p.coeff(0), 1.0) == 0.0);
  CHECK(dist(p.coeff(1), 1.0) == 0.0);

  CHECK(riesz_project(monomial(M, -3)).norm() == 0.0);

  Rng rng(13);
  const CircleFunction g = random_trig_poly(rng, M, M);
  CHECK((riesz_project(riesz_project(g)) - riesz_project(g)).norm() == 0.0);
  // self-adjoint for the stored pairing
  const CircleFunction h = random_trig_poly(rng, M, M);
  CHECK(dist(inner_product(riesz_project(g), h),
             inner_product(g, riesz_project(h))) < 1e-14);
}

TEST_CASE("slant operator on monomials") {
  const int M = 8;
  CHECK(dist(slant_w(monomial(M, 4), 2).coeff(2), 1.0) == 0.0);
  CHECK(slant_w(monomial(M, 3), 2).norm() == 0.0);
  Rng rng(14);
  const CircleFunction f = random_trig_poly(rng, M, M);
  CHECK((slant_w(f, 1) - f).norm() == 0.0);
}

TEST_CASE("slant adjoint places coefficients and is an isometry") {
  const CircleFunction z = monomial(4, 1);
  const CircleFunction up = slant_w_adjoint(z, 2, 8);
  CHECK(dist(up.coeff(2), 1.0) == 0.0);
  CHECK(up.band() == 8);

  CircleFunction f(4);
  f.set_coeff(0, 1.0);
  f.set_coeff(-1, 1.0);
  const CircleFunction g = slant_w_adjoint(f, 2, 8);
  CHECK(dist(g.coeff(0), 1.0) == 0.0);
  CHECK(dist(g.coeff(-2), 1.0) == 0.0);
  CHECK(g.norm() == f.norm());

  CHECK_THROWS_AS(slant_w_adjoint(f, 3, 8), std::invalid_argument);
}

TEST_CASE("W_k composed with its adjoint") {
  Rng rng(15);
  const int M = 40;
  for (int k = 1; k <= 4; ++k) {
    const CircleFunction f = random_trig_poly(rng, M, 9);
    // W_k W_k^* = identity
    const CircleFunction lifted = slant_w_adjoint(rebanded(f, 10), k, M);
    CHECK((rebanded(slant_w(lifted, k), 10) - rebanded(f, 10)).norm() == 0.0);
    // W_k^* W_k keeps exactly the multiples of k
    const CircleFunction masked =
        slant_w_adjoint_banded(slant_w(f, k), k, M);
    for (int n = -M; n <= M; ++n) {
      if (n % k == 0)
        CHECK(dist(masked.coeff(n), f.coeff(n)) == 0.0);
      else
        CHECK(masked.coeff(n) == Complex(0.0, 0.0));
    }
  }
}

TEST_CASE("frequency-shift partition of the identity") {
  // f = sum_j z^j W_k^* W_k (conj(z)^j f), exactly, once the band holds all
  // the shifts
  Rng rng(16);
  const int M = 40;
  for (int k = 2; k <= 3; ++k) {
    const CircleFunction f = random_trig_poly(rng, M, 20);
    CircleFunction sum(M);
    for (int j = 0; j < k; ++j) {
      const CircleFunction piece =
          slant_w_adjoint_banded(slant_w(shifted(f, -j), k), k, M);
      sum += shifted(piece, j);
    }
    CHECK((sum - f).norm() < 1e-14);
  }
}

TEST_CASE("adjointness of W_k against the slant operator") {
  Rng rng(17);
  for (int t = 0; t < 10; ++t) {
    const int k = rng.uniform_int(1, 4);
    const CircleFunction f = random_trig_poly(rng, 10, 10);
    const CircleFunction g = random_trig_poly(rng, 40, 40);
    const Complex lhs = inner_product(slant_w_adjoint(f, k, 40), g);
    const Complex rhs = inner_product(f, rebanded(slant_w(g, k), 10));
    CHECK(dist(lhs, rhs) < 1e-13);
  }
}

TEST_CASE("conjugation of coefficient sequences") {
  const int M = 5;
  CHECK(dist(conj_fn(monomial(M, 1)).coeff(-1), 1.0) == 0.0);

  CircleFunction f(M);
  f.set_coeff(0, I);
  f.set_coeff(1, 1.0);
  const CircleFunction c = conj_fn(f);
  CHECK(dist(c.coeff(0), -I) == 0.0);
  CHECK(dist(c.coeff(-1), 1.0) == 0.0);

  Rng rng(18);
  const CircleFunction g = random_trig_poly(rng, M, M);
  CHECK((conj_fn(conj_fn(g)) - g).norm() == 0.0);
  // pointwise conjugate on the circle
  CHECK(dist(c.eval_circle(0.9), std::conj(f.eval_circle(0.9))) < 1e-14);
}

TEST_CASE("inner product basics and quadrature oracle") {
  const int M = 6;
  CHECK(dist(inner_product(monomial(M, 1), monomial(M, 1)), 1.0) == 0.0);
  CHECK(dist(inner_product(monomial(M, 1), monomial(M, 2)), 0.0) == 0.0);

  Rng rng(19);
  const CircleFunction f = random_trig_poly(rng, M, M);
  const CircleFunction g = random_trig_poly(rng, M, M);
  CHECK(dist(inner_product(f, g), grid_inner(f, g)) < 1e-12);
  CHECK(dist(inner_product(I * f, g), I * inner_product(f, g)) < 1e-15);
  CHECK(dist(inner_product(f, I * g), -I * inner_product(f, g)) < 1e-15);
}
