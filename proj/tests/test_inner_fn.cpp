#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace slantlab;
using namespace slantlab::testing;

TEST_CASE("evaluation of finite Blaschke products") {
  const FiniteBlaschke z2 = FiniteBlaschke::power(2);
  CHECK(dist(z2.evaluate(I), -1.0) < 1e-15);

  const FiniteBlaschke b(Complex(1.0, 0.0), {Complex(0.5, 0.0)});
  CHECK(std::abs(std::abs(b.evaluate(Complex(0.0, 0.0))) - 0.5) < 1e-15);

  Rng rng(21);
  for (int t = 0; t < 10; ++t) {
    const FiniteBlaschke r = random_blaschke(rng, rng.uniform_int(1, 4), 0.9);
    const Complex z = std::polar(1.0, rng.uniform(0.0, 2.0 * M_PI));
    CHECK(std::abs(std::abs(r.evaluate(z)) - 1.0) < 1e-12);
  }
}

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(FiniteBlaschke(Complex(2.0, 0.0), {}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteBlaschke(Complex(1.0, 0.0), {Complex(1.0, 0.0)}),
                  std::invalid_argument);
  CHECK(FiniteBlaschke(Complex(1.0, 0.0), {Complex(0.97, 0.0)})
            .has_extreme_zeros());
}

TEST_CASE("Fourier expansion of a power") {
  const CircleFunction f = FiniteBlaschke::power(3).to_circle_fn(16);
  for (int n = -16; n <= 16; ++n)
    CHECK(dist(f.coeff(n), n == 3 ? 1.0 : 0.0) == 0.0);
}

TEST_CASE("Fourier expansion of a single factor follows the geometric pattern") {
  const Complex a(0.5, 0.0);
  const int M = 64;
  double tail = 0.0;
  const CircleFunction f =
      FiniteBlaschke(Complex(1.0, 0.0), {a}).to_circle_fn(M, &tail);
  CHECK(dist(f.coeff(0), 0.5) < 1e-15);
  for (int n = 1; n <= 20; ++n) {
    const Complex expected =
        -(1.0 - std::norm(a)) / std::conj(a) * std::pow(std::conj(a), n);
    CHECK(dist(f.coeff(n), expected) < 1e-14);
  }
  CHECK(tail < 1e-12);  // rounding floor of 1 - |truncation|^2
}

TEST_CASE("expansion agrees with pointwise evaluation on the circle") {
  Rng rng(22);
  for (int t = 0; t < 6; ++t) {
    const FiniteBlaschke b = random_blaschke(rng, rng.uniform_int(1, 3), 0.7);
    const CircleFunction f = b.to_circle_fn(256);
    for (int i = 0; i < 5; ++i) {
      const double theta = rng.uniform(0.0, 2.0 * M_PI);
      CHECK(dist(f.eval_circle(theta), b.evaluate(std::polar(1.0, theta))) <
            1e-11);
    }
  }
}

TEST_CASE("two-factor expansion is the convolution of the single factors") {
  const Complex a(0.4, 0.2), b(-0.3, 0.5);
  const int M = 128;
  const CircleFunction fa = FiniteBlaschke(Complex(1.0, 0.0), {a}).to_circle_fn(M);
  const CircleFunction fb = FiniteBlaschke(Complex(1.0, 0.0), {b}).to_circle_fn(M);
  const CircleFunction prod =
      FiniteBlaschke(Complex(1.0, 0.0), {a, b}).to_circle_fn(M);
  CHECK((prod - multiply(fa, fb)).norm() < 1e-13);
}

TEST_CASE("divisibility on zero multisets") {
  const FiniteBlaschke z2 = FiniteBlaschke::power(2);
  const FiniteBlaschke z3 = FiniteBlaschke::power(3);
  CHECK(divides(z2, z3));
  CHECK_FALSE(divides(z3, z2));

  const Complex a(0.5, 0.0);
  const FiniteBlaschke ba(Complex(1.0, 0.0), {a});
  const FiniteBlaschke zba(Complex(1.0, 0.0), {Complex(0.0, 0.0), a});
  CHECK(divides(ba, zba));
  CHECK_FALSE(divides(zba, ba));
  // mutual divisibility forces equal multisets
  CHECK(divides(ba, ba));
}

TEST_CASE("gcd and lcm on zero multisets") {
  const FiniteBlaschke z2 = FiniteBlaschke::power(2);
  const FiniteBlaschke z3 = FiniteBlaschke::power(3);
  CHECK(gcd_inner(z2, z3).degree() == 2);
  CHECK(lcm_inner(z2, z3).degree() == 3);

  const Complex a(0.3, -0.4);
  const FiniteBlaschke zba(Complex(1.0, 0.0), {Complex(0.0, 0.0), a});
  CHECK(gcd_inner(zba, z3).degree() == 1);
  CHECK(gcd_inner(zba, z3).zeros()[0] == Complex(0.0, 0.0));

  Rng rng(23);
  for (int t = 0; t < 10; ++t) {
    const FiniteBlaschke u = random_blaschke(rng, rng.uniform_int(0, 3), 0.8);
    const FiniteBlaschke shared = random_blaschke(rng, rng.uniform_int(0, 2), 0.8);
    const FiniteBlaschke v = random_blaschke(rng, rng.uniform_int(0, 3), 0.8);
    const FiniteBlaschke x = multiply_inner(u, shared);
    const FiniteBlaschke y = multiply_inner(shared, v);
    const FiniteBlaschke g = gcd_inner(x, y);
    const FiniteBlaschke l = lcm_inner(x, y);
    CHECK(divides(g, x));
    CHECK(divides(g, y));
    CHECK(divides(x, l));
    CHECK(divides(y, l));
    CHECK(g.degree() + l.degree() == x.degree() + y.degree());
    CHECK(g.degree() >= shared.degree());
  }
}

TEST_CASE("quotient removes the divisor's zeros") {
  const Complex a(0.5, 0.1);
  const FiniteBlaschke prod(Complex(1.0, 0.0), {a, Complex(0.0, 0.0)});
  const FiniteBlaschke q = quotient_inner(prod, FiniteBlaschke(Complex(1.0, 0.0), {a}));
  CHECK(q.degree() == 1);
  CHECK(q.zeros()[0] == Complex(0.0, 0.0));
  CHECK_THROWS_AS(quotient_inner(FiniteBlaschke::power(1), prod),
                  std::invalid_argument);
}

TEST_CASE("substitution z -> z^k on powers") {
  const FiniteBlaschke c = compose_zk(FiniteBlaschke::power(2), 2);
  CHECK(c.degree() == 4);
  for (const Complex& z : c.zeros()) CHECK(z == Complex(0.0, 0.0));

  Rng rng(24);
  const FiniteBlaschke b = random_blaschke(rng, 3, 0.8);
  CHECK(divides(compose_zk(b, 1), b));
  CHECK(divides(b, compose_zk(b, 1)));
}

TEST_CASE("substitution roots for a single real zero") {
  const FiniteBlaschke b(Complex(1.0, 0.0), {Complex(0.25, 0.0)});
  const FiniteBlaschke c = compose_zk(b, 2);
  REQUIRE(c.degree() == 2);
  double lo = std::abs(c.zeros()[0] - Complex(0.5, 0.0));
  double hi = std::abs(c.zeros()[1] + Complex(0.5, 0.0));
  const double alt = std::abs(c.zeros()[0] + Complex(0.5, 0.0)) +
                     std::abs(c.zeros()[1] - Complex(0.5, 0.0));
  CHECK(std::min(lo + hi, alt) < 1e-14);
}

TEST_CASE("substitution matches the coefficient-stretch operator") {
  Rng rng(25);
  for (int t = 0; t < 8; ++t) {
    const int deg = rng.uniform_int(1, 4);
    const int k = rng.uniform_int(1, 4);
    const FiniteBlaschke b = random_blaschke(rng, deg, 0.8);
    const CircleFunction direct = compose_zk(b, k).to_circle_fn(256);
    const CircleFunction stretched =
        slant_w_adjoint_banded(b.to_circle_fn(256), k, 256);
    CHECK((direct - stretched).norm() < 1e-10);
  }
}
