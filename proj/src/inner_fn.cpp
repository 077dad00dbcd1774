#include "slantlab/inner_fn.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace slantlab {

namespace {

// Index of the unused zero in `pool` closest to `target` within tol, or -1.
int match_zero(const std::vector<Complex>& pool, const std::vector<bool>& used,
               Complex target, double tol) {
  int best = -1;
  double best_dist = tol;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (used[i]) continue;
    const double d = std::abs(pool[i] - target);
    if (d <= best_dist) {
      best_dist = d;
      best = static_cast<int>(i);
    }
  }
  return best;
}

}  // namespace

FiniteBlaschke::FiniteBlaschke(Complex constant, std::vector<Complex> zeros)
    : constant_(constant), zeros_(std::move(zeros)) {
  if (std::abs(std::abs(constant_) - 1.0) > 1e-9)
    throw std::invalid_argument("FiniteBlaschke: constant must be unimodular");
  for (const Complex& a : zeros_)
    if (std::abs(a) >= 1.0)
      throw std::invalid_argument(
          "FiniteBlaschke: zeros must lie strictly inside the unit disk");
}

FiniteBlaschke FiniteBlaschke::power(int n) {
  if (n < 0) throw std::invalid_argument("FiniteBlaschke::power: n must be >= 0");
  return FiniteBlaschke(Complex(1.0, 0.0),
                        std::vector<Complex>(n, Complex(0.0, 0.0)));
}

bool FiniteBlaschke::has_extreme_zeros() const {
  for (const Complex& a : zeros_)
    if (std::abs(a) > kZeroRadiusWarn) return true;
  return false;
}

Complex FiniteBlaschke::evaluate(Complex z) const {
  Complex value = constant_;
  for (const Complex& a : zeros_) {
    if (a == Complex(0.0, 0.0)) {
      value *= z;
      continue;
    }
    const Complex denom = 1.0 - std::conj(a) * z;
    if (std::abs(denom) < 1e-14)
      throw std::invalid_argument("FiniteBlaschke::evaluate: pole hit");
    value *= (std::abs(a) / a) * (a - z) / denom;
  }
  return value;
}

CircleFunction FiniteBlaschke::to_circle_fn(int band, double* tail_energy) const {
  CircleFunction result = monomial(band, 0, constant_);
  for (const Complex& a : zeros_) {
    if (a == Complex(0.0, 0.0)) {
      result = shifted(result, 1);
      continue;
    }
    // (|a|/a)(a - z)/(1 - conj(a) z) = |a| - (1-|a|^2)(|a|/a) sum_{n>=1} conj(a)^{n-1} z^n
    CircleFunction factor(band);
    const double r = std::abs(a);
    factor.set_coeff(0, Complex(r, 0.0));
    const Complex lead = -(1.0 - r * r) * (r / a);
    Complex pw(1.0, 0.0);
    for (int n = 1; n <= band; ++n) {
      factor.set_coeff(n, lead * pw);
      pw *= std::conj(a);
    }
    result = multiply(result, factor);
  }
  if (tail_energy) {
    // Inner functions have unit L2 norm; the tail is whatever is missing.
    const double n2 = result.norm();
    *tail_energy += std::max(0.0, 1.0 - n2 * n2);
  }
  return result;
}

bool divides(const FiniteBlaschke& beta, const FiniteBlaschke& alpha, double tol) {
  if (beta.degree() > alpha.degree()) return false;
  std::vector<bool> used(alpha.zeros().size(), false);
  for (const Complex& b : beta.zeros()) {
    const int idx = match_zero(alpha.zeros(), used, b, tol);
    if (idx < 0) return false;
    used[idx] = true;
  }
  return true;
}

FiniteBlaschke gcd_inner(const FiniteBlaschke& a, const FiniteBlaschke& b,
                         double tol) {
  std::vector<bool> used(b.zeros().size(), false);
  std::vector<Complex> common;
  for (const Complex& z : a.zeros()) {
    const int idx = match_zero(b.zeros(), used, z, tol);
    if (idx < 0) continue;
    used[idx] = true;
    common.push_back(z);
  }
  return FiniteBlaschke(Complex(1.0, 0.0), std::move(common));
}

FiniteBlaschke lcm_inner(const FiniteBlaschke& a, const FiniteBlaschke& b,
                         double tol) {
  std::vector<bool> used(b.zeros().size(), false);
  std::vector<Complex> all = a.zeros();
  for (const Complex& z : a.zeros()) {
    const int idx = match_zero(b.zeros(), used, z, tol);
    if (idx >= 0) used[idx] = true;
  }
  for (std::size_t i = 0; i < b.zeros().size(); ++i)
    if (!used[i]) all.push_back(b.zeros()[i]);
  return FiniteBlaschke(Complex(1.0, 0.0), std::move(all));
}

FiniteBlaschke quotient_inner(const FiniteBlaschke& a, const FiniteBlaschke& b,
                              double tol) {
  std::vector<bool> used(a.zeros().size(), false);
  for (const Complex& z : b.zeros()) {
    const int idx = match_zero(a.zeros(), used, z, tol);
    if (idx < 0)
      throw std::invalid_argument("quotient_inner: divisor does not divide");
    used[idx] = true;
  }
  std::vector<Complex> rest;
  for (std::size_t i = 0; i < a.zeros().size(); ++i)
    if (!used[i]) rest.push_back(a.zeros()[i]);
  return FiniteBlaschke(a.constant() / b.constant(), std::move(rest));
}

FiniteBlaschke multiply_inner(const FiniteBlaschke& a, const FiniteBlaschke& b) {
  std::vector<Complex> zeros = a.zeros();
  zeros.insert(zeros.end(), b.zeros().begin(), b.zeros().end());
  return FiniteBlaschke(a.constant() * b.constant(), std::move(zeros));
}

FiniteBlaschke compose_zk(const FiniteBlaschke& beta, int k) {
  if (k < 1) throw std::invalid_argument("compose_zk: k must be >= 1");
  if (k == 1) return beta;
  std::vector<Complex> zeros;
  zeros.reserve(beta.zeros().size() * static_cast<std::size_t>(k));
  const double two_pi = 2.0 * M_PI;
  for (const Complex& a : beta.zeros()) {
    if (a == Complex(0.0, 0.0)) {
      zeros.insert(zeros.end(), static_cast<std::size_t>(k), Complex(0.0, 0.0));
      continue;
    }
    const double r = std::pow(std::abs(a), 1.0 / k);
    const double theta = std::arg(a) / k;
    for (int j = 0; j < k; ++j)
      zeros.push_back(std::polar(r, theta + two_pi * j / k));
  }
  // b_a(z^k) equals the product of the factors at the k-th roots of a with
  // no extra unimodular twist, so the constant carries over.
  return FiniteBlaschke(beta.constant(), std::move(zeros));
}

}  // namespace slantlab
