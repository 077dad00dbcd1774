#ifndef SLANTLAB_INNER_FN_HPP
#define SLANTLAB_INNER_FN_HPP

#include <vector>

#include "slantlab/circle_fn.hpp"

namespace slantlab {

inline constexpr double kZeroRadiusWarn = 0.95;

/// A finite Blaschke product: a unimodular constant times one factor
/// (|a|/a)(a - z)/(1 - conj(a) z) per zero, with a plain z factor for a = 0.
/// Zeros are kept as a multiset in insertion order.
class FiniteBlaschke {
 public:
  FiniteBlaschke(Complex constant, std::vector<Complex> zeros);

  /// z^n (constant 1, n zeros at the origin).
  static FiniteBlaschke power(int n);

  const Complex& constant() const { return constant_; }
  const std::vector<Complex>& zeros() const { return zeros_; }
  int degree() const { return static_cast<int>(zeros_.size()); }
  bool is_constant() const { return zeros_.empty(); }

  /// True when some zero has |a| > 0.95; Fourier tails then decay slowly
  /// and band-256 expansions lose accuracy.
  bool has_extreme_zeros() const;

  Complex evaluate(Complex z) const;

  /// Analytic Fourier expansion on [0, band].  *tail_energy receives the
  /// energy beyond the band (1 - |truncation|^2, clamped at 0).
  CircleFunction to_circle_fn(int band, double* tail_energy = nullptr) const;

 private:
  Complex constant_;
  std::vector<Complex> zeros_;
};

/// beta <= alpha: the zero multiset of beta is contained in alpha's,
/// matched within tol.  Constants are ignored.
bool divides(const FiniteBlaschke& beta, const FiniteBlaschke& alpha,
             double tol = kZeroMatchTol);

/// Multiset intersection / union of zeros; constants normalized to 1.
FiniteBlaschke gcd_inner(const FiniteBlaschke& a, const FiniteBlaschke& b,
                         double tol = kZeroMatchTol);
FiniteBlaschke lcm_inner(const FiniteBlaschke& a, const FiniteBlaschke& b,
                         double tol = kZeroMatchTol);

/// a / b on zero multisets; requires divides(b, a).  Constant a.c / b.c.
FiniteBlaschke quotient_inner(const FiniteBlaschke& a, const FiniteBlaschke& b,
                              double tol = kZeroMatchTol);

/// Zero multisets concatenated, constants multiplied.
FiniteBlaschke multiply_inner(const FiniteBlaschke& a, const FiniteBlaschke& b);

/// beta(z^k): every zero contributes its k distinct k-th roots; equals
/// W_k^* beta on Fourier coefficients.
FiniteBlaschke compose_zk(const FiniteBlaschke& beta, int k);

}  // namespace slantlab

#endif  // SLANTLAB_INNER_FN_HPP
