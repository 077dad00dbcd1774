#ifndef SLANTLAB_CIRCLE_FN_HPP
#define SLANTLAB_CIRCLE_FN_HPP

#include <complex>
#include <Eigen/Dense>

namespace slantlab {

using Complex = std::complex<double>;

inline constexpr int kDefaultBand = 256;
inline constexpr double kZeroMatchTol = 1e-10;
inline constexpr double kDefaultTol = 1e-8;

/// A function on the unit circle stored as its Fourier coefficients on the
/// frequency window [-band, band].  Frequency n sits at index n + band.
/// Values are immutable once built; every operation returns a new function.
class CircleFunction {
 public:
  explicit CircleFunction(int band);
  CircleFunction(int band, Eigen::VectorXcd coeffs);

  int band() const { return band_; }
  int size() const { return 2 * band_ + 1; }

  Complex coeff(int freq) const;
  void set_coeff(int freq, Complex value);  // builder use only

  const Eigen::VectorXcd& coeffs() const { return coeffs_; }

  /// L2 norm, sqrt(sum |a_n|^2) (Parseval at this band).
  double norm() const { return coeffs_.norm(); }

  /// Value at e^{i*theta}, sum of a_n e^{i n theta}.
  Complex eval_circle(double theta) const;

  /// Value of the n-th derivative of the analytic part at |w| < 1.
  /// Negative-frequency coefficients are ignored.
  Complex eval_disk(Complex w, int deriv = 0) const;

  /// Smallest/largest frequency carrying a nonzero coefficient
  /// (0 if the function is identically zero).
  int support_lo() const;
  int support_hi() const;

  CircleFunction& operator+=(const CircleFunction& other);
  CircleFunction& operator-=(const CircleFunction& other);
  CircleFunction& operator*=(Complex scalar);

 private:
  int band_;
  Eigen::VectorXcd coeffs_;
};

CircleFunction operator+(CircleFunction lhs, const CircleFunction& rhs);
CircleFunction operator-(CircleFunction lhs, const CircleFunction& rhs);
CircleFunction operator*(Complex scalar, CircleFunction f);

/// c * z^freq at the given band.
CircleFunction monomial(int band, int freq, Complex c = Complex(1.0, 0.0));

/// Convolution of coefficient sequences, truncated back to [-band, band].
/// Coefficients that would fall outside the band are dropped; their energy
/// (sum of squared moduli) is added to *discarded when given.
CircleFunction multiply(const CircleFunction& f, const CircleFunction& g,
                        double* discarded = nullptr);

/// Szego projection: zeroes every negative-frequency coefficient.
CircleFunction riesz_project(const CircleFunction& f);

/// W_k: output coefficient at m is the input coefficient at k*m.
CircleFunction slant_w(const CircleFunction& f, int k);

/// W_k^*: places the input coefficient at n onto frequency k*n.
/// Requires out_band >= k * f.band() so no coefficient is lost.
CircleFunction slant_w_adjoint(const CircleFunction& f, int k, int out_band);

/// W_k^* at a fixed working band: placements with |k*n| > out_band are
/// dropped and their energy reported, like the multiply truncation rule.
CircleFunction slant_w_adjoint_banded(const CircleFunction& f, int k,
                                      int out_band,
                                      double* discarded = nullptr);

/// Pointwise complex conjugate on the circle: coefficient at n becomes
/// conj(coefficient at -n).
CircleFunction conj_fn(const CircleFunction& f);

/// L2 pairing, sum of a_n * conj(b_n).  Bands must agree.
Complex inner_product(const CircleFunction& f, const CircleFunction& g);

/// Multiplication by z^by (coefficient shift); out-of-band coefficients are
/// dropped with their energy reported.
CircleFunction shifted(const CircleFunction& f, int by,
                       double* discarded = nullptr);

/// Same function at another band; truncated coefficients are reported.
CircleFunction rebanded(const CircleFunction& f, int band,
                        double* discarded = nullptr);

}  // namespace slantlab

#endif  // SLANTLAB_CIRCLE_FN_HPP
