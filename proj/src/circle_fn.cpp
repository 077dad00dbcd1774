#include "slantlab/circle_fn.hpp"

#include <cmath>
#include <stdexcept>

namespace slantlab {

CircleFunction::CircleFunction(int band) : band_(band) {
  if (band < 1) throw std::invalid_argument("CircleFunction: band must be >= 1");
  coeffs_ = Eigen::VectorXcd::Zero(2 * band + 1);
}

CircleFunction::CircleFunction(int band, Eigen::VectorXcd coeffs)
    : band_(band), coeffs_(std::move(coeffs)) {
  if (band < 1) throw std::invalid_argument("CircleFunction: band must be >= 1");
  if (coeffs_.size() != 2 * band + 1)
    throw std::invalid_argument("CircleFunction: coefficient count must be 2*band+1");
}

Complex CircleFunction::coeff(int freq) const {
  if (freq < -band_ || freq > band_) return Complex(0.0, 0.0);
  return coeffs_(freq + band_);
}

void CircleFunction::set_coeff(int freq, Complex value) {
  if (freq < -band_ || freq > band_)
    throw std::invalid_argument("CircleFunction::set_coeff: frequency outside band");
  coeffs_(freq + band_) = value;
}

Complex CircleFunction::eval_circle(double theta) const {
  Complex sum(0.0, 0.0);
  for (int n = -band_; n <= band_; ++n) {
    const Complex a = coeffs_(n + band_);
    if (a == Complex(0.0, 0.0)) continue;
    sum += a * std::polar(1.0, n * theta);
  }
  return sum;
}

Complex CircleFunction::eval_disk(Complex w, int deriv) const {
  if (deriv < 0) throw std::invalid_argument("eval_disk: derivative order must be >= 0");
  // sum_{q >= deriv} a_q * q!/(q-deriv)! * w^{q-deriv}, evaluated by Horner
  // from the top frequency down.
  Complex acc(0.0, 0.0);
  for (int q = band_; q >= deriv; --q) {
    double falling = 1.0;
    for (int t = 0; t < deriv; ++t) falling *= static_cast<double>(q - t);
    acc = acc * w + falling * coeffs_(q + band_);
  }
  return acc;
}

int CircleFunction::support_lo() const {
  for (int n = -band_; n <= band_; ++n)
    if (coeffs_(n + band_) != Complex(0.0, 0.0)) return n;
  return 0;
}

int CircleFunction::support_hi() const {
  for (int n = band_; n >= -band_; --n)
    if (coeffs_(n + band_) != Complex(0.0, 0.0)) return n;
  return 0;
}

CircleFunction& CircleFunction::operator+=(const CircleFunction& other) {
  if (other.band_ != band_)
    throw std::invalid_argument("CircleFunction: band mismatch in addition");
  coeffs_ += other.coeffs_;
  return *this;
}

CircleFunction& CircleFunction::operator-=(const CircleFunction& other) {
  if (other.band_ != band_)
    throw std::invalid_argument("CircleFunction: band mismatch in subtraction");
  coeffs_ -= other.coeffs_;
  return *this;
}

CircleFunction& CircleFunction::operator*=(Complex scalar) {
  coeffs_ *= scalar;
  return *this;
}

CircleFunction operator+(CircleFunction lhs, const CircleFunction& rhs) {
  lhs += rhs;
  return lhs;
}

CircleFunction operator-(CircleFunction lhs, const CircleFunction& rhs) {
  lhs -= rhs;
  return lhs;
}

CircleFunction operator*(Complex scalar, CircleFunction f) {
  f *= scalar;
  return f;
}

CircleFunction monomial(int band, int freq, Complex c) {
  CircleFunction out(band);
  out.set_coeff(freq, c);
  return out;
}

CircleFunction multiply(const CircleFunction& f, const CircleFunction& g,
                        double* discarded) {
  if (f.band() != g.band())
    throw std::invalid_argument("multiply: operands must share a band");
  const int M = f.band();
  const int flo = f.support_lo(), fhi = f.support_hi();
  const int glo = g.support_lo(), ghi = g.support_hi();

  // Full convolution over the supports, then split into kept and dropped.
  Eigen::VectorXcd full = Eigen::VectorXcd::Zero(4 * M + 1);
  for (int i = flo; i <= fhi; ++i) {
    const Complex a = f.coeff(i);
    if (a == Complex(0.0, 0.0)) continue;
    for (int j = glo; j <= ghi; ++j) {
      const Complex b = g.coeff(j);
      if (b == Complex(0.0, 0.0)) continue;
      full(i + j + 2 * M) += a * b;
    }
  }

  CircleFunction out(M);
  for (int n = -M; n <= M; ++n) out.set_coeff(n, full(n + 2 * M));
  if (discarded) {
    double drop = 0.0;
    for (int n = -2 * M; n < -M; ++n) drop += std::norm(full(n + 2 * M));
    for (int n = M + 1; n <= 2 * M; ++n) drop += std::norm(full(n + 2 * M));
    *discarded += drop;
  }
  return out;
}

CircleFunction riesz_project(const CircleFunction& f) {
  CircleFunction out(f.band());
  for (int n = 0; n <= f.band(); ++n) out.set_coeff(n, f.coeff(n));
  return out;
}

CircleFunction slant_w(const CircleFunction& f, int k) {
  if (k < 1) throw std::invalid_argument("slant_w: k must be >= 1");
  const int M = f.band();
  CircleFunction out(M);
  for (int m = -M / k; m <= M / k; ++m) out.set_coeff(m, f.coeff(k * m));
  return out;
}

CircleFunction slant_w_adjoint(const CircleFunction& f, int k, int out_band) {
  if (k < 1) throw std::invalid_argument("slant_w_adjoint: k must be >= 1");
  if (out_band < k * f.band())
    throw std::invalid_argument(
        "slant_w_adjoint: output band too small (needs k * band(f))");
  CircleFunction out(out_band);
  for (int n = -f.band(); n <= f.band(); ++n) out.set_coeff(k * n, f.coeff(n));
  return out;
}

CircleFunction slant_w_adjoint_banded(const CircleFunction& f, int k,
                                      int out_band, double* discarded) {
  if (k < 1) throw std::invalid_argument("slant_w_adjoint_banded: k must be >= 1");
  CircleFunction out(out_band);
  for (int n = -f.band(); n <= f.band(); ++n) {
    const Complex a = f.coeff(n);
    if (a == Complex(0.0, 0.0)) continue;
    const long long target = static_cast<long long>(k) * n;
    if (target >= -out_band && target <= out_band)
      out.set_coeff(static_cast<int>(target), a);
    else if (discarded)
      *discarded += std::norm(a);
  }
  return out;
}

CircleFunction conj_fn(const CircleFunction& f) {
  CircleFunction out(f.band());
  for (int n = -f.band(); n <= f.band(); ++n)
    out.set_coeff(n, std::conj(f.coeff(-n)));
  return out;
}

Complex inner_product(const CircleFunction& f, const CircleFunction& g) {
  if (f.band() != g.band())
    throw std::invalid_argument("inner_product: operands must share a band");
  // <f, g> = sum a_n conj(b_n); Eigen's dot conjugates its caller.
  return g.coeffs().dot(f.coeffs());
}

CircleFunction shifted(const CircleFunction& f, int by, double* discarded) {
  const int M = f.band();
  CircleFunction out(M);
  for (int n = -M; n <= M; ++n) {
    const Complex a = f.coeff(n);
    if (a == Complex(0.0, 0.0)) continue;
    const int target = n + by;
    if (target >= -M && target <= M)
      out.set_coeff(target, a);
    else if (discarded)
      *discarded += std::norm(a);
  }
  return out;
}

CircleFunction rebanded(const CircleFunction& f, int band, double* discarded) {
  CircleFunction out(band);
  for (int n = -f.band(); n <= f.band(); ++n) {
    const Complex a = f.coeff(n);
    if (a == Complex(0.0, 0.0)) continue;
    if (n >= -band && n <= band)
      out.set_coeff(n, a);
    else if (discarded)
      *discarded += std::norm(a);
  }
  return out;
}

}  // namespace slantlab
