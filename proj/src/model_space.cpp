#include "slantlab/model_space.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>

namespace slantlab {

CircleFunction SpaceElement::fn() const {
  return CircleFunction(space->band(), space->basis_matrix() * coords);
}

SpaceElement& SpaceElement::operator+=(const SpaceElement& other) {
  if (space != other.space)
    throw std::invalid_argument("SpaceElement: spaces differ in addition");
  coords += other.coords;
  return *this;
}

SpaceElement& SpaceElement::operator-=(const SpaceElement& other) {
  if (space != other.space)
    throw std::invalid_argument("SpaceElement: spaces differ in subtraction");
  coords -= other.coords;
  return *this;
}

SpaceElement& SpaceElement::operator*=(Complex scalar) {
  coords *= scalar;
  return *this;
}

SpaceElement operator+(SpaceElement lhs, const SpaceElement& rhs) {
  lhs += rhs;
  return lhs;
}

SpaceElement operator-(SpaceElement lhs, const SpaceElement& rhs) {
  lhs -= rhs;
  return lhs;
}

SpaceElement operator*(Complex scalar, SpaceElement e) {
  e *= scalar;
  return e;
}

Complex inner_product(const SpaceElement& f, const SpaceElement& g) {
  if (f.space != g.space)
    throw std::invalid_argument("SpaceElement: spaces differ in inner product");
  return g.coords.dot(f.coords);
}

ModelSpace::ModelSpace(FiniteBlaschke alpha, int band)
    : alpha_(std::move(alpha)),
      band_(band),
      dim_(alpha_.degree()),
      alpha_fn_(alpha_.to_circle_fn(band)) {
  // Takenaka-Malmquist system: e_n = sqrt(1-|a_n|^2)/(1 - conj(a_n) z)
  // times the Blaschke factors of the earlier zeros.
  basis_.reserve(dim_);
  CircleFunction partial = monomial(band_, 0, Complex(1.0, 0.0));
  for (int n = 0; n < dim_; ++n) {
    const Complex a = alpha_.zeros()[n];
    CircleFunction cauchy(band_);
    const double r = std::abs(a);
    const double scale = std::sqrt(1.0 - r * r);
    Complex pw(1.0, 0.0);
    for (int q = 0; q <= band_; ++q) {
      cauchy.set_coeff(q, scale * pw);
      pw *= std::conj(a);
      if (pw == Complex(0.0, 0.0)) break;
    }
    basis_.push_back(multiply(partial, cauchy));
    if (n + 1 < dim_) {
      if (a == Complex(0.0, 0.0)) {
        partial = shifted(partial, 1);
      } else {
        partial = multiply(partial, FiniteBlaschke(Complex(1.0, 0.0), {a})
                                        .to_circle_fn(band_));
      }
    }
  }
  basis_mat_.resize(2 * band_ + 1, dim_);
  for (int j = 0; j < dim_; ++j) basis_mat_.col(j) = basis_[j].coeffs();
}

ModelSpacePtr ModelSpace::build(const FiniteBlaschke& alpha, int band) {
  if (alpha.is_constant())
    throw std::invalid_argument(
        "ModelSpace::build: constant inner function has trivial model space");
  if (band < 2 * alpha.degree())
    throw std::invalid_argument("ModelSpace::build: band too small for degree");
  return ModelSpacePtr(new ModelSpace(alpha, band));
}

SpaceElement ModelSpace::project(const CircleFunction& f) const {
  if (f.band() != band_)
    throw std::invalid_argument("ModelSpace::project: band mismatch");
  return SpaceElement{shared_from_this(), basis_mat_.adjoint() * f.coeffs()};
}

SpaceElement ModelSpace::element(Eigen::VectorXcd coords) const {
  if (coords.size() != dim_)
    throw std::invalid_argument("ModelSpace::element: coordinate count mismatch");
  return SpaceElement{shared_from_this(), std::move(coords)};
}

SpaceElement ModelSpace::zero_element() const {
  return SpaceElement{shared_from_this(), Eigen::VectorXcd::Zero(dim_)};
}

SpaceElement ModelSpace::kernel(Complex w, int n) const {
  if (std::abs(w) >= 1.0)
    throw std::invalid_argument("ModelSpace::kernel: |w| must be < 1");
  if (n < 0) throw std::invalid_argument("ModelSpace::kernel: n must be >= 0");
  // k_{w,n}(z) = n! z^n / (1 - conj(w) z)^{n+1}
  //            = sum_{q >= n} q!/(q-n)! conj(w)^{q-n} z^q.
  CircleFunction h(band_);
  const Complex wc = std::conj(w);
  Complex pw(1.0, 0.0);
  for (int q = n; q <= band_; ++q) {
    double falling = 1.0;
    for (int t = 0; t < n; ++t) falling *= static_cast<double>(q - t);
    h.set_coeff(q, falling * pw);
    pw *= wc;
    if (pw == Complex(0.0, 0.0)) break;
  }
  return project(h);
}

SpaceElement ModelSpace::conjugation(const SpaceElement& f) const {
  if (f.space.get() != this)
    throw std::invalid_argument("ModelSpace::conjugation: element of another space");
  CircleFunction g = conj_fn(f.fn());
  CircleFunction h = multiply(alpha_fn_, g);
  return project(shifted(h, -1));
}

SpaceElement ModelSpace::conjugate_kernel(Complex w, int n) const {
  return conjugation(kernel(w, n));
}

std::string ModelSpace::id() const {
  // FNV-1a over a canonical text form of (constant, zeros, band).
  char buf[64];
  std::string canon;
  std::snprintf(buf, sizeof(buf), "%.17g,%.17g;", alpha_.constant().real(),
                alpha_.constant().imag());
  canon += buf;
  for (const Complex& a : alpha_.zeros()) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g;", a.real(), a.imag());
    canon += buf;
  }
  std::snprintf(buf, sizeof(buf), "band=%d", band_);
  canon += buf;
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canon) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace slantlab
