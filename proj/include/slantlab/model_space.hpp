#ifndef SLANTLAB_MODEL_SPACE_HPP
#define SLANTLAB_MODEL_SPACE_HPP

#include <memory>
#include <string>
#include <vector>

#include "slantlab/circle_fn.hpp"
#include "slantlab/inner_fn.hpp"

namespace slantlab {

class ModelSpace;
using ModelSpacePtr = std::shared_ptr<const ModelSpace>;

/// Element of a model space, stored in coordinates of the space's
/// orthonormal basis.
struct SpaceElement {
  ModelSpacePtr space;
  Eigen::VectorXcd coords;

  CircleFunction fn() const;
  double norm() const { return coords.norm(); }

  SpaceElement& operator+=(const SpaceElement& other);
  SpaceElement& operator-=(const SpaceElement& other);
  SpaceElement& operator*=(Complex scalar);
};

SpaceElement operator+(SpaceElement lhs, const SpaceElement& rhs);
SpaceElement operator-(SpaceElement lhs, const SpaceElement& rhs);
SpaceElement operator*(Complex scalar, SpaceElement e);
Complex inner_product(const SpaceElement& f, const SpaceElement& g);

/// The model space attached to a finite Blaschke product alpha, carrying the
/// Takenaka-Malmquist orthonormal basis in stored-zero order.  For alpha =
/// z^N the basis is exactly {1, z, ..., z^{N-1}}.
class ModelSpace : public std::enable_shared_from_this<ModelSpace> {
 public:
  static ModelSpacePtr build(const FiniteBlaschke& alpha, int band = kDefaultBand);

  const FiniteBlaschke& alpha() const { return alpha_; }
  int dim() const { return dim_; }
  int band() const { return band_; }
  const CircleFunction& alpha_fn() const { return alpha_fn_; }
  const CircleFunction& basis_fn(int j) const { return basis_[j]; }
  const Eigen::MatrixXcd& basis_matrix() const { return basis_mat_; }

  /// Coordinates of the orthogonal projection of f onto the space.
  SpaceElement project(const CircleFunction& f) const;

  SpaceElement element(Eigen::VectorXcd coords) const;
  SpaceElement zero_element() const;

  /// Kernel for the functional f -> f^(n)(w); includes the n! factor.
  SpaceElement kernel(Complex w, int n = 0) const;

  /// C f = alpha * conj(z) * conj(f) on the circle; antilinear isometric
  /// involution of the space.
  SpaceElement conjugation(const SpaceElement& f) const;
  SpaceElement conjugate_kernel(Complex w, int n = 0) const;

  /// Stable hash of (alpha, band) for serialized references.
  std::string id() const;

 private:
  ModelSpace(FiniteBlaschke alpha, int band);

  FiniteBlaschke alpha_;
  int band_;
  int dim_;
  CircleFunction alpha_fn_;
  std::vector<CircleFunction> basis_;
  Eigen::MatrixXcd basis_mat_;  // (2*band+1) x dim, orthonormal columns
};

}  // namespace slantlab

#endif  // SLANTLAB_MODEL_SPACE_HPP
