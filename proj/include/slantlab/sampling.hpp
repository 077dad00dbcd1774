#ifndef SLANTLAB_SAMPLING_HPP
#define SLANTLAB_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "slantlab/model_space.hpp"

namespace slantlab {

/// Deterministic random source.  Doubles are produced from raw mt19937_64
/// bits so streams do not depend on the standard library's distribution
/// implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(uniform() * (hi - lo + 1));
  }

  Complex complex_box(double radius = 1.0) {
    return Complex(uniform(-radius, radius), uniform(-radius, radius));
  }

  /// Uniform on the disk of the given radius.
  Complex in_disk(double radius) {
    const double r = radius * std::sqrt(uniform());
    const double t = uniform(0.0, 2.0 * M_PI);
    return std::polar(r, t);
  }

  Complex unit() { return std::polar(1.0, uniform(0.0, 2.0 * M_PI)); }

 private:
  std::mt19937_64 gen_;
};

/// Random Blaschke product of the given degree, zeros uniform in the disk of
/// radius max_radius, unimodular random constant.
FiniteBlaschke random_blaschke(Rng& rng, int degree, double max_radius);

/// Random coefficients (uniform box) on frequencies [-support, support],
/// embedded at the given band.
CircleFunction random_trig_poly(Rng& rng, int band, int support);

/// Analytic random polynomial on frequencies [0, degree].
CircleFunction random_analytic_poly(Rng& rng, int band, int degree);

SpaceElement random_element(Rng& rng, const ModelSpacePtr& space);

}  // namespace slantlab

#endif  // SLANTLAB_SAMPLING_HPP
