#include "slantlab/sampling.hpp"

namespace slantlab {

FiniteBlaschke random_blaschke(Rng& rng, int degree, double max_radius) {
  std::vector<Complex> zeros;
  zeros.reserve(degree);
  for (int i = 0; i < degree; ++i) zeros.push_back(rng.in_disk(max_radius));
  return FiniteBlaschke(rng.unit(), std::move(zeros));
}

CircleFunction random_trig_poly(Rng& rng, int band, int support) {
  CircleFunction f(band);
  for (int n = -support; n <= support; ++n) f.set_coeff(n, rng.complex_box());
  return f;
}

CircleFunction random_analytic_poly(Rng& rng, int band, int degree) {
  CircleFunction f(band);
  for (int n = 0; n <= degree; ++n) f.set_coeff(n, rng.complex_box());
  return f;
}

SpaceElement random_element(Rng& rng, const ModelSpacePtr& space) {
  Eigen::VectorXcd coords(space->dim());
  for (int i = 0; i < space->dim(); ++i) coords(i) = rng.complex_box();
  return space->element(std::move(coords));
}

}  // namespace slantlab
