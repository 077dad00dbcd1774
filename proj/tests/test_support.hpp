#ifndef SLANTLAB_TESTS_TEST_SUPPORT_HPP
#define SLANTLAB_TESTS_TEST_SUPPORT_HPP

#include <map>

#include "slantlab/circle_fn.hpp"
#include "slantlab/sampling.hpp"

namespace slantlab::testing {

inline const Complex I{0.0, 1.0};

// Brute-force convolution oracle over all frequency pairs, no truncation.
inline std::map<int, Complex> conv_oracle(const CircleFunction& f,
                                          const CircleFunction& g) {
  std::map<int, Complex> out;
  for (int i = -f.band(); i <= f.band(); ++i) {
    if (f.coeff(i) == Complex(0.0, 0.0)) continue;
    for (int j = -g.band(); j <= g.band(); ++j) {
      if (g.coeff(j) == Complex(0.0, 0.0)) continue;
      out[i + j] += f.coeff(i) * g.coeff(j);
    }
  }
  return out;
}

// Quadrature oracle for the L2 pairing: exact for trigonometric polynomials
// once the grid resolves every frequency of f * conj(g).
inline Complex grid_inner(const CircleFunction& f, const CircleFunction& g) {
  const int N = 4 * std::max(f.band(), g.band()) + 3;
  Complex acc(0.0, 0.0);
  for (int i = 0; i < N; ++i) {
    const double theta = 2.0 * M_PI * i / N;
    acc += f.eval_circle(theta) * std::conj(g.eval_circle(theta));
  }
  return acc / static_cast<double>(N);
}

inline double dist(Complex a, Complex b) { return std::abs(a - b); }

}  // namespace slantlab::testing

#endif  // SLANTLAB_TESTS_TEST_SUPPORT_HPP
