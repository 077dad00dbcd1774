#include "slantlab/operators.hpp"

#include <stdexcept>

namespace slantlab {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

SpaceElement OperatorMatrix::apply(const SpaceElement& f) const {
  if (f.space != domain)
    throw std::invalid_argument("OperatorMatrix::apply: element not in domain");
  return SpaceElement{codomain, entries * f.coords};
}

OperatorMatrix OperatorMatrix::adjoint() const {
  return OperatorMatrix{codomain, domain, k, entries.adjoint()};
}

OperatorMatrix& OperatorMatrix::operator+=(const OperatorMatrix& other) {
  if (domain != other.domain || codomain != other.codomain)
    throw std::invalid_argument("OperatorMatrix: space mismatch in addition");
  entries += other.entries;
  return *this;
}

OperatorMatrix& OperatorMatrix::operator-=(const OperatorMatrix& other) {
  if (domain != other.domain || codomain != other.codomain)
    throw std::invalid_argument("OperatorMatrix: space mismatch in subtraction");
  entries -= other.entries;
  return *this;
}

OperatorMatrix& OperatorMatrix::operator*=(Complex scalar) {
  entries *= scalar;
  return *this;
}

OperatorMatrix operator+(OperatorMatrix lhs, const OperatorMatrix& rhs) {
  lhs += rhs;
  return lhs;
}

OperatorMatrix operator-(OperatorMatrix lhs, const OperatorMatrix& rhs) {
  lhs -= rhs;
  return lhs;
}

OperatorMatrix operator*(Complex scalar, OperatorMatrix m) {
  m *= scalar;
  return m;
}

OperatorMatrix operator*(const OperatorMatrix& lhs, const OperatorMatrix& rhs) {
  if (lhs.domain != rhs.codomain)
    throw std::invalid_argument("OperatorMatrix: composition space mismatch");
  return OperatorMatrix{rhs.domain, lhs.codomain, lhs.k * rhs.k,
                        lhs.entries * rhs.entries};
}

OperatorMatrix identity_on(ModelSpacePtr space) {
  const int n = space->dim();
  return OperatorMatrix{space, space, 1, Eigen::MatrixXcd::Identity(n, n)};
}

OperatorMatrix slant_compression(const CircleFunction& phi, ModelSpacePtr dom,
                                 ModelSpacePtr cod, int k, double* discarded) {
  if (k < 1) throw std::invalid_argument("slant_compression: k must be >= 1");
  if (dom->band() != cod->band())
    throw std::invalid_argument("slant_compression: spaces must share a band");
  const int band = dom->band();
  if (phi.band() < band)
    throw std::invalid_argument("slant_compression: symbol band too small");
  // Content of phi beyond the space band cannot reach the compression:
  // basis functions live on [0, band] and the projection only reads
  // frequencies in [0, band], so the rebanding below is exact.
  const CircleFunction phi_b =
      phi.band() == band ? phi : rebanded(phi, band);

  OperatorMatrix U{dom, cod, k, Eigen::MatrixXcd(cod->dim(), dom->dim())};
  for (int j = 0; j < dom->dim(); ++j) {
    const CircleFunction fe = multiply(phi_b, dom->basis_fn(j), discarded);
    U.entries.col(j) = cod->project(slant_w(fe, k)).coords;
  }
  return U;
}

OperatorMatrix truncated_toeplitz(const CircleFunction& phi, ModelSpacePtr dom,
                                  ModelSpacePtr cod, double* discarded) {
  return slant_compression(phi, dom, cod, 1, discarded);
}

OperatorMatrix compressed_shift_pow(ModelSpacePtr space, int m) {
  if (m < 1) throw std::invalid_argument("compressed_shift_pow: m must be >= 1");
  return truncated_toeplitz(monomial(space->band(), m), space, space);
}

OperatorMatrix compressed_shift_pow_adjoint(ModelSpacePtr space, int m) {
  return compressed_shift_pow(space, m).adjoint();
}

OperatorMatrix shift_pow_via_kernels(ModelSpacePtr space, int m) {
  if (m < 1) throw std::invalid_argument("shift_pow_via_kernels: m must be >= 1");
  const int dim = space->dim();
  OperatorMatrix S{space, space, 1, Eigen::MatrixXcd(dim, dim)};
  std::vector<SpaceElement> ck;
  for (int j = 0; j < m; ++j) ck.push_back(space->conjugate_kernel(0.0, j));
  for (int c = 0; c < dim; ++c) {
    const SpaceElement f = space->element(Eigen::VectorXcd::Unit(dim, c));
    CircleFunction g = shifted(space->basis_fn(c), m);
    for (int j = 0; j < m; ++j) {
      const Complex w = inner_product(f, ck[j]) / factorial(j);
      g -= w * shifted(space->alpha_fn(), m - 1 - j);
    }
    S.entries.col(c) = space->project(g).coords;
  }
  return S;
}

OperatorMatrix backshift_pow_via_kernels(ModelSpacePtr space, int m) {
  if (m < 1)
    throw std::invalid_argument("backshift_pow_via_kernels: m must be >= 1");
  const int dim = space->dim();
  OperatorMatrix S{space, space, 1, Eigen::MatrixXcd(dim, dim)};
  std::vector<SpaceElement> kk;
  for (int j = 0; j < m; ++j) kk.push_back(space->kernel(0.0, j));
  for (int c = 0; c < dim; ++c) {
    const SpaceElement f = space->element(Eigen::VectorXcd::Unit(dim, c));
    CircleFunction g = shifted(space->basis_fn(c), -m);
    for (int j = 0; j < m; ++j) {
      const Complex w = inner_product(f, kk[j]) / factorial(j);
      g -= w * monomial(space->band(), -(m - j));
    }
    S.entries.col(c) = space->project(g).coords;
  }
  return S;
}

OperatorMatrix rank_one(const SpaceElement& u, const SpaceElement& v) {
  return OperatorMatrix{v.space, u.space, 1,
                        u.coords * v.coords.adjoint()};
}

}  // namespace slantlab
