#ifndef SLANTLAB_OPERATORS_HPP
#define SLANTLAB_OPERATORS_HPP

#include "slantlab/model_space.hpp"

namespace slantlab {

/// Matrix of an operator K_domain -> K_codomain relative to the stored
/// orthonormal bases.  The slant order k is an informational tag: class
/// membership depends on it, the matrix alone does not determine it.
struct OperatorMatrix {
  ModelSpacePtr domain;
  ModelSpacePtr codomain;
  int k = 1;
  Eigen::MatrixXcd entries;

  SpaceElement apply(const SpaceElement& f) const;
  OperatorMatrix adjoint() const;
  double frob() const { return entries.norm(); }

  OperatorMatrix& operator+=(const OperatorMatrix& other);
  OperatorMatrix& operator-=(const OperatorMatrix& other);
  OperatorMatrix& operator*=(Complex scalar);
};

OperatorMatrix operator+(OperatorMatrix lhs, const OperatorMatrix& rhs);
OperatorMatrix operator-(OperatorMatrix lhs, const OperatorMatrix& rhs);
OperatorMatrix operator*(Complex scalar, OperatorMatrix m);
/// Composition lhs(rhs(.)); rhs.codomain must be lhs.domain.  The k tag of
/// the result is lhs.k * rhs.k.
OperatorMatrix operator*(const OperatorMatrix& lhs, const OperatorMatrix& rhs);

OperatorMatrix identity_on(ModelSpacePtr space);

/// Compression of the k-th order slant operator with symbol phi:
/// column j = P_codomain W_k(phi * basis_j).  phi must carry at least the
/// spaces' band.
OperatorMatrix slant_compression(const CircleFunction& phi, ModelSpacePtr dom,
                                 ModelSpacePtr cod, int k,
                                 double* discarded = nullptr);

/// Asymmetric truncated Toeplitz operator f -> P_codomain(phi f); the k = 1
/// slant compression.
OperatorMatrix truncated_toeplitz(const CircleFunction& phi, ModelSpacePtr dom,
                                  ModelSpacePtr cod,
                                  double* discarded = nullptr);

/// Matrix of the m-th power of the compressed shift (multiplication by z^m
/// compressed to the space), assembled directly.
OperatorMatrix compressed_shift_pow(ModelSpacePtr space, int m);
OperatorMatrix compressed_shift_pow_adjoint(ModelSpacePtr space, int m);

/// Independent routes for the same operators via the kernel-correction
/// formulas: z^m f minus its conjugate-kernel components times alpha, and
/// the adjoint analogue.  Used to cross-check the direct assembly.
OperatorMatrix shift_pow_via_kernels(ModelSpacePtr space, int m);
OperatorMatrix backshift_pow_via_kernels(ModelSpacePtr space, int m);

/// (u (x) v) f = <f, v> u; matrix u * conj(v)^T.
OperatorMatrix rank_one(const SpaceElement& u, const SpaceElement& v);

}  // namespace slantlab

#endif  // SLANTLAB_OPERATORS_HPP
