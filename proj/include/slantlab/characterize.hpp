#ifndef SLANTLAB_CHARACTERIZE_HPP
#define SLANTLAB_CHARACTERIZE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "slantlab/operators.hpp"

namespace slantlab {

/// Which defect equation a decomposition refers to:
///   A:  U - S_cod^* U S_dom^k  =  ck_0(cod) (x) chi + sum psi_j (x) ck_{0,j}(dom)
///   B:  U - S_cod U (S_dom^*)^k =  k_0(cod) (x) chi + sum psi_j (x) k_{0,j}(dom)
/// (ck denotes conjugate kernels.)
enum class DefectVariant { A, B };

/// Rank-structured fit of a defect operator.  residual is the Frobenius norm
/// of the part of the defect the model cannot reproduce; the stored
/// (chi, psis) is the minimal-norm witness.
struct DefectDecomposition {
  DefectVariant variant = DefectVariant::A;
  int k = 1;
  SpaceElement chi;                // in the domain space
  std::vector<SpaceElement> psis;  // k elements of the codomain space
  double residual = 0.0;
  bool member = false;             // residual <= membership_threshold(U, tol)
};

/// Scale-free membership threshold used throughout: tol * (1 + |U|_F).
double membership_threshold(const OperatorMatrix& U, double tol);

/// Residual of the projected-defect criterion |P_{N_perp} T P_{M_perp}|_F
/// with T = U - S_cod^* U S_dom^k, M = span of the first k conjugate kernels
/// of the domain, N = the conjugate kernel line of the codomain.
double shift_invariance_residual(const OperatorMatrix& U, int k);
bool shift_invariance_test(const OperatorMatrix& U, int k,
                           double tol = kDefaultTol);

/// Minimal-norm least-squares fit of the defect to the rank-structured
/// model; member iff residual <= membership_threshold(U, tol).
DefectDecomposition membership_test(const OperatorMatrix& U, int k,
                                    DefectVariant variant,
                                    double tol = kDefaultTol);
bool defect_is_member(const DefectDecomposition& d, const OperatorMatrix& U,
                      double tol = kDefaultTol);

/// Symbol recovery from a defect decomposition:
///   variant B:  phi = conj(chi) + sum_j (W_k^* psi_j) j! conj(z)^j
///   variant A:  phi = (W_k^* beta) conj(z)^k conj(chi)
///               + conj(alpha) sum_j (W_k^* psi_j) j! z^{j+1}.
/// Throws when the decomposition's residual exceeds the threshold.
CircleFunction symbol_from_defect(const DefectDecomposition& d,
                                  const OperatorMatrix& U,
                                  double tol = kDefaultTol);

/// Orthogonal pieces of a symbol that matter for the compression:
/// phi = conj(alpha h) + conj(phi_minus) + (W_k^* beta) z g + z chi_plus with
/// phi_minus in K_alpha and chi_plus in K_{W_k^* beta}; only
/// conj(phi_minus) + z chi_plus acts.  parts[j] in K_beta recover chi_plus as
/// sum_j z^{j-1} W_k^* parts[j].
struct CanonicalSymbol {
  SpaceElement phi_minus;
  SpaceElement chi_plus;
  std::vector<SpaceElement> parts;
  ModelSpacePtr wk_beta_space;

  /// Minimal-norm representative of the same operator class.  The
  /// projection pair above can pick up components of the zero-symbol space
  /// (for k >= 2 the space conj(z)^{k-1}(W_k^* beta)H^2 meets
  /// conj(K_alpha) + z K_{W_k^* beta} nontrivially); the minimal pair
  /// quotients those out and vanishes exactly when the operator does.
  /// Filled when canonical_symbol is asked for it.
  std::optional<SpaceElement> phi_minus_min;
  std::optional<SpaceElement> chi_plus_min;

  /// conj(phi_minus) + z * chi_plus as a circle function.
  CircleFunction reduced_symbol() const;
  double minimal_parts_norm() const;
};

CanonicalSymbol canonical_symbol(const CircleFunction& phi, ModelSpacePtr dom,
                                 ModelSpacePtr cod, int k,
                                 bool minimal_rep = false);

struct ZeroTestReport {
  bool zero = false;
  double parts_residual = 0.0;   // norm of the minimal-norm reduced parts
  double matrix_residual = 0.0;  // |U_phi|_F
};

/// True iff the canonical parts of phi vanish, i.e. phi lies in
/// conj(alpha H^2) + conj(z)^{k-1} (W_k^* beta) H^2.  Requires
/// k <= dim K_alpha.
ZeroTestReport zero_test_report(const CircleFunction& phi, ModelSpacePtr dom,
                                ModelSpacePtr cod, int k,
                                double tol = kDefaultTol);
bool zero_test(const CircleFunction& phi, ModelSpacePtr dom, ModelSpacePtr cod,
               int k, double tol = kDefaultTol);

enum class Direction { Shift, Backshift };

/// Spanning symbols for the operators intertwined with the compressed
/// shifts:  S_cod U = U S_dom^k  (Shift) has symbols
/// conj(z)^{k-1} (W_k^* beta / g) K_g, and S_cod^* U = U (S_dom^*)^k
/// (Backshift) has symbols conj(alpha) z K_g, where g = gcd(alpha, W_k^* beta).
/// Empty when g is constant.  Requires k <= dim K_alpha.
std::vector<CircleFunction> intertwine_coset_basis(ModelSpacePtr dom,
                                                   ModelSpacePtr cod, int k,
                                                   Direction direction);

double intertwine_residual(const OperatorMatrix& U, int k, Direction direction);
bool intertwine_test(const OperatorMatrix& U, int k, Direction direction,
                     double tol = kDefaultTol);

/// Frobenius residuals of the two commutator identities
///   (a) S_cod U_phi - U_phi S_dom^k  =  sum_j (1/j!) P_cod W_k(alpha phi
///       z^{k-1-j}) (x) ck_{0,j} - k_0(cod) (x) P_dom(conj(z)^k conj(phi))
///   (b) S_cod^* U_phi - U_phi (S_dom^*)^k = sum_j (1/j!) P_cod W_k(phi
///       conj(z)^{k-j}) (x) k_{0,j} - ck_0(cod) (x) P_dom(conj(phi) W_k^* beta)
/// with both sides assembled independently.
std::pair<double, double> commutator_formula_check(const CircleFunction& phi,
                                                   ModelSpacePtr dom,
                                                   ModelSpacePtr cod, int k);

/// Internal workhorse shared with the products module: minimal-norm fit of
/// D to  sum_s left_known[s] (x) x_s + sum_t y_t (x) right_known[t].
struct RankModelFit {
  std::vector<Eigen::VectorXcd> xs;
  std::vector<Eigen::VectorXcd> ys;
  double residual = 0.0;
  Eigen::MatrixXcd system;       // the LS system matrix (for null-space probes)
  Eigen::VectorXcd solution;     // stacked minimal-norm solution
};
RankModelFit fit_rank_model(const Eigen::MatrixXcd& D,
                            const std::vector<Eigen::VectorXcd>& left_known,
                            const std::vector<Eigen::VectorXcd>& right_known);

}  // namespace slantlab

#endif  // SLANTLAB_CHARACTERIZE_HPP
