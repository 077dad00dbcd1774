#ifndef SLANTLAB_PRODUCTS_HPP
#define SLANTLAB_PRODUCTS_HPP

#include <map>
#include <optional>
#include <string>

#include "slantlab/characterize.hpp"

namespace slantlab {

/// Result of a product analysis.  Every symbol whose residual is below the
/// decision threshold reproduces the matrix product via slant_compression at
/// the reported order.
struct ProductReport {
  bool member = false;
  int order = 1;
  std::map<std::string, CircleFunction> symbols;
  std::map<std::string, double> residuals;
  std::optional<OperatorMatrix> product;
};

/// U = U_phi^{beta,gamma} U_psi^{alpha,beta} for analytic phi, psi, under
/// W_m^* gamma <= beta and W_k^* beta <= alpha.  Computes the symbol eta by
/// the kernel-sum, projection and Cauchy forms and checks each against the
/// matrix product at order k*m.
ProductReport product_analytic(const CircleFunction& phi,
                               const CircleFunction& psi, ModelSpacePtr ka,
                               ModelSpacePtr kb, ModelSpacePtr kc, int k,
                               int m, double tol = kDefaultTol);

/// Same for conjugate-analytic symbols (phi, psi anti-analytic as given),
/// under alpha <= W_k^* beta and beta <= W_m^* gamma; symbol zeta by the
/// kernel-sum, projection and closed forms.
ProductReport product_antianalytic(const CircleFunction& phi,
                                   const CircleFunction& psi, ModelSpacePtr ka,
                                   ModelSpacePtr kb, ModelSpacePtr kc, int k,
                                   int m, double tol = kDefaultTol);

/// Mixed truncated-Toeplitz x slant products.  phi and psi are analytic;
/// the conjugate cases use their conjugates as symbols.
///   ToeplitzTimesSlant:      A_phi^{beta,gamma} U_psi^{alpha,beta},
///                            gamma <= beta, W_k^* beta <= alpha, order k
///   SlantTimesToeplitz:      U_phi^{beta,gamma} A_psi^{alpha,beta},
///                            W_m^* gamma <= beta <= alpha, order m
///   ConjToeplitzTimesSlant:  A_{conj phi} U_{conj psi},
///                            alpha <= W_k^* beta, beta <= gamma, order k
///   ConjSlantTimesToeplitz:  U_{conj phi} A_{conj psi},
///                            alpha <= beta <= W_m^* gamma, order m
enum class MixedCase {
  ToeplitzTimesSlant,
  SlantTimesToeplitz,
  ConjToeplitzTimesSlant,
  ConjSlantTimesToeplitz,
};

ProductReport product_mixed(MixedCase which, const CircleFunction& phi,
                            const CircleFunction& psi, ModelSpacePtr ka,
                            ModelSpacePtr kb, ModelSpacePtr kc, int order,
                            double tol = kDefaultTol);

/// Membership of AB for A with symbol phi (order m, K_beta -> K_gamma) and
/// B with symbol psi (order k, K_alpha -> K_beta), phi and psi arbitrary
/// band-limited L^2 symbols.  Tests solvability of the rank-structured
/// condition for (upsilon, tau_p) by a minimal-norm fit, cross-checks the
/// verdict against the direct defect membership of AB at order k*m, and on
/// member instances assembles the product symbol xi and verifies it
/// reproduces AB.  Requires k <= dim K_alpha and m <= dim K_beta.
/// Residual keys: "l2_condition", "defect_membership", "xi".
ProductReport product_membership_L2(const CircleFunction& phi,
                                    const CircleFunction& psi,
                                    ModelSpacePtr ka, ModelSpacePtr kb,
                                    ModelSpacePtr kc, int k, int m,
                                    double tol = kDefaultTol);

/// The two specializations of the membership theorem with one factor a
/// truncated Toeplitz operator: a_is_toeplitz runs with m = 1 (A = A_phi),
/// otherwise k = 1 (B = A_psi).
ProductReport product_corollary_special(bool a_is_toeplitz,
                                        const CircleFunction& phi,
                                        const CircleFunction& psi,
                                        ModelSpacePtr ka, ModelSpacePtr kb,
                                        ModelSpacePtr kc, int order,
                                        double tol = kDefaultTol);

}  // namespace slantlab

#endif  // SLANTLAB_PRODUCTS_HPP
