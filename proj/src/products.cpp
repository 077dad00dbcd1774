#include "slantlab/products.hpp"

#include <cmath>
#include <stdexcept>

namespace slantlab {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// W_k^* W_k as the composition of the two slant operations (the
// multiple-of-k frequency mask).
CircleFunction freq_mask(const CircleFunction& f, int k) {
  return slant_w_adjoint_banded(slant_w(f, k), k, f.band());
}

void require_analytic(const CircleFunction& f, const char* name) {
  double neg = 0.0;
  for (int n = -f.band(); n < 0; ++n) neg += std::norm(f.coeff(n));
  if (std::sqrt(neg) > 1e-12 * (1.0 + f.norm()))
    throw std::invalid_argument(std::string(name) +
                                ": symbol must be analytic (no negative frequencies)");
}

void require_antianalytic(const CircleFunction& f, const char* name) {
  double pos = 0.0;
  for (int n = 1; n <= f.band(); ++n) pos += std::norm(f.coeff(n));
  if (std::sqrt(pos) > 1e-12 * (1.0 + f.norm()))
    throw std::invalid_argument(std::string(name) +
                                ": symbol must be conjugate-analytic");
}

void require_divides(const FiniteBlaschke& small, const FiniteBlaschke& big,
                     const char* what) {
  if (!divides(small, big))
    throw std::invalid_argument(std::string("divisibility hypothesis failed: ") +
                                what);
}

double reconstruction_residual(const CircleFunction& symbol,
                               const OperatorMatrix& U, int order) {
  return (slant_compression(symbol, U.domain, U.codomain, order) - U).frob();
}

// Formula modes: member once every recovered symbol reproduces the product.
void finalize_member(ProductReport& report, double tol) {
  const double scale = 1.0 + (report.product ? report.product->frob() : 0.0);
  report.member = true;
  for (const auto& [name, res] : report.residuals)
    report.member = report.member && res <= tol * scale;
}

}  // namespace

ProductReport product_analytic(const CircleFunction& phi,
                               const CircleFunction& psi, ModelSpacePtr ka,
                               ModelSpacePtr kb, ModelSpacePtr kc, int k,
                               int m, double tol) {
  if (k < 1 || m < 1)
    throw std::invalid_argument("product_analytic: orders must be >= 1");
  const int band = ka->band();
  const CircleFunction phi_b = phi.band() == band ? phi : rebanded(phi, band);
  const CircleFunction psi_b = psi.band() == band ? psi : rebanded(psi, band);
  require_analytic(phi_b, "product_analytic(phi)");
  require_analytic(psi_b, "product_analytic(psi)");

  const FiniteBlaschke wm_gamma = compose_zk(kc->alpha(), m);
  const FiniteBlaschke wk_beta = compose_zk(kb->alpha(), k);
  require_divides(wm_gamma, kb->alpha(), "W_m^* gamma <= beta");
  require_divides(wk_beta, ka->alpha(), "W_k^* beta <= alpha");

  const OperatorMatrix A = slant_compression(phi_b, kb, kc, m);
  const OperatorMatrix B = slant_compression(psi_b, ka, kb, k);
  const OperatorMatrix U = A * B;
  const int km = k * m;

  ProductReport report;
  report.member = true;
  report.order = km;
  report.product = U;

  // eta = sum_j (1/j!) (W_km^* U k_{0,j}) conj(z)^j
  {
    CircleFunction eta(band);
    for (int j = 0; j < km; ++j) {
      const CircleFunction uf = U.apply(ka->kernel(0.0, j)).fn();
      eta += (1.0 / factorial(j)) *
             shifted(slant_w_adjoint_banded(uf, km, band), -j);
    }
    report.symbols.emplace("eta_kernel_sum", eta);
    report.residuals["eta_kernel_sum"] = reconstruction_residual(eta, U, km);
  }

  // eta = sum_j W_km^* W_km P_{W_km^* gamma}((W_k^* phi) P_{W_k^* beta}(psi z^j)) conj(z)^j
  const CircleFunction wk_phi = slant_w_adjoint_banded(phi_b, k, band);
  const ModelSpacePtr kwb = ModelSpace::build(wk_beta, band);
  {
    const ModelSpacePtr kwg = ModelSpace::build(compose_zk(kc->alpha(), km), band);
    CircleFunction eta(band);
    for (int j = 0; j < km; ++j) {
      const CircleFunction t = kwb->project(shifted(psi_b, j)).fn();
      const CircleFunction u = kwg->project(multiply(wk_phi, t)).fn();
      eta += shifted(freq_mask(u, km), -j);
    }
    report.symbols.emplace("eta_projection_form", eta);
    report.residuals["eta_projection_form"] = reconstruction_residual(eta, U, km);
  }

  // eta = (W_km^* gamma) conj(z)^km conj(P(conj(psi) P_{W_k^* beta}(conj(W_k^* phi) conj(z)^km W_km^* gamma)))
  {
    const CircleFunction wkm_gamma_fn =
        compose_zk(kc->alpha(), km).to_circle_fn(band);
    const CircleFunction inner =
        kwb->project(multiply(conj_fn(wk_phi), shifted(wkm_gamma_fn, -km)))
            .fn();
    const CircleFunction t = riesz_project(multiply(conj_fn(psi_b), inner));
    const CircleFunction eta =
        multiply(wkm_gamma_fn, shifted(conj_fn(t), -km));
    report.symbols.emplace("eta_cauchy_form", eta);
    report.residuals["eta_cauchy_form"] = reconstruction_residual(eta, U, km);
  }

  finalize_member(report, tol);
  return report;
}

ProductReport product_antianalytic(const CircleFunction& phi,
                                   const CircleFunction& psi, ModelSpacePtr ka,
                                   ModelSpacePtr kb, ModelSpacePtr kc, int k,
                                   int m, double tol) {
  if (k < 1 || m < 1)
    throw std::invalid_argument("product_antianalytic: orders must be >= 1");
  const int band = ka->band();
  const CircleFunction phi_b = phi.band() == band ? phi : rebanded(phi, band);
  const CircleFunction psi_b = psi.band() == band ? psi : rebanded(psi, band);
  require_antianalytic(phi_b, "product_antianalytic(phi)");
  require_antianalytic(psi_b, "product_antianalytic(psi)");

  const FiniteBlaschke wk_beta = compose_zk(kb->alpha(), k);
  const FiniteBlaschke wm_gamma = compose_zk(kc->alpha(), m);
  require_divides(ka->alpha(), wk_beta, "alpha <= W_k^* beta");
  require_divides(kb->alpha(), wm_gamma, "beta <= W_m^* gamma");

  const OperatorMatrix A = slant_compression(phi_b, kb, kc, m);
  const OperatorMatrix B = slant_compression(psi_b, ka, kb, k);
  const OperatorMatrix U = A * B;
  const int km = k * m;
  const CircleFunction phi_an = conj_fn(phi_b);
  const CircleFunction psi_an = conj_fn(psi_b);
  const CircleFunction alpha_conj = conj_fn(ka->alpha_fn());

  ProductReport report;
  report.member = true;
  report.order = km;
  report.product = U;

  // zeta = conj(alpha) sum_j (1/j!) (W_km^* U ck_{0,j}) z^{j+1}
  {
    CircleFunction acc(band);
    for (int j = 0; j < km; ++j) {
      const CircleFunction uf = U.apply(ka->conjugate_kernel(0.0, j)).fn();
      acc += (1.0 / factorial(j)) *
             shifted(slant_w_adjoint_banded(uf, km, band), j + 1);
    }
    const CircleFunction zeta = multiply(alpha_conj, acc);
    report.symbols.emplace("zeta_kernel_sum", zeta);
    report.residuals["zeta_kernel_sum"] = reconstruction_residual(zeta, U, km);
  }

  // zeta = conj(alpha) sum_j W_km^* W_km P_{W_km^* gamma}(conj(W_k^* phi)
  //        conj(psi) P_alpha(alpha conj(z)^{j+1})) z^{j+1}
  const CircleFunction wk_phi_an = slant_w_adjoint_banded(phi_an, k, band);
  {
    const ModelSpacePtr kwg = ModelSpace::build(compose_zk(kc->alpha(), km), band);
    CircleFunction acc(band);
    for (int j = 0; j < km; ++j) {
      const CircleFunction pa =
          ka->project(shifted(ka->alpha_fn(), -(j + 1))).fn();
      const CircleFunction t =
          multiply(multiply(conj_fn(wk_phi_an), conj_fn(psi_an)), pa);
      acc += shifted(freq_mask(kwg->project(t).fn(), km), j + 1);
    }
    const CircleFunction zeta = multiply(alpha_conj, acc);
    report.symbols.emplace("zeta_projection_form", zeta);
    report.residuals["zeta_projection_form"] =
        reconstruction_residual(zeta, U, km);
  }

  // zeta = conj(P_alpha(psi (W_k^* phi)))
  {
    const CircleFunction zeta =
        conj_fn(ka->project(multiply(psi_an, wk_phi_an)).fn());
    report.symbols.emplace("zeta_closed_form", zeta);
    report.residuals["zeta_closed_form"] = reconstruction_residual(zeta, U, km);
  }

  finalize_member(report, tol);
  return report;
}

ProductReport product_mixed(MixedCase which, const CircleFunction& phi,
                            const CircleFunction& psi, ModelSpacePtr ka,
                            ModelSpacePtr kb, ModelSpacePtr kc, int order,
                            double tol) {
  if (order < 1) throw std::invalid_argument("product_mixed: order must be >= 1");
  const int band = ka->band();
  const CircleFunction phi_b = phi.band() == band ? phi : rebanded(phi, band);
  const CircleFunction psi_b = psi.band() == band ? psi : rebanded(psi, band);
  require_analytic(phi_b, "product_mixed(phi)");
  require_analytic(psi_b, "product_mixed(psi)");

  ProductReport report;
  report.member = true;
  report.order = order;

  switch (which) {
    case MixedCase::ToeplitzTimesSlant: {
      const int k = order;
      const FiniteBlaschke wk_beta = compose_zk(kb->alpha(), k);
      require_divides(kc->alpha(), kb->alpha(), "gamma <= beta");
      require_divides(wk_beta, ka->alpha(), "W_k^* beta <= alpha");
      const OperatorMatrix A = truncated_toeplitz(phi_b, kb, kc);
      const OperatorMatrix B = slant_compression(psi_b, ka, kb, k);
      const OperatorMatrix U = A * B;
      report.product = U;

      const CircleFunction wk_phi = slant_w_adjoint_banded(phi_b, k, band);
      const ModelSpacePtr kwb = ModelSpace::build(wk_beta, band);
      const ModelSpacePtr kwg =
          ModelSpace::build(compose_zk(kc->alpha(), k), band);
      CircleFunction eta(band);
      for (int j = 0; j < k; ++j) {
        const CircleFunction t = kwb->project(shifted(psi_b, j)).fn();
        eta += shifted(freq_mask(kwg->project(multiply(wk_phi, t)).fn(), k), -j);
      }
      report.symbols.emplace("eta_projection_form", eta);
      report.residuals["eta_projection_form"] = reconstruction_residual(eta, U, k);

      const CircleFunction wk_gamma_fn =
          compose_zk(kc->alpha(), k).to_circle_fn(band);
      const CircleFunction inner =
          kwb->project(multiply(conj_fn(wk_phi), shifted(wk_gamma_fn, -k))).fn();
      const CircleFunction t2 = riesz_project(multiply(conj_fn(psi_b), inner));
      const CircleFunction eta_c = multiply(wk_gamma_fn, shifted(conj_fn(t2), -k));
      report.symbols.emplace("eta_cauchy_form", eta_c);
      report.residuals["eta_cauchy_form"] = reconstruction_residual(eta_c, U, k);
      break;
    }
    case MixedCase::SlantTimesToeplitz: {
      const int m = order;
      const FiniteBlaschke wm_gamma = compose_zk(kc->alpha(), m);
      require_divides(wm_gamma, kb->alpha(), "W_m^* gamma <= beta");
      require_divides(kb->alpha(), ka->alpha(), "beta <= alpha");
      const OperatorMatrix A = slant_compression(phi_b, kb, kc, m);
      const OperatorMatrix B = truncated_toeplitz(psi_b, ka, kb);
      const OperatorMatrix U = A * B;
      report.product = U;

      const ModelSpacePtr kwg = ModelSpace::build(wm_gamma, band);
      CircleFunction eta(band);
      for (int j = 0; j < m; ++j) {
        const CircleFunction t = kb->project(shifted(psi_b, j)).fn();
        eta += shifted(freq_mask(kwg->project(multiply(phi_b, t)).fn(), m), -j);
      }
      report.symbols.emplace("eta_projection_form", eta);
      report.residuals["eta_projection_form"] = reconstruction_residual(eta, U, m);

      const CircleFunction wm_gamma_fn = wm_gamma.to_circle_fn(band);
      const CircleFunction inner =
          kb->project(multiply(conj_fn(phi_b), shifted(wm_gamma_fn, -m))).fn();
      const CircleFunction t2 = riesz_project(multiply(conj_fn(psi_b), inner));
      const CircleFunction eta_c = multiply(wm_gamma_fn, shifted(conj_fn(t2), -m));
      report.symbols.emplace("eta_cauchy_form", eta_c);
      report.residuals["eta_cauchy_form"] = reconstruction_residual(eta_c, U, m);
      break;
    }
    case MixedCase::ConjToeplitzTimesSlant: {
      const int k = order;
      const FiniteBlaschke wk_beta = compose_zk(kb->alpha(), k);
      require_divides(ka->alpha(), wk_beta, "alpha <= W_k^* beta");
      require_divides(kb->alpha(), kc->alpha(), "beta <= gamma");
      const OperatorMatrix A = truncated_toeplitz(conj_fn(phi_b), kb, kc);
      const OperatorMatrix B = slant_compression(conj_fn(psi_b), ka, kb, k);
      const OperatorMatrix U = A * B;
      report.product = U;

      const CircleFunction alpha_conj = conj_fn(ka->alpha_fn());
      const CircleFunction wk_phi = slant_w_adjoint_banded(phi_b, k, band);
      const ModelSpacePtr kwg =
          ModelSpace::build(compose_zk(kc->alpha(), k), band);
      CircleFunction acc(band);
      for (int j = 0; j < k; ++j) {
        const CircleFunction pa =
            ka->project(shifted(ka->alpha_fn(), -(j + 1))).fn();
        const CircleFunction t =
            multiply(multiply(conj_fn(wk_phi), conj_fn(psi_b)), pa);
        acc += shifted(freq_mask(kwg->project(t).fn(), k), j + 1);
      }
      const CircleFunction zeta = multiply(alpha_conj, acc);
      report.symbols.emplace("zeta_projection_form", zeta);
      report.residuals["zeta_projection_form"] =
          reconstruction_residual(zeta, U, k);

      const CircleFunction zeta_c =
          conj_fn(ka->project(multiply(psi_b, wk_phi)).fn());
      report.symbols.emplace("zeta_closed_form", zeta_c);
      report.residuals["zeta_closed_form"] = reconstruction_residual(zeta_c, U, k);
      break;
    }
    case MixedCase::ConjSlantTimesToeplitz: {
      const int m = order;
      const FiniteBlaschke wm_gamma = compose_zk(kc->alpha(), m);
      require_divides(ka->alpha(), kb->alpha(), "alpha <= beta");
      require_divides(kb->alpha(), wm_gamma, "beta <= W_m^* gamma");
      const OperatorMatrix A = slant_compression(conj_fn(phi_b), kb, kc, m);
      const OperatorMatrix B = truncated_toeplitz(conj_fn(psi_b), ka, kb);
      const OperatorMatrix U = A * B;
      report.product = U;

      const CircleFunction alpha_conj = conj_fn(ka->alpha_fn());
      const ModelSpacePtr kwg = ModelSpace::build(wm_gamma, band);
      CircleFunction acc(band);
      for (int j = 0; j < m; ++j) {
        const CircleFunction pa =
            ka->project(shifted(ka->alpha_fn(), -(j + 1))).fn();
        const CircleFunction t =
            multiply(multiply(conj_fn(phi_b), conj_fn(psi_b)), pa);
        acc += shifted(freq_mask(kwg->project(t).fn(), m), j + 1);
      }
      const CircleFunction zeta = multiply(alpha_conj, acc);
      report.symbols.emplace("zeta_projection_form", zeta);
      report.residuals["zeta_projection_form"] =
          reconstruction_residual(zeta, U, m);

      const CircleFunction zeta_c =
          conj_fn(ka->project(multiply(psi_b, phi_b)).fn());
      report.symbols.emplace("zeta_closed_form", zeta_c);
      report.residuals["zeta_closed_form"] = reconstruction_residual(zeta_c, U, m);
      break;
    }
  }
  finalize_member(report, tol);
  return report;
}

ProductReport product_membership_L2(const CircleFunction& phi,
                                    const CircleFunction& psi,
                                    ModelSpacePtr ka, ModelSpacePtr kb,
                                    ModelSpacePtr kc, int k, int m,
                                    double tol) {
  if (k < 1 || m < 1)
    throw std::invalid_argument("product_membership_L2: orders must be >= 1");
  if (k > ka->dim())
    throw std::invalid_argument("product_membership_L2: requires k <= dim K_alpha");
  if (m > kb->dim())
    throw std::invalid_argument("product_membership_L2: requires m <= dim K_beta");
  const int band = ka->band();
  const int km = k * m;
  const CircleFunction phi_b = phi.band() == band ? phi : rebanded(phi, band);
  const CircleFunction psi_b = psi.band() == band ? psi : rebanded(psi, band);

  const CanonicalSymbol canA = canonical_symbol(phi_b, kb, kc, m);
  const CanonicalSymbol canB = canonical_symbol(psi_b, ka, kb, k);
  const CircleFunction phi_plus = shifted(canA.chi_plus.fn(), 1);
  const CircleFunction psi_plus = shifted(canB.chi_plus.fn(), 1);
  const SpaceElement phi_minus = canA.phi_minus;  // in K_beta
  const SpaceElement psi_minus = canB.phi_minus;  // in K_alpha

  const OperatorMatrix A = slant_compression(canA.reduced_symbol(), kb, kc, m);
  const OperatorMatrix B = slant_compression(canB.reduced_symbol(), ka, kb, k);
  const OperatorMatrix AB = A * B;
  const OperatorMatrix Bstar = B.adjoint();

  ProductReport report;
  report.order = km;
  report.product = AB;

  const OperatorMatrix S_gamma = compressed_shift_pow(kc, 1);
  std::vector<OperatorMatrix> S_beta_pow;  // S_beta^n, n = 0..m
  S_beta_pow.push_back(identity_on(kb));
  for (int n = 1; n <= m; ++n)
    S_beta_pow.push_back(compressed_shift_pow(kb, n));
  auto s_alpha_pow = [&](int p) {
    return p == 0 ? identity_on(ka) : compressed_shift_pow(ka, p);
  };

  std::vector<SpaceElement> kern_b, ckern_b;
  for (int j = 0; j < m; ++j) {
    kern_b.push_back(kb->kernel(0.0, j));
    ckern_b.push_back(kb->conjugate_kernel(0.0, j));
  }
  const SpaceElement k0_beta = kern_b[0];
  const SpaceElement k0_gamma = kc->kernel(0.0, 0);

  // F_j = S_gamma P_gamma W_m(conj(z)^{m-j} phi_+)
  std::vector<SpaceElement> F;
  for (int j = 0; j < m; ++j)
    F.push_back(S_gamma.apply(
        kc->project(slant_w(shifted(phi_plus, -(m - j)), m))));

  // G_{n,l} = S_beta^{n+1} P_beta W_k(conj(z)^{k-l} psi_+)
  std::vector<std::vector<SpaceElement>> G(m);
  for (int n = 0; n < m; ++n)
    for (int l = 0; l < k; ++l)
      G[n].push_back(S_beta_pow[n + 1].apply(
          kb->project(slant_w(shifted(psi_plus, -(k - l)), k))));

  std::vector<SpaceElement> skn_psi_minus;  // S_alpha^{kn} psi_-
  for (int n = 0; n < m; ++n)
    skn_psi_minus.push_back(s_alpha_pow(k * n).apply(psi_minus));
  const OperatorMatrix S_alpha_km = s_alpha_pow(km);

  // Left-hand side of the solvability condition.
  OperatorMatrix lhs{ka, kc, km, Eigen::MatrixXcd::Zero(kc->dim(), ka->dim())};
  for (int n = 0; n < m; ++n)
    lhs += (1.0 / factorial(n)) *
           rank_one(A.apply(kern_b[n]), skn_psi_minus[n]);
  for (int j = 0; j < m; ++j) {
    const double w = 1.0 / factorial(j);
    lhs -= Complex(w * w, 0.0) *
           rank_one(S_gamma.apply(A.apply(ckern_b[j])),
                    S_alpha_km.apply(Bstar.apply(ckern_b[j])));
  }
  for (int j = 0; j < m; ++j) {
    SpaceElement v = Bstar.apply(kern_b[j]);
    // the scalar moves into the conjugate-linear slot of the rank-one term
    for (int n = 0; n < m; ++n)
      v -= std::conj(inner_product(S_beta_pow[n].apply(k0_beta), kern_b[j])) *
           skn_psi_minus[n];
    lhs += (1.0 / factorial(j)) * rank_one(F[j], v);
  }

  // Fit lhs to k_0^gamma (x) upsilon + sum_p tau_p (x) k_{0,p}^alpha.
  std::vector<SpaceElement> kern_a;
  for (int p = 0; p < km; ++p) kern_a.push_back(ka->kernel(0.0, p));
  std::vector<Eigen::VectorXcd> left{k0_gamma.coords};
  std::vector<Eigen::VectorXcd> right;
  for (int p = 0; p < km; ++p) right.push_back(kern_a[p].coords);
  const RankModelFit fit = fit_rank_model(lhs.entries, left, right);

  report.residuals["l2_condition"] = fit.residual;
  const bool member_theorem =
      fit.residual <= tol * (1.0 + lhs.frob() + AB.frob());
  report.member = member_theorem;

  const DefectDecomposition d = membership_test(AB, km, DefectVariant::B, tol);
  report.residuals["defect_membership"] = d.residual;

  if (!member_theorem) return report;

  const SpaceElement upsilon = ka->element(fit.xs[0]);
  std::vector<SpaceElement> tau;
  for (int p = 0; p < km; ++p) tau.push_back(kc->element(fit.ys[p]));

  // xi = conj(upsilon) + conj(B^* phi_-)
  //      - sum_n <S_beta^n k_0, phi_-> conj(S_alpha^{kn} psi_-)
  //      - sum_{n,l} (1/l!) <G_{n,l}, phi_-> conj(S_alpha^{kn} k_{0,l})
  //      + sum_p p! (W_km^* tau_p) conj(z)^p
  //      + sum_p (W_km^* A G_{n_p,l_p}) conj(z)^p
  //      - sum_p (W_km^* sum_j (1/j!) <G_{n_p,l_p}, k_{0,j}^beta> F_j) conj(z)^p
  CircleFunction xi = conj_fn(upsilon.fn());
  xi += conj_fn(Bstar.apply(phi_minus).fn());
  for (int n = 0; n < m; ++n)
    xi -= inner_product(S_beta_pow[n].apply(k0_beta), phi_minus) *
          conj_fn(skn_psi_minus[n].fn());
  for (int n = 0; n < m; ++n)
    for (int l = 0; l < k; ++l) {
      const Complex c =
          inner_product(G[n][l], phi_minus) / factorial(l);
      xi -= c * conj_fn(s_alpha_pow(k * n).apply(ka->kernel(0.0, l)).fn());
    }
  for (int p = 0; p < km; ++p) {
    xi += factorial(p) *
          shifted(slant_w_adjoint_banded(tau[p].fn(), km, band), -p);
    const int np = p / k;
    const int lp = p % k;
    xi += shifted(
        slant_w_adjoint_banded(A.apply(G[np][lp]).fn(), km, band), -p);
    SpaceElement corr = kc->zero_element();
    for (int j = 0; j < m; ++j)
      corr += (inner_product(G[np][lp], kern_b[j]) / factorial(j)) * F[j];
    xi -= shifted(slant_w_adjoint_banded(corr.fn(), km, band), -p);
  }

  report.symbols.emplace("xi", xi);
  report.residuals["xi"] = reconstruction_residual(xi, AB, km);
  return report;
}

ProductReport product_corollary_special(bool a_is_toeplitz,
                                        const CircleFunction& phi,
                                        const CircleFunction& psi,
                                        ModelSpacePtr ka, ModelSpacePtr kb,
                                        ModelSpacePtr kc, int order,
                                        double tol) {
  if (a_is_toeplitz)
    return product_membership_L2(phi, psi, ka, kb, kc, order, 1, tol);
  return product_membership_L2(phi, psi, ka, kb, kc, 1, order, tol);
}

}  // namespace slantlab
