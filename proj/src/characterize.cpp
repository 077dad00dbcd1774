#include "slantlab/characterize.hpp"

#include <cmath>
#include <stdexcept>

namespace slantlab {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Orthonormal basis of the span of the given coordinate vectors
// (rank-revealing; the vectors may be linearly dependent).
Eigen::MatrixXcd orthonormal_span(const std::vector<Eigen::VectorXcd>& vecs,
                                  int dim) {
  Eigen::MatrixXcd V(dim, static_cast<int>(vecs.size()));
  for (int j = 0; j < V.cols(); ++j) V.col(j) = vecs[j];
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(V, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double cutoff = sv.size() > 0 ? sv(0) * 1e-12 : 0.0;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  return svd.matrixU().leftCols(rank);
}

OperatorMatrix defect_operator(const OperatorMatrix& U, int k,
                               DefectVariant variant) {
  const OperatorMatrix Sk = compressed_shift_pow(U.domain, k);
  const OperatorMatrix Sc = compressed_shift_pow(U.codomain, 1);
  if (variant == DefectVariant::A) return U - Sc.adjoint() * U * Sk;
  return U - Sc * U * Sk.adjoint();
}

}  // namespace

double membership_threshold(const OperatorMatrix& U, double tol) {
  return tol * (1.0 + U.frob());
}

RankModelFit fit_rank_model(const Eigen::MatrixXcd& D,
                            const std::vector<Eigen::VectorXcd>& left_known,
                            const std::vector<Eigen::VectorXcd>& right_known) {
  const int rows = static_cast<int>(D.rows());
  const int cols = static_cast<int>(D.cols());
  const int S = static_cast<int>(left_known.size());
  const int T = static_cast<int>(right_known.size());
  const int unknowns = S * cols + T * rows;

  // Unknown stack: [conj(x_0); ...; conj(x_{S-1}); y_0; ...; y_{T-1}].
  // Column c of the model: sum_s conj(x_s(c)) u_s + sum_t conj(v_t(c)) y_t.
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(rows * cols, unknowns);
  Eigen::VectorXcd b(rows * cols);
  for (int c = 0; c < cols; ++c) {
    b.segment(c * rows, rows) = D.col(c);
    for (int s = 0; s < S; ++s)
      A.block(c * rows, s * cols + c, rows, 1) = left_known[s];
    for (int t = 0; t < T; ++t)
      A.block(c * rows, S * cols + t * rows, rows, rows)
          .diagonal()
          .setConstant(std::conj(right_known[t](c)));
  }

  RankModelFit fit;
  fit.system = A;
  if (unknowns == 0) {
    fit.residual = b.norm();
    fit.solution.resize(0);
    return fit;
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
      A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(1e-12);
  fit.solution = svd.solve(b);
  fit.residual = (A * fit.solution - b).norm();
  for (int s = 0; s < S; ++s)
    fit.xs.push_back(fit.solution.segment(s * cols, cols).conjugate());
  for (int t = 0; t < T; ++t)
    fit.ys.push_back(fit.solution.segment(S * cols + t * rows, rows));
  return fit;
}

double shift_invariance_residual(const OperatorMatrix& U, int k) {
  if (k < 1) throw std::invalid_argument("shift_invariance_residual: k >= 1");
  const OperatorMatrix T = defect_operator(U, k, DefectVariant::A);

  std::vector<Eigen::VectorXcd> m_vecs;
  for (int j = 0; j < k; ++j)
    m_vecs.push_back(U.domain->conjugate_kernel(0.0, j).coords);
  const Eigen::MatrixXcd Qm = orthonormal_span(m_vecs, U.domain->dim());
  std::vector<Eigen::VectorXcd> n_vecs{U.codomain->conjugate_kernel(0.0, 0).coords};
  const Eigen::MatrixXcd Qn = orthonormal_span(n_vecs, U.codomain->dim());

  const Eigen::MatrixXcd Pm_perp =
      Eigen::MatrixXcd::Identity(U.domain->dim(), U.domain->dim()) -
      Qm * Qm.adjoint();
  const Eigen::MatrixXcd Pn_perp =
      Eigen::MatrixXcd::Identity(U.codomain->dim(), U.codomain->dim()) -
      Qn * Qn.adjoint();
  return (Pn_perp * T.entries * Pm_perp).norm();
}

bool shift_invariance_test(const OperatorMatrix& U, int k, double tol) {
  return shift_invariance_residual(U, k) <= membership_threshold(U, tol);
}

DefectDecomposition membership_test(const OperatorMatrix& U, int k,
                                    DefectVariant variant, double tol) {
  if (k < 1) throw std::invalid_argument("membership_test: k must be >= 1");
  const OperatorMatrix D = defect_operator(U, k, variant);

  std::vector<Eigen::VectorXcd> left, right;
  if (variant == DefectVariant::A) {
    left.push_back(U.codomain->conjugate_kernel(0.0, 0).coords);
    for (int j = 0; j < k; ++j)
      right.push_back(U.domain->conjugate_kernel(0.0, j).coords);
  } else {
    left.push_back(U.codomain->kernel(0.0, 0).coords);
    for (int j = 0; j < k; ++j)
      right.push_back(U.domain->kernel(0.0, j).coords);
  }
  const RankModelFit fit = fit_rank_model(D.entries, left, right);

  DefectDecomposition d;
  d.variant = variant;
  d.k = k;
  d.chi = U.domain->element(fit.xs[0]);
  for (int j = 0; j < k; ++j) d.psis.push_back(U.codomain->element(fit.ys[j]));
  d.residual = fit.residual;
  d.member = d.residual <= membership_threshold(U, tol);
  return d;
}

bool defect_is_member(const DefectDecomposition& d, const OperatorMatrix& U,
                      double tol) {
  return d.residual <= membership_threshold(U, tol);
}

CircleFunction symbol_from_defect(const DefectDecomposition& d,
                                  const OperatorMatrix& U, double tol) {
  if (!defect_is_member(d, U, tol))
    throw std::runtime_error(
        "symbol_from_defect: defect residual too large, operator is not a member");
  const ModelSpacePtr dom = d.chi.space;
  const ModelSpacePtr cod = d.psis.front().space;
  const int band = dom->band();
  const int k = d.k;

  CircleFunction phi(band);
  if (d.variant == DefectVariant::B) {
    phi += conj_fn(d.chi.fn());
    for (int j = 0; j < k; ++j) {
      const CircleFunction w =
          slant_w_adjoint_banded(d.psis[j].fn(), k, band);
      phi += shifted(factorial(j) * w, -j);
    }
  } else {
    const CircleFunction wk_beta =
        compose_zk(cod->alpha(), k).to_circle_fn(band);
    phi += multiply(wk_beta, shifted(conj_fn(d.chi.fn()), -k));
    CircleFunction sum(band);
    for (int j = 0; j < k; ++j) {
      const CircleFunction w =
          slant_w_adjoint_banded(d.psis[j].fn(), k, band);
      sum += shifted(factorial(j) * w, j + 1);
    }
    phi += multiply(conj_fn(dom->alpha_fn()), sum);
  }
  return phi;
}

CircleFunction CanonicalSymbol::reduced_symbol() const {
  return conj_fn(phi_minus.fn()) + shifted(chi_plus.fn(), 1);
}

double CanonicalSymbol::minimal_parts_norm() const {
  if (!phi_minus_min || !chi_plus_min)
    throw std::logic_error("CanonicalSymbol: minimal representative not computed");
  return std::hypot(phi_minus_min->norm(), chi_plus_min->norm());
}

namespace {

// Matrix of the conjugate-linear parametrization
// (conj coords of phi_minus, coords of chi) -> vec(U_{conj(phi_minus)+z chi}).
Eigen::MatrixXcd reduced_symbol_system(ModelSpacePtr dom, ModelSpacePtr cod,
                                       int k, const ModelSpacePtr& kwb) {
  const int rows = cod->dim() * dom->dim();
  Eigen::MatrixXcd M(rows, dom->dim() + kwb->dim());
  int col = 0;
  for (int i = 0; i < dom->dim(); ++i, ++col) {
    const OperatorMatrix U =
        slant_compression(conj_fn(dom->basis_fn(i)), dom, cod, k);
    M.col(col) = Eigen::Map<const Eigen::VectorXcd>(U.entries.data(), rows);
  }
  for (int j = 0; j < kwb->dim(); ++j, ++col) {
    const OperatorMatrix U =
        slant_compression(shifted(kwb->basis_fn(j), 1), dom, cod, k);
    M.col(col) = Eigen::Map<const Eigen::VectorXcd>(U.entries.data(), rows);
  }
  return M;
}

}  // namespace

CanonicalSymbol canonical_symbol(const CircleFunction& phi, ModelSpacePtr dom,
                                 ModelSpacePtr cod, int k, bool minimal_rep) {
  if (k < 1) throw std::invalid_argument("canonical_symbol: k must be >= 1");
  const int band = dom->band();
  if (phi.band() != band)
    throw std::invalid_argument("canonical_symbol: band mismatch");

  CircleFunction nonpos(band), pos(band);
  for (int n = -band; n <= 0; ++n) nonpos.set_coeff(n, phi.coeff(n));
  for (int n = 1; n <= band; ++n) pos.set_coeff(n, phi.coeff(n));

  CanonicalSymbol cs;
  cs.phi_minus = dom->project(conj_fn(nonpos));
  cs.wk_beta_space = ModelSpace::build(compose_zk(cod->alpha(), k), band);
  cs.chi_plus = cs.wk_beta_space->project(shifted(pos, -1));
  const CircleFunction chi_fn = cs.chi_plus.fn();
  for (int j = 1; j <= k; ++j)
    cs.parts.push_back(cod->project(slant_w(shifted(chi_fn, -(j - 1)), k)));

  if (minimal_rep) {
    const OperatorMatrix U = slant_compression(phi, dom, cod, k);
    const Eigen::MatrixXcd M =
        reduced_symbol_system(dom, cod, k, cs.wk_beta_space);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
        M, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(1e-10);
    const Eigen::VectorXcd x = svd.solve(Eigen::Map<const Eigen::VectorXcd>(
        U.entries.data(), U.entries.size()));
    cs.phi_minus_min = dom->element(x.head(dom->dim()).conjugate());
    cs.chi_plus_min =
        cs.wk_beta_space->element(x.tail(cs.wk_beta_space->dim()));
  }
  return cs;
}

ZeroTestReport zero_test_report(const CircleFunction& phi, ModelSpacePtr dom,
                                ModelSpacePtr cod, int k, double tol) {
  if (k > dom->dim())
    throw std::invalid_argument("zero_test: requires k <= dim of the domain space");
  const CanonicalSymbol cs = canonical_symbol(phi, dom, cod, k, true);
  ZeroTestReport report;
  report.parts_residual = cs.minimal_parts_norm();
  report.matrix_residual = slant_compression(phi, dom, cod, k).frob();
  report.zero = report.parts_residual <= tol * (1.0 + phi.norm());
  return report;
}

bool zero_test(const CircleFunction& phi, ModelSpacePtr dom, ModelSpacePtr cod,
               int k, double tol) {
  return zero_test_report(phi, dom, cod, k, tol).zero;
}

std::vector<CircleFunction> intertwine_coset_basis(ModelSpacePtr dom,
                                                   ModelSpacePtr cod, int k,
                                                   Direction direction) {
  if (k > dom->dim())
    throw std::invalid_argument(
        "intertwine_coset_basis: requires k <= dim of the domain space");
  const int band = dom->band();
  const FiniteBlaschke wk_beta = compose_zk(cod->alpha(), k);
  const FiniteBlaschke g = gcd_inner(dom->alpha(), wk_beta);
  std::vector<CircleFunction> out;
  if (g.is_constant()) return out;  // only the zero operator intertwines

  const ModelSpacePtr kg = ModelSpace::build(g, band);
  if (direction == Direction::Shift) {
    const CircleFunction q_fn = quotient_inner(wk_beta, g).to_circle_fn(band);
    for (int j = 0; j < kg->dim(); ++j)
      out.push_back(shifted(multiply(q_fn, kg->basis_fn(j)), -(k - 1)));
  } else {
    const CircleFunction alpha_conj = conj_fn(dom->alpha_fn());
    for (int j = 0; j < kg->dim(); ++j)
      out.push_back(shifted(multiply(alpha_conj, kg->basis_fn(j)), 1));
  }
  return out;
}

double intertwine_residual(const OperatorMatrix& U, int k, Direction direction) {
  const OperatorMatrix Sk = compressed_shift_pow(U.domain, k);
  const OperatorMatrix Sc = compressed_shift_pow(U.codomain, 1);
  if (direction == Direction::Shift) return (Sc * U - U * Sk).frob();
  return (Sc.adjoint() * U - U * Sk.adjoint()).frob();
}

bool intertwine_test(const OperatorMatrix& U, int k, Direction direction,
                     double tol) {
  return intertwine_residual(U, k, direction) <= membership_threshold(U, tol);
}

std::pair<double, double> commutator_formula_check(const CircleFunction& phi,
                                                   ModelSpacePtr dom,
                                                   ModelSpacePtr cod, int k) {
  const int band = dom->band();
  const CircleFunction phi_b = phi.band() == band ? phi : rebanded(phi, band);
  const OperatorMatrix U = slant_compression(phi_b, dom, cod, k);
  const OperatorMatrix Sk = compressed_shift_pow(dom, k);
  const OperatorMatrix Sc = compressed_shift_pow(cod, 1);
  const CircleFunction alpha_phi = multiply(dom->alpha_fn(), phi_b);

  // (a)
  OperatorMatrix rhs_a{dom, cod, k,
                       Eigen::MatrixXcd::Zero(cod->dim(), dom->dim())};
  for (int j = 0; j < k; ++j) {
    const SpaceElement u =
        cod->project(slant_w(shifted(alpha_phi, k - 1 - j), k));
    rhs_a += (1.0 / factorial(j)) *
             rank_one(u, dom->conjugate_kernel(0.0, j));
  }
  rhs_a -= rank_one(cod->kernel(0.0, 0),
                    dom->project(shifted(conj_fn(phi_b), -k)));
  const double res_a = (Sc * U - U * Sk - rhs_a).frob();

  // (b)
  const CircleFunction wk_beta_fn = compose_zk(cod->alpha(), k).to_circle_fn(band);
  OperatorMatrix rhs_b{dom, cod, k,
                       Eigen::MatrixXcd::Zero(cod->dim(), dom->dim())};
  for (int j = 0; j < k; ++j) {
    const SpaceElement u = cod->project(slant_w(shifted(phi_b, -(k - j)), k));
    rhs_b += (1.0 / factorial(j)) * rank_one(u, dom->kernel(0.0, j));
  }
  rhs_b -= rank_one(cod->conjugate_kernel(0.0, 0),
                    dom->project(multiply(conj_fn(phi_b), wk_beta_fn)));
  const double res_b = (Sc.adjoint() * U - U * Sk.adjoint() - rhs_b).frob();

  return {res_a, res_b};
}

}  // namespace slantlab
