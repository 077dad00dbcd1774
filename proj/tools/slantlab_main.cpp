// slantlab: build compressions of slant operators on model spaces, run the
// verification suites, decompose and recover symbols, analyze products.
// Exit codes: 0 success, 1 verification failure, 2 bad input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "slantlab/json_io.hpp"
#include "slantlab/parse.hpp"
#include "slantlab/verify.hpp"

namespace {

using namespace slantlab;

double default_tol() {
  if (const char* env = std::getenv("SLANTLAB_TOL")) {
    try {
      const double v = std::stod(env);
      if (v > 0) return v;
    } catch (...) {
    }
    std::cerr << "slantlab: ignoring unparsable SLANTLAB_TOL\n";
  }
  return kDefaultTol;
}

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
  out << j.dump(2) << "\n";
}

struct CommonArgs {
  std::string alpha, beta, gamma;
  std::string phi, psi;
  int k = 1, m = 1;
  int band = kDefaultBand;
  double tol = default_tol();
  std::string out;
};

void warn_extreme(std::initializer_list<ModelSpacePtr> spaces, int band) {
  for (const ModelSpacePtr& s : spaces)
    if (s->alpha().has_extreme_zeros()) {
      std::cerr << "slantlab: warning: zeros with |a| > 0.95, band-" << band
                << " accuracy degrades\n";
      return;
    }
}

int run_build_op(const CommonArgs& a) {
  const ModelSpacePtr ka = ModelSpace::build(parse_inner(a.alpha), a.band);
  const ModelSpacePtr kb = ModelSpace::build(parse_inner(a.beta), a.band);
  warn_extreme({ka, kb}, a.band);
  const CircleFunction phi = parse_symbol(a.phi, a.band);
  const OperatorMatrix U = slant_compression(phi, ka, kb, a.k);
  emit(to_json(U), a.out);
  return 0;
}

int run_verify(const std::string& suite, const SuiteConfig& cfg,
               const std::string& out_path) {
  const std::vector<PropertyRecord> records = run_suite(suite, cfg);
  std::ostringstream lines;
  int failures = 0;
  for (const PropertyRecord& r : records) {
    lines << to_json(r).dump() << "\n";
    if (!r.pass) ++failures;
  }
  if (out_path.empty()) {
    std::cout << lines.str();
  } else {
    std::ofstream out(out_path);
    if (!out)
      throw std::invalid_argument("cannot open output file: " + out_path);
    out << lines.str();
  }
  std::cerr << "suite " << suite << ": " << records.size() - failures << "/"
            << records.size() << " properties passed\n";
  return failures == 0 ? 0 : 1;
}

int run_product(const std::string& mode, const CommonArgs& a) {
  const ModelSpacePtr ka = ModelSpace::build(parse_inner(a.alpha), a.band);
  const ModelSpacePtr kb = ModelSpace::build(parse_inner(a.beta), a.band);
  const ModelSpacePtr kc = ModelSpace::build(parse_inner(a.gamma), a.band);
  warn_extreme({ka, kb, kc}, a.band);
  const CircleFunction phi = parse_symbol(a.phi, a.band);
  const CircleFunction psi = parse_symbol(a.psi, a.band);

  ProductReport report;
  bool formula_mode = true;
  if (mode == "analytic") {
    report = product_analytic(phi, psi, ka, kb, kc, a.k, a.m, a.tol);
  } else if (mode == "antianalytic") {
    report = product_antianalytic(phi, psi, ka, kb, kc, a.k, a.m, a.tol);
  } else if (mode == "mixed-a") {
    report = product_mixed(MixedCase::ToeplitzTimesSlant, phi, psi, ka, kb, kc,
                           a.k, a.tol);
  } else if (mode == "mixed-b") {
    report = product_mixed(MixedCase::SlantTimesToeplitz, phi, psi, ka, kb, kc,
                           a.m, a.tol);
  } else if (mode == "mixed-c") {
    report = product_mixed(MixedCase::ConjToeplitzTimesSlant, phi, psi, ka, kb,
                           kc, a.k, a.tol);
  } else if (mode == "mixed-d") {
    report = product_mixed(MixedCase::ConjSlantTimesToeplitz, phi, psi, ka, kb,
                           kc, a.m, a.tol);
  } else if (mode == "l2") {
    report = product_membership_L2(phi, psi, ka, kb, kc, a.k, a.m, a.tol);
    formula_mode = false;
  } else if (mode == "special-a" || mode == "special-b") {
    report = product_corollary_special(mode == "special-a", phi, psi, ka, kb,
                                       kc, mode == "special-a" ? a.k : a.m,
                                       a.tol);
    formula_mode = false;
  } else {
    throw std::invalid_argument("unknown product mode: " + mode);
  }

  emit(to_json(report), a.out);
  const double scale = report.product ? 1.0 + report.product->frob() : 1.0;
  if (formula_mode) {
    for (const auto& [name, res] : report.residuals)
      if (res > a.tol * scale) return 1;
  } else if (report.member && report.residuals.count("xi") &&
             report.residuals.at("xi") > 1e-6 * scale) {
    return 1;
  }
  return 0;
}

int run_symbol(bool recover, const std::string& variant, const CommonArgs& a) {
  const ModelSpacePtr ka = ModelSpace::build(parse_inner(a.alpha), a.band);
  const ModelSpacePtr kb = ModelSpace::build(parse_inner(a.beta), a.band);
  warn_extreme({ka, kb}, a.band);
  const CircleFunction phi = parse_symbol(a.phi, a.band);
  if (recover) {
    const OperatorMatrix U = slant_compression(phi, ka, kb, a.k);
    const DefectVariant v =
        variant == "A" ? DefectVariant::A : DefectVariant::B;
    const DefectDecomposition d = membership_test(U, a.k, v, a.tol);
    const CircleFunction rec = symbol_from_defect(d, U, a.tol);
    const double dist = (slant_compression(rec, ka, kb, a.k) - U).frob();
    Json j{{"symbol", to_json(rec)},
           {"defect_residual", d.residual},
           {"round_trip_distance", dist},
           {"chi", to_json(d.chi)}};
    Json psis = Json::array();
    for (const SpaceElement& p : d.psis) psis.push_back(to_json(p));
    j["psis"] = psis;
    emit(j, a.out);
    return dist <= 1e-6 * (1.0 + U.frob()) ? 0 : 1;
  }
  const CanonicalSymbol cs = canonical_symbol(phi, ka, kb, a.k);
  Json parts = Json::array();
  for (const SpaceElement& p : cs.parts) parts.push_back(to_json(p));
  const OperatorMatrix U = slant_compression(phi, ka, kb, a.k);
  const OperatorMatrix U2 =
      slant_compression(cs.reduced_symbol(), ka, kb, a.k);
  Json j{{"phi_minus", to_json(cs.phi_minus)},
         {"chi_plus", to_json(cs.chi_plus)},
         {"parts", parts},
         {"reduced_symbol", to_json(cs.reduced_symbol())},
         {"reconstruction_residual", (U - U2).frob()}};
  emit(j, a.out);
  return (U - U2).frob() <= a.tol * (1.0 + U.frob()) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for compressed slant operators on model spaces"};
  app.require_subcommand(1);

  CommonArgs args;
  SuiteConfig cfg;
  cfg.tol = default_tol();

  auto* build = app.add_subcommand("build-op", "assemble an operator matrix");
  build->add_option("--alpha", args.alpha, "domain inner function (z^N or JSON)")
      ->required();
  build->add_option("--beta", args.beta, "codomain inner function")->required();
  build->add_option("--k", args.k, "slant order");
  build->add_option("--phi", args.phi, "symbol (shorthand or JSON)")->required();
  build->add_option("--band", args.band, "Fourier band");
  build->add_option("--out", args.out, "write JSON here instead of stdout");

  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  std::string suite;
  verify->add_option("suite", suite, "lemma22|lemma41|thm21|section3|section4|section5|example3|all")
      ->required();
  verify->add_option("--seed", cfg.seed, "RNG seed");
  verify->add_option("--tol", cfg.tol, "verdict tolerance");
  verify->add_option("--band", cfg.band, "Fourier band");
  verify->add_option("--max-degree", cfg.max_degree, "space degree cap");
  verify->add_option("--trials", cfg.trials, "instances per property");
  verify->add_option("--k", cfg.k_filter, "restrict example3 to this k");
  std::string verify_out;
  verify->add_option("--out", verify_out, "write JSONL records here");

  auto* product = app.add_subcommand("product", "analyze a product of compressions");
  std::string mode;
  product->add_option("--mode", mode,
                      "analytic|antianalytic|mixed-a|mixed-b|mixed-c|mixed-d|l2|special-a|special-b")
      ->required();
  product->add_option("--alpha", args.alpha)->required();
  product->add_option("--beta", args.beta)->required();
  product->add_option("--gamma", args.gamma)->required();
  product->add_option("--phi", args.phi)->required();
  product->add_option("--psi", args.psi)->required();
  product->add_option("--k", args.k);
  product->add_option("--m", args.m);
  product->add_option("--band", args.band);
  product->add_option("--tol", args.tol);
  product->add_option("--out", args.out);

  auto* symbol = app.add_subcommand("symbol", "recover or decompose a symbol");
  bool recover = false, canonical = false;
  std::string variant = "B";
  symbol->add_flag("--recover", recover, "recover a symbol from the operator");
  symbol->add_flag("--canonical", canonical, "canonical decomposition of a symbol");
  symbol->add_option("--variant", variant, "defect variant for --recover (A|B)");
  symbol->add_option("--alpha", args.alpha)->required();
  symbol->add_option("--beta", args.beta)->required();
  symbol->add_option("--k", args.k);
  symbol->add_option("--phi", args.phi)->required();
  symbol->add_option("--band", args.band);
  symbol->add_option("--tol", args.tol);
  symbol->add_option("--out", args.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return 0;  // --help
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (build->parsed()) return run_build_op(args);
    if (verify->parsed()) return run_verify(suite, cfg, verify_out);
    if (product->parsed()) return run_product(mode, args);
    if (symbol->parsed()) {
      if (recover == canonical)
        throw std::invalid_argument("symbol: pass exactly one of --recover/--canonical");
      return run_symbol(recover, variant, args);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "slantlab: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "slantlab: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
