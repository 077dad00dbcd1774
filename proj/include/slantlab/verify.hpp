#ifndef SLANTLAB_VERIFY_HPP
#define SLANTLAB_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "slantlab/json_io.hpp"

namespace slantlab {

/// Knobs shared by all verification suites.
struct SuiteConfig {
  std::uint64_t seed = 42;
  double tol = kDefaultTol;  // membership/verdict tolerance
  int band = kDefaultBand;
  int max_degree = 6;  // space-degree cap for random instances
  int trials = 50;     // per-property instance count
  int k_filter = 0;    // restrict example3 to one k (0 = no filter)
};

/// Throws std::invalid_argument when a config invariant is violated
/// (tol > 0, trials >= 1, band >= 4 * max_degree * 4).
void validate(const SuiteConfig& cfg);

/// One property instance.  Records are emitted in a deterministic order:
/// suites in a fixed sequence, trial indices ascending.
struct PropertyRecord {
  std::string suite;
  int trial = 0;
  std::string test;
  double residual = 0.0;
  double tol = 0.0;
  bool pass = false;
  Json witness;  // optional extra data
};

Json to_json(const PropertyRecord& r);

const std::vector<std::string>& suite_names();  // includes "all"

/// Runs a named suite; throws std::invalid_argument for unknown names.
std::vector<PropertyRecord> run_suite(const std::string& name,
                                      const SuiteConfig& cfg);

// Criterion-level batches, also used directly by the acceptance suite.
// Each pins its own per-record tolerances; n is the instance count.
std::vector<PropertyRecord> records_monomial_oracle(const SuiteConfig& cfg, int n);
std::vector<PropertyRecord> records_shift_pow_formulas(const SuiteConfig& cfg, int n);
std::vector<PropertyRecord> records_rank_one_identities(const SuiteConfig& cfg, int n);
std::vector<PropertyRecord> records_char_constructed(const SuiteConfig& cfg, int n);
std::vector<PropertyRecord> records_char_equivalence(const SuiteConfig& cfg, int n);
std::vector<PropertyRecord> records_char_small_dim(const SuiteConfig& cfg, int n);
std::vector<PropertyRecord> records_example3(const SuiteConfig& cfg);
std::vector<PropertyRecord> records_intertwine_positive(const SuiteConfig& cfg, int n);
std::vector<PropertyRecord> records_intertwine_negative(const SuiteConfig& cfg, int n);
std::vector<PropertyRecord> records_commutator(const SuiteConfig& cfg, int n);
std::vector<PropertyRecord> records_commutator_zero_cases(const SuiteConfig& cfg, int n);
std::vector<PropertyRecord> records_adjoint_corollaries(const SuiteConfig& cfg, int n);
std::vector<PropertyRecord> records_products_section4(const SuiteConfig& cfg, int n);
std::vector<PropertyRecord> records_products_l2(const SuiteConfig& cfg, int n_random,
                                                int n_big_km);
std::vector<PropertyRecord> records_corollary_special(const SuiteConfig& cfg, int n);
std::vector<PropertyRecord> records_zero_symbols(const SuiteConfig& cfg, int n);
std::vector<PropertyRecord> records_canonical_props(const SuiteConfig& cfg, int n);

}  // namespace slantlab

#endif  // SLANTLAB_VERIFY_HPP
