// Acceptance gate: runs every acceptance criterion at its stated tolerance
// and instance count, printing one pass/fail line per criterion.
// Exit code 0 only if all criteria pass.

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "slantlab/verify.hpp"

using namespace slantlab;

namespace {

int g_failures = 0;

struct Batch {
  bool all_pass = true;
  double max_residual = 0.0;
  double min_residual = std::numeric_limits<double>::infinity();
  int count = 0;
};

Batch fold(const std::vector<PropertyRecord>& records,
           const std::string& filter = "") {
  Batch b;
  for (const PropertyRecord& r : records) {
    if (!filter.empty() && r.test.find(filter) == std::string::npos) continue;
    b.all_pass = b.all_pass && r.pass;
    if (r.residual >= 0.0) {
      b.max_residual = std::max(b.max_residual, r.residual);
      b.min_residual = std::min(b.min_residual, r.residual);
    }
    ++b.count;
  }
  return b;
}

void report(int idx, const char* name, bool pass, const std::string& detail) {
  std::printf("criterion %02d %s  %-28s %s\n", idx, pass ? "PASS" : "FAIL",
              name, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string residual_note(const Batch& b) {
  std::ostringstream os;
  os << "n=" << b.count << " max_residual=" << b.max_residual;
  return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

int main() {
  const SuiteConfig cfg;  // defaults: seed 42, tol 1e-8, band 256, trials 50

  {  // 1. monomial oracle: entry(i,j) = a_{ki-j} to 1e-12, 200 instances, < 2 s
    const auto t0 = std::chrono::steady_clock::now();
    const Batch b = fold(records_monomial_oracle(cfg, 200));
    const double dt = seconds_since(t0);
    std::ostringstream os;
    os << residual_note(b) << " time=" << dt << "s";
    report(1, "monomial-oracle", b.all_pass && dt < 2.0, os.str());
  }

  {  // 2. shift-power formulas (a) and (b) to 1e-8 on 100 instances
    const Batch b = fold(records_shift_pow_formulas(cfg, 100));
    report(2, "shift-power-formulas", b.all_pass, residual_note(b));
  }

  {  // 3. rank-one defect identities: base to 1e-10, iterated to 1e-9
    const Batch b = fold(records_rank_one_identities(cfg, 50));
    report(3, "rank-one-identities", b.all_pass, residual_note(b));
  }

  {  // 4. characterization: (i) 50 built compressions pass shift invariance,
     //    (ii) 200 verdict agreements, (iii) symbol round trip to 1e-6
    const std::vector<PropertyRecord> built = records_char_constructed(cfg, 50);
    const Batch b1 = fold(built, "constructed_shift_invariance");
    const Batch b3 = fold(built, "symbol_round_trip");
    const Batch b2 = fold(records_char_equivalence(cfg, 200));
    std::ostringstream os;
    os << "invariance n=" << b1.count << ", verdicts n=" << b2.count
       << ", round-trip max=" << b3.max_residual;
    report(4, "shift-invariance-charac.", b1.all_pass && b2.all_pass && b3.all_pass,
           os.str());
  }

  {  // 5. small domain dimension: membership residual <= 1e-9 on 50 matrices
    const Batch b = fold(records_char_small_dim(cfg, 50));
    report(5, "order-above-dimension", b.all_pass, residual_note(b));
  }

  {  // 6. power-space example, k = 2, 3, residual <= 1e-12
    const Batch b = fold(records_example3(cfg));
    report(6, "power-space-example", b.all_pass, residual_note(b));
  }

  {  // 7. intertwiner cosets: 30 triples pass at 1e-8; 30 orthogonal
     //    symbols fail with residual >= 1e-4
    const Batch pos = fold(records_intertwine_positive(cfg, 30));
    const Batch neg = fold(records_intertwine_negative(cfg, 30));
    std::ostringstream os;
    os << "coset n=" << pos.count << " max=" << pos.max_residual
       << "; orthogonal n=" << neg.count << " min=" << neg.min_residual;
    report(7, "intertwiner-cosets", pos.all_pass && neg.all_pass, os.str());
  }

  {  // 8. commutator formulas to 1e-8 on 100 instances; vanishing cases 1e-10
    const Batch b1 = fold(records_commutator(cfg, 100));
    const Batch b2 = fold(records_commutator_zero_cases(cfg, 50));
    std::ostringstream os;
    os << "formulas n=" << b1.count << " max=" << b1.max_residual
       << "; vanishing n=" << b2.count << " max=" << b2.max_residual;
    report(8, "commutator-formulas", b1.all_pass && b2.all_pass, os.str());
  }

  {  // 9. section-4 products: 50 instances, every symbol formula to 1e-7,
     //    alternative forms equal modulo zero symbols
    const Batch b = fold(records_products_section4(cfg, 50));
    report(9, "analytic-products", b.all_pass, residual_note(b));
  }

  {  // 10. L2-symbol products: verdict equivalence on 100 pairs, xi to 1e-6,
     //     membership automatic once the order reaches the dimension (20)
    const std::vector<PropertyRecord> recs = records_products_l2(cfg, 100, 20);
    const Batch agree = fold(recs, "l2_verdict_agreement");
    const Batch xi = fold(recs, "xi_reconstruction");
    const Batch big = fold(recs, "l2_big_km_member");
    std::ostringstream os;
    os << "verdicts n=" << agree.count << ", members n=" << xi.count
       << " xi_max=" << xi.max_residual << ", big-order n=" << big.count;
    report(10, "l2-product-membership",
           agree.all_pass && xi.all_pass && big.all_pass, os.str());
  }

  {  // 11. zero-symbol law: 50 samples give |U|_F <= 1e-8 and vanishing parts
    const Batch b = fold(records_zero_symbols(cfg, 50));
    report(11, "zero-symbol-law", b.all_pass, residual_note(b));
  }

  {  // 12. full suite: <= 60 s single worker, byte-identical under the seed
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<PropertyRecord> run1 = run_suite("all", cfg);
    const double dt = seconds_since(t0);
    const std::vector<PropertyRecord> run2 = run_suite("all", cfg);
    std::ostringstream s1, s2;
    for (const PropertyRecord& r : run1) s1 << to_json(r).dump() << "\n";
    for (const PropertyRecord& r : run2) s2 << to_json(r).dump() << "\n";
    const Batch b = fold(run1);
    const bool deterministic = s1.str() == s2.str();
    std::ostringstream os;
    os << "records=" << run1.size() << " time=" << dt
       << "s deterministic=" << (deterministic ? "yes" : "no");
    report(12, "full-suite-budget", b.all_pass && dt <= 60.0 && deterministic,
           os.str());
  }

  if (g_failures == 0) {
    std::printf("acceptance: all 12 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return 1;
}
