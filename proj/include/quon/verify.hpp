#pragma once

#include <string>
#include <vector>

namespace quon::verify {

struct SuiteResult {
  std::string name;
  long checks = 0;
  long failures = 0;
  std::vector<std::string> messages;  // first few failure details

  bool passed() const { return failures == 0; }
  void check(bool ok, const std::string& what);
};

/// vev_qpermanent == vev_rewrite, exactly, on all creator-word pairs over
/// three modes up to exhaustive_max_len, plus random longer pairs.
SuiteResult oracle_equivalence(int max_len, int exhaustive_max_len = 5, int random_pairs = 500,
                               unsigned seed = 20250612);

/// a_i Ŝ_N = [N] Ŝ_{N-1} coefficient-by-coefficient in the exact regime, for
/// all occupancies over three modes with N <= max_n.
SuiteResult appendix_induction(int max_n);

/// Unit norm of the closed-form symmetric state.
SuiteResult symmetric_norms(int max_n, const std::vector<double>& qs, double tol = 1e-10);

/// Lowering/raising coefficients against brute-force Fock-space projection.
SuiteResult lowering_rule(int max_n, const std::vector<double>& qs, double tol = 1e-10);

/// Exact Gram eigenvalue polynomials for two and three quons, the trace
/// identity, and (for max_n >= 4) the exact multiplicity profile at N = 4.
SuiteResult gram_polynomials(int max_n);

/// Floating sector classification: counts, labels, positivity, orthogonality.
SuiteResult sector_structure(int max_n, const std::vector<double>& qs);

/// Generalized-eigenproblem oracle for the oscillator spectrum formula.
SuiteResult eq15_oracle(int max_n, const std::vector<double>& qs, double tol = 1e-9);

/// Angular-momentum matrix-element identities in the symmetric subspace.
SuiteResult rotor_algebra(int max_n, const std::vector<double>& qs, double tol = 1e-10);

std::vector<std::string> suite_names();

/// Suites as composed by the CLI `verify` subcommand; name "all" runs all.
/// Throws CapExceeded when max_n > kDefaultQuonCap.
std::vector<SuiteResult> run_suites(const std::string& name, int max_n);

}  // namespace quon::verify
