#ifndef DCOSET_VERIFY_HPP
#define DCOSET_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "dcoset/coxeter.hpp"

namespace dcoset {

// Outcome of one named check: the number of tuples visited, and the
// rendered counterexamples (empty iff the check passed), smallest
// first under (total length, ShortLex).
struct CheckResult {
  std::string check;
  std::string group;
  std::uint64_t universe = 0;
  std::vector<std::string> failures;
  double elapsed_ms = 0.0;

  bool passed() const { return failures.empty(); }
};

struct SuiteOptions {
  // Bound on expression width wherever a check quantifies over "all
  // expressions".
  int width_cap = 4;
  // Empty means every registered check, in registry order.
  std::vector<std::string> checks;
  // Test hook: replaces the element Bruhat comparison inside the
  // checks. Leave empty for the real order.
  std::function<bool(const CoxeterGroup&, Element, Element)> leq_override;
  // At most this many counterexamples are kept per check.
  std::size_t max_failures = 25;
};

// Runs the selected checks over all tuples in scope and returns one
// result per check, in registry order. Throws UnknownCheckName before
// running anything if a requested name is not registered.
std::vector<CheckResult> run_suite(const CoxeterGroup& g, const SuiteOptions& opts = {});

// Registered check names with a one-line statement of what each one
// verifies, in report order.
const std::vector<std::pair<std::string, std::string>>& check_manifest();

// Line-oriented TSV (check, group, universe, failures, status) plus the
// counterexample lines, and a human summary. Neither includes timings,
// so both are byte-deterministic.
void write_report_tsv(std::ostream& out, std::span<const CheckResult> results);
void write_report_summary(std::ostream& out, std::span<const CheckResult> results);

}  // namespace dcoset

#endif
