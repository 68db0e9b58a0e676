#ifndef RANKVAR_SUITES_HPP
#define RANKVAR_SUITES_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace rv {

struct SuiteParams {
  int p = 3;
  int k = 2;
  int e = 2;
  uint64_t seed = 1;
  long long budget = 100000;
  int samples = 2000;
  bool relax_limits = false;  // lift the p/k/e guardrails
};

struct SuiteResult {
  std::string name;
  std::map<std::string, long long> params;
  bool pass = false;
  std::map<std::string, long long> counters;
  std::vector<std::string> failures;
  long long elapsed_ms = 0;
  uint64_t seed = 0;
};

const std::vector<std::string>& suite_names();

// Runs one verification suite.  Throws std::invalid_argument for an
// unknown name and std::domain_error when a parameter is outside the
// supported range (p <= 7, k in [2,4], e <= 3 unless relax_limits).
SuiteResult run_suite(const std::string& name, const SuiteParams& params);

std::string suite_json(const SuiteResult& r);

// The statement-to-suite table, as Markdown.
std::string traceability_markdown();

}  // namespace rv

#endif
