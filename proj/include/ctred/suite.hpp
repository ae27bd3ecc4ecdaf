#pragma once

// Verification harness behind the `verify` command: expands a suite request
// into parameter cells, runs them (optionally on several threads), and
// renders the reports as text or JSON.

#include "ctred/identities.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctred {

/// Parameter outside the documented desk-scale bounds, or an unknown suite.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SuiteSpec {
  std::string suite = "all";  // identity1 | identity2 | conjecture | morris | macdonald | reduction | jacobi | all
  std::optional<int> n, m, a, b, c, k;
  std::optional<int> max_n, max_m, max_abc;
  int order = 30;
  std::uint64_t seed = 1;
  int samples = 10;
  bool json = false;
  int threads = 1;
};

inline constexpr int kMaxN = 6;
inline constexpr int kMaxM = 4;
inline constexpr int kMaxAbc = 2;
inline constexpr int kMaxOrder = 64;

const std::vector<std::string>& suite_names();

/// Throws UsageError on out-of-range or inconsistent parameters.
void validate(const SuiteSpec& spec);

/// Runs every cell; reports come back sorted by suite, then parameters.
std::vector<VerificationReport> run_suites(const SuiteSpec& spec);

nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const std::vector<VerificationReport>& reports);

std::string format_text(const VerificationReport& r, bool color);
/// Both sides of a failing cell, one route per line.
std::string format_failure(const VerificationReport& r);

/// 0 when every non-skipped report is equal, 1 otherwise.
int exit_code(const std::vector<VerificationReport>& reports);

}  // namespace ctred
