#ifndef PERMPAT_VERIFICATION_HPP
#define PERMPAT_VERIFICATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "permpat/exact_count.hpp"

namespace permpat {

// One entry of the verification ledger.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string actual;
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  int max_brute_n = kDefaultBruteForceLimit;
};

// Suite identifiers accepted by run_verification_suite, in ledger order.
const std::vector<std::string>& verification_suite_names();

// Runs one named suite; throws std::invalid_argument for an unknown name.
std::vector<CheckResult> run_verification_suite(const std::string& suite,
                                                const VerifyOptions& options);

// Runs every suite in ledger order.
std::vector<CheckResult> run_all_verification(const VerifyOptions& options);

}  // namespace permpat

#endif  // PERMPAT_VERIFICATION_HPP
