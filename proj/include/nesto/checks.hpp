#ifndef NESTO_CHECKS_HPP
#define NESTO_CHECKS_HPP

#include <cstdint>
#include <string>

#include "nesto/universe.hpp"

namespace nesto {

struct CheckReport {
  bool ok = true;
  long long cases = 0;
  std::string counterexample;  // describes the first failure, empty when ok
};

/// Runs one of the named equation-check suites over a universe. Sampling
/// suites draw `iterations` cases from a generator seeded with `seed`;
/// exhaustive suites (strictness-lemma, tubing-lemma) ignore both.
/// Suites: strict-assoc, semistrict-assoc, tridendriform, polydendriform,
/// oracle-agreement, coeff-sum, strictness-lemma, tubing-lemma.
CheckReport run_check(const std::string& suite, const std::string& universe_tag,
                      int max_carrier, std::uint64_t seed, int iterations = 200);

}  // namespace nesto

#endif
