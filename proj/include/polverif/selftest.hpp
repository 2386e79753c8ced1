#pragma once

#include <cstdint>
#include <ostream>

namespace polverif {

struct SelftestOptions {
  std::uint64_t seed = 20140512;
  std::size_t policies = 200;
};

// Seed from POLICY_VERIF_SEED when set and numeric, otherwise the default.
std::uint64_t selftest_seed_from_env();

// Randomised spot checks of the laws every shipped template must satisfy.
// Prints one line per check; true iff all pass.
bool run_selftest(const SelftestOptions& options, std::ostream& out);

}  // namespace polverif
