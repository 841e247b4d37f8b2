#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sigperm/signed_permutation.hpp"

namespace sigperm {

/// Counters for instrumented runs of phi_classic: every swap trigger and every
/// continue/stop decision of the swap chain is compared with p_flag on the
/// live state.
struct ElizaldeTrace {
  std::size_t trigger_checks = 0;
  std::size_t continuation_checks = 0;
  std::vector<std::string> mismatches;
};

// Elizalde's cyclic-permutation-to-permutation map on unsigned cyclic
// permutations of degree n+1 (all images positive). Written independently of
// phi_plus; it works on plain positive values with no sign bookkeeping.
SignedPermutation phi_classic(const SignedPermutation& pi, ElizaldeTrace* trace = nullptr);

}  // namespace sigperm
