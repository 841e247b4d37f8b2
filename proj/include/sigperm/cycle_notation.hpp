#pragma once

#include <vector>

#include "sigperm/signed_permutation.hpp"

namespace sigperm {

/// One signed cycle (e1 a1, ..., el al): sigma(a_i) = e_{i+1} a_{i+1}, indices mod l.
struct SignedCycle {
  std::vector<int> entries;

  bool operator==(const SignedCycle&) const = default;
  auto operator<=>(const SignedCycle&) const = default;
};

struct CycleNotation {
  int n = 0;
  std::vector<SignedCycle> cycles;

  bool operator==(const CycleNotation&) const = default;
};

// Each cycle starts at its (signed) maximum; cycles ordered by increasing
// first entry. Length-1 cycles are included.
CycleNotation to_canonical_cycles(const SignedPermutation& sigma);

// Builds the permutation described by `c`; throws MalformedNotation when the
// magnitudes across all cycles are not exactly 1..c.n, each once.
SignedPermutation from_cycles(const CycleNotation& c);

// Cycles in the order they are discovered from magnitude 1 upward, each
// starting at its smallest unvisited magnitude. Cheaper than canonical form.
CycleNotation cycle_decomposition(const SignedPermutation& sigma);

bool is_cyclic(const SignedPermutation& sigma);

// The single cycle of a cyclic permutation written so that the entry of
// magnitude `last_magnitude` is in the final position.
SignedCycle cyclic_word(const SignedPermutation& sigma, int last_magnitude);

SignedCycle rotate_cycle_to_end(const SignedCycle& c, int magnitude);

// Concatenation of all entries in order followed by `sentinel`.
SignedCycle concat_with_sentinel(const std::vector<SignedCycle>& cycles, int sentinel);

bool is_canonical(const CycleNotation& c);

}  // namespace sigperm
