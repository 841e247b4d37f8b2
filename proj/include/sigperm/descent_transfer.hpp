#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "sigperm/cycle_notation.hpp"
#include "sigperm/signed_permutation.hpp"

namespace sigperm {

/// One swap of the cycle-word editing loop: the values before the swap and
/// their positions in the concatenated word (0-based).
struct SwapEvent {
  int x = 0;
  int y = 0;
  int x_pos = 0;
  int y_pos = 0;
};

/// Working state at the start of a for-loop or outer-while iteration of the
/// cyclic-to-signed algorithm, plus the swaps performed before the next one.
struct TraceStep {
  int loop_index = 0;  // 1-based cycle index j
  CycleNotation snapshot;
  std::vector<SwapEvent> swaps;
};

/// Optional instrumentation for phi_plus. Passing a trace records every
/// loop-boundary snapshot and checks the order properties (A)-(D) at each
/// snapshot and the swap properties (I)-(IV) after each batch of swaps.
/// Failures are collected, never thrown; results are unaffected.
struct TransferTrace {
  std::vector<TraceStep> steps;
  std::vector<std::string> violations;
  std::size_t snapshots_checked = 0;
  std::size_t batches_checked = 0;
  // The magnitudes that end the initial cycles (the set L).
  std::vector<int> initial_last_magnitudes;
};

// True iff |x-y| = 1 and min(x,y) lies in (Des(pi) symdiff Des(sigma)) cap [n-1],
// where pi has degree n+1 and sigma degree n.
bool p_flag(const SignedPermutation& pi, const SignedPermutation& sigma, int x, int y);

// 1-based positions of the entries exceeding everything to their left.
std::vector<int> left_to_right_maxima(const SignedCycle& c);

// Whether +(n+1) (rather than -(n+1)) appears in the notation of a cyclic pi.
bool in_positive_half(const SignedPermutation& pi);

// The cyclic-to-signed algorithm phi : C+_{B,n+1} -> B_n.
SignedPermutation phi_plus(const SignedPermutation& pi, TransferTrace* trace = nullptr);

// The descent-preserving map Phi : C_{B,n+1} -> B_n.
SignedPermutation capital_phi(const SignedPermutation& pi);

// The signed-to-cyclic algorithm psi : B_n -> C+_{B,n+1}; inverse of phi_plus.
SignedPermutation psi_plus(const SignedPermutation& sigma);

// Inverse of Phi restricted to C_{D,n+1}.
SignedPermutation capital_psi_d(const SignedPermutation& sigma);

// Inverse of Phi restricted to the complement of C_{D,n+1} in C_{B,n+1}.
SignedPermutation capital_psi_dbar(const SignedPermutation& sigma);

// (psi(s), psi((-1)s), -psi(-s), -psi(-(-1)s)): the full preimage of {s, (-1)s}.
std::array<SignedPermutation, 4> preimage_quadruple(const SignedPermutation& sigma);

}  // namespace sigperm
