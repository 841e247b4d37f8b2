#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "sigperm/distribution.hpp"
#include "sigperm/enumeration.hpp"
#include "sigperm/sharding.hpp"

namespace sigperm {

enum class Claim {
  phi_descents,
  bijection_d,
  bijection_dbar,
  inverses,
  corollary_counts,
  elizalde_equivalence,
  colored,
  moments,
  order_swap_properties,
};

std::string_view claim_name(Claim c);
std::optional<Claim> parse_claim(std::string_view name);

/// What each claim scans, with n the degree of the signed side:
///   phi-descents, bijection-D/-Dbar, inverses : C_{B,n+1} (and B_n for the
///     surjectivity and right-inverse halves)
///   corollary-counts : refined tables of B_n, CD_{n+1}, CDbar_{n+1}
///   elizalde-equivalence : CS_{n+1}
///   colored : every color class of CSnr(n+1, r)
///   moments : des and fmaj on B_n, CB_n, CD_n, CDbar_n (n >= 5)
///   order-swap-properties : C+_{B,n+1}, exhaustively or `samples` seeded draws
struct VerifyConfig {
  Claim claim = Claim::phi_descents;
  int n = 1;
  int r = 2;
  RunOptions run;
  Budget budget;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
};

struct VerifyReport {
  Claim claim = Claim::phi_descents;
  bool passed = true;
  std::uint64_t checked = 0;
  std::string counterexample;  // empty when passed
  std::string detail;
  std::optional<std::uint64_t> digest;
};

// Claims that compare totals (bijection image counts, corollary-counts,
// moments) need the whole domain; on a partial shard they check only the
// per-element parts.
VerifyReport verify(const VerifyConfig& config);

// FNV-1a over "key:count\n" lines in key order.
std::uint64_t table_digest(const RefinedTable& t);

}  // namespace sigperm
