#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "sigperm/colored.hpp"
#include "sigperm/signed_permutation.hpp"

namespace sigperm {

using BigInt = boost::multiprecision::cpp_int;

enum class DomainKind { B, D, CB, CD, CDbar, S, CS, CSnr };

struct DomainSpec {
  DomainKind kind = DomainKind::B;
  int n = 0;
  int r = 1;                   // CSnr only
  std::optional<int> color;    // CSnr only

  bool operator==(const DomainSpec&) const = default;
};

std::string_view domain_name(DomainKind kind);
std::optional<DomainKind> parse_domain_kind(std::string_view name);
std::string describe(const DomainSpec& d);

bool is_colored(const DomainSpec& d);

// Throws DomainError when the parameters do not fit the kind.
void validate(const DomainSpec& d);

BigInt cardinality(const DomainSpec& d);

// Refusal threshold for exhaustive work.
struct Budget {
  std::uint64_t max_elements = std::uint64_t{1} << 32;
  bool allow_big = false;
};

// Cardinality as uint64; throws BudgetExceeded above the budget (unless
// allow_big) or when it does not fit 64 bits.
std::uint64_t checked_cardinality(const DomainSpec& d, const Budget& budget = {});

// Index encodings. Every element is (arrangement rank, word) with the word in
// the low digits:
//   B/D   : one-line magnitudes in lex rank; word = sign bits of positions 1..n
//           (D: bit n fixed by parity).
//   S     : one-line lex rank.
//   CB/CD/CDbar : cycle (s1 b1, ..., s_{n-1} b_{n-1}, s_n n) with b a lex-ranked
//           arrangement of [n-1]; word = sign bits s1..sn (CD/CDbar: sn by parity).
//   CS    : cycle (b1, ..., b_{n-1}, n).
//   CSnr  : omega as for CS; word = tau(1..n) base r (with a color filter tau(n)
//           is fixed by the color).
SignedPermutation unrank(const DomainSpec& d, const BigInt& index);
ColoredPermutation unrank_colored(const DomainSpec& d, const BigInt& index);

// Implemented for B and CB.
BigInt rank(const DomainSpec& d, const SignedPermutation& element);

// Visits indices [begin, end) in index order.
void for_each_in_range(const DomainSpec& d, std::uint64_t begin, std::uint64_t end,
                       const std::function<void(const SignedPermutation&)>& fn);
void for_each_colored_in_range(const DomainSpec& d, std::uint64_t begin, std::uint64_t end,
                               const std::function<void(const ColoredPermutation&)>& fn);

void for_each(const DomainSpec& d, const std::function<void(const SignedPermutation&)>& fn,
              const Budget& budget = {});
void for_each_colored(const DomainSpec& d,
                      const std::function<void(const ColoredPermutation&)>& fn,
                      const Budget& budget = {});

// Every element of S_{n,r} (not only the cyclic ones), omega in lex order and
// tau base r in the low digits.
void for_each_colored_group(int n, int r, const std::function<void(const ColoredPermutation&)>& fn);

/// Counter-based generator: output k is mix(key + (k+1) * 0x9E3779B97F4A7C15)
/// with mix the SplitMix64 finalizer and key = mix(seed + mix(stream)).
/// Worker w of a run seeded with s uses stream w.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next() noexcept;
  // Exactly uniform on [0, bound) by rejection; bound > 0.
  std::uint64_t uniform(std::uint64_t bound) noexcept;
  std::uint64_t counter() const noexcept { return counter_; }

  static std::uint64_t mix(std::uint64_t z) noexcept;

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Exactly uniform draws: Fisher-Yates arrangement plus independent sign bits
// (color digits for CSnr). CD/CDbar draw from CB and flip the sign of the
// magnitude-n entry when the parity is wrong.
SignedPermutation sample(const DomainSpec& d, CounterRng& rng);
ColoredPermutation sample_colored(const DomainSpec& d, CounterRng& rng);

}  // namespace sigperm
