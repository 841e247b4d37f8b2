#include "sigperm/enumeration.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <utility>

#include "sigperm/cycle_notation.hpp"
#include "sigperm/errors.hpp"

namespace sigperm {

namespace {

constexpr std::array<std::pair<DomainKind, std::string_view>, 8> kNames{{
    {DomainKind::B, "B"},
    {DomainKind::D, "D"},
    {DomainKind::CB, "CB"},
    {DomainKind::CD, "CD"},
    {DomainKind::CDbar, "CDbar"},
    {DomainKind::S, "S"},
    {DomainKind::CS, "CS"},
    {DomainKind::CSnr, "CSnr"},
}};

bool is_cyclic_kind(DomainKind k) {
  return k == DomainKind::CB || k == DomainKind::CD || k == DomainKind::CDbar ||
         k == DomainKind::CS || k == DomainKind::CSnr;
}

// Shape of the index encoding: an arrangement of [arrangement_size] in lex
// order (high part) and `free_digits` digits base `radix` (low part).
struct Layout {
  int arrangement_size = 0;
  int free_digits = 0;
  int radix = 2;
};

Layout layout_of(const DomainSpec& d) {
  const int n = d.n;
  switch (d.kind) {
    case DomainKind::B: return {n, n, 2};
    case DomainKind::D: return {n, std::max(n - 1, 0), 2};
    case DomainKind::S: return {n, 0, 2};
    case DomainKind::CB: return {n - 1, n, 2};
    case DomainKind::CD:
    case DomainKind::CDbar: return {n - 1, n - 1, 2};
    case DomainKind::CS: return {n - 1, 0, 2};
    case DomainKind::CSnr: return {n - 1, d.color ? n - 1 : n, d.r};
  }
  return {};
}

BigInt factorial(int k) {
  BigInt f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

BigInt word_count(const Layout& l) {
  BigInt c = 1;
  for (int i = 0; i < l.free_digits; ++i) c *= l.radix;
  return c;
}

std::vector<int> unrank_arrangement(int k, BigInt rank) {
  std::vector<int> pool(static_cast<std::size_t>(k));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> out;
  out.reserve(pool.size());
  for (int i = 0; i < k; ++i) {
    const BigInt f = factorial(k - 1 - i);
    const auto digit = static_cast<std::size_t>(static_cast<long long>(rank / f));
    rank %= f;
    out.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return out;
}

BigInt rank_arrangement(const std::vector<int>& arr) {
  const int k = static_cast<int>(arr.size());
  BigInt r = 0;
  for (int i = 0; i < k; ++i) {
    int smaller_after = 0;
    for (int j = i + 1; j < k; ++j) smaller_after += arr[static_cast<std::size_t>(j)] < arr[static_cast<std::size_t>(i)];
    r += factorial(k - 1 - i) * smaller_after;
  }
  return r;
}

// Expands the free digits to one digit per position, filling a parity/color
// constrained last digit where the layout has one fewer free digit.
std::vector<int> full_digits(const DomainSpec& d, const std::vector<int>& free) {
  std::vector<int> digits = free;
  const int n = d.n;
  switch (d.kind) {
    case DomainKind::D:
    case DomainKind::CD:
    case DomainKind::CDbar: {
      if (n == 0) break;
      const int ones = static_cast<int>(std::count(free.begin(), free.end(), 1));
      const bool want_even = d.kind != DomainKind::CDbar;
      digits.push_back((ones % 2 == 0) == want_even ? 0 : 1);
      break;
    }
    case DomainKind::CSnr:
      if (d.color) {
        int sum = 0;
        for (int c : free) sum = (sum + c) % d.r;
        digits.push_back(((*d.color - sum) % d.r + d.r) % d.r);
      }
      break;
    default: break;
  }
  return digits;
}

std::vector<int> digits_of(std::uint64_t w, const Layout& l) {
  std::vector<int> out(static_cast<std::size_t>(l.free_digits));
  for (auto& digit : out) {
    digit = static_cast<int>(w % static_cast<std::uint64_t>(l.radix));
    w /= static_cast<std::uint64_t>(l.radix);
  }
  return out;
}

std::vector<int> digits_of(BigInt w, const Layout& l) {
  std::vector<int> out(static_cast<std::size_t>(l.free_digits));
  for (auto& digit : out) {
    digit = static_cast<int>(w % l.radix);
    w /= l.radix;
  }
  return out;
}

// images for the single cycle (e_1, ..., e_n).
std::vector<int> images_of_cycle(const std::vector<int>& entries) {
  const auto n = entries.size();
  std::vector<int> images(n);
  for (std::size_t i = 0; i < n; ++i) {
    images[static_cast<std::size_t>(std::abs(entries[i])) - 1] = entries[(i + 1) % n];
  }
  return images;
}

SignedPermutation build_signed(const DomainSpec& d, const std::vector<int>& arr,
                               const std::vector<int>& signs) {
  const int n = d.n;
  switch (d.kind) {
    case DomainKind::B:
    case DomainKind::D: {
      std::vector<int> images(arr);
      for (int i = 0; i < n; ++i) {
        if (signs[static_cast<std::size_t>(i)] != 0) images[static_cast<std::size_t>(i)] *= -1;
      }
      return SignedPermutation::from_trusted(std::move(images));
    }
    case DomainKind::S: return SignedPermutation::from_trusted(arr);
    case DomainKind::CB:
    case DomainKind::CD:
    case DomainKind::CDbar:
    case DomainKind::CS: {
      std::vector<int> entries(arr);
      entries.push_back(n);
      if (d.kind != DomainKind::CS) {
        for (int i = 0; i < n; ++i) {
          if (signs[static_cast<std::size_t>(i)] != 0) entries[static_cast<std::size_t>(i)] *= -1;
        }
      }
      return SignedPermutation::from_trusted(images_of_cycle(entries));
    }
    case DomainKind::CSnr: break;
  }
  throw DomainError("domain " + describe(d) + " does not hold signed permutations");
}

ColoredPermutation build_colored(const DomainSpec& d, const std::vector<int>& arr,
                                 const std::vector<int>& tau) {
  std::vector<int> entries(arr);
  entries.push_back(d.n);
  return ColoredPermutation(d.r, images_of_cycle(entries), tau);
}

void require_signed(const DomainSpec& d) {
  validate(d);
  if (is_colored(d)) throw DomainError("domain " + describe(d) + " holds colored permutations");
}

void require_colored(const DomainSpec& d) {
  validate(d);
  if (!is_colored(d)) throw DomainError("domain " + describe(d) + " holds signed permutations");
}

template <class Fn>
void walk_range(const DomainSpec& d, std::uint64_t begin, std::uint64_t end, Fn&& emit) {
  const Layout l = layout_of(d);
  const auto words = static_cast<std::uint64_t>(word_count(l));
  const std::uint64_t total = static_cast<std::uint64_t>(cardinality(d));
  if (begin > end || end > total) throw DomainError("index range outside domain");
  if (begin == end) return;
  std::vector<int> arr = unrank_arrangement(l.arrangement_size, BigInt(begin / words));
  std::uint64_t w = begin % words;
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    emit(arr, full_digits(d, digits_of(w, l)));
    if (++w == words) {
      w = 0;
      std::next_permutation(arr.begin(), arr.end());
    }
  }
}

void fisher_yates(std::vector<int>& a, CounterRng& rng) {
  for (std::size_t i = a.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.uniform(i));
    std::swap(a[i - 1], a[j]);
  }
}

std::vector<int> iota_vec(int k) {
  std::vector<int> v(static_cast<std::size_t>(std::max(k, 0)));
  std::iota(v.begin(), v.end(), 1);
  return v;
}

std::vector<int> random_bits(int count, CounterRng& rng) {
  std::vector<int> bits(static_cast<std::size_t>(count));
  std::uint64_t pool = 0;
  for (int i = 0; i < count; ++i) {
    if (i % 64 == 0) pool = rng.next();
    bits[static_cast<std::size_t>(i)] = static_cast<int>(pool & 1u);
    pool >>= 1;
  }
  return bits;
}

}  // namespace

std::string_view domain_name(DomainKind kind) {
  for (auto [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<DomainKind> parse_domain_kind(std::string_view name) {
  for (auto [k, n] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::string describe(const DomainSpec& d) {
  std::string s = std::string(domain_name(d.kind)) + "(n=" + std::to_string(d.n);
  if (d.kind == DomainKind::CSnr) {
    s += ",r=" + std::to_string(d.r);
    if (d.color) s += ",color=" + std::to_string(*d.color);
  }
  return s + ")";
}

bool is_colored(const DomainSpec& d) { return d.kind == DomainKind::CSnr; }

void validate(const DomainSpec& d) {
  if (d.n < 0) throw DomainError("degree must be nonnegative");
  if (is_cyclic_kind(d.kind) && d.n < 1) {
    throw DomainError(std::string(domain_name(d.kind)) + " needs n >= 1");
  }
  if (d.kind == DomainKind::CSnr) {
    if (d.r < 1) throw DomainError("CSnr needs r >= 1");
    if (d.color && (*d.color < 0 || *d.color >= d.r)) {
      throw DomainError("color filter outside Z_r");
    }
  } else if (d.color) {
    throw DomainError("color filter only applies to CSnr");
  }
  if (d.n > kMaxDegree) throw DomainError("degree exceeds cap");
}

BigInt cardinality(const DomainSpec& d) {
  validate(d);
  const Layout l = layout_of(d);
  return factorial(l.arrangement_size) * word_count(l);
}

std::uint64_t checked_cardinality(const DomainSpec& d, const Budget& budget) {
  const BigInt c = cardinality(d);
  if (c > BigInt(std::numeric_limits<std::uint64_t>::max())) {
    throw BudgetExceeded(describe(d) + " has " + c.str() + " elements, beyond 64-bit indexing");
  }
  if (!budget.allow_big && c > budget.max_elements) {
    throw BudgetExceeded(describe(d) + " has " + c.str() + " elements, above the budget of " +
                         std::to_string(budget.max_elements) + " (override with --allow-big)");
  }
  return static_cast<std::uint64_t>(c);
}

SignedPermutation unrank(const DomainSpec& d, const BigInt& index) {
  require_signed(d);
  if (index < 0 || index >= cardinality(d)) throw DomainError("unrank: index out of range");
  const Layout l = layout_of(d);
  const BigInt words = word_count(l);
  return build_signed(d, unrank_arrangement(l.arrangement_size, index / words),
                      full_digits(d, digits_of(BigInt(index % words), l)));
}

ColoredPermutation unrank_colored(const DomainSpec& d, const BigInt& index) {
  require_colored(d);
  if (index < 0 || index >= cardinality(d)) throw DomainError("unrank: index out of range");
  const Layout l = layout_of(d);
  const BigInt words = word_count(l);
  return build_colored(d, unrank_arrangement(l.arrangement_size, index / words),
                       full_digits(d, digits_of(BigInt(index % words), l)));
}

BigInt rank(const DomainSpec& d, const SignedPermutation& element) {
  validate(d);
  if (element.degree() != d.n) throw DomainError("rank: degree mismatch");
  const Layout l = layout_of(d);
  std::vector<int> arr;
  std::vector<int> signs;
  if (d.kind == DomainKind::B) {
    for (int v : element.images()) {
      arr.push_back(std::abs(v));
      signs.push_back(v < 0);
    }
  } else if (d.kind == DomainKind::CB) {
    if (!is_cyclic(element)) throw DomainError("rank: element is not cyclic");
    for (int e : cyclic_word(element, d.n).entries) {
      arr.push_back(std::abs(e));
      signs.push_back(e < 0);
    }
    arr.pop_back();
  } else {
    throw DomainError("rank is implemented for B and CB only");
  }
  BigInt w = 0;
  for (auto it = signs.rbegin(); it != signs.rend(); ++it) w = w * 2 + *it;
  return rank_arrangement(arr) * word_count(l) + w;
}

void for_each_in_range(const DomainSpec& d, std::uint64_t begin, std::uint64_t end,
                       const std::function<void(const SignedPermutation&)>& fn) {
  require_signed(d);
  walk_range(d, begin, end, [&](const std::vector<int>& arr, const std::vector<int>& digits) {
    fn(build_signed(d, arr, digits));
  });
}

void for_each_colored_in_range(const DomainSpec& d, std::uint64_t begin, std::uint64_t end,
                               const std::function<void(const ColoredPermutation&)>& fn) {
  require_colored(d);
  walk_range(d, begin, end, [&](const std::vector<int>& arr, const std::vector<int>& digits) {
    fn(build_colored(d, arr, digits));
  });
}

void for_each(const DomainSpec& d, const std::function<void(const SignedPermutation&)>& fn,
              const Budget& budget) {
  require_signed(d);
  for_each_in_range(d, 0, checked_cardinality(d, budget), fn);
}

void for_each_colored(const DomainSpec& d,
                      const std::function<void(const ColoredPermutation&)>& fn,
                      const Budget& budget) {
  require_colored(d);
  for_each_colored_in_range(d, 0, checked_cardinality(d, budget), fn);
}

void for_each_colored_group(int n, int r,
                            const std::function<void(const ColoredPermutation&)>& fn) {
  if (n < 0 || r < 1) throw DomainError("for_each_colored_group: bad parameters");
  std::vector<int> omega = iota_vec(n);
  std::uint64_t words = 1;
  for (int i = 0; i < n; ++i) words *= static_cast<std::uint64_t>(r);
  const Layout l{n, n, r};
  do {
    for (std::uint64_t w = 0; w < words; ++w) fn(ColoredPermutation(r, omega, digits_of(w, l)));
  } while (std::next_permutation(omega.begin(), omega.end()));
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(mix(seed + mix(stream))) {}

std::uint64_t CounterRng::mix(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t CounterRng::next() noexcept {
  ++counter_;
  return mix(key_ + counter_ * 0x9E3779B97F4A7C15ULL);
}

std::uint64_t CounterRng::uniform(std::uint64_t bound) noexcept {
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t x = next();
    if (x >= threshold) return x % bound;
  }
}

SignedPermutation sample(const DomainSpec& d, CounterRng& rng) {
  require_signed(d);
  const int n = d.n;
  switch (d.kind) {
    case DomainKind::B:
    case DomainKind::D: {
      std::vector<int> arr = iota_vec(n);
      fisher_yates(arr, rng);
      std::vector<int> signs = random_bits(n, rng);
      if (d.kind == DomainKind::D && n > 0 &&
          std::count(signs.begin(), signs.end(), 1) % 2 != 0) {
        signs.back() ^= 1;
      }
      return build_signed(d, arr, signs);
    }
    case DomainKind::S: {
      std::vector<int> arr = iota_vec(n);
      fisher_yates(arr, rng);
      return build_signed(d, arr, {});
    }
    case DomainKind::CB:
    case DomainKind::CD:
    case DomainKind::CDbar:
    case DomainKind::CS: {
      std::vector<int> arr = iota_vec(n - 1);
      fisher_yates(arr, rng);
      std::vector<int> signs =
          d.kind == DomainKind::CS ? std::vector<int>(static_cast<std::size_t>(n), 0) : random_bits(n, rng);
      if (d.kind == DomainKind::CD || d.kind == DomainKind::CDbar) {
        const bool even = std::count(signs.begin(), signs.end(), 1) % 2 == 0;
        if (even != (d.kind == DomainKind::CD)) signs.back() ^= 1;
      }
      return build_signed(d, arr, signs);
    }
    case DomainKind::CSnr: break;
  }
  throw DomainError("sample: unsupported domain");
}

ColoredPermutation sample_colored(const DomainSpec& d, CounterRng& rng) {
  require_colored(d);
  std::vector<int> arr = iota_vec(d.n - 1);
  fisher_yates(arr, rng);
  std::vector<int> tau(static_cast<std::size_t>(d.n));
  for (auto& c : tau) c = static_cast<int>(rng.uniform(static_cast<std::uint64_t>(d.r)));
  if (d.color) {
    int sum = 0;
    for (std::size_t i = 0; i + 1 < tau.size(); ++i) sum = (sum + tau[i]) % d.r;
    tau.back() = ((*d.color - sum) % d.r + d.r) % d.r;
  }
  return build_colored(d, arr, tau);
}

}  // namespace sigperm
