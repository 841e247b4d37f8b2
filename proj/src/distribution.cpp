#include "sigperm/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <vector>

#include "sigperm/errors.hpp"

namespace sigperm {

namespace {

bool is_cyclic_domain(DomainKind k) {
  return k == DomainKind::CB || k == DomainKind::CD || k == DomainKind::CDbar ||
         k == DomainKind::CS || k == DomainKind::CSnr;
}

std::int64_t colored_value(const ColoredStats& s, Statistic stat) {
  switch (stat) {
    case Statistic::des: return s.des;
    case Statistic::maj: return s.maj;
    case Statistic::neg: return s.col;
    case Statistic::fmaj: return s.fmaj;
  }
  return 0;
}

template <class Key>
using Partial = std::map<Key, std::uint64_t>;

template <class Key, class Visit>
std::map<Key, BigInt> count_sharded(const DomainSpec& domain, const RunOptions& options,
                                    const Budget& budget, Visit&& key_of) {
  const std::uint64_t size = checked_cardinality(domain, budget);
  std::vector<Partial<Key>> partials(std::max(1u, options.threads));
  run_sharded(size, options, [&](unsigned w, std::uint64_t b, std::uint64_t e) {
    auto& local = partials[w];
    if (is_colored(domain)) {
      for_each_colored_in_range(domain, b, e,
                                [&](const ColoredPermutation& p) { ++local[key_of(p)]; });
    } else {
      for_each_in_range(domain, b, e, [&](const SignedPermutation& p) { ++local[key_of(p)]; });
    }
  });
  std::map<Key, BigInt> out;
  for (const auto& part : partials) {
    for (const auto& [k, c] : part) out[k] += c;
  }
  return out;
}

template <class Map>
BigInt sum_counts(const Map& m) {
  BigInt t = 0;
  for (const auto& [k, c] : m) t += c;
  return t;
}

}  // namespace

BigInt DistributionTable::total() const { return sum_counts(counts); }

void DistributionTable::merge(const DistributionTable& other) {
  for (const auto& [k, c] : other.counts) counts[k] += c;
}

BigInt RefinedTable::total() const { return sum_counts(counts); }

void RefinedTable::merge(const RefinedTable& other) {
  for (const auto& [k, c] : other.counts) counts[k] += c;
}

DistributionTable exact_distribution(const DomainSpec& domain, Statistic stat,
                                     const RunOptions& options, const Budget& budget) {
  struct KeyOf {
    Statistic stat;
    std::int64_t operator()(const SignedPermutation& p) const { return stat_value(stats(p), stat); }
    std::int64_t operator()(const ColoredPermutation& p) const {
      return colored_value(colored_stats(p), stat);
    }
  };
  DistributionTable t{domain, stat, {}};
  t.counts = count_sharded<std::int64_t>(domain, options, budget, KeyOf{stat});
  return t;
}

RefinedTable refined_descent_table(const DomainSpec& domain, const RunOptions& options,
                                   const Budget& budget) {
  validate(domain);
  if (is_colored(domain)) throw DomainError("refined tables cover signed domains only");
  const bool cyclic = is_cyclic_domain(domain.kind);
  const int width = cyclic ? domain.n - 1 : domain.n;
  if (width > kMaxDescentSetDegree) throw DomainError("refined table: degree too large");
  struct KeyOf {
    bool cyclic;
    int width;
    std::uint64_t operator()(const SignedPermutation& p) const {
      return (cyclic ? truncated_descent_set(p, width) : descent_set(p)).bits();
    }
    std::uint64_t operator()(const ColoredPermutation&) const { return 0; }
  };
  RefinedTable t{domain, width, {}};
  t.counts = count_sharded<std::uint64_t>(domain, options, budget, KeyOf{cyclic, width});
  return t;
}

MomentReport exact_moments(const DistributionTable& table) {
  BigInt total = 0;
  BigInt s1 = 0;
  BigInt s2 = 0;
  for (const auto& [v, c] : table.counts) {
    total += c;
    s1 += c * v;
    s2 += c * v * v;
  }
  if (total == 0) throw DomainError("exact_moments: empty table");
  const BigRational mean(s1, total);
  const BigRational second(s2, total);
  return {mean, second - mean * mean};
}

MomentReport theoretical_moments(Statistic stat, int n) {
  if (n < 1) throw DomainError("theoretical_moments: n must be at least 1");
  const BigInt m = n;
  switch (stat) {
    case Statistic::des: return {BigRational(m, 2), BigRational(m + 1, 12)};
    case Statistic::fmaj:
      return {BigRational(m * m, 2), BigRational(4 * m * m * m + 6 * m * m - m, 36)};
    default: break;
  }
  throw DomainError("theoretical_moments: only des and fmaj have closed forms");
}

double standard_normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

NormalityReport normality_diagnostics(const DomainSpec& domain, Statistic stat,
                                      std::uint64_t samples, std::uint64_t seed,
                                      unsigned threads) {
  validate(domain);
  if (domain.kind != DomainKind::CB && domain.kind != DomainKind::CD &&
      domain.kind != DomainKind::CDbar) {
    throw DomainError("normality diagnostics cover CB, CD and CDbar");
  }
  if (stat != Statistic::des && stat != Statistic::fmaj) {
    throw DomainError("normality diagnostics cover des and fmaj");
  }
  if (domain.n < 5) throw DomainError("normality diagnostics need n >= 5");
  if (samples < 1000) throw DomainError("normality diagnostics need at least 1000 samples");

  std::vector<std::int64_t> values(samples);
  run_sharded(samples, RunOptions{{}, threads}, [&](unsigned, std::uint64_t b, std::uint64_t e) {
    for (std::uint64_t i = b; i < e; ++i) {
      CounterRng rng(seed, i);
      values[i] = stat_value(stats(sample(domain, rng)), stat);
    }
  });
  std::sort(values.begin(), values.end());

  const MomentReport theory = theoretical_moments(stat, domain.n);
  const double mu = static_cast<double>(theory.mean);
  const double sigma = std::sqrt(static_cast<double>(theory.variance));
  const double count = static_cast<double>(samples);

  NormalityReport r;
  r.domain = domain;
  r.stat = stat;
  r.sample_count = samples;
  r.seed = seed;
  double sum = 0;
  for (auto v : values) sum += static_cast<double>(v);
  r.mean = sum / count;
  double m2 = 0, m3 = 0, m4 = 0;
  for (auto v : values) {
    const double d = static_cast<double>(v) - r.mean;
    m2 += d * d;
    m3 += d * d * d;
    m4 += d * d * d * d;
  }
  m2 /= count;
  m3 /= count;
  m4 /= count;
  r.variance = m2;
  r.skewness = m2 > 0 ? m3 / std::pow(m2, 1.5) : 0;
  r.excess_kurtosis = m2 > 0 ? m4 / (m2 * m2) - 3 : 0;

  // Walk distinct values; below[v] = #(< v), upto = #(<= v).
  double ks = 0;
  double ks_cc = 0;
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t j = i;
    while (j < values.size() && values[j] == values[i]) ++j;
    const double v = static_cast<double>(values[i]);
    const double below = static_cast<double>(i) / count;
    const double upto = static_cast<double>(j) / count;
    const double f = standard_normal_cdf((v - mu) / sigma);
    ks = std::max({ks, std::abs(upto - f), std::abs(below - f)});
    ks_cc = std::max({ks_cc, std::abs(upto - standard_normal_cdf((v + 0.5 - mu) / sigma)),
                      std::abs(below - standard_normal_cdf((v - 0.5 - mu) / sigma))});
    i = j;
  }
  r.ks_distance = ks;
  r.ks_continuity = ks_cc;
  return r;
}

}  // namespace sigperm
