#pragma once

#include <cstdint>
#include <map>

#include <boost/multiprecision/cpp_int.hpp>

#include "sigperm/enumeration.hpp"
#include "sigperm/sharding.hpp"
#include "sigperm/statistics.hpp"

namespace sigperm {

using BigRational = boost::multiprecision::cpp_rational;

/// Law of one statistic over a domain: value -> number of elements.
/// On CSnr, Statistic::neg reads the color sum col.
struct DistributionTable {
  DomainSpec domain;
  Statistic stat = Statistic::des;
  std::map<std::int64_t, BigInt> counts;

  BigInt total() const;
  void merge(const DistributionTable& other);
};

/// Descent-set counts keyed by the bit set. Cyclic domains of degree N key on
/// Des(pi) cap {0..N-2}, so `width` is N-1 there and n elsewhere.
struct RefinedTable {
  DomainSpec domain;
  int width = 0;
  std::map<std::uint64_t, BigInt> counts;

  BigInt total() const;
  void merge(const RefinedTable& other);
};

struct MomentReport {
  BigRational mean;
  BigRational variance;

  bool operator==(const MomentReport&) const = default;
};

struct NormalityReport {
  DomainSpec domain;
  Statistic stat = Statistic::des;
  std::uint64_t sample_count = 0;
  std::uint64_t seed = 0;
  double mean = 0;
  double variance = 0;
  double skewness = 0;
  double excess_kurtosis = 0;
  // sup |F_emp - Phi| of the standardized samples.
  double ks_distance = 0;
  // Same with the normal CDF evaluated at half-integers (values are integers).
  double ks_continuity = 0;
};

// Shards and threads only split the work; the table is the same for any split
// (a shard yields its partial counts).
DistributionTable exact_distribution(const DomainSpec& domain, Statistic stat,
                                     const RunOptions& options = {}, const Budget& budget = {});

RefinedTable refined_descent_table(const DomainSpec& domain, const RunOptions& options = {},
                                   const Budget& budget = {});

MomentReport exact_moments(const DistributionTable& table);

// des: (n/2, (n+1)/12); fmaj: (n^2/2, (4n^3+6n^2-n)/36).
MomentReport theoretical_moments(Statistic stat, int n);

double standard_normal_cdf(double x);

// Sample i is drawn from CounterRng(seed, i), so the report does not depend
// on the thread count.
NormalityReport normality_diagnostics(const DomainSpec& domain, Statistic stat,
                                      std::uint64_t samples, std::uint64_t seed,
                                      unsigned threads = 1);

}  // namespace sigperm
