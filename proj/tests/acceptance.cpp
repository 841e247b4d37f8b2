// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "sigperm/colored.hpp"
#include "sigperm/cycle_notation.hpp"
#include "sigperm/descent_transfer.hpp"
#include "sigperm/distribution.hpp"
#include "sigperm/enumeration.hpp"
#include "sigperm/statistics.hpp"
#include "sigperm/text_format.hpp"
#include "sigperm/verify.hpp"

using namespace sigperm;

namespace {

constexpr std::uint64_t kSeed = 2025;

int failures = 0;

void report(int id, bool pass, const std::string& what, const std::string& detail,
            std::chrono::steady_clock::time_point start) {
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2fs", secs);
  std::cout << (pass ? "PASS" : "FAIL") << " AC" << id << ' ' << what << " [" << timing << "] "
            << detail << std::endl;
  failures += !pass;
}

struct Sweep {
  bool pass = true;
  std::uint64_t checked = 0;
  std::string first_failure;

  void add(const VerifyReport& r, const std::string& label) {
    checked += r.checked;
    if (!r.passed && pass) first_failure = label + ": " + r.counterexample;
    pass = pass && r.passed;
  }
  std::string detail() const {
    return "checked=" + std::to_string(checked) + (pass ? "" : " first failure " + first_failure);
  }
};

VerifyReport claim(Claim c, int n, int r = 2) {
  VerifyConfig cfg;
  cfg.claim = c;
  cfg.n = n;
  cfg.r = r;
  return verify(cfg);
}

void ac1() {
  const auto t = std::chrono::steady_clock::now();
  Sweep s;
  for (int n = 0; n <= 7; ++n) s.add(claim(Claim::phi_descents, n), "n=" + std::to_string(n));
  report(1, s.pass, "descent transfer exhaustive n<=7", s.detail(), t);
}

void ac2() {
  const auto t = std::chrono::steady_clock::now();
  Sweep s;
  for (int n = 0; n <= 6; ++n) {
    s.add(claim(Claim::bijection_d, n), "D n=" + std::to_string(n));
    s.add(claim(Claim::bijection_dbar, n), "Dbar n=" + std::to_string(n));
  }
  report(2, s.pass, "bijections onto B_n from C_D and its complement n<=6", s.detail(), t);
}

void ac3() {
  const auto t = std::chrono::steady_clock::now();
  Sweep s;
  for (int n = 0; n <= 6; ++n) s.add(claim(Claim::inverses, n), "n=" + std::to_string(n));
  report(3, s.pass, "inverse maps exhaustive n<=6", s.detail(), t);
}

void ac4() {
  const auto t = std::chrono::steady_clock::now();
  Sweep s;
  std::string digests;
  for (int n = 0; n <= 6; ++n) {
    const VerifyReport r = claim(Claim::corollary_counts, n);
    s.add(r, "n=" + std::to_string(n));
    if (n == 6 && r.digest) {
      char buf[17];
      std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(*r.digest));
      digests = " digest(n=6)=" + std::string(buf);
    }
  }
  report(4, s.pass, "refined descent tables of B_n, C_D, complement agree n<=6", s.detail() + digests, t);
}

void ac5() {
  const auto t = std::chrono::steady_clock::now();
  std::ostringstream bad;
  auto expect = [&](const std::string& label, const std::string& got, const std::string& want) {
    if (got != want) bad << label << " gave " << got << " expected " << want << "; ";
  };
  auto des = [](const SignedPermutation& s) {
    std::string out = "{";
    for (int d : descent_set(s).members()) out += (out.size() > 1 ? "," : "") + std::to_string(d);
    return out + "}";
  };
  const SignedPermutation pi = parse_permutation("[1,-3,-2,5,6,4]");
  const SignedPermutation sigma = parse_permutation("[-3,1,2,-5,-4,6]");
  expect("composition", format_one_line(compose(pi, sigma)), "[2,1,-3,-6,-5,4]");
  expect("cycle decomposition", format_one_line(parse_permutation("(-3,2,1)(-5,-4)(6)")),
         format_one_line(sigma));
  expect("canonical form", format_cycles(sigma), "(-4,-5)(2,1,-3)(6)");
  const StatRecord st = stats(sigma);
  expect("statistics",
         "des=" + std::to_string(st.des) + " maj=" + std::to_string(st.maj) + " neg=" +
             std::to_string(st.neg) + " fmaj=" + std::to_string(st.fmaj),
         "des=2 maj=3 neg=3 fmaj=9");
  expect("small Phi", format_one_line(capital_phi(parse_permutation("(-4,-1,2,5,-3,-6,7)"))),
         "[1,2,-6,-3,-5,4]");
  const SignedPermutation big = phi_plus(parse_permutation("(1,-4,8,-6,11,2,-3,7,-5,10,12,9,13)"));
  expect("13-element phi", format_one_line(big), "[-5,-3,2,7,8,10,-4,-6,12,11,1,9]");
  expect("13-element descents", des(big), "{0,6,7,9,10}");
  const SignedPermutation minus = capital_phi(parse_permutation("(3,4,8,-1,5,7,2,-6,-9)"));
  expect("negative-half Phi", format_one_line(minus), "[4,-1,5,8,7,-6,3,2]");
  expect("negative-half descents", des(minus), "{1,4,5,7}");
  const std::string msg = bad.str();
  report(5, msg.empty(), "worked examples bit-exact", msg.empty() ? "9 values match" : msg, t);
}

void ac6() {
  const auto t = std::chrono::steady_clock::now();
  bool pass = true;
  std::ostringstream note;
  std::uint64_t checked = 0;
  for (int n = 5; n <= 7; ++n) {
    for (DomainKind k : {DomainKind::CB, DomainKind::CD, DomainKind::CDbar}) {
      for (Statistic s : {Statistic::des, Statistic::fmaj}) {
        const DomainSpec d{k, n};
        const DistributionTable tab = exact_distribution(d, s);
        checked += static_cast<std::uint64_t>(tab.total());
        const MomentReport got = exact_moments(tab);
        const MomentReport want = theoretical_moments(s, n);
        if (got != want) {
          pass = false;
          note << describe(d) << (s == Statistic::des ? " des" : " fmaj") << " mean " << got.mean
               << " var " << got.variance << "; ";
        }
      }
    }
  }
  note << "checked=" << checked
       << " against des (n/2, (n+1)/12) and fmaj (n^2/2, (4n^3+6n^2-n)/36)";
  report(6, pass, "exact moments on CB, CD, CDbar for 5<=n<=7", note.str(), t);
}

void ac7() {
  const auto t = std::chrono::steady_clock::now();
  Sweep s;
  for (int n = 0; n <= 7; ++n) s.add(claim(Claim::elizalde_equivalence, n), "n=" + std::to_string(n));
  report(7, s.pass, "classic reduction equals Phi on C_S n<=7", s.detail(), t);
}

void ac8() {
  const auto t = std::chrono::steady_clock::now();
  Sweep s;
  for (int n = 1; n <= 3; ++n) {
    for (int r = 1; r <= 3; ++r) {
      s.add(claim(Claim::colored, n, r), "n=" + std::to_string(n) + " r=" + std::to_string(r));
    }
  }
  report(8, s.pass, "colored transfer n<=3 r<=3", s.detail(), t);
}

void ac9() {
  const auto t = std::chrono::steady_clock::now();
  bool pass = true;
  std::uint64_t checked = 0;
  std::int64_t max_fmaj_gap = 0;
  bool tight = true;
  std::string first;
  for (int n = 1; n <= 7; ++n) {
    for_each({DomainKind::CB, n}, [&](const SignedPermutation& pi) {
      ++checked;
      const StatRecord a = stats(pi);
      const StatRecord b = stats(capital_phi(pi));
      const std::int64_t dg = a.des - b.des;
      const std::int64_t fg = a.fmaj - b.fmaj;
      max_fmaj_gap = std::max(max_fmaj_gap, fg);
      tight = tight && fg <= 2 * n - 1;
      if ((dg != 0 && dg != 1) || fg < 0 || fg > 2 * n + 1) {
        if (pass) first = format_one_line(pi);
        pass = false;
      }
    });
  }
  report(9, pass, "statistic gaps des in {0,1}, fmaj in [0,2n+1] for C_{B,n} n<=7",
         "checked=" + std::to_string(checked) + " largest fmaj gap " + std::to_string(max_fmaj_gap) +
             (tight ? ", also within 2(n-1)+1" : ", exceeds 2(n-1)+1") +
             (pass ? "" : " first failure " + first),
         t);
}

void ac10() {
  const auto t = std::chrono::steady_clock::now();
  bool pass = true;
  std::ostringstream note;
  note.precision(4);
  for (Statistic s : {Statistic::des, Statistic::fmaj}) {
    const double ks_limit = s == Statistic::des ? 0.01 : 0.015;
    const char* name = s == Statistic::des ? "des" : "fmaj";
    double prev_ks = 2;
    bool monotone = true;
    NormalityReport last;
    note << name << ": KS";
    for (int n : {50, 200, 800}) {
      last = normality_diagnostics({DomainKind::CB, n}, s, 100000, kSeed);
      note << ' ' << last.ks_distance;
      monotone = monotone && last.ks_distance <= prev_ks;
      prev_ks = last.ks_distance;
    }
    const bool shape = std::abs(last.skewness) <= 0.1 && std::abs(last.excess_kurtosis) <= 0.2;
    const bool ks_ok = last.ks_distance <= ks_limit;
    note << " (n=50,200,800)" << (monotone ? " non-increasing" : " NOT non-increasing")
         << "; n=800 skew " << last.skewness << " exkurt " << last.excess_kurtosis << " KS "
         << last.ks_distance << (ks_ok ? " <= " : " > ") << ks_limit << " (half-integer KS "
         << last.ks_continuity << "); ";
    pass = pass && monotone && shape && ks_ok;
  }
  note << "seed " << kSeed;
  report(10, pass, "normality diagnostics on C_B, 1e5 samples", note.str(), t);
}

void ac11() {
  const auto t = std::chrono::steady_clock::now();
  VerifyConfig cfg;
  cfg.claim = Claim::order_swap_properties;
  cfg.n = 9;
  cfg.samples = 10000;
  cfg.seed = kSeed;
  const VerifyReport r = verify(cfg);
  report(11, r.passed, "traced runs on 1e4 random elements of C+_{B,10}",
         "checked=" + std::to_string(r.checked) + (r.passed ? "" : " first failure " + r.counterexample), t);
}

}  // namespace

int main() {
  ac1();
  ac2();
  ac3();
  ac4();
  ac5();
  ac6();
  ac7();
  ac8();
  ac9();
  ac10();
  ac11();
  std::cout << (11 - failures) << "/11 criteria pass" << std::endl;
  return failures == 0 ? 0 : 1;
}
