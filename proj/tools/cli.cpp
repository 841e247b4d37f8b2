#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sigperm/colored.hpp"
#include "sigperm/cycle_notation.hpp"
#include "sigperm/descent_transfer.hpp"
#include "sigperm/distribution.hpp"
#include "sigperm/elizalde.hpp"
#include "sigperm/enumeration.hpp"
#include "sigperm/errors.hpp"
#include "sigperm/statistics.hpp"
#include "sigperm/text_format.hpp"
#include "sigperm/verify.hpp"

namespace sigperm::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Config {
  std::string fn;
  std::string domain = "B";
  int n = 1;
  int r = 2;
  std::optional<int> color;
  std::string stat = "des";
  std::string claim;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  std::string format = "text";
  std::string shard = "0/1";
  unsigned threads = 1;
  bool instrument = false;
  bool allow_big = false;
  bool pretty = false;
  bool refined = false;
  bool cycles = false;
  std::string text;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kFunctions = {"phi", "Phi", "psi", "PsiD", "PsiDbar",
                                             "phiS", "PhiColored", "PsiColored"};
const std::vector<std::string> kDomains = {"B", "D", "CB", "CD", "CDbar", "S", "CS", "CSnr"};
const std::vector<std::string> kStats = {"des", "maj", "neg", "fmaj"};
const std::vector<std::string> kFormats = {"text", "json", "csv"};

Statistic parse_stat(const std::string& s) {
  if (s == "des") return Statistic::des;
  if (s == "maj") return Statistic::maj;
  if (s == "neg") return Statistic::neg;
  return Statistic::fmaj;
}

Shard parse_shard(const std::string& s) {
  const auto slash = s.find('/');
  Shard sh;
  auto num = [&](std::string_view part, std::uint64_t& v) {
    const auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    return ec == std::errc{} && p == part.data() + part.size() && !part.empty();
  };
  const std::string_view view(s);
  if (slash == std::string::npos || !num(view.substr(0, slash), sh.index) ||
      !num(view.substr(slash + 1), sh.total) || sh.total == 0 || sh.index >= sh.total) {
    throw UsageError("--shard expects i/t with 0 <= i < t, got '" + s + "'");
  }
  return sh;
}

DomainSpec domain_of(const Config& c) {
  DomainSpec d;
  d.kind = *parse_domain_kind(c.domain);
  d.n = c.n;
  if (d.kind == DomainKind::CSnr) {
    d.r = c.r;
    d.color = c.color;
  }
  validate(d);
  return d;
}

RunOptions run_options(const Config& c) { return RunOptions{parse_shard(c.shard), std::max(1u, c.threads)}; }

Budget budget_of(const Config& c) {
  Budget b;
  b.allow_big = c.allow_big;
  return b;
}

Json domain_json(const DomainSpec& d) {
  Json j;
  j["domain"] = std::string(domain_name(d.kind));
  j["n"] = d.n;
  if (d.kind == DomainKind::CSnr) {
    j["r"] = d.r;
    if (d.color) j["color"] = *d.color;
  }
  return j;
}

bool is_colored_fn(const std::string& fn) { return fn == "PhiColored" || fn == "PsiColored"; }

std::string render(const SignedPermutation& s, const Config& c) {
  return c.cycles ? format_cycles(s, c.pretty) : format_one_line(s);
}

int emit_permutation_result(const Config& c, std::ostream& out, const std::string& input,
                            const std::vector<std::pair<std::string, std::string>>& outputs) {
  if (c.format == "json") {
    Json j;
    j["fn"] = c.fn;
    j["input"] = input;
    for (const auto& [k, v] : outputs) j[k] = v;
    out << j.dump() << '\n';
  } else if (c.format == "csv") {
    out << "fn,input";
    for (const auto& kv : outputs) out << ',' << kv.first;
    out << '\n' << c.fn << ",\"" << input << '"';
    for (const auto& kv : outputs) out << ",\"" << kv.second << '"';
    out << '\n';
  } else {
    for (const auto& kv : outputs) out << (outputs.size() > 1 ? kv.first + " " : "") << kv.second << '\n';
  }
  return kPass;
}

int cmd_map(const Config& c, std::ostream& out) {
  if (is_colored_fn(c.fn)) {
    const ColoredPermutation p = parse_colored(c.text, c.r);
    ColoredPermutation q = p;
    if (c.fn == "PhiColored") {
      q = colored_phi(p);
    } else {
      if (!c.color) throw UsageError("PsiColored needs --color");
      q = colored_psi(p, *c.color);
    }
    return emit_permutation_result(c, out, format_colored(p), {{"output", format_colored(q)}});
  }
  const SignedPermutation s = parse_permutation(c.text);
  SignedPermutation result;
  if (c.fn == "phi") result = phi_plus(s);
  else if (c.fn == "Phi") result = capital_phi(s);
  else if (c.fn == "psi") result = psi_plus(s);
  else if (c.fn == "PsiD") result = capital_psi_d(s);
  else if (c.fn == "PsiDbar") result = capital_psi_dbar(s);
  else result = phi_classic(s);
  return emit_permutation_result(c, out, render(s, c), {{"output", render(result, c)}});
}

// Preimages under the named map, each checked by mapping forward again.
int cmd_invert(const Config& c, std::ostream& out, std::ostream& err) {
  if (is_colored_fn(c.fn)) {
    if (!c.color) throw UsageError("inverting the colored map needs --color");
    const ColoredPermutation q = parse_colored(c.text, c.r);
    const ColoredPermutation p = colored_psi(q, *c.color);
    if (colored_phi(p) != q) {
      err << "round trip failed for " << format_colored(q) << '\n';
      return kViolation;
    }
    return emit_permutation_result(c, out, format_colored(q), {{"preimage", format_colored(p)}});
  }
  const SignedPermutation s = parse_permutation(c.text);
  std::vector<std::pair<std::string, SignedPermutation>> pre;
  std::function<SignedPermutation(const SignedPermutation&)> forward = capital_phi;
  if (c.fn == "phi" || c.fn == "psi" || c.fn == "phiS") {
    pre.emplace_back("preimage", psi_plus(s));
    forward = c.fn == "phiS" ? [](const SignedPermutation& p) { return phi_classic(p); }
                             : [](const SignedPermutation& p) { return phi_plus(p); };
  } else if (c.fn == "PsiD") {
    pre.emplace_back("preimage", capital_psi_d(s));
  } else if (c.fn == "PsiDbar") {
    pre.emplace_back("preimage", capital_psi_dbar(s));
  } else {
    pre.emplace_back("D", capital_psi_d(s));
    pre.emplace_back("Dbar", capital_psi_dbar(s));
  }
  std::vector<std::pair<std::string, std::string>> rendered;
  for (const auto& [name, p] : pre) {
    if (forward(p) != s) {
      err << "round trip failed: " << format_one_line(p) << " does not map to " << format_one_line(s) << '\n';
      return kViolation;
    }
    rendered.emplace_back(name, render(p, c));
  }
  return emit_permutation_result(c, out, render(s, c), rendered);
}

int cmd_stats(const Config& c, std::ostream& out) {
  std::vector<std::pair<std::string, std::int64_t>> fields;
  if (c.text.find('^') != std::string::npos || c.domain == "CSnr") {
    const ColoredStats s = colored_stats(parse_colored(c.text, c.r));
    fields = {{"des", s.des}, {"maj", s.maj}, {"col", s.col}, {"fmaj", s.fmaj}};
  } else {
    const StatRecord s = stats(parse_permutation(c.text));
    fields = {{"des", s.des}, {"maj", s.maj}, {"neg", s.neg}, {"fmaj", s.fmaj}};
  }
  if (c.format == "json") {
    Json j;
    for (const auto& [k, v] : fields) j[k] = v;
    out << j.dump() << '\n';
  } else if (c.format == "csv") {
    out << "des,maj," << fields[2].first << ",fmaj\n";
    out << fields[0].second << ',' << fields[1].second << ',' << fields[2].second << ','
        << fields[3].second << '\n';
  } else {
    out << "des=" << fields[0].second << " maj=" << fields[1].second << ' ' << fields[2].first << '='
        << fields[2].second << " fmaj=" << fields[3].second << '\n';
  }
  return kPass;
}

int cmd_verify(const Config& c, std::ostream& out) {
  const auto claim = parse_claim(c.claim);
  if (!claim) throw UsageError("unknown claim '" + c.claim + "'");
  VerifyConfig v;
  v.claim = *claim;
  v.n = c.n;
  v.r = c.r;
  v.run = run_options(c);
  v.budget = budget_of(c);
  v.seed = c.seed;
  v.samples = c.samples;
  const VerifyReport rep = verify(v);
  char digest[17] = {};
  if (rep.digest) std::snprintf(digest, sizeof digest, "%016llx", static_cast<unsigned long long>(*rep.digest));
  if (c.format == "json") {
    Json j;
    j["claim"] = c.claim;
    j["n"] = c.n;
    if (v.claim == Claim::colored) j["r"] = c.r;
    j["shard"] = c.shard;
    j["passed"] = rep.passed;
    j["checked"] = rep.checked;
    if (!rep.detail.empty()) j["detail"] = rep.detail;
    if (rep.digest) j["digest"] = digest;
    if (!rep.passed) j["counterexample"] = rep.counterexample;
    out << j.dump() << '\n';
  } else {
    out << (rep.passed ? "PASS " : "FAIL ") << c.claim << " n=" << c.n;
    if (v.claim == Claim::colored) out << " r=" << c.r;
    out << " shard=" << c.shard << " checked=" << rep.checked;
    if (rep.digest) out << " digest=" << digest;
    if (!rep.detail.empty()) out << " (" << rep.detail << ')';
    out << '\n';
    if (!rep.passed) out << "counterexample: " << rep.counterexample << '\n';
  }
  return rep.passed ? kPass : kViolation;
}

std::string set_text(std::uint64_t bits, int width) {
  std::string s = "{";
  for (int i = 0; i < width; ++i) {
    if ((bits >> i) & 1u) s += (s.size() > 1 ? "," : "") + std::to_string(i);
  }
  return s + "}";
}

int cmd_tabulate(const Config& c, std::ostream& out) {
  const DomainSpec d = domain_of(c);
  std::vector<std::pair<std::string, std::string>> rows;
  std::string stat = c.stat;
  if (c.refined) {
    stat = "Des";
    const RefinedTable t = refined_descent_table(d, run_options(c), budget_of(c));
    for (const auto& [k, v] : t.counts) rows.emplace_back(set_text(k, t.width), v.str());
  } else {
    const DistributionTable t = exact_distribution(d, parse_stat(c.stat), run_options(c), budget_of(c));
    for (const auto& [k, v] : t.counts) rows.emplace_back(std::to_string(k), v.str());
  }
  if (c.format == "json") {
    Json j = domain_json(d);
    j["stat"] = stat;
    j["counts"] = Json::object();
    for (const auto& [k, v] : rows) j["counts"][k] = v;
    out << j.dump() << '\n';
  } else if (c.format == "csv") {
    out << "value,count\n";
    for (const auto& [k, v] : rows) out << (c.refined ? "\"" + k + "\"" : k) << ',' << v << '\n';
  } else {
    out << "# " << describe(d) << ' ' << stat << '\n';
    for (const auto& [k, v] : rows) out << k << ' ' << v << '\n';
  }
  return kPass;
}

int cmd_sample(const Config& c, std::ostream& out) {
  const DomainSpec d = domain_of(c);
  const std::uint64_t count = c.samples == 0 ? 1 : c.samples;
  std::vector<std::string> items;
  for (std::uint64_t i = 0; i < count; ++i) {
    CounterRng rng(c.seed, i);
    items.push_back(is_colored(d) ? format_colored(sample_colored(d, rng)) : render(sample(d, rng), c));
  }
  if (c.format == "json") {
    Json j = domain_json(d);
    j["seed"] = c.seed;
    j["samples"] = items;
    out << j.dump() << '\n';
  } else {
    if (c.format == "csv") out << "index,element\n";
    for (std::uint64_t i = 0; i < count; ++i) {
      if (c.format == "csv") out << i << ",\"" << items[i] << "\"\n";
      else out << items[i] << '\n';
    }
  }
  return kPass;
}

int cmd_clt(const Config& c, std::ostream& out) {
  const DomainSpec d = domain_of(c);
  const NormalityReport r =
      normality_diagnostics(d, parse_stat(c.stat), c.samples == 0 ? 100000 : c.samples, c.seed, std::max(1u, c.threads));
  Json j = domain_json(d);
  j["stat"] = c.stat;
  j["samples"] = r.sample_count;
  j["seed"] = r.seed;
  j["mean"] = r.mean;
  j["variance"] = r.variance;
  j["skewness"] = r.skewness;
  j["excess_kurtosis"] = r.excess_kurtosis;
  j["ks_distance"] = r.ks_distance;
  j["ks_continuity"] = r.ks_continuity;
  if (c.format == "csv") {
    out << "domain,n,stat,samples,seed,mean,variance,skewness,excess_kurtosis,ks_distance,ks_continuity\n";
    out << c.domain << ',' << c.n << ',' << c.stat << ',' << r.sample_count << ',' << r.seed << ','
        << j["mean"].dump() << ',' << j["variance"].dump() << ',' << j["skewness"].dump() << ','
        << j["excess_kurtosis"].dump() << ',' << j["ks_distance"].dump() << ','
        << j["ks_continuity"].dump() << '\n';
  } else {
    out << j.dump(c.format == "text" ? 2 : -1) << '\n';
  }
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Signed permutation toolkit", "sigperm"};
  app.require_subcommand(1, 1);

  auto fn_opt = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--fn", c.fn, "map to apply")->check(CLI::IsMember(kFunctions));
    if (required) o->required();
  };
  auto domain_opts = [&](CLI::App* sub) {
    sub->add_option("--domain", c.domain, "domain kind")->check(CLI::IsMember(kDomains));
    sub->add_option("--n", c.n, "degree")->check(CLI::Range(0, 1 << 20));
    sub->add_option("--r", c.r, "number of colors")->check(CLI::Range(1, 1 << 16));
    sub->add_option("--color", c.color, "color class");
  };
  auto format_opt = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember(kFormats));
  };
  auto exhaust_opts = [&](CLI::App* sub) {
    sub->add_option("--shard", c.shard, "shard i/t");
    sub->add_option("--threads", c.threads, "worker threads")->check(CLI::Range(1u, 1024u));
    sub->add_flag("--allow-big", c.allow_big, "lift the 2^32 element budget");
  };

  auto* map = app.add_subcommand("map", "apply a map to a permutation");
  fn_opt(map, true);
  map->add_option("--r", c.r, "number of colors")->check(CLI::Range(1, 1 << 16));
  map->add_option("--color", c.color, "target color for PsiColored");
  map->add_flag("--cycles", c.cycles, "print cycle notation");
  map->add_flag("--pretty", c.pretty, "omit length-1 cycles");
  format_opt(map);
  map->add_option("permutation", c.text, "one-line [..] or cycles (..)")->required();

  auto* inv = app.add_subcommand("invert", "preimages under a map");
  fn_opt(inv, true);
  inv->add_option("--r", c.r, "number of colors")->check(CLI::Range(1, 1 << 16));
  inv->add_option("--color", c.color, "color of the preimage");
  inv->add_flag("--cycles", c.cycles, "print cycle notation");
  inv->add_flag("--pretty", c.pretty, "omit length-1 cycles");
  format_opt(inv);
  inv->add_option("permutation", c.text, "one-line [..] or cycles (..)")->required();

  auto* st = app.add_subcommand("stats", "des, maj, neg and fmaj");
  st->add_option("--r", c.r, "number of colors (colored input)")->check(CLI::Range(1, 1 << 16));
  st->add_option("--domain", c.domain, "CSnr reads colored input")->check(CLI::IsMember(kDomains));
  format_opt(st);
  st->add_option("permutation", c.text, "one-line [..] or cycles (..)")->required();

  auto* ver = app.add_subcommand("verify", "exhaustive claim checks");
  ver->add_option("--claim", c.claim, "claim name")->required()->check(CLI::IsMember(
      std::vector<std::string>{"phi-descents", "bijection-D", "bijection-Dbar", "inverses",
                               "corollary-counts", "elizalde-equivalence", "colored", "moments",
                               "order-swap-properties"}));
  ver->add_option("--n", c.n, "degree")->check(CLI::Range(0, 62));
  ver->add_option("--r", c.r, "number of colors")->check(CLI::Range(1, 1 << 16));
  ver->add_option("--seed", c.seed, "seed for sampled claims");
  ver->add_option("--samples", c.samples, "sample count (0 = exhaustive)");
  ver->add_flag("--instrument", c.instrument, "accepted; order-swap-properties always traces");
  format_opt(ver);
  exhaust_opts(ver);

  auto* tab = app.add_subcommand("tabulate", "exact distribution tables");
  domain_opts(tab);
  tab->add_option("--stat", c.stat, "statistic")->check(CLI::IsMember(kStats));
  tab->add_flag("--refined", c.refined, "count descent sets instead");
  format_opt(tab);
  exhaust_opts(tab);

  auto* smp = app.add_subcommand("sample", "uniform random elements");
  domain_opts(smp);
  smp->add_option("--seed", c.seed, "seed");
  smp->add_option("--samples", c.samples, "how many (default 1)");
  smp->add_flag("--cycles", c.cycles, "print cycle notation");
  smp->add_flag("--pretty", c.pretty, "omit length-1 cycles");
  format_opt(smp);

  auto* clt = app.add_subcommand("clt", "normality diagnostics");
  domain_opts(clt);
  clt->add_option("--stat", c.stat, "des or fmaj")->check(CLI::IsMember(std::vector<std::string>{"des", "fmaj"}));
  clt->add_option("--seed", c.seed, "seed");
  clt->add_option("--samples", c.samples, "sample count (default 100000)");
  clt->add_option("--threads", c.threads, "worker threads")->check(CLI::Range(1u, 1024u));
  format_opt(clt);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (map->parsed()) return cmd_map(c, out);
    if (inv->parsed()) return cmd_invert(c, out, err);
    if (st->parsed()) return cmd_stats(c, out);
    if (ver->parsed()) return cmd_verify(c, out);
    if (tab->parsed()) return cmd_tabulate(c, out);
    if (smp->parsed()) return cmd_sample(c, out);
    if (clt->parsed()) return cmd_clt(c, out);
  } catch (const BudgetExceeded& e) {
    err << "budget: " << e.what() << '\n';
    return kBudget;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace sigperm::cli
