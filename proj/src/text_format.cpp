#include "sigperm/text_format.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <utility>
#include <vector>

#include "sigperm/errors.hpp"

namespace sigperm {

namespace {

struct Entry {
  int value = 0;
  int color = 0;
};

class Parser {
 public:
  Parser(std::string_view text, bool colored) : s_(text), colored_(colored) {}

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip();
    return pos_ == s_.size();
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& what) const {
    if (pos_ >= s_.size()) throw ParseError(what + ", found end of input", pos_);
    throw ParseError(what + ", found '" + s_[pos_] + "'", pos_);
  }

  int number(bool allow_sign) {
    skip();
    const std::size_t start = pos_;
    bool negative = false;
    if (allow_sign && pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      negative = s_[pos_] == '-';
      ++pos_;
    }
    const std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected a digit");
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s_.data() + digits, s_.data() + pos_, v);
    if (ec != std::errc{} || ptr != s_.data() + pos_) {
      throw ParseError("integer out of range", start);
    }
    return negative ? -v : v;
  }

  Entry entry() {
    Entry e;
    e.value = number(true);
    if (colored_ && accept('^')) e.color = number(false);
    return e;
  }

  std::vector<Entry> bracketed_list(char open, char close, bool allow_empty) {
    expect(open);
    std::vector<Entry> out;
    if (allow_empty && accept(close)) return out;
    out.push_back(entry());
    while (!accept(close)) {
      expect(',');
      out.push_back(entry());
    }
    return out;
  }

  std::vector<Entry> one_line() {
    auto out = bracketed_list('[', ']', true);
    if (!at_end()) fail("trailing input");
    return out;
  }

  std::vector<std::vector<Entry>> cycles() {
    std::vector<std::vector<Entry>> out;
    skip();
    const std::size_t open = pos_;
    expect('(');
    if (accept(')')) {
      if (!at_end()) fail("trailing input after empty cycle");
      return out;
    }
    pos_ = open;
    while (!at_end()) {
      if (peek() != '(') fail("expected '('");
      out.push_back(bracketed_list('(', ')', false));
    }
    return out;
  }

 private:
  std::string_view s_;
  bool colored_;
  std::size_t pos_ = 0;
};

int infer_degree(const std::vector<std::vector<Entry>>& cycles, std::optional<int> degree) {
  int n = 0;
  for (const auto& c : cycles) {
    for (const auto& e : c) {
      if (e.value == 0) throw MalformedNotation("entry 0 is not allowed");
      n = std::max(n, std::abs(e.value));
    }
  }
  if (degree) {
    if (*degree < n) {
      throw MalformedNotation("entry of magnitude " + std::to_string(n) + " exceeds degree " +
                              std::to_string(*degree));
    }
    n = *degree;
  }
  if (n > kMaxDegree) throw MalformedNotation("degree exceeds cap");
  return n;
}

CycleNotation to_notation(const std::vector<std::vector<Entry>>& raw, std::optional<int> degree) {
  CycleNotation c;
  c.n = infer_degree(raw, degree);
  std::vector<bool> seen(static_cast<std::size_t>(c.n) + 1, false);
  for (const auto& cyc : raw) {
    SignedCycle sc;
    for (const auto& e : cyc) {
      sc.entries.push_back(e.value);
      auto mag = static_cast<std::size_t>(std::abs(e.value));
      if (seen[mag]) {
        throw MalformedNotation("magnitude " + std::to_string(mag) + " appears twice");
      }
      seen[mag] = true;
    }
    c.cycles.push_back(std::move(sc));
  }
  if (degree) {
    for (int m = 1; m <= c.n; ++m) {
      if (!seen[static_cast<std::size_t>(m)]) c.cycles.push_back(SignedCycle{{m}});
    }
  }
  return c;
}

}  // namespace

SignedPermutation parse_one_line(std::string_view text) {
  Parser p(text, false);
  std::vector<int> images;
  for (const auto& e : p.one_line()) images.push_back(e.value);
  return SignedPermutation(std::move(images));
}

CycleNotation parse_cycles(std::string_view text, std::optional<int> degree) {
  Parser p(text, false);
  CycleNotation c = to_notation(p.cycles(), degree);
  from_cycles(c);
  return c;
}

SignedPermutation parse_permutation(std::string_view text, std::optional<int> degree) {
  Parser p(text, false);
  if (p.peek() == '[') {
    SignedPermutation s = parse_one_line(text);
    if (degree && s.degree() != *degree) {
      throw MalformedNotation("one-line text has degree " + std::to_string(s.degree()) +
                              ", expected " + std::to_string(*degree));
    }
    return s;
  }
  if (p.peek() == '(') return from_cycles(parse_cycles(text, degree));
  p.fail("expected '[' or '('");
}

ColoredPermutation parse_colored(std::string_view text, int r, std::optional<int> degree) {
  Parser p(text, true);
  std::vector<int> omega;
  std::vector<int> tau;
  if (p.peek() == '[') {
    for (const auto& e : p.one_line()) {
      omega.push_back(e.value);
      tau.push_back(e.color);
    }
  } else if (p.peek() == '(') {
    const auto raw = p.cycles();
    CycleNotation c = to_notation(raw, degree);
    const SignedPermutation w = from_cycles(c);
    omega.assign(w.images().begin(), w.images().end());
    tau.assign(omega.size(), 0);
    for (const auto& cyc : raw) {
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        const auto& next = cyc[(i + 1) % cyc.size()];
        tau[static_cast<std::size_t>(std::abs(cyc[i].value)) - 1] = next.color;
      }
    }
  } else {
    p.fail("expected '[' or '('");
  }
  if (degree && static_cast<int>(omega.size()) != *degree) {
    throw MalformedNotation("colored text has the wrong degree");
  }
  return ColoredPermutation(r, std::move(omega), std::move(tau));
}

std::string format_one_line(const SignedPermutation& sigma) {
  std::string out = "[";
  for (int i = 1; i <= sigma.degree(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(sigma(i));
  }
  return out + "]";
}

std::string format_cycles(const CycleNotation& c, bool pretty) {
  std::string out;
  for (const auto& cyc : c.cycles) {
    if (pretty && cyc.entries.size() == 1 && cyc.entries[0] > 0) continue;
    out += '(';
    for (std::size_t i = 0; i < cyc.entries.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(cyc.entries[i]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::string format_cycles(const SignedPermutation& sigma, bool pretty) {
  return format_cycles(to_canonical_cycles(sigma), pretty);
}

std::string format_colored(const ColoredPermutation& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.omega().size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(p.omega()[i]);
    if (p.tau()[i] != 0) out += '^' + std::to_string(p.tau()[i]);
  }
  return out + "]";
}

}  // namespace sigperm
