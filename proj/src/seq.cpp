#include "lmwb/seq.hpp"

#include <algorithm>
#include <numeric>

namespace lmwb {

std::string show_word(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  s.reserve(w.size());
  for (uint8_t d : w) s.push_back(static_cast<char>('0' + d));
  return s;
}

Word parse_finite_word(const std::string& s, int n) {
  if (s == "e" || s.empty()) return {};
  Word w;
  w.reserve(s.size());
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c < '0' || c > '9') throw parse_error("expected digit in address", i);
    int d = c - '0';
    if (d >= n) throw arity_error("digit " + std::string(1, c) + " invalid at arity " + std::to_string(n), i);
    w.push_back(static_cast<uint8_t>(d));
  }
  return w;
}

bool is_prefix(const Word& a, const Word& b) {
  if (a.size() > b.size()) return false;
  return std::equal(a.begin(), a.end(), b.begin());
}

Word word_cat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

bool prefix_incomparable(const Word& a, const Word& b) {
  return !is_prefix(a, b) && !is_prefix(b, a);
}

Seq::Seq(Word prefix, Word period) : prefix_(std::move(prefix)), period_(std::move(period)) {
  if (period_.empty()) throw std::invalid_argument("Seq: empty period");
  // Primitive period: the smallest divisor length that tiles the period.
  size_t L = period_.size();
  for (size_t d = 1; d <= L / 2; ++d) {
    if (L % d != 0) continue;
    bool tiles = true;
    for (size_t i = d; i < L && tiles; ++i) tiles = period_[i] == period_[i % d];
    if (tiles) {
      period_.resize(d);
      break;
    }
  }
  // Absorb: a prefix ending with the period's last digit denotes the same
  // point as the rotated form with a shorter prefix.
  while (!prefix_.empty() && prefix_.back() == period_.back()) {
    prefix_.pop_back();
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
  }
}

uint8_t Seq::at(size_t i) const {
  if (i < prefix_.size()) return prefix_[i];
  return period_[(i - prefix_.size()) % period_.size()];
}

Seq Seq::tail(size_t k) const {
  if (k <= prefix_.size()) return Seq(Word(prefix_.begin() + k, prefix_.end()), period_);
  size_t j = (k - prefix_.size()) % period_.size();
  Word rot(period_.begin() + j, period_.end());
  rot.insert(rot.end(), period_.begin(), period_.begin() + j);
  return Seq(Word{}, rot);
}

Word Seq::take(size_t k) const {
  Word w(k);
  for (size_t i = 0; i < k; ++i) w[i] = at(i);
  return w;
}

std::string Seq::show() const {
  std::string s;
  for (uint8_t d : prefix_) s.push_back(static_cast<char>('0' + d));
  s.push_back('(');
  for (uint8_t d : period_) s.push_back(static_cast<char>('0' + d));
  s.push_back(')');
  return s;
}

Seq Seq::parse(const std::string& s, int n) {
  size_t open = s.find('(');
  size_t close = s.find(')');
  if (open == std::string::npos || close == std::string::npos || close < open || close + 1 != s.size())
    throw parse_error("sequence literal must look like prefix(period)", 0);
  std::string pre = s.substr(0, open);
  if (pre == "e") pre.clear();
  Word p = parse_finite_word(pre.empty() ? "e" : pre, n);
  Word q = parse_finite_word(s.substr(open + 1, close - open - 1), n);
  if (q.empty()) throw parse_error("sequence period must be non-empty", open + 1);
  return Seq(p, q);
}

int lex_compare(const Seq& a, const Seq& b) {
  if (a == b) return 0;
  size_t pa = a.prefix().size(), pb = b.prefix().size();
  size_t la = a.period().size(), lb = b.period().size();
  size_t bound = std::max(pa, pb) + std::lcm(la, lb) + 1;
  for (size_t i = 0; i < bound; ++i) {
    uint8_t x = a.at(i), y = b.at(i);
    if (x != y) return x < y ? -1 : 1;
  }
  return 0;  // canonical forms differ only if some symbol differs within the bound
}

bool eventually_equal(const Seq& a, const Seq& b) {
  // Tails coincide after discarding bounded (possibly different) prefixes
  // iff the primitive periods are rotations of each other.
  const Word& p = a.period();
  const Word& q = b.period();
  if (p.size() != q.size()) return false;
  for (size_t r = 0; r < q.size(); ++r) {
    bool ok = true;
    for (size_t i = 0; i < p.size() && ok; ++i) ok = p[i] == q[(i + r) % q.size()];
    if (ok) return true;
  }
  return false;
}

bool is_prefix(const Word& a, const Seq& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b.at(i)) return false;
  return true;
}

Seq seq_cat(const Word& a, const Seq& b) {
  return Seq(word_cat(a, b.prefix()), b.period());
}

bool open_interval_empty(const Seq& a, const Seq& b, int n) {
  if (lex_compare(a, b) >= 0) throw std::invalid_argument("open_interval_empty: need a < b");
  // Empty iff a = c d (n-1)^w and b = c (d+1) 0^w.
  const uint8_t top = static_cast<uint8_t>(n - 1);
  if (a.period() != Word{top} || b.period() != Word{0}) return false;
  if (a.prefix().empty()) return false;  // a would be the maximum point
  Word succ = a.prefix();
  succ.back() = static_cast<uint8_t>(succ.back() + 1);
  return succ == b.prefix();
}

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::G0: return "G0";
    case Variant::yG: return "yG";
    case Variant::Gy: return "Gy";
    case Variant::yGy: return "yGy";
  }
  return "?";
}

std::optional<Variant> variant_from_name(const std::string& s) {
  if (s == "G0" || s == "g0") return Variant::G0;
  if (s == "yG" || s == "yg") return Variant::yG;
  if (s == "Gy" || s == "gy") return Variant::Gy;
  if (s == "yGy" || s == "ygy") return Variant::yGy;
  return std::nullopt;
}

bool is_constant_word(const Word& w, uint8_t d) {
  return std::all_of(w.begin(), w.end(), [d](uint8_t x) { return x == d; });
}

bool classify_y_address(const Word& alpha, Variant v, int n, YReading reading) {
  long sum = std::accumulate(alpha.begin(), alpha.end(), 0L);
  if (n > 2 && sum % (n - 1) != 0) return false;
  const uint8_t top = static_cast<uint8_t>(n - 1);
  bool zero_pow = !alpha.empty() && is_constant_word(alpha, 0);
  bool top_pow = !alpha.empty() && is_constant_word(alpha, top);
  switch (v) {
    case Variant::G0:
      return !alpha.empty() && !zero_pow && !top_pow;
    case Variant::yG:
      if (reading == YReading::Displayed) return !alpha.empty() && !zero_pow && !top_pow;
      return !alpha.empty() && !top_pow;
    case Variant::Gy:
      return !alpha.empty() && !zero_pow;
    case Variant::yGy:
      return true;
  }
  return false;
}

}  // namespace lmwb
