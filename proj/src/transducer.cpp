#include "lmwb/transducer.hpp"

#include <map>

namespace lmwb {

namespace {

struct Step {
  Word emit;
  size_t consumed;
  int next_mode;     // meaningful when !terminal
  bool terminal;     // copy the rest of the input verbatim
};

// One rule application of y^mode at the current input position. a is the
// symbol there, b the one after (only read when needed).
Step step_rule(int mode, uint8_t a, uint8_t b, int n) {
  const uint8_t top = static_cast<uint8_t>(n - 1);
  if (mode > 0) {
    if (a == 0) {
      if (b == 0) return {{0}, 2, +1, false};            // y(00z) = 0 y(z)
      if (b == top) return {{top, 0}, 2, -1, false};     // y(0(n-1)z) = (n-1)0 y^-1(z)
      return {{b}, 2, 0, true};                          // y(0kz) = kz
    }
    if (a == top) return {{top, top}, 1, +1, false};     // y((n-1)z) = (n-1)(n-1) y(z)
    return {{top, a}, 1, 0, true};                       // y(kz) = (n-1)kz
  }
  if (a == 0) return {{0, 0}, 1, -1, false};             // y^-1(0z) = 00 y^-1(z)
  if (a < top) return {{0, a}, 1, 0, true};              // y^-1(kz) = 0kz
  if (b == 0) return {{0, top}, 2, +1, false};           // y^-1((n-1)0z) = 0(n-1) y(z)
  if (b == top) return {{top}, 2, -1, false};            // y^-1((n-1)(n-1)z) = (n-1) y^-1(z)
  return {{b}, 2, 0, true};                              // y^-1((n-1)kz) = kz
}

}  // namespace

Seq eval_y(int mode, const Seq& xi, int n) {
  const size_t P = xi.prefix().size();
  const size_t L = xi.period().size();
  size_t pos = 0;
  int m = mode;
  Word out;
  std::map<std::pair<int, size_t>, size_t> seen;  // (mode, phase) -> out length at visit
  for (;;) {
    if (pos >= P) {
      auto key = std::make_pair(m, (pos - P) % L);
      auto it = seen.find(key);
      if (it != seen.end()) {
        Word pre(out.begin(), out.begin() + it->second);
        Word per(out.begin() + it->second, out.end());
        return Seq(std::move(pre), std::move(per));
      }
      seen.emplace(key, out.size());
    }
    uint8_t a = xi.at(pos);
    uint8_t b = xi.at(pos + 1);  // harmless read-ahead
    Step s = step_rule(m, a, b, n);
    out.insert(out.end(), s.emit.begin(), s.emit.end());
    pos += s.consumed;
    if (s.terminal) return seq_cat(out, xi.tail(pos));
    m = s.next_mode;
  }
}

Seq eval_letter(const Letter& l, const Seq& xi, int n) {
  if (l.kind == Letter::X) return evaluate(letter_tree(l, n), xi);
  if (!is_prefix(l.addr, xi)) return xi;
  return seq_cat(l.addr, eval_y(l.sign, xi.tail(l.addr.size()), n));
}

Seq evaluate_word(const GroupWord& w, const Seq& xi) {
  Seq cur = xi;
  for (const Letter& l : w.letters) cur = eval_letter(l, cur, w.n);
  return cur;
}

}  // namespace lmwb
