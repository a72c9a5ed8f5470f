#pragma once

#include <string>
#include <vector>

#include "lmwb/seq.hpp"
#include "lmwb/tree_pair.hpp"

namespace lmwb {

// A single generator over X(n) u Y(n): either x_[i],alpha or y_alpha, with a
// sign. Y addresses are not constrained to any variant's Y set here; that is
// a separate query (classify_y_address).
struct Letter {
  enum Kind { X, Y } kind;
  int xi = 0;   // X only: 0 <= xi <= n-2
  Word addr;    // alpha
  int sign = +1;

  bool operator==(const Letter& o) const {
    return kind == o.kind && xi == o.xi && addr == o.addr && sign == o.sign;
  }
  static Letter x(int i, Word alpha, int sign = +1) { return Letter{X, i, std::move(alpha), sign}; }
  static Letter y(Word alpha, int sign = +1) { return Letter{Y, 0, std::move(alpha), sign}; }
  Letter inverse() const { return Letter{kind, xi, addr, -sign}; }
};

struct GroupWord {
  int n = 2;
  std::vector<Letter> letters;  // leftmost applied first

  bool operator==(const GroupWord& o) const { return n == o.n && letters == o.letters; }
  GroupWord inverse() const;
  GroupWord operator*(const GroupWord& o) const;  // concatenation (this applied first)
  bool empty() const { return letters.empty(); }
};

// Numbered generator x_j as a localized letter: x_[j mod (n-1)],(n-1)^(j div (n-1)).
Letter numbered_x(long j, int n, int sign = +1);

// TreePair of an X letter (sign included). Throws on Y letters.
TreePair letter_tree(const Letter& l, int n);

// Token grammar: whitespace-separated `x<j>`, `x[i;addr]`, `y[addr]`, each
// with an optional trailing ' for the inverse; `e` alone inside brackets (or
// nothing) is the empty address.
GroupWord parse_word(const std::string& text, int n);
std::string show_word(const GroupWord& w);
std::string show_letter(const Letter& l);

bool word_in_variant(const GroupWord& w, Variant v,
                     YReading reading = YReading::Corrected);

}  // namespace lmwb
