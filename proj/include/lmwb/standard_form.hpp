#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lmwb/transducer.hpp"
#include "lmwb/tree_pair.hpp"
#include "lmwb/word.hpp"

namespace lmwb {

// An F(n) part followed by a word on y-letters (the F part applied first).
struct StandardForm {
  TreePair fpart;
  std::vector<Letter> ypart;  // Y letters only

  GroupWord as_word() const;
  std::string show() const;
};

enum class Tri { True, False, Inconclusive };

// Relation (4) and its inverse-side variant: a 4-letter word equal to y_alpha.
enum class ExpandSide { Right, Left };
GroupWord expand_y(const Word& alpha, ExpandSide side, int n);

// Rewrites w into fpart * ypart by pushing X letters left through the y-part
// (relation (2)), expanding y-letters via relation (4) when the partial
// action is undefined, then simplifying the y-part to a fixpoint (cancel
// adjacent inverses, contract relation-(4) triples, sort commuting letters).
// nullopt when the step budget is exhausted.
std::optional<StandardForm> to_standard_form(const GroupWord& w, long budget = 2'000'000);

struct IdentityCheck {
  Tri verdict;
  std::optional<Seq> witness;  // a moved point when verdict == False
};

// Sound identity test: a rewritten empty y-part with trivial F part decides
// true; any moved probe point decides false; otherwise Inconclusive.
IdentityCheck is_identity(const GroupWord& w, long budget = 2'000'000);

Tri equals_words(const GroupWord& a, const GroupWord& b);

struct Report {
  int total = 0;
  int inconclusive = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Samples instances of relation family 1..4 valid for the variant and checks
// LHS * RHS^-1 both by evaluation and by is_identity.
Report verify_relation_family(int family, Variant variant, int samples, int n,
                              int eval_points = 200, uint64_t seed = 0x5eed);

// Random eventually periodic point (prefix length <= 6, period length <= 4).
class Rng;
Seq random_seq(Rng& rng, int n);
Word random_address(Rng& rng, int n, int max_len);

class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  uint64_t next() {
    state_ ^= state_ << 13;
    state_ ^= state_ >> 7;
    state_ ^= state_ << 17;
    return state_;
  }
  size_t below(size_t m) { return m ? next() % m : 0; }

 private:
  uint64_t state_;
};

}  // namespace lmwb
