#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lmwb/seq.hpp"

namespace lmwb {

// An open interval (lo, hi) in the lexicographic order on the Cantor set.
struct Interval {
  Seq lo;
  Seq hi;
};

struct precondition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A reduced pair of n-ary trees encoding an element of F(n) as an
// order-preserving prefix substitution: the i-th domain leaf maps to the
// i-th range leaf. Trees are stored as their lex-sorted leaf address lists
// (a complete prefix code over {0..n-1}).
class TreePair {
 public:
  TreePair(int n, std::vector<Word> dom, std::vector<Word> ran);

  int arity() const { return n_; }
  const std::vector<Word>& dom() const { return dom_; }
  const std::vector<Word>& ran() const { return ran_; }
  size_t leaf_count() const { return dom_.size(); }
  bool is_identity() const { return dom_.size() == 1; }

  bool operator==(const TreePair& o) const {
    return n_ == o.n_ && dom_ == o.dom_ && ran_ == o.ran_;
  }
  bool operator!=(const TreePair& o) const { return !(*this == o); }

  static TreePair identity(int n);
  // x_i for any i >= 0 (numbered generators, x_i = x_[i mod (n-1)],(n-1)^(i div (n-1))).
  static TreePair generator(long i, int n);
  // x_[i],alpha: x_i acting below alpha, identity elsewhere. Requires 0 <= i <= n-2.
  static TreePair generator_at(int i, const Word& alpha, int n);

  std::string show() const;

 private:
  int n_;
  std::vector<Word> dom_;
  std::vector<Word> ran_;
  void reduce();
};

TreePair compose(const TreePair& f, const TreePair& g);  // apply f first, then g
TreePair invert(const TreePair& f);

Seq evaluate(const TreePair& f, const Seq& xi);

// Partial action on finite words: defined iff some domain leaf prefixes beta.
std::optional<Word> partial_apply(const TreePair& f, const Word& beta);

// Maximal open intervals with eventually periodic endpoints whose union is
// {xi : f(xi) != xi}. Empty iff f is the identity.
std::vector<Interval> support(const TreePair& f);

// Factorization into numbered generators: pairs (index, sign) read left to
// right with the leftmost applied first. Positive part first with
// nondecreasing indices, then the negative part with nonincreasing indices.
std::vector<std::pair<long, int>> factor_normal_form(const TreePair& f);

// Brown's abelianization a : F(n) -> Z^n, a(x_i) = e_{i+1} for i <= n-1.
std::vector<long long> abelianization_a(const TreePair& f);

// An element of F(n) whose support is exactly (s 0^w, (n-1)^w).
TreePair dense_support_element(const Word& s, int n);

// The element agreeing with f on I and identity elsewhere. Requires f to fix
// both endpoints, and endpoints of the tree-rational forms s0^w / s(n-1)^w.
TreePair restrict_to_interval(const TreePair& f, const Interval& I);

}  // namespace lmwb
