#include "lmwb/tree_pair.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace lmwb {

namespace {

// Checks that `leaves` (sorted) is the leaf list of a finite n-ary tree in
// which every internal node has all n children.
bool complete_code_rec(const std::vector<Word>& leaves, size_t& pos, Word& path, int n) {
  if (pos < leaves.size() && leaves[pos] == path) {
    ++pos;
    return true;
  }
  if (path.size() > 64) return false;
  for (uint8_t d = 0; d < n; ++d) {
    path.push_back(d);
    bool ok = complete_code_rec(leaves, pos, path, n);
    path.pop_back();
    if (!ok) return false;
  }
  return true;
}

bool is_complete_code(const std::vector<Word>& leaves, int n) {
  if (!std::is_sorted(leaves.begin(), leaves.end())) return false;
  size_t pos = 0;
  Word path;
  return complete_code_rec(leaves, pos, path, n) && pos == leaves.size();
}

// Leaves i..i+n-1 form a collapsible caret: same parent, children 0..n-1.
bool caret_at(const std::vector<Word>& leaves, size_t i, int n) {
  if (i + n > leaves.size()) return false;
  const Word& first = leaves[i];
  if (first.empty() || first.back() != 0) return false;
  for (int d = 1; d < n; ++d) {
    const Word& w = leaves[i + d];
    if (w.size() != first.size() || w.back() != d) return false;
    if (!std::equal(w.begin(), w.end() - 1, first.begin())) return false;
  }
  return true;
}

void collapse_at(std::vector<Word>& leaves, size_t i, int n) {
  Word parent(leaves[i].begin(), leaves[i].end() - 1);
  leaves.erase(leaves.begin() + i, leaves.begin() + i + n);
  leaves.insert(leaves.begin() + i, std::move(parent));
}

// Right vine with c carets: leaves (n-1)^j d for j < c, d < n-1, then (n-1)^c.
std::vector<Word> vine_leaves(size_t c, int n) {
  std::vector<Word> out;
  Word spine;
  for (size_t j = 0; j < c; ++j) {
    for (uint8_t d = 0; d + 1 < n; ++d) out.push_back(word_cat(spine, {d}));
    spine.push_back(static_cast<uint8_t>(n - 1));
  }
  out.push_back(spine);
  std::sort(out.begin(), out.end());
  return out;
}

// Coarsest common refinement of two complete prefix codes.
std::vector<Word> join_codes(const std::vector<Word>& a, const std::vector<Word>& b) {
  std::vector<Word> out;
  for (const Word& x : a) {
    bool covered = false;
    for (const Word& y : b) {
      if (is_prefix(y, x)) {
        out.push_back(x);
        covered = true;
        break;
      }
    }
    if (!covered)
      for (const Word& y : b)
        if (is_prefix(x, y)) out.push_back(y);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Domain/range pair of f re-expressed over the refined range code C.
// For each c in C with range leaf r <= c, the new domain leaf is dom[r] + (c - r).
void expand_to_range(const TreePair& f, const std::vector<Word>& C,
                     std::vector<Word>& dom_out, std::vector<Word>& ran_out) {
  dom_out.clear();
  ran_out.clear();
  for (const Word& c : C) {
    for (size_t i = 0; i < f.ran().size(); ++i) {
      if (is_prefix(f.ran()[i], c)) {
        Word suffix(c.begin() + f.ran()[i].size(), c.end());
        dom_out.push_back(word_cat(f.dom()[i], suffix));
        ran_out.push_back(c);
        break;
      }
    }
  }
}

}  // namespace

TreePair::TreePair(int n, std::vector<Word> dom, std::vector<Word> ran)
    : n_(n), dom_(std::move(dom)), ran_(std::move(ran)) {
  if (n_ < 2) throw std::invalid_argument("TreePair: arity must be >= 2");
  if (dom_.size() != ran_.size()) throw std::invalid_argument("TreePair: leaf count mismatch");
  if (!is_complete_code(dom_, n_) || !is_complete_code(ran_, n_))
    throw std::invalid_argument("TreePair: leaves are not a complete n-ary prefix code");
  reduce();
}

void TreePair::reduce() {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + n_ <= dom_.size(); ++i) {
      if (caret_at(dom_, i, n_) && caret_at(ran_, i, n_)) {
        collapse_at(dom_, i, n_);
        collapse_at(ran_, i, n_);
        changed = true;
        break;
      }
    }
  }
}

TreePair TreePair::identity(int n) { return TreePair(n, {Word{}}, {Word{}}); }

TreePair TreePair::generator_at(int i, const Word& alpha, int n) {
  if (i < 0 || i > n - 2) throw std::invalid_argument("generator_at: need 0 <= i <= n-2");
  for (uint8_t d : alpha)
    if (d >= n) throw std::invalid_argument("generator_at: address digit out of range");
  // Base pair for x_i: domain caret at child i, range caret at child n-1.
  std::vector<Word> bd, br;
  for (uint8_t d = 0; d < n; ++d) {
    if (d == i)
      for (uint8_t e = 0; e < n; ++e) bd.push_back({d, e});
    else
      bd.push_back({d});
  }
  for (uint8_t d = 0; d < n; ++d) {
    if (d == n - 1)
      for (uint8_t e = 0; e < n; ++e) br.push_back({d, e});
    else
      br.push_back({d});
  }
  std::vector<Word> dom, ran;
  // Siblings along the path to alpha are fixed leaves.
  for (size_t k = 0; k < alpha.size(); ++k) {
    Word p(alpha.begin(), alpha.begin() + k);
    for (uint8_t d = 0; d < n; ++d) {
      if (d == alpha[k]) continue;
      Word s = word_cat(p, {d});
      dom.push_back(s);
      ran.push_back(s);
    }
  }
  for (const Word& w : bd) dom.push_back(word_cat(alpha, w));
  for (const Word& w : br) ran.push_back(word_cat(alpha, w));
  // Sort by domain address, carrying the pairing along.
  std::vector<size_t> idx(dom.size());
  for (size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return dom[a] < dom[b]; });
  std::vector<Word> d2, r2;
  for (size_t k : idx) {
    d2.push_back(dom[k]);
    r2.push_back(ran[k]);
  }
  return TreePair(n, std::move(d2), std::move(r2));
}

TreePair TreePair::generator(long i, int n) {
  if (i < 0) throw std::invalid_argument("generator: index must be >= 0");
  long k = i / (n - 1);
  int r = static_cast<int>(i % (n - 1));
  Word alpha(static_cast<size_t>(k), static_cast<uint8_t>(n - 1));
  return generator_at(r, alpha, n);
}

std::string TreePair::show() const {
  std::string s = "[";
  for (size_t i = 0; i < dom_.size(); ++i) {
    if (i) s += ",";
    s += show_word(dom_[i]);
  }
  s += "]->[";
  for (size_t i = 0; i < ran_.size(); ++i) {
    if (i) s += ",";
    s += show_word(ran_[i]);
  }
  s += "]";
  return s;
}

TreePair compose(const TreePair& f, const TreePair& g) {
  if (f.arity() != g.arity()) throw std::invalid_argument("compose: arity mismatch");
  std::vector<Word> C = join_codes(f.ran(), g.dom());
  std::vector<Word> fd, fr, gd, gr;
  expand_to_range(f, C, fd, fr);
  TreePair ginv(g.arity(), g.ran(), g.dom());
  expand_to_range(ginv, C, gr, gd);  // ginv's "range" is g's domain
  return TreePair(f.arity(), std::move(fd), std::move(gr));
}

TreePair invert(const TreePair& f) {
  return TreePair(f.arity(), f.ran(), f.dom());
}

Seq evaluate(const TreePair& f, const Seq& xi) {
  for (size_t i = 0; i < f.dom().size(); ++i)
    if (is_prefix(f.dom()[i], xi)) return seq_cat(f.ran()[i], xi.tail(f.dom()[i].size()));
  throw std::logic_error("evaluate: no leaf matched");  // unreachable: leaves partition
}

std::optional<Word> partial_apply(const TreePair& f, const Word& beta) {
  for (size_t i = 0; i < f.dom().size(); ++i)
    if (is_prefix(f.dom()[i], beta)) {
      Word rest(beta.begin() + f.dom()[i].size(), beta.end());
      return word_cat(f.ran()[i], rest);
    }
  return std::nullopt;
}

std::vector<Interval> support(const TreePair& f) {
  const int n = f.arity();
  const uint8_t top = static_cast<uint8_t>(n - 1);
  std::vector<Interval> out;
  size_t i = 0;
  while (i < f.dom().size()) {
    if (f.dom()[i] == f.ran()[i]) {
      ++i;
      continue;
    }
    size_t j = i;  // maximal run of moved leaves
    while (j < f.dom().size() && f.dom()[j] != f.ran()[j]) ++j;
    Seq L(f.dom()[i], Word{0});
    Seq R(f.dom()[j - 1], Word{top});
    // Fixed points inside the run: a moved leaf l -> r has one iff the
    // addresses are prefix-comparable; the fixed point is the periodic tail.
    std::vector<Seq> cuts;
    for (size_t k = i; k < j; ++k) {
      const Word& l = f.dom()[k];
      const Word& r = f.ran()[k];
      if (is_prefix(r, l)) {
        Word u(l.begin() + r.size(), l.end());
        cuts.push_back(Seq(r, u));
      } else if (is_prefix(l, r)) {
        Word v(r.begin() + l.size(), r.end());
        cuts.push_back(Seq(l, v));
      }
    }
    std::sort(cuts.begin(), cuts.end(), [](const Seq& a, const Seq& b) { return lex_compare(a, b) < 0; });
    std::vector<Seq> pts;
    pts.push_back(L);
    for (const Seq& c : cuts)
      if (c != L && c != R && (pts.empty() || !(pts.back() == c))) pts.push_back(c);
    pts.push_back(R);
    for (size_t k = 0; k + 1 < pts.size(); ++k)
      if (!open_interval_empty(pts[k], pts[k + 1], n)) out.push_back(Interval{pts[k], pts[k + 1]});
    i = j;
  }
  return out;
}

namespace {

bool is_vine(const std::vector<Word>& leaves, int n) {
  return leaves == vine_leaves((leaves.size() - 1) / (n - 1), n);
}

// Word of positive generators realizing (T, vine) with the same leaf count:
// repeatedly peel the collapsible caret of largest leaf index that does not
// contain the last leaf.
std::vector<long> positive_word(std::vector<Word> T, int n) {
  std::vector<long> rev;
  while (!is_vine(T, n)) {
    long best = -1;
    // p + n < size excludes the caret containing the last leaf, which is not
    // a valid peel (a non-vine tree always has another collapsible caret).
    for (size_t p = 0; p + n < T.size(); ++p)
      if (caret_at(T, p, n)) best = static_cast<long>(p);
    if (best < 0) throw std::logic_error("positive_word: no peelable caret");
    collapse_at(T, static_cast<size_t>(best), n);
    rev.push_back(best);
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

}  // namespace

std::vector<std::pair<long, int>> factor_normal_form(const TreePair& f) {
  std::vector<std::pair<long, int>> word;
  for (long i : positive_word(f.dom(), f.arity())) word.emplace_back(i, +1);
  std::vector<long> neg = positive_word(f.ran(), f.arity());
  for (auto it = neg.rbegin(); it != neg.rend(); ++it) word.emplace_back(*it, -1);
  return word;
}

std::vector<long long> abelianization_a(const TreePair& f) {
  const int n = f.arity();
  std::vector<long long> v(n, 0);
  for (auto [i, sgn] : factor_normal_form(f)) {
    size_t coord = i == 0 ? 0 : static_cast<size_t>((i - 1) % (n - 1)) + 1;
    v[coord] += sgn;
  }
  return v;
}

TreePair dense_support_element(const Word& s_in, int n) {
  const uint8_t top = static_cast<uint8_t>(n - 1);
  Word s = s_in;
  while (!s.empty() && s.back() == 0) s.pop_back();
  if (s.empty()) return TreePair::generator(0, n);
  if (is_constant_word(s, top)) return TreePair::generator_at(0, s, n);

  std::vector<std::pair<Word, Word>> pairs;  // (dom leaf, ran leaf)
  std::vector<Word> right;
  for (size_t k = 0; k < s.size(); ++k) {
    Word p(s.begin(), s.begin() + k);
    for (uint8_t d = 0; d < n; ++d) {
      if (d == s[k]) continue;
      Word sib = word_cat(p, {d});
      if (d < s[k])
        pairs.emplace_back(sib, sib);  // left of the path: fixed
      else
        right.push_back(sib);
    }
  }
  std::sort(right.begin(), right.end());
  // Tiles of (s0^w, (n-1)^w) in order, shifted one step to the right; the
  // first rule s00 -> s0 drives the tiles accumulating at s0^w, and the last
  // cylinder absorbs the tail with fixed point (n-1)^w.
  std::vector<Word> dm, rm;
  dm.push_back(word_cat(s, {0, 0}));
  for (uint8_t e = 1; e < n; ++e) dm.push_back(word_cat(s, {0, e}));
  for (uint8_t e = 1; e < n; ++e) dm.push_back(word_cat(s, {e}));
  for (const Word& r : right) dm.push_back(r);
  rm.push_back(word_cat(s, {0}));
  for (uint8_t e = 1; e < n; ++e) rm.push_back(word_cat(s, {e}));
  for (size_t k = 0; k + 1 < right.size(); ++k) rm.push_back(right[k]);
  for (uint8_t e = 0; e < n; ++e) rm.push_back(word_cat(right.back(), {e}));
  assert(dm.size() == rm.size());
  for (size_t k = 0; k < dm.size(); ++k) pairs.emplace_back(dm[k], rm[k]);

  std::sort(pairs.begin(), pairs.end());
  std::vector<Word> dom, ran;
  for (auto& [d, r] : pairs) {
    dom.push_back(d);
    ran.push_back(r);
  }
  return TreePair(n, std::move(dom), std::move(ran));
}

TreePair restrict_to_interval(const TreePair& f, const Interval& I) {
  const int n = f.arity();
  const uint8_t top = static_cast<uint8_t>(n - 1);
  auto tree_rational = [&](const Seq& s) { return s.period() == Word{0} || s.period() == Word{top}; };
  if (!tree_rational(I.lo) || !tree_rational(I.hi))
    throw precondition_error("restrict_to_interval: endpoints must be of the forms s0^w or s(n-1)^w");
  if (lex_compare(I.lo, I.hi) >= 0) throw precondition_error("restrict_to_interval: empty interval");
  if (evaluate(f, I.lo) != I.lo || evaluate(f, I.hi) != I.hi)
    throw precondition_error("restrict_to_interval: f moves a boundary point");

  // Refine so the leaf containing lo starts at lo and the leaf containing hi
  // ends at hi: join with the path trees of the endpoint prefixes.
  auto path_tree = [&](const Word& w) {
    std::vector<Word> leaves;
    for (size_t k = 0; k < w.size(); ++k) {
      Word p(w.begin(), w.begin() + k);
      for (uint8_t d = 0; d < n; ++d)
        if (d != w[k]) leaves.push_back(word_cat(p, {d}));
    }
    leaves.push_back(w);
    std::sort(leaves.begin(), leaves.end());
    return leaves;
  };
  std::vector<Word> P = join_codes(f.dom(), path_tree(I.lo.prefix()));
  P = join_codes(P, path_tree(I.hi.prefix()));
  std::vector<Word> dom, ran;
  {
    // Express f over the refined domain P.
    TreePair finv = invert(f);
    std::vector<Word> rr, dd;
    expand_to_range(finv, P, rr, dd);  // finv's range is f's domain
    dom = dd;
    ran = rr;
  }
  std::vector<std::pair<Word, Word>> pairs;
  for (size_t i = 0; i < dom.size(); ++i) {
    Seq leaf_lo(dom[i], Word{0});
    Seq leaf_hi(dom[i], Word{top});
    bool inside = lex_compare(I.lo, leaf_lo) <= 0 && lex_compare(leaf_hi, I.hi) <= 0;
    pairs.emplace_back(dom[i], inside ? ran[i] : dom[i]);
  }
  std::sort(pairs.begin(), pairs.end());
  std::vector<Word> d2, r2;
  for (auto& [d, r] : pairs) {
    d2.push_back(d);
    r2.push_back(r);
  }
  return TreePair(n, std::move(d2), std::move(r2));  // ctor re-validates the range code
}

}  // namespace lmwb
