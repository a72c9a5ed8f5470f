#include "lmwb/standard_form.hpp"

#include <algorithm>
#include <set>

namespace lmwb {

GroupWord StandardForm::as_word() const {
  GroupWord w{fpart.arity(), {}};
  for (auto [i, s] : factor_normal_form(fpart)) w.letters.push_back(numbered_x(i, w.n, s));
  w.letters.insert(w.letters.end(), ypart.begin(), ypart.end());
  return w;
}

std::string StandardForm::show() const {
  std::string s = "F:" + fpart.show() + " | Y:";
  if (ypart.empty()) s += " -";
  for (const Letter& l : ypart) s += " " + show_letter(l);
  return s;
}

GroupWord expand_y(const Word& alpha, ExpandSide side, int n) {
  const uint8_t top = static_cast<uint8_t>(n - 1);
  GroupWord w{n, {}};
  if (side == ExpandSide::Right) {
    // y_a = x_[0],a  y_{a0}  y_{a(n-1)0}^-1  y_{a(n-1)(n-1)}
    w.letters.push_back(Letter::x(0, alpha));
    w.letters.push_back(Letter::y(word_cat(alpha, {0})));
    w.letters.push_back(Letter::y(word_cat(alpha, {top, 0}), -1));
    w.letters.push_back(Letter::y(word_cat(alpha, {top, top})));
  } else {
    // y_a = y_{a(n-1)}  y_{a0(n-1)}^-1  y_{a00}  x_[0],a
    w.letters.push_back(Letter::y(word_cat(alpha, {top})));
    w.letters.push_back(Letter::y(word_cat(alpha, {0, top}), -1));
    w.letters.push_back(Letter::y(word_cat(alpha, {0, 0})));
    w.letters.push_back(Letter::x(0, alpha));
  }
  return w;
}

namespace {

struct budget_exhausted {};

struct Ctx {
  int n;
  long steps;
  void tick() {
    if (--steps < 0) throw budget_exhausted{};
  }
};

// ys * t  ==  t' * ys'  in the group, where incoming X letters pass leftward
// through y-letters by relation (2); a y-letter whose address has no defined
// partial image is replaced by its relation-(4) expansion first. When
// allow_expand is false the call fails (returns false) instead of expanding.
bool normalize_tail(std::vector<Letter>& ys, TreePair& t, Ctx& cx, bool allow_expand) {
  cx.tick();
  if (ys.empty()) return true;
  Letter last = ys.back();
  ys.pop_back();
  if (auto img = partial_apply(t, last.addr)) {
    if (!normalize_tail(ys, t, cx, allow_expand)) return false;
    ys.push_back(Letter::y(*img, last.sign));
    return true;
  }
  if (!allow_expand) return false;
  const uint8_t top = static_cast<uint8_t>(cx.n - 1);
  const Word& b = last.addr;
  TreePair xa = TreePair::generator_at(0, b, cx.n);
  std::vector<Letter> deep;
  if (last.sign > 0) {
    // y_b = x_[0],b  y_{b0}  y_{b(n-1)0}^-1  y_{b(n-1)(n-1)}
    deep = {Letter::y(word_cat(b, {0})), Letter::y(word_cat(b, {top, 0}), -1),
            Letter::y(word_cat(b, {top, top}))};
    if (!normalize_tail(deep, t, cx, allow_expand)) return false;
    TreePair t2 = compose(xa, t);
    if (!normalize_tail(ys, t2, cx, allow_expand)) return false;
    t = std::move(t2);
  } else {
    // y_b^-1 = y_{b(n-1)(n-1)}^-1  y_{b(n-1)0}  y_{b0}^-1  x_[0],b^-1
    deep = {Letter::y(word_cat(b, {top, top}), -1), Letter::y(word_cat(b, {top, 0})),
            Letter::y(word_cat(b, {0}), -1)};
    TreePair t2 = compose(invert(xa), t);
    if (!normalize_tail(deep, t2, cx, allow_expand)) return false;
    if (!normalize_tail(ys, t2, cx, allow_expand)) return false;
    t = std::move(t2);
  }
  ys.insert(ys.end(), deep.begin(), deep.end());
  return true;
}

// Inverse pairs cancel across any separating letters they commute with:
// prefix-incomparable addresses (relation (3)) or the same address.
bool cancel_pass(std::vector<Letter>& ys) {
  for (size_t i = 0; i < ys.size(); ++i) {
    for (size_t j = i + 1; j < ys.size(); ++j) {
      if (ys[j].addr == ys[i].addr) {
        if (ys[j].sign == -ys[i].sign) {
          ys.erase(ys.begin() + j);
          ys.erase(ys.begin() + i);
          return true;
        }
        continue;
      }
      if (!prefix_incomparable(ys[i].addr, ys[j].addr)) break;
    }
  }
  return false;
}

bool sort_pass(std::vector<Letter>& ys) {
  bool changed = false;
  for (size_t i = 0; i + 1 < ys.size(); ++i) {
    if (prefix_incomparable(ys[i].addr, ys[i + 1].addr) && ys[i + 1].addr < ys[i].addr) {
      std::swap(ys[i], ys[i + 1]);
      changed = true;
    }
  }
  return changed;
}

// Relation-(4) triples, both orientations and both signs. Matching a triple
// replaces it by a single y-letter plus one x-letter that migrates left into
// the F part (only when that migration needs no further expansion).
bool contract_pass(TreePair& f, std::vector<Letter>& ys, Ctx& cx) {
  const uint8_t top = static_cast<uint8_t>(cx.n - 1);
  for (size_t i = 0; i + 2 < ys.size(); ++i) {
    const Letter &a = ys[i], &b = ys[i + 1], &c = ys[i + 2];
    Word alpha;
    Letter repl = Letter::y({});
    int xsign = 0;
    bool before = false;  // x sits before the replacement letter
    if (a.sign == b.sign || b.sign == c.sign || a.sign != c.sign) continue;
    int s = a.sign;
    // right form, s=+1:  y_{a0} y_{a(n-1)0}' y_{a(n-1)(n-1)}  ->  x' y_a
    // right form, s=-1:  y_{a(n-1)(n-1)}' y_{a(n-1)0} y_{a0}'  ->  y_a' x
    // left form,  s=+1:  y_{a(n-1)} y_{a0(n-1)}' y_{a00}      ->  y_a x'
    // left form,  s=-1:  y_{a00}' y_{a0(n-1)} y_{a(n-1)}'     ->  x y_a'
    if (s > 0 && !a.addr.empty() && a.addr.back() == 0) {
      alpha = Word(a.addr.begin(), a.addr.end() - 1);
      if (b.addr == word_cat(alpha, {top, 0}) && c.addr == word_cat(alpha, {top, top})) {
        repl = Letter::y(alpha, +1);
        xsign = -1;
        before = true;
      }
    }
    if (xsign == 0 && s < 0 && !a.addr.empty()) {
      if (a.addr.size() >= 2 && a.addr[a.addr.size() - 1] == top && a.addr[a.addr.size() - 2] == top) {
        alpha = Word(a.addr.begin(), a.addr.end() - 2);
        if (b.addr == word_cat(alpha, {top, 0}) && c.addr == word_cat(alpha, {0})) {
          repl = Letter::y(alpha, -1);
          xsign = +1;
          before = false;
        }
      }
    }
    if (xsign == 0 && s > 0 && !a.addr.empty() && a.addr.back() == top) {
      alpha = Word(a.addr.begin(), a.addr.end() - 1);
      if (b.addr == word_cat(alpha, {0, top}) && c.addr == word_cat(alpha, {0, 0})) {
        repl = Letter::y(alpha, +1);
        xsign = -1;
        before = false;
      }
    }
    if (xsign == 0 && s < 0 && a.addr.size() >= 2 && a.addr[a.addr.size() - 1] == 0 &&
        a.addr[a.addr.size() - 2] == 0) {
      alpha = Word(a.addr.begin(), a.addr.end() - 2);
      if (b.addr == word_cat(alpha, {0, top}) && c.addr == word_cat(alpha, {top})) {
        repl = Letter::y(alpha, -1);
        xsign = +1;
        before = true;
      }
    }
    if (xsign == 0) continue;
    TreePair x = TreePair::generator_at(0, alpha, cx.n);
    if (xsign < 0) x = invert(x);
    std::vector<Letter> pre(ys.begin(), ys.begin() + i);
    if (!before) pre.push_back(repl);
    TreePair tmig = x;
    if (!normalize_tail(pre, tmig, cx, /*allow_expand=*/false)) continue;
    std::vector<Letter> out = pre;
    if (before) out.push_back(repl);
    out.insert(out.end(), ys.begin() + i + 3, ys.end());
    f = compose(f, tmig);
    ys = std::move(out);
    return true;
  }
  return false;
}

// Letters at prefix-comparable addresses block both sorting and adjacent
// cancellation. Expanding the shallower letter of such a pair by relation
// (4) deepens its addresses; the expansion side is chosen so the x-letter
// lands in front and migrates only through the prefix.
bool expand_pass(TreePair& f, std::vector<Letter>& ys, Ctx& cx) {
  const uint8_t top = static_cast<uint8_t>(cx.n - 1);
  if (ys.size() > 96) return false;
  size_t target = ys.size();
  size_t best_depth = 17;  // never expand very deep letters
  for (size_t i = 0; i < ys.size(); ++i)
    for (size_t j = i + 1; j < ys.size(); ++j) {
      if (ys[i].addr == ys[j].addr) continue;  // equal addresses commute
      if (!prefix_incomparable(ys[i].addr, ys[j].addr)) {
        size_t k = ys[j].addr.size() < ys[i].addr.size() ? j : i;
        if (ys[k].addr.size() < best_depth) {
          best_depth = ys[k].addr.size();
          target = k;
        }
      }
    }
  if (target == ys.size()) return false;
  Letter l = ys[target];
  const Word& a = l.addr;
  std::vector<Letter> repl;
  TreePair x = TreePair::generator_at(0, a, cx.n);
  if (l.sign > 0) {
    repl = {Letter::y(word_cat(a, {0})), Letter::y(word_cat(a, {top, 0}), -1),
            Letter::y(word_cat(a, {top, top}))};
  } else {
    x = invert(x);
    repl = {Letter::y(word_cat(a, {0, 0}), -1), Letter::y(word_cat(a, {0, top})),
            Letter::y(word_cat(a, {top}), -1)};
  }
  std::vector<Letter> pre(ys.begin(), ys.begin() + target);
  if (!normalize_tail(pre, x, cx, /*allow_expand=*/true)) return false;
  std::vector<Letter> out = std::move(pre);
  out.insert(out.end(), repl.begin(), repl.end());
  out.insert(out.end(), ys.begin() + target + 1, ys.end());
  f = compose(f, x);
  ys = std::move(out);
  return true;
}

std::string ys_key(const std::vector<Letter>& ys) {
  std::string k;
  for (const Letter& l : ys) {
    k += l.sign > 0 ? '+' : '-';
    k += show_word(l.addr);
    k += '.';
  }
  return k;
}

// Two phases: contraction and expansion are mutual inverses, so they never
// run in the same loop. Phase A shrinks (cancel, sort, contract); when it is
// stuck, phase B expands comparable pairs apart (cancel, sort, expand),
// which a special-form y-part (an address antichain) never triggers.
void simplify(TreePair& f, std::vector<Letter>& ys, Ctx& cx) {
  auto phase_a = [&] {
    for (;;) {
      cx.tick();
      if (cancel_pass(ys)) continue;
      if (sort_pass(ys)) continue;
      if (contract_pass(f, ys, cx)) continue;
      break;
    }
  };
  std::set<std::string> seen;
  int expansions = 0;
  for (int round = 0; round < 4; ++round) {
    phase_a();
    if (ys.empty()) return;
    for (;;) {
      cx.tick();
      if (cancel_pass(ys)) continue;
      if (sort_pass(ys)) continue;
      if (ys.empty()) break;
      if (!seen.insert(ys_key(ys)).second) break;
      if (expansions >= 48) break;
      if (!expand_pass(f, ys, cx)) break;
      ++expansions;
    }
    if (ys.empty()) return;
  }
  phase_a();
}

}  // namespace

std::optional<StandardForm> to_standard_form(const GroupWord& w, long budget) {
  Ctx cx{w.n, budget};
  TreePair f = TreePair::identity(w.n);
  std::vector<Letter> ys;
  try {
    for (const Letter& l : w.letters) {
      if (l.kind == Letter::Y) {
        if (!ys.empty() && ys.back().addr == l.addr && ys.back().sign == -l.sign)
          ys.pop_back();
        else
          ys.push_back(l);
        continue;
      }
      TreePair t = letter_tree(l, w.n);
      if (!normalize_tail(ys, t, cx, /*allow_expand=*/true))
        return std::nullopt;  // unreachable: expansion is always allowed here
      f = compose(f, t);
    }
    simplify(f, ys, cx);
  } catch (const budget_exhausted&) {
    return std::nullopt;
  }
  return StandardForm{std::move(f), std::move(ys)};
}

namespace {

// All points s 0^w with |s| <= max_len (capped), the dense family the center
// argument probes.
std::vector<Seq> probe_points(int n, int max_len, size_t cap = 4000) {
  std::vector<Seq> pts;
  std::vector<Word> layer{Word{}};
  pts.push_back(Seq::constant(0));
  for (int len = 1; len <= max_len && pts.size() < cap; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer)
      for (uint8_t d = 0; d < n; ++d) next.push_back(word_cat(w, {d}));
    for (const Word& w : next) {
      if (pts.size() >= cap) break;
      if (w.back() != 0) pts.push_back(Seq(w, Word{0}));  // others duplicate shorter points
    }
    layer = std::move(next);
  }
  return pts;
}

Seq moved_point_of(const TreePair& f) {
  for (size_t i = 0; i < f.dom().size(); ++i) {
    const Word &l = f.dom()[i], &r = f.ran()[i];
    if (l == r) continue;
    if (prefix_incomparable(l, r)) return Seq(l, Word{0});
    // Comparable pair: pick a digit off the fixed tail.
    const Word& longer = l.size() > r.size() ? l : r;
    const Word& shorter = l.size() > r.size() ? r : l;
    uint8_t u0 = longer[shorter.size()];
    uint8_t d = u0 == 0 ? 1 : 0;
    return Seq(word_cat(l, {d}), Word{0});
  }
  throw std::logic_error("moved_point_of: identity pair");
}

}  // namespace

IdentityCheck is_identity(const GroupWord& w, long budget) {
  auto sf = to_standard_form(w, budget);
  if (sf && sf->ypart.empty()) {
    if (!sf->fpart.is_identity()) return {Tri::False, moved_point_of(sf->fpart)};
    // Cross-check: dense probe family must be fixed.
    for (const Seq& p : probe_points(w.n, 6, 200))
      if (evaluate_word(w, p) != p) return {Tri::False, p};
    return {Tri::True, std::nullopt};
  }
  for (const Seq& p : probe_points(w.n, 6))
    if (evaluate_word(w, p) != p) return {Tri::False, p};
  // Rewriting got stuck and no probe moved. A cyclic rotation represents a
  // conjugate, which is the identity iff w is; a rotation that rewrites to a
  // pure F(n) element decides, and its moved point transports back.
  if (sf) {
    GroupWord residue = sf->as_word();
    for (size_t s = 1; s < residue.letters.size(); ++s) {
      GroupWord head{w.n, {residue.letters.begin(), residue.letters.begin() + s}};
      GroupWord tail{w.n, {residue.letters.begin() + s, residue.letters.end()}};
      auto rf = to_standard_form(tail * head, budget);
      if (rf && rf->ypart.empty()) {
        if (rf->fpart.is_identity()) return {Tri::True, std::nullopt};
        // residue = H T and T H moves p, so residue moves T(p).
        return {Tri::False, evaluate_word(tail, moved_point_of(rf->fpart))};
      }
    }
  }
  return {Tri::Inconclusive, std::nullopt};
}

Tri equals_words(const GroupWord& a, const GroupWord& b) {
  return is_identity(a * b.inverse()).verdict;
}

Word random_address(Rng& rng, int n, int max_len) {
  size_t len = rng.below(static_cast<size_t>(max_len) + 1);
  Word w(len);
  for (auto& d : w) d = static_cast<uint8_t>(rng.below(static_cast<size_t>(n)));
  return w;
}

Seq random_seq(Rng& rng, int n) {
  Word pre = random_address(rng, n, 6);
  Word per = random_address(rng, n, 3);
  per.push_back(static_cast<uint8_t>(rng.below(static_cast<size_t>(n))));
  return Seq(std::move(pre), std::move(per));
}

namespace {

// Address with digit sum 0 mod (n-1) that passes the variant's Y filter.
Word random_y_address(Rng& rng, Variant v, int n, int max_len) {
  for (int tries = 0; tries < 200; ++tries) {
    Word w = random_address(rng, n, max_len - 1);
    long sum = 0;
    for (uint8_t d : w) sum += d;
    if (n > 2) {
      int need = static_cast<int>(((n - 1) - sum % (n - 1)) % (n - 1));
      w.push_back(static_cast<uint8_t>(need));
    } else {
      w.push_back(static_cast<uint8_t>(rng.below(2)));
    }
    if (classify_y_address(w, v, n)) return w;
  }
  // Always valid for every variant.
  return Word{static_cast<uint8_t>(n - 1), 0};
}

}  // namespace

Report verify_relation_family(int family, Variant variant, int samples, int n,
                              int eval_points, uint64_t seed) {
  Report rep;
  Rng rng(seed ^ (static_cast<uint64_t>(family) << 32) ^ static_cast<uint64_t>(n));
  auto check_instance = [&](const GroupWord& lhs, const GroupWord& rhs, const std::string& what) {
    ++rep.total;
    for (int k = 0; k < eval_points; ++k) {
      Seq p = random_seq(rng, n);
      if (evaluate_word(lhs, p) != evaluate_word(rhs, p)) {
        rep.failures.push_back(what + " differs at " + p.show());
        return;
      }
    }
    Tri t = equals_words(lhs, rhs);
    if (t == Tri::False)
      rep.failures.push_back(what + " rewrites to a non-identity");
    else if (t == Tri::Inconclusive)
      ++rep.inconclusive;
  };

  for (int s = 0; s < samples; ++s) {
    if (family == 1) {
      // F(n) relations under exact tree-pair equality, plus the x = w(x)
      // closure through the normal-form factorization.
      long i = static_cast<long>(rng.below(8));
      long j = i + 1 + static_cast<long>(rng.below(static_cast<size_t>(8 - i)));
      TreePair xi = TreePair::generator(i, n), xj = TreePair::generator(j, n);
      TreePair lhs = compose(compose(invert(xi), xj), xi);
      TreePair rhs = TreePair::generator(j + n - 1, n);
      ++rep.total;
      if (!(lhs == rhs)) {
        rep.failures.push_back("x" + std::to_string(i) + "^-1 x" + std::to_string(j) + " x" +
                               std::to_string(i) + " != x" + std::to_string(j + n - 1));
        continue;
      }
      int xi_idx = static_cast<int>(rng.below(static_cast<size_t>(n - 1)));
      Word alpha = random_address(rng, n, 4);
      TreePair g = TreePair::generator_at(xi_idx, alpha, n);
      TreePair back = TreePair::identity(n);
      for (auto [idx, sgn] : factor_normal_form(g)) {
        TreePair gen = TreePair::generator(idx, n);
        back = compose(back, sgn > 0 ? gen : invert(gen));
      }
      ++rep.total;
      if (!(back == g)) rep.failures.push_back("w(x) round-trip failed for x[" + std::to_string(xi_idx) + ";" + show_word(alpha) + "]");
    } else if (family == 2) {
      // y_b x_[i],a = x_[i],a y_{x(b)} for defined partial actions.
      int i = static_cast<int>(rng.below(static_cast<size_t>(n - 1)));
      Word alpha = random_address(rng, n, 3);
      TreePair x = TreePair::generator_at(i, alpha, n);
      // Extend a random domain leaf so the partial action is defined, then
      // pad the digit sum to 0 mod (n-1) and retry until the Y filter passes.
      Word beta;
      for (int tries = 0; tries < 100; ++tries) {
        const Word& leaf = x.dom()[rng.below(x.dom().size())];
        Word cand = word_cat(leaf, random_address(rng, n, 2));
        long sum = 0;
        for (uint8_t d : cand) sum += d;
        if (n > 2) cand.push_back(static_cast<uint8_t>(((n - 1) - sum % (n - 1)) % (n - 1)));
        if (classify_y_address(cand, variant, n)) {
          beta = std::move(cand);
          break;
        }
      }
      if (beta.empty()) continue;
      Word img = *partial_apply(x, beta);
      GroupWord lhs{n, {Letter::y(beta), Letter::x(i, alpha)}};
      GroupWord rhs{n, {Letter::x(i, alpha), Letter::y(img)}};
      check_instance(lhs, rhs, "family2 " + show_word(lhs));
    } else if (family == 3) {
      Word a = random_y_address(rng, variant, n, 4);
      Word b = random_y_address(rng, variant, n, 4);
      if (!prefix_incomparable(a, b)) {
        // Force incomparability below sibling branches (prepending 0 or n-1
        // keeps the digit sum 0 mod n-1).
        a = word_cat(Word{0}, a);
        b = word_cat(Word{static_cast<uint8_t>(n - 1)}, b);
        if (!classify_y_address(a, variant, n) || !classify_y_address(b, variant, n)) continue;
      }
      GroupWord lhs{n, {Letter::y(a), Letter::y(b)}};
      GroupWord rhs{n, {Letter::y(b), Letter::y(a)}};
      check_instance(lhs, rhs, "family3 y[" + show_word(a) + "] y[" + show_word(b) + "]");
    } else if (family == 4) {
      Word a = random_y_address(rng, variant, n, 4);
      GroupWord lhs{n, {Letter::y(a)}};
      check_instance(lhs, expand_y(a, ExpandSide::Right, n), "family4 y[" + show_word(a) + "]");
    } else {
      throw std::invalid_argument("verify_relation_family: family must be 1..4");
    }
  }
  return rep;
}

}  // namespace lmwb
