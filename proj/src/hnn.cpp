#include "lmwb/hnn.hpp"

#include "lmwb/abelian.hpp"

#include <algorithm>

namespace lmwb {

std::string hnn_name(HnnId id) {
  switch (id) {
    case HnnId::BT: return "bt";
    case HnnId::F1: return "f1";
    case HnnId::F2: return "f2";
    case HnnId::F3: return "f3";
    case HnnId::F4: return "f4";
    case HnnId::N5: return "n5";
    case HnnId::N6: return "n6";
    case HnnId::N7: return "n7";
    case HnnId::N8: return "n8";
  }
  return "?";
}

std::optional<HnnId> hnn_from_name(const std::string& s) {
  for (HnnId id : {HnnId::BT, HnnId::F1, HnnId::F2, HnnId::F3, HnnId::F4, HnnId::N5, HnnId::N6,
                   HnnId::N7, HnnId::N8})
    if (hnn_name(id) == s) return id;
  return std::nullopt;
}

namespace {

bool is_flike(HnnId id) {
  return id == HnnId::BT || id == HnnId::F1 || id == HnnId::F2 || id == HnnId::F3 ||
         id == HnnId::F4;
}

// +1 when the stable letter is x_0 / y_{n-1}; -1 for x_0^-1 / y_0^-1.
int stable_exponent(HnnId id) {
  switch (id) {
    case HnnId::BT:
    case HnnId::F1:
    case HnnId::F4:
    case HnnId::N6:
    case HnnId::N8: return +1;
    default: return -1;
  }
}

Variant base_variant(HnnId id) {
  switch (id) {
    case HnnId::F1: return Variant::G0;   // shifted copy of yG
    case HnnId::F2: return Variant::G0;   // shifted copy of Gy
    case HnnId::F3: return Variant::yG;   // shifted copy of yGy
    case HnnId::F4: return Variant::Gy;   // shifted copy of yGy
    case HnnId::N5: return Variant::G0;
    case HnnId::N6: return Variant::G0;
    case HnnId::N7: return Variant::Gy;
    case HnnId::N8: return Variant::yG;
    default: return Variant::G0;  // BT: no y letters at all
  }
}

}  // namespace

GroupWord stable_word(HnnId id, int n) {
  const uint8_t top = static_cast<uint8_t>(n - 1);
  GroupWord w{n, {}};
  switch (id) {
    case HnnId::BT:
    case HnnId::F1:
    case HnnId::F4: w.letters.push_back(Letter::x(0, {})); break;
    case HnnId::F2:
    case HnnId::F3: w.letters.push_back(Letter::x(0, {}, -1)); break;
    case HnnId::N5:
    case HnnId::N7: w.letters.push_back(Letter::y({0}, -1)); break;
    case HnnId::N6:
    case HnnId::N8: w.letters.push_back(Letter::y({top})); break;
  }
  return w;
}

bool in_base(HnnId id, const Letter& l, int n) {
  const uint8_t top = static_cast<uint8_t>(n - 1);
  switch (id) {
    case HnnId::BT:
      if (l.kind != Letter::X) return false;
      return l.addr.empty() ? l.xi >= 1 : l.addr.front() != 0;
    case HnnId::F1:
    case HnnId::F4: {
      if (l.addr.empty() || l.addr.front() != top) return false;
      return l.kind == Letter::X || classify_y_address(l.addr, base_variant(id), n);
    }
    case HnnId::F2:
    case HnnId::F3: {
      if (l.addr.empty() || l.addr.front() != 0) return false;
      return l.kind == Letter::X || classify_y_address(l.addr, base_variant(id), n);
    }
    default:
      return l.kind == Letter::X || classify_y_address(l.addr, base_variant(id), n);
  }
}

bool in_base(HnnId id, const GroupWord& w) {
  return std::all_of(w.letters.begin(), w.letters.end(),
                     [&](const Letter& l) { return in_base(id, l, w.n); });
}

namespace {

// y_0 x_0 y_0^-1 = x_0^2 y_{(n-1)(n-1)0} y_{(n-1)0}^-1 x_{n-1}^-1.
GroupWord lemma_conj_x0(int n) {
  const uint8_t t = static_cast<uint8_t>(n - 1);
  GroupWord w{n, {}};
  w.letters = {Letter::x(0, {}), Letter::x(0, {}), Letter::y({t, t, 0}), Letter::y({t, 0}, -1),
               Letter::x(0, {t}, -1)};
  return w;
}

// y_{n-1}^-1 x_i y_{n-1} = x_i y_{(n-1)0(n-1)}^-1 y_{(n-1)00} x_{n-1} for
// 0 <= i <= n-2: the swap leaves x_i, and the residue
// y_{(n-1)(n-1)}^-1 y_{n-1} rewrites by the inverse-side relation (4).
// x_{n-1} is spelled x_0^-1 x_[0],0^-1 x_0^2 so every letter of the image is
// again fixed or covered by this table, making the ascent iterable.
GroupWord mirror_conj_xi(int i, int n) {
  const uint8_t t = static_cast<uint8_t>(n - 1);
  GroupWord w{n, {}};
  w.letters = {Letter::x(i, {}),      Letter::y({t, 0, t}, -1), Letter::y({t, 0, 0}),
               Letter::x(0, {}, -1),  Letter::x(0, {0}, -1),    Letter::x(0, {}),
               Letter::x(0, {})};
  return w;
}

// y_{n-1}^-1 x_{n-1} y_{n-1}: the (n-1)-localized form of y^-1 x_0 y with
// the constant-address pair rewritten through relation (4).
GroupWord mirror_conj_xtop(int n) {
  const uint8_t t = static_cast<uint8_t>(n - 1);
  GroupWord w{n, {}};
  w.letters = {Letter::x(0, {t, 0}, -1),
               Letter::x(0, {t}),
               Letter::y({t, t, 0}, -1),
               Letter::y({t, 0, t}),
               Letter::y({t, 0, 0}, -1),
               Letter::y({t, t, t, 0}),
               Letter::y({t, t, t, 0, t}, -1),
               Letter::y({t, t, t, 0, 0}),
               Letter::x(0, {t, t, t}),
               Letter::y({t, t, 0}, -1),
               Letter::y({t, 0})};
  return w;
}

// y_{n-1}^-1 y_{(n-1)0} y_{n-1}: the (n-1)-localized form of y^-1 y_0 y.
GroupWord mirror_conj_yt0(int n) {
  const uint8_t t = static_cast<uint8_t>(n - 1);
  GroupWord w{n, {}};
  w.letters = {Letter::y({t, 0}, -1), Letter::y({t, t, 0}),     Letter::y({t, 0, 0}),
               Letter::y({t, 0, t}, -1), Letter::y({t, t, 0}),  Letter::x(0, {t}, -1),
               Letter::x(0, {t, 0}),     Letter::x(0, {t}),     Letter::y({t, t, 0}, -1),
               Letter::y({t, 0})};
  return w;
}

// Closed-form conjugate of one letter, or nullopt when only the literal
// route applies.
std::optional<GroupWord> conj_letter(HnnId id, const Letter& l, int dir, int n) {
  const uint8_t top = static_cast<uint8_t>(n - 1);
  GroupWord out{n, {}};
  if (is_flike(id)) {
    int e = stable_exponent(id) * dir;  // conjugator is x_0^e applied to addresses
    TreePair x0 = TreePair::generator(0, n);
    TreePair conj = e > 0 ? x0 : invert(x0);
    if (l.addr.empty()) {
      if (l.xi == 0) {
        out.letters.push_back(l);  // the stable letter commutes with itself
        return out;
      }
      if (e > 0) {
        out.letters.push_back(Letter::x(l.xi, {top}, l.sign));  // x_i -> x_{i+n-1}
        return out;
      }
      return std::nullopt;
    }
    if (auto img = partial_apply(conj, l.addr)) {
      Letter m = l;
      m.addr = *img;
      out.letters.push_back(std::move(m));
      return out;
    }
    return std::nullopt;
  }
  const bool over_zero = id == HnnId::N5 || id == HnnId::N7;  // stable y_0^-1
  const Word s = over_zero ? Word{0} : Word{top};
  if (l.kind == Letter::Y) {
    if (l.addr == s || prefix_incomparable(l.addr, s)) {
      out.letters.push_back(l);
      return out;
    }
    if (!over_zero && dir > 0 && l.addr == Word{top, 0}) {
      GroupWord w = mirror_conj_yt0(n);
      return l.sign > 0 ? w : w.inverse();
    }
    // Nested conjugates below (n-1) that the relation calculus collapses to
    // single letters: y^-1 y_{0(n-1)} y = y_{(n-1)0} and y^-1 y_{00} y = y_0,
    // localized under the stable address.
    if (!over_zero && dir > 0 && l.addr == Word{top, 0, top}) {
      out.letters.push_back(Letter::y({top, top, 0}, l.sign));
      return out;
    }
    if (!over_zero && dir > 0 && l.addr == Word{top, 0, 0}) {
      out.letters.push_back(Letter::y({top, 0}, l.sign));
      return out;
    }
    return std::nullopt;
  }
  if (auto img = partial_apply(letter_tree(Letter::x(l.xi, l.addr), n), s)) {
    if (*img == s) {
      out.letters.push_back(l);
      return out;
    }
  }
  if (dir > 0) {
    if (over_zero && l.addr.empty() && l.xi == 0) {
      GroupWord w = lemma_conj_x0(n);
      return l.sign > 0 ? w : w.inverse();
    }
    if (!over_zero && l.addr.empty()) {
      GroupWord w = mirror_conj_xi(l.xi, n);
      return l.sign > 0 ? w : w.inverse();
    }
    if (!over_zero && l.addr == Word{top} && l.xi == 0) {
      GroupWord w = mirror_conj_xtop(n);
      return l.sign > 0 ? w : w.inverse();
    }
  }
  return std::nullopt;
}

}  // namespace

GroupWord conjugate_by_stable(HnnId id, const GroupWord& w, int dir, long budget) {
  if (!in_base(id, w))
    throw not_in_base("conjugate_by_stable: word is not in the " + hnn_name(id) + " base");
  GroupWord out{w.n, {}};
  bool all_closed = true;
  GroupWord st = stable_word(id, w.n);
  GroupWord g = dir > 0 ? st.inverse() : st;  // conjugator: stable^-dir
  for (const Letter& l : w.letters) {
    if (auto cw = conj_letter(id, l, dir, w.n)) {
      out.letters.insert(out.letters.end(), cw->letters.begin(), cw->letters.end());
    } else {
      all_closed = false;
      GroupWord lit = g * GroupWord{w.n, {l}} * g.inverse();
      out.letters.insert(out.letters.end(), lit.letters.begin(), lit.letters.end());
    }
  }
  if (!all_closed) {
    if (auto sf = to_standard_form(out, budget)) return sf->as_word();
  }
  return out;
}

namespace {

std::vector<GroupWord> base_generators(HnnId id, int depth, int n) {
  const uint8_t top = static_cast<uint8_t>(n - 1);
  std::vector<GroupWord> gens;
  auto one = [&](Letter l) { gens.push_back(GroupWord{n, {std::move(l)}}); };
  if (id == HnnId::BT) {
    for (int k = 0; k <= depth; ++k)
      for (int i = 0; i <= n - 2; ++i) {
        if (k == 0 && i == 0) continue;
        one(Letter::x(i, Word(static_cast<size_t>(k), top)));
      }
    return gens;
  }
  if (is_flike(id)) {
    uint8_t head = (id == HnnId::F1 || id == HnnId::F4) ? top : 0;
    std::vector<Word> layer{Word{head}};
    for (int len = 1; len <= depth; ++len) {
      for (const Word& a : layer) {
        for (int i = 0; i <= n - 2; ++i) one(Letter::x(i, a));
        if (classify_y_address(a, base_variant(id), n)) one(Letter::y(a));
      }
      std::vector<Word> next;
      for (const Word& a : layer)
        for (uint8_t d = 0; d < n; ++d) next.push_back(word_cat(a, {d}));
      layer = std::move(next);
    }
    return gens;
  }
  if (id == HnnId::N5 || id == HnnId::N7) {
    for (const Letter& l : finite_generators(base_variant(id), n)) one(l);
    return gens;
  }
  // N6/N8: the digit-flip image of the N5/N7 generating set, the natural one
  // for the mirrored stable letter y_{n-1}: x_0, x_j x_0^-1, x_[0],0,
  // y_{0(n-1)} (plus y_0 for N8). It generates the same base.
  one(Letter::x(0, {}));
  for (int j = 1; j <= n - 2; ++j)
    gens.push_back(GroupWord{n, {Letter::x(j, {}), Letter::x(0, {}, -1)}});
  one(Letter::x(0, {0}));
  one(Letter::y({0, top}));
  if (id == HnnId::N8) one(Letter::y({0}));
  return gens;
}

}  // namespace

AscentReport verify_ascending(HnnId id, int depth, int n, int eval_points, uint64_t seed) {
  AscentReport rep{id, n, {}};
  Rng rng(seed ^ static_cast<uint64_t>(n) ^ (static_cast<uint64_t>(depth) << 8));
  GroupWord st = stable_word(id, n);
  GroupWord g = st.inverse();
  for (const GroupWord& gen : base_generators(id, depth, n)) {
    AscentEntry e;
    e.generator = show_word(gen);
    GroupWord img = conjugate_by_stable(id, gen, +1);
    e.image = show_word(img);
    e.certified = in_base(id, img);
    GroupWord lit = g * gen * g.inverse();
    e.agrees = true;
    for (int k = 0; k < eval_points && e.agrees; ++k) {
      Seq p = random_seq(rng, n);
      if (evaluate_word(img, p) != evaluate_word(lit, p)) e.agrees = false;
    }
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

Witness strictness_witness(HnnId id, int n) {
  const uint8_t top = static_cast<uint8_t>(n - 1);
  Witness w{id, n, WitnessMode::SupportCylinder, GroupWord{n, {}}, {}, std::nullopt, ""};
  switch (id) {
    case HnnId::BT:
      w.element.letters = {numbered_x(1, n)};
      w.cylinder = n == 2 ? Word{1, 0} : Word{1};
      w.note = "x1 moves points of the cylinder; every conjugated generator x_j (j >= n) is "
               "supported away from it";
      return w;
    case HnnId::F1:
    case HnnId::F4:
      w.element.letters = {Letter::x(0, {top})};
      w.cylinder = Word{top, 0};
      w.note = "x_{n-1} is a base generator; conjugated generators live below (n-1)(n-1)";
      return w;
    case HnnId::F2:
    case HnnId::F3:
      w.element.letters = {Letter::x(0, {0})};
      w.cylinder = Word{0, top};
      w.note = "x_[0;0] is a base generator; conjugated generators live below 00";
      return w;
    case HnnId::N5:
    case HnnId::N7: {
      w.mode = WitnessMode::TailChange;
      w.element.letters = {Letter::y({0, 0}, -1), Letter::y({0})};
      Word pre(8, 0);  // m = 5
      w.point = Seq(pre, Word{top, 0, 0, top});
      w.note = "y[00]' y[0] changes the tail of the witness point infinitely often, so "
               "y[0]' x[0;0] y[0] is outside the base";
      return w;
    }
    default: {
      w.mode = WitnessMode::TailChange;
      w.element.letters = {Letter::y({top, top}), Letter::y({top}, -1)};
      Word pre(8, top);
      w.point = Seq(pre, Word{0, top, top, 0});
      w.note = "y[(n-1)(n-1)] y[(n-1)]' changes the tail of the witness point infinitely "
               "often, so y[(n-1)] x[0;(n-1)] y[(n-1)]' is outside the base";
      return w;
    }
  }
}

bool check_witness(const Witness& w) {
  const int n = w.n;
  if (w.mode == WitnessMode::TailChange) {
    if (!w.point) return false;
    Seq out = evaluate_word(w.element, *w.point);
    if (eventually_equal(out, *w.point)) return false;
    // Every base generator must preserve the tail class of the point.
    for (const GroupWord& gen : base_generators(w.id, 3, n)) {
      Seq img = evaluate_word(gen, *w.point);
      if (!eventually_equal(img, *w.point)) return false;
    }
    return true;
  }
  // SupportCylinder: the element is a base element whose support meets the
  // cylinder, while the support of every conjugated generator avoids it.
  if (!in_base(w.id, w.element)) return false;
  TreePair t = TreePair::identity(n);
  for (const Letter& l : w.element.letters) {
    if (l.kind != Letter::X) return false;
    t = compose(t, letter_tree(l, n));
  }
  Seq cyl_lo(w.cylinder, Word{0});
  Seq cyl_hi(w.cylinder, Word{static_cast<uint8_t>(n - 1)});
  auto meets = [&](const Interval& iv) {
    if (lex_compare(cyl_lo, iv.lo) > 0) return lex_compare(cyl_lo, iv.hi) < 0;
    if (lex_compare(cyl_hi, iv.hi) >= 0) return true;
    return lex_compare(iv.lo, cyl_hi) < 0;
  };
  bool touched = false;
  for (const Interval& iv : support(t))
    if (meets(iv)) touched = true;
  if (!touched) return false;
  for (const GroupWord& gen : base_generators(w.id, 6, n)) {
    GroupWord img = conjugate_by_stable(w.id, gen, +1);
    for (const Letter& m : img.letters) {
      // supp of x_[i],a and of y_a both sit inside cyl(a); incomparable
      // addresses cannot meet the witness cylinder.
      if (m.addr.empty() || !prefix_incomparable(m.addr, w.cylinder)) {
        if (m.kind != Letter::X) return false;
        for (const Interval& iv : support(letter_tree(m, n)))
          if (meets(iv)) return false;
      }
    }
  }
  return true;
}

}  // namespace lmwb
