#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lmwb/standard_form.hpp"
#include "lmwb/tree_pair.hpp"

using namespace lmwb;

namespace {

TreePair word_to_pair(const std::vector<std::pair<long, int>>& w, int n) {
  TreePair t = TreePair::identity(n);
  for (auto [i, s] : w) {
    TreePair g = TreePair::generator(i, n);
    t = compose(t, s > 0 ? g : invert(g));
  }
  return t;
}

}  // namespace

TEST_CASE("generator action matches the displayed prefix substitutions") {
  // n=2: x_0(00 0^w) = 0^w, x_0(01 z) = 10 z, x_0(1 z) = 11 z.
  TreePair x0 = TreePair::generator(0, 2);
  CHECK(evaluate(x0, Seq(Word{0, 0}, Word{0})) == Seq::constant(0));
  CHECK(evaluate(x0, Seq(Word{0, 1}, Word{0})) == Seq(Word{1, 0}, Word{0}));
  // x_1(1 0 1 0^w) = 1 x_0(0 1 0^w) = 1 1 0 0^w.
  TreePair x1 = TreePair::generator(1, 2);
  CHECK(evaluate(x1, Seq(Word{1}, Word{0})) == Seq(Word{1}, Word{0}));
  CHECK(evaluate(x1, Seq(Word{1, 0, 1}, Word{0})) == Seq(Word{1, 1, 0}, Word{0}));
  // n=3: x_0(1 2^w) = 21 2^w.
  TreePair y0 = TreePair::generator(0, 3);
  CHECK(evaluate(y0, Seq(Word{1}, Word{2})) == Seq(Word{2, 1}, Word{2}));
}

TEST_CASE("numbered generators and localized copies") {
  for (int n : {2, 3, 4}) {
    // x_[i],(n-1)^k = x_{k(n-1)+i}.
    for (int k = 0; k <= 3; ++k)
      for (int i = 0; i <= n - 2; ++i) {
        Word alpha(static_cast<size_t>(k), static_cast<uint8_t>(n - 1));
        CHECK(TreePair::generator_at(i, alpha, n) == TreePair::generator(k * (n - 1) + i, n));
      }
    // x_[0],(n-1) = x_{n-1}.
    CHECK(TreePair::generator_at(0, Word{static_cast<uint8_t>(n - 1)}, n) ==
          TreePair::generator(n - 1, n));
  }
  // x_3 = x_0^-1 x_1 x_0 at n = 3, checked by evaluation agreement.
  TreePair x3 = TreePair::generator(3, 3);
  TreePair x0 = TreePair::generator(0, 3), x1 = TreePair::generator(1, 3);
  TreePair conj = compose(compose(invert(x0), x1), x0);
  CHECK(x3 == conj);
  Rng rng(3);
  for (int i = 0; i < 30; ++i) {
    Seq p = random_seq(rng, 3);
    CHECK(evaluate(x3, p) == evaluate(conj, p));
  }
}

TEST_CASE("composition convention: fg applies f first") {
  TreePair x0 = TreePair::generator(0, 2);
  TreePair sq = compose(x0, x0);
  CHECK(evaluate(sq, Seq(Word{0, 0, 0}, Word{0})) == Seq::constant(0));
  Rng rng(11);
  for (int n : {2, 3}) {
    for (int i = 0; i < 100; ++i) {
      TreePair f = TreePair::generator(static_cast<long>(rng.below(5)), n);
      TreePair g = TreePair::generator(static_cast<long>(rng.below(5)), n);
      if (rng.below(2)) f = invert(f);
      if (rng.below(2)) g = invert(g);
      Seq p = random_seq(rng, n);
      CHECK(evaluate(compose(f, g), p) == evaluate(g, evaluate(f, p)));
    }
  }
}

TEST_CASE("group axioms and equality") {
  Rng rng(5);
  for (int n : {2, 3}) {
    for (int i = 0; i < 50; ++i) {
      TreePair f = TreePair::identity(n);
      for (int k = 0; k < 4; ++k) {
        TreePair g = TreePair::generator(static_cast<long>(rng.below(6)), n);
        f = compose(f, rng.below(2) ? g : invert(g));
      }
      CHECK(compose(f, invert(f)) == TreePair::identity(n));
      CHECK(invert(invert(f)) == f);
      CHECK(f == f);
    }
  }
  // x_0 x_1 != x_1 x_0 at n = 2.
  TreePair x0 = TreePair::generator(0, 2), x1 = TreePair::generator(1, 2);
  CHECK(compose(x0, x1) != compose(x1, x0));
}

TEST_CASE("presentation relations hold as tree pairs") {
  for (int n : {2, 3, 4}) {
    for (long i = 0; i <= 8; ++i)
      for (long j = i + 1; j <= 8; ++j) {
        TreePair xi = TreePair::generator(i, n), xj = TreePair::generator(j, n);
        CHECK(compose(compose(invert(xi), xj), xi) == TreePair::generator(j + n - 1, n));
      }
  }
}

TEST_CASE("partial action on finite words") {
  for (int n : {2, 3, 4}) {
    TreePair x0 = TreePair::generator(0, n);
    uint8_t t = static_cast<uint8_t>(n - 1);
    CHECK(partial_apply(x0, Word{t}) == Word{t, t});
    CHECK_FALSE(partial_apply(x0, Word{0}).has_value());
    CHECK(partial_apply(TreePair::identity(n), Word{0, t}) == Word{0, t});
  }
  // Defined partial images extend pointwise.
  Rng rng(17);
  for (int n : {2, 3}) {
    for (int i = 0; i < 50; ++i) {
      TreePair f = TreePair::generator(static_cast<long>(rng.below(4)), n);
      if (rng.below(2)) f = invert(f);
      Word beta = random_address(rng, n, 5);
      auto img = partial_apply(f, beta);
      if (!img) continue;
      Seq tail = random_seq(rng, n);
      CHECK(evaluate(f, seq_cat(beta, tail)) == seq_cat(*img, tail));
    }
  }
}

TEST_CASE("support of basic elements") {
  CHECK(support(TreePair::identity(2)).empty());
  // supp x_0 = (0^w, (n-1)^w).
  for (int n : {2, 3}) {
    auto iv = support(TreePair::generator(0, n));
    REQUIRE(iv.size() == 1);
    CHECK(iv[0].lo == Seq::constant(0));
    CHECK(iv[0].hi == Seq::constant(static_cast<uint8_t>(n - 1)));
  }
  // supp x_[0],1 at n=2 is (10^w, 1^w).
  auto iv = support(TreePair::generator_at(0, Word{1}, 2));
  REQUIRE(iv.size() == 1);
  CHECK(iv[0].lo == Seq(Word{1}, Word{0}));
  CHECK(iv[0].hi == Seq::constant(1));
  // Brute check: every depth-8 point 0^w-padded is moved iff inside.
  TreePair f = TreePair::generator_at(0, Word{1}, 2);
  for (int mask = 0; mask < 256; ++mask) {
    Word w;
    for (int b = 0; b < 8; ++b) w.push_back(static_cast<uint8_t>(mask >> b & 1));
    Seq p(w, Word{0});
    bool moved = evaluate(f, p) != p;
    bool inside = lex_compare(iv[0].lo, p) < 0 && lex_compare(p, iv[0].hi) < 0;
    CHECK(moved == inside);
  }
}

TEST_CASE("support endpoints are fixed and unions bound compositions") {
  Rng rng(23);
  for (int n : {2, 3}) {
    for (int i = 0; i < 60; ++i) {
      TreePair f = TreePair::identity(n);
      for (int k = 0; k < 3; ++k) {
        TreePair g = TreePair::generator(static_cast<long>(rng.below(5)), n);
        f = compose(f, rng.below(2) ? g : invert(g));
      }
      auto sup = support(f);
      CHECK(sup.empty() == (f == TreePair::identity(n)));
      for (const auto& iv : sup) {
        CHECK(evaluate(f, iv.lo) == iv.lo);
        CHECK(evaluate(f, iv.hi) == iv.hi);
      }
      // Points moved by fg lie in supp f u supp g.
      TreePair g = TreePair::generator(static_cast<long>(rng.below(5)), n);
      TreePair fg = compose(f, g);
      Seq p = random_seq(rng, n);
      if (evaluate(fg, p) != p) {
        bool in_f = evaluate(f, p) != p, in_g = evaluate(g, p) != p;
        CHECK((in_f || in_g));
      }
    }
  }
}

TEST_CASE("normal form factorization round-trips") {
  CHECK(factor_normal_form(TreePair::identity(3)).empty());
  auto w5 = factor_normal_form(TreePair::generator(5, 3));
  REQUIRE(w5.size() == 1);
  CHECK(w5[0] == std::pair<long, int>{5, 1});
  Rng rng(29);
  for (int n : {2, 3, 4}) {
    for (int rep = 0; rep < 170; ++rep) {
      TreePair f = TreePair::identity(n);
      for (int k = 0; k < 5; ++k) {
        TreePair g = TreePair::generator(static_cast<long>(rng.below(7)), n);
        f = compose(f, rng.below(2) ? g : invert(g));
      }
      auto w = word_to_pair(factor_normal_form(f), n);
      CHECK(w == f);
      // Shape: positive part nondecreasing, then negative part nonincreasing.
      auto word = factor_normal_form(f);
      size_t split = 0;
      while (split < word.size() && word[split].second > 0) ++split;
      for (size_t k = split; k < word.size(); ++k) CHECK(word[k].second < 0);
      for (size_t k = 1; k < split; ++k) CHECK(word[k - 1].first <= word[k].first);
      for (size_t k = split + 1; k < word.size(); ++k) CHECK(word[k - 1].first >= word[k].first);
    }
  }
}

TEST_CASE("x_[0],0 equals its displayed word") {
  for (int n : {2, 3, 4}) {
    TreePair x0 = TreePair::generator(0, n);
    TreePair xt = TreePair::generator(n - 1, n);
    TreePair rhs = compose(compose(compose(x0, x0), invert(xt)), invert(x0));
    CHECK(TreePair::generator_at(0, Word{0}, n) == rhs);
  }
}

TEST_CASE("abelianization") {
  for (int n : {2, 3, 4}) {
    auto a0 = abelianization_a(TreePair::generator(0, n));
    std::vector<long long> e1(static_cast<size_t>(n), 0);
    e1[0] = 1;
    CHECK(a0 == e1);
    for (int i = 1; i <= 3; ++i) {
      Word zeros(static_cast<size_t>(i), 0);
      auto v = abelianization_a(TreePair::generator_at(0, zeros, n));
      std::vector<long long> want(static_cast<size_t>(n), 0);
      want.front() = 1;
      want.back() = -1;
      CHECK(v == want);
    }
    // Non-constant address: zero image.
    Word nc{0, static_cast<uint8_t>(n - 1)};
    CHECK(abelianization_a(TreePair::generator_at(0, nc, n)) ==
          std::vector<long long>(static_cast<size_t>(n), 0));
  }
  // Homomorphism + commutators die.
  Rng rng(31);
  for (int n : {2, 3}) {
    for (int rep = 0; rep < 100; ++rep) {
      TreePair f = TreePair::generator(static_cast<long>(rng.below(6)), n);
      TreePair g = TreePair::generator(static_cast<long>(rng.below(6)), n);
      if (rng.below(2)) f = invert(f);
      auto af = abelianization_a(f), ag = abelianization_a(g);
      auto afg = abelianization_a(compose(f, g));
      for (size_t k = 0; k < af.size(); ++k) CHECK(afg[k] == af[k] + ag[k]);
      TreePair c = compose(compose(compose(f, g), invert(f)), invert(g));
      CHECK(abelianization_a(c) == std::vector<long long>(static_cast<size_t>(n), 0));
    }
  }
}

TEST_CASE("dense support elements") {
  for (int n : {2, 3}) {
    uint8_t t = static_cast<uint8_t>(n - 1);
    for (const Word& s : std::vector<Word>{{}, {1}, {t, 0}, {0, 1}, {1, 0, 1}, {t, t}, {1, 1}}) {
      bool bad = false;
      for (uint8_t d : s)
        if (d >= n) bad = true;
      if (bad) continue;
      TreePair x = dense_support_element(s, n);
      auto sup = support(x);
      REQUIRE(sup.size() == 1);
      CHECK(sup[0].lo == Seq(s, Word{0}));
      CHECK(sup[0].hi == Seq::constant(t));
    }
  }
  // n=2, s=1: points left of 10^w stay put.
  TreePair x = dense_support_element(Word{1}, 2);
  CHECK(evaluate(x, Seq(Word{0}, Word{0})) == Seq(Word{0}, Word{0}));
  // n=3, s=20: the point 21 0^w lies inside and moves.
  TreePair z = dense_support_element(Word{2, 0}, 3);
  Seq p(Word{2, 1}, Word{0});
  CHECK(lex_compare(Seq(Word{2, 0}, Word{0}), p) < 0);
  CHECK(evaluate(z, p) != p);
}

TEST_CASE("restriction to an interval") {
  // Restricting to the exact support returns the element.
  TreePair f = TreePair::generator_at(0, Word{1}, 2);
  Interval I{Seq(Word{1}, Word{0}), Seq::constant(1)};
  CHECK(restrict_to_interval(f, I) == f);
  CHECK(restrict_to_interval(TreePair::identity(2), I) == TreePair::identity(2));
  // Moving boundary points violates the precondition.
  TreePair x0 = TreePair::generator(0, 2);
  CHECK_THROWS_AS(restrict_to_interval(x0, Interval{Seq(Word{0, 1}, Word{0}), Seq::constant(1)}),
                  precondition_error);
}

TEST_CASE("support splitting composes back") {
  // f fixing s1 0^w and s2 0^w splits into three restrictions that compose
  // back in any order.
  for (int n : {2, 3}) {
    uint8_t t = static_cast<uint8_t>(n - 1);
    TreePair f = compose(TreePair::generator_at(0, Word{0, 0}, n),
                         TreePair::generator_at(0, Word{t, t}, n));
    Seq lo = Seq::constant(0), hi = Seq::constant(t);
    Seq c1(Word{0, 1}, Word{0});
    Seq c2(Word{t}, Word{0});
    CHECK(evaluate(f, c1) == c1);
    CHECK(evaluate(f, c2) == c2);
    TreePair f1 = restrict_to_interval(f, Interval{lo, c1});
    TreePair f2 = restrict_to_interval(f, Interval{c1, c2});
    TreePair f3 = restrict_to_interval(f, Interval{c2, hi});
    CHECK(compose(compose(f1, f2), f3) == f);
    CHECK(compose(compose(f3, f1), f2) == f);  // disjoint supports commute
  }
}
