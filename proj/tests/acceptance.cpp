// Acceptance suite: one check per criterion, each with its stated tolerance
// and time budget, printing one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "lazy_eval.hpp"
#include "lmwb/abelian.hpp"
#include "lmwb/cluster.hpp"
#include "lmwb/hnn.hpp"
#include "lmwb/standard_form.hpp"

using namespace lmwb;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& what) {
    ok = false;
    if (!detail.empty()) detail += "; ";
    if (detail.size() < 400) detail += what;
  }
  void expect(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }
};

int g_failures = 0;

void criterion(int number, const std::string& name, double time_limit_s,
               const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > time_limit_s)
    out.fail("time limit exceeded: " + std::to_string(secs) + "s > " + std::to_string(time_limit_s) + "s");
  std::printf("[%s] criterion %d: %s (%.1fs)\n", out.ok ? "PASS" : "FAIL", number, name.c_str(), secs);
  if (!out.ok) {
    std::printf("       %s\n", out.detail.c_str());
    ++g_failures;
  }
  std::fflush(stdout);
}

GroupWord rand_word(Rng& rng, int n, int len, int maxaddr = 2) {
  GroupWord w{n, {}};
  for (int i = 0; i < len; ++i) {
    int sign = rng.below(2) ? 1 : -1;
    if (rng.below(2))
      w.letters.push_back(Letter::x(static_cast<int>(rng.below(static_cast<size_t>(n - 1))),
                                    random_address(rng, n, maxaddr), sign));
    else
      w.letters.push_back(Letter::y(random_address(rng, n, maxaddr), sign));
  }
  return w;
}

void crit1_presentations(Outcome& out) {
  for (int n : {2, 3, 4, 5}) {
    for (long i = 0; i <= 8; ++i)
      for (long j = i + 1; j <= 8; ++j) {
        TreePair xi = TreePair::generator(i, n), xj = TreePair::generator(j, n);
        bool ok = compose(compose(invert(xi), xj), xi) == TreePair::generator(j + n - 1, n);
        out.expect(ok, "infinite relation failed at n=" + std::to_string(n) + " i=" +
                           std::to_string(i) + " j=" + std::to_string(j));
      }
    // Finite presentation, x^y = y^-1 x y:
    //   x_k^{x_0} = x_k^{x_i}            (1 <= i < k <= n-1)
    //   x_k^{x_0 x_0} = x_k^{x_0 x_i}    (1 <= i,k <= n-1, k-1 <= i)
    //   x_1^{x_0x_0x_0} = x_1^{x_0x_0x_{n-1}}
    auto conj = [&](const TreePair& x, const std::vector<TreePair>& by) {
      TreePair pre = TreePair::identity(n), post = TreePair::identity(n);
      for (const TreePair& b : by) {
        pre = compose(invert(b), pre);
        post = compose(post, b);
      }
      return compose(compose(pre, x), post);
    };
    std::vector<TreePair> gens;
    for (long i = 0; i < n; ++i) gens.push_back(TreePair::generator(i, n));
    for (int k = 1; k <= n - 1; ++k)
      for (int i = 1; i < k; ++i)
        out.expect(conj(gens[k], {gens[0]}) == conj(gens[k], {gens[i]}),
                   "finite relation family 1 failed at n=" + std::to_string(n));
    for (int k = 1; k <= n - 1; ++k)
      for (int i = std::max(1, k - 1); i <= n - 1; ++i)
        out.expect(conj(gens[k], {gens[0], gens[0]}) == conj(gens[k], {gens[0], gens[i]}),
                   "finite relation family 2 failed at n=" + std::to_string(n));
    out.expect(conj(gens[1], {gens[0], gens[0], gens[0]}) ==
                   conj(gens[1], {gens[0], gens[0], gens[n - 1]}),
               "finite relation family 3 failed at n=" + std::to_string(n));
  }
}

void crit2_relation_families(Outcome& out) {
  for (int n : {2, 3})
    for (Variant v : {Variant::G0, Variant::yG, Variant::Gy, Variant::yGy})
      for (int family = 1; family <= 4; ++family) {
        Report rep = verify_relation_family(family, v, 200, n, 200);
        out.expect(rep.ok(), "family " + std::to_string(family) + " " + variant_name(v) +
                                 " n=" + std::to_string(n) + ": " +
                                 (rep.failures.empty() ? "" : rep.failures.front()));
        out.expect(rep.inconclusive == 0, "inconclusive results in family " + std::to_string(family));
      }
}

void crit3_identity_fixtures(Outcome& out) {
  Rng rng(0xf1c5);
  for (int n : {2, 3, 4}) {
    const uint8_t t = static_cast<uint8_t>(n - 1);
    auto gw = [&](std::vector<Letter> ls) { return GroupWord{n, std::move(ls)}; };
    auto x0 = Letter::x(0, {});
    std::vector<std::pair<GroupWord, GroupWord>> fixtures;
    // y_00 = x_0 y_0 x_0^-1
    fixtures.emplace_back(gw({Letter::y({0, 0})}), gw({x0, Letter::y({0}), x0.inverse()}));
    // y_{0(n-1)0} = c y_{0(n-1)(n-1)} c^-1 with c = x_0^2 x_{2(n-1)} x_{n-1}^-1 x_0^-1
    GroupWord c = gw({x0, x0, numbered_x(2 * (n - 1), n), numbered_x(n - 1, n, -1), x0.inverse()});
    fixtures.emplace_back(gw({Letter::y({0, t, 0})}),
                          c * gw({Letter::y({0, t, t})}) * c.inverse());
    // x_[0],0 = x_0^2 x_{n-1}^-1 x_0^-1
    fixtures.emplace_back(gw({Letter::x(0, {0})}),
                          gw({x0, x0, numbered_x(n - 1, n, -1), x0.inverse()}));
    // y_{(n-1)^3} = x_0^-2 y_{n-1} x_0^2
    fixtures.emplace_back(gw({Letter::y({t, t, t})}),
                          gw({x0.inverse(), x0.inverse(), Letter::y({t}), x0, x0}));
    // y_{(n-1)0} = x_0 y_{(n-1)(n-1)0} x_0^-1
    fixtures.emplace_back(gw({Letter::y({t, 0})}),
                          gw({x0, Letter::y({t, t, 0}), x0.inverse()}));
    // x_[0],(n-1) = x_{n-1}
    fixtures.emplace_back(gw({Letter::x(0, {t})}), gw({numbered_x(n - 1, n)}));
    // y_0 x_0 y_0^-1 = x_0^2 y_{(n-1)(n-1)0} y_{(n-1)0}^-1 x_{n-1}^-1
    fixtures.emplace_back(gw({Letter::y({0}), x0, Letter::y({0}, -1)}),
                          gw({x0, x0, Letter::y({t, t, 0}), Letter::y({t, 0}, -1),
                              numbered_x(n - 1, n, -1)}));
    int idx = 0;
    for (const auto& [lhs, rhs] : fixtures) {
      ++idx;
      std::string tag = "fixture " + std::to_string(idx) + " n=" + std::to_string(n);
      out.expect(equals_words(lhs, rhs) == Tri::True, tag + " not equal under rewriting");
      for (int k = 0; k < 100; ++k) {
        Seq p = random_seq(rng, n);
        if (evaluate_word(lhs, p) != evaluate_word(rhs, p)) {
          out.fail(tag + " differs at " + p.show());
          break;
        }
      }
    }
  }
}

void crit4_lemma_evaluation(Outcome& out) {
  for (int n : {2, 3}) {
    const uint8_t t = static_cast<uint8_t>(n - 1);
    for (int m : {1, 5}) {
      Seq in(Word(static_cast<size_t>(m + 3), 0), Word{t, 0, 0, t});
      GroupWord w{n, {Letter::y({0, 0}, -1), Letter::y({0})}};
      Seq got = evaluate_word(w, in);
      Seq want(Word(static_cast<size_t>(m + 3), 0), Word{t, t, t, t, 0});
      out.expect(got == want, "witness image wrong at n=" + std::to_string(n) +
                                  " m=" + std::to_string(m) + ": got " + got.show());
      out.expect(!eventually_equal(in, got), "witness tails unexpectedly agree");
    }
  }
}

void crit5_abelianization(Outcome& out) {
  Rng rng(0xabe1);
  for (int n : {2, 3, 4, 5}) {
    const uint8_t t = static_cast<uint8_t>(n - 1);
    for (int i = 1; i <= 3; ++i) {
      std::vector<long long> want(static_cast<size_t>(n), 0);
      want.front() = 1;
      want.back() = -1;
      auto got = abelianization_a(TreePair::generator_at(0, Word(static_cast<size_t>(i), 0), n));
      out.expect(got == want, "a(x_[0],0^i) wrong at n=" + std::to_string(n));
      std::vector<long long> want2(static_cast<size_t>(n), 0);
      want2.back() = 1;
      auto got2 = abelianization_a(TreePair::generator_at(0, Word(static_cast<size_t>(i), t), n));
      out.expect(got2 == want2, "a(x_[0],(n-1)^i) wrong at n=" + std::to_string(n));
    }
    int nonconst = 0;
    while (nonconst < 20) {
      Word a = random_address(rng, n, 4);
      if (a.empty() || is_constant_word(a, 0) || is_constant_word(a, t)) continue;
      ++nonconst;
      out.expect(abelianization_a(TreePair::generator_at(0, a, n)) ==
                     std::vector<long long>(static_cast<size_t>(n), 0),
                 "a(x_[0],alpha) nonzero for non-constant alpha at n=" + std::to_string(n));
    }
    for (Variant v : {Variant::G0, Variant::yG, Variant::Gy, Variant::yGy}) {
      Report rep = verify_pi_well_defined(v, 200, n);
      out.expect(rep.ok(), "pi well-definedness failed for " + variant_name(v) +
                               " n=" + std::to_string(n));
      out.expect(rank_certificate(v, n),
                 "rank certificate failed for " + variant_name(v) + " n=" + std::to_string(n));
    }
  }
}

void crit6_hnn(Outcome& out) {
  Rng rng(0x4a11);
  const HnnId cases[] = {HnnId::BT, HnnId::F1, HnnId::F2, HnnId::F3, HnnId::F4,
                         HnnId::N5, HnnId::N6, HnnId::N7, HnnId::N8};
  for (int n : {2, 3}) {
    for (HnnId id : cases) {
      AscentReport rep = verify_ascending(id, 5, n, 100);
      bool all = rep.ok();
      out.expect(all, "ascent failed for " + hnn_name(id) + " n=" + std::to_string(n));
      Witness w = strictness_witness(id, n);
      out.expect(check_witness(w), "strictness witness failed for " + hnn_name(id) +
                                       " n=" + std::to_string(n));
      // Closed forms vs literal conjugates on base words.
      GroupWord st = stable_word(id, n);
      auto gens = verify_ascending(id, 2, n, 1);
      for (int rep2 = 0; rep2 < 10; ++rep2) {
        const auto& e = gens.entries[rng.below(gens.entries.size())];
        GroupWord g = parse_word(e.generator, n);
        for (int dir : {+1, -1}) {
          GroupWord img = conjugate_by_stable(id, g, dir);
          GroupWord conj = dir > 0 ? st.inverse() : st;
          GroupWord lit = conj * g * conj.inverse();
          for (int k = 0; k < 100; ++k) {
            Seq p = random_seq(rng, n);
            if (evaluate_word(img, p) != evaluate_word(lit, p)) {
              out.fail("conjugate disagrees with literal for " + hnn_name(id));
              break;
            }
          }
        }
      }
    }
  }
}

void crit7_cluster(Outcome& out) {
  ClusterComplex example = cluster(Arrangement{2, {1}});
  out.expect(example.count_by_dim() == std::vector<size_t>{4, 5, 2},
             "m=2 type2={1} cell counts wrong");
  for (int m = 1; m <= 4; ++m)
    for (uint64_t mask = 0; mask < (1ull << (m - 1)); ++mask) {
      Arrangement a{m, {}};
      for (int i = 1; i < m; ++i)
        if (mask >> (i - 1) & 1) a.type2.insert(i);
      out.expect(euler_characteristic(cluster(a)) == 1,
                 "euler characteristic != 1 at m=" + std::to_string(m));
    }
  // is_special vs the brute-force tree oracle: all pairs to depth 4, all
  // triples to depth 4 (n=2) / 3 (n=3); tree size bound 1+(n-1)(1+sum|a_i|).
  for (int n : {2, 3}) {
    int triple_depth = n == 2 ? 4 : 3;
    size_t cap = std::max<size_t>(13, 1 + static_cast<size_t>(n - 1) * (1 + 3 * triple_depth));
    cap = std::max(cap, 1 + static_cast<size_t>(n - 1) * (1 + 2 * 4));
    std::set<std::vector<Word>> pairs, triples;
    std::vector<Word> cur{Word{}};
    std::function<void(size_t)> rec = [&](size_t start) {
      size_t gap = static_cast<size_t>(n - 1);
      for (size_t i = 0; i + gap < cur.size(); ++i) {
        pairs.insert({cur[i], cur[i + gap]});
        if (i + 2 * gap < cur.size()) triples.insert({cur[i], cur[i + gap], cur[i + 2 * gap]});
      }
      if (cur.size() + n - 1 > cap) return;
      for (size_t i = start; i < cur.size(); ++i) {
        std::vector<Word> save = cur;
        Word leaf = cur[i];
        std::vector<Word> kids;
        for (uint8_t d = 0; d < n; ++d) kids.push_back(word_cat(leaf, {d}));
        cur.erase(cur.begin() + i);
        cur.insert(cur.begin() + i, kids.begin(), kids.end());
        rec(i);
        cur = save;
      }
    };
    rec(0);
    std::vector<Word> addrs;
    std::function<void(Word&)> gen = [&](Word& w) {
      if (!w.empty()) addrs.push_back(w);
      if (w.size() == 4) return;
      for (uint8_t d = 0; d < n; ++d) {
        w.push_back(d);
        gen(w);
        w.pop_back();
      }
    };
    Word root;
    gen(root);
    for (const Word& a : addrs)
      for (const Word& b : addrs) {
        if (!(a < b)) continue;
        bool mine = is_special({{a, 1}, {b, -1}}, n);
        bool oracle = pairs.count({a, b}) > 0;
        if (mine != oracle) {
          out.fail("pair oracle mismatch n=" + std::to_string(n) + " " + show_word(a) + "," +
                   show_word(b));
          return;
        }
      }
    for (const Word& a : addrs)
      for (const Word& b : addrs)
        for (const Word& c : addrs) {
          if (!(a < b) || !(b < c)) continue;
          if (static_cast<int>(std::max({a.size(), b.size(), c.size()})) > triple_depth) continue;
          bool mine = is_special({{a, 1}, {b, -1}, {c, 1}}, n);
          bool oracle = triples.count({a, b, c}) > 0;
          if (mine != oracle) {
            out.fail("triple oracle mismatch n=" + std::to_string(n));
            return;
          }
        }
  }
  // skeleton_match on 20 generated proper sorted lists with m <= 3.
  int lists = 0;
  for (int n : {2, 3}) {
    const uint8_t t = static_cast<uint8_t>(n - 1);
    std::vector<std::vector<Word>> base_sets;
    if (n == 2)
      base_sets = {{Word{0, 0}, Word{0, 1}, Word{1, 0}}, {Word{0, 1}, Word{1, 0}, Word{1, 1}}};
    else
      base_sets = {{Word{0, 0}, Word{0, 2}, Word{2, 1}}, {Word{0, 2}, Word{2, 0}, Word{2, 2}},
                   {Word{0, 0}, Word{1, 1}, Word{2, 2}}};
    for (const auto& bases : base_sets)
      for (size_t take = 1; take <= bases.size(); ++take)
        for (size_t start = 0; start + take <= bases.size(); ++start) {
          std::vector<SpecialWord> list;
          for (size_t k = start; k < start + take; ++k) {
            SpecialWord w;
            w.letters.push_back({word_cat(bases[k], {0}), +1});
            w.letters.push_back({word_cat(bases[k], {t}), -1});
            list.push_back(w);
          }
          if (!is_proper(list, n)) {
            out.fail("generated list not proper");
            continue;
          }
          SkeletonMatch sm = skeleton_match(list, n);
          out.expect(sm.ok, "skeleton mismatch n=" + std::to_string(n) + ": " + sm.detail);
          out.expect(sm.inconclusive == 0, "skeleton check inconclusive");
          ++lists;
        }
  }
  out.expect(lists >= 20, "fewer than 20 lists checked: " + std::to_string(lists));
}

void crit8_property_suites(Outcome& out) {
  Rng rng(0x9eed);
  // Transducer vs lazy evaluation: 500 cases, 300 symbols.
  int cases = 0;
  for (int n : {2, 3, 4}) {
    for (int i = 0; i < 170; ++i) {
      GroupWord w = rand_word(rng, n, 1 + static_cast<int>(rng.below(8)), 3);
      Seq p = random_seq(rng, n);
      if (evaluate_word(w, p).take(300) != testing::expand(testing::word_stream(w, p), 300)) {
        out.fail("transducer/lazy mismatch at n=" + std::to_string(n));
        return;
      }
      ++cases;
    }
  }
  out.expect(cases >= 500, "fewer than 500 transducer cases");
  // eval_y mutual inverses on 500 points.
  int pts = 0;
  for (int n : {2, 3, 4})
    for (int i = 0; i < 170; ++i) {
      Seq p = random_seq(rng, n);
      if (eval_y(-1, eval_y(+1, p, n), n) != p || eval_y(+1, eval_y(-1, p, n), n) != p) {
        out.fail("eval_y inverses fail");
        return;
      }
      ++pts;
    }
  out.expect(pts >= 500, "fewer than 500 inverse points");
  // Standard-form soundness: 300 words x 100 points.
  for (int i = 0; i < 300; ++i) {
    int n = i % 2 == 0 ? 2 : 3;
    GroupWord w = rand_word(rng, n, 1 + static_cast<int>(rng.below(6)));
    auto sf = to_standard_form(w);
    if (!sf) {
      out.fail("standard form budget exhausted");
      return;
    }
    GroupWord back = sf->as_word();
    for (int k = 0; k < 100; ++k) {
      Seq p = random_seq(rng, n);
      if (evaluate_word(w, p) != evaluate_word(back, p)) {
        out.fail("standard form changes the element: " + show_word(w));
        return;
      }
    }
  }
  // is_identity: 100 cancelling words and 100 certified non-identities,
  // no inconclusive verdicts.
  int identities = 0, nonidentities = 0;
  while (identities < 100) {
    int n = identities % 2 == 0 ? 2 : 3;
    GroupWord w = rand_word(rng, n, 1 + static_cast<int>(rng.below(6)));
    auto r = is_identity(w * w.inverse());
    if (r.verdict != Tri::True) {
      out.fail("w w^-1 not recognized: " + show_word(w) +
               (r.verdict == Tri::Inconclusive ? " (inconclusive)" : " (false)"));
      return;
    }
    ++identities;
  }
  while (nonidentities < 100) {
    int n = nonidentities % 2 == 0 ? 2 : 3;
    GroupWord w = rand_word(rng, n, 1 + static_cast<int>(rng.below(6)));
    // Independent certificate: some probe point moves.
    bool moves = false;
    for (int len = 0; len <= 4 && !moves; ++len)
      for (int trial = 0; trial < 30 && !moves; ++trial) {
        Seq p(random_address(rng, n, len), Word{0});
        if (evaluate_word(w, p) != p) moves = true;
      }
    if (!moves) continue;
    auto r = is_identity(w);
    if (r.verdict != Tri::False || !r.witness) {
      out.fail("certified non-identity not refuted: " + show_word(w));
      return;
    }
    ++nonidentities;
  }
}

}  // namespace

int main() {
  criterion(1, "F(n) presentations, n in {2,3,4,5}, exact tree pairs", 10, crit1_presentations);
  criterion(2, "relation families (1)-(4), 4 variants, 200 instances x 200 points, n in {2,3}", 60,
            crit2_relation_families);
  criterion(3, "paper identity fixtures, n in {2,3,4}", 10, crit3_identity_fixtures);
  criterion(4, "conjugation lemma witness evaluation, m in {1,5}, n in {2,3}", 1,
            crit4_lemma_evaluation);
  criterion(5, "abelianization anchors, well-definedness, rank certificates, n in {2..5}", 30,
            crit5_abelianization);
  criterion(6, "HNN ascent at depth 5, strictness witnesses, closed forms, n in {2,3}", 60,
            crit6_hnn);
  criterion(7, "cluster combinatorics, specialness oracle, skeleton identification", 120,
            crit7_cluster);
  criterion(8, "transducer/lazy agreement, inverses, standard forms, identity suite", 120,
            crit8_property_suites);
  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
