#include "lmwb/cluster.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

namespace lmwb {

SpecialWord SpecialWord::inverse() const {
  // Reverse the order and flip the signs; the addresses of a special word
  // are pairwise incomparable, so the reversed letters commute back into
  // increasing address order, leaving a sign flip in place.
  SpecialWord r;
  for (const auto& l : letters) r.letters.push_back({l.addr, -l.sign});
  return r;
}

GroupWord SpecialWord::as_group_word(int n) const {
  GroupWord w{n, {}};
  for (const auto& l : letters) w.letters.push_back(Letter::y(l.addr, l.sign));
  return w;
}

namespace {

// Leaves of the minimal n-ary tree containing all the given addresses as
// leaves, in lex order. Fails (empty) when addresses are prefix-comparable.
std::vector<Word> minimal_tree_leaves(const std::vector<Word>& addrs, int n) {
  for (size_t i = 0; i < addrs.size(); ++i)
    for (size_t j = i + 1; j < addrs.size(); ++j)
      if (!prefix_incomparable(addrs[i], addrs[j])) return {};
  std::vector<Word> leaves;
  std::function<void(Word&)> walk = [&](Word& path) {
    bool internal = false;
    for (const Word& a : addrs)
      if (a.size() > path.size() && is_prefix(path, a)) internal = true;
    if (!internal) {
      leaves.push_back(path);
      return;
    }
    for (uint8_t d = 0; d < n; ++d) {
      path.push_back(d);
      walk(path);
      path.pop_back();
    }
  };
  Word root;
  walk(root);
  return leaves;
}

}  // namespace

bool is_special(const std::vector<SignedAddr>& letters, int n) {
  if (letters.empty()) return false;
  for (size_t i = 0; i + 1 < letters.size(); ++i) {
    if (letters[i].sign == letters[i + 1].sign) return false;
    if (!(letters[i].addr < letters[i + 1].addr)) return false;
  }
  std::vector<Word> addrs;
  for (const auto& l : letters) addrs.push_back(l.addr);
  std::vector<Word> leaves = minimal_tree_leaves(addrs, n);
  if (leaves.empty()) return false;
  std::vector<size_t> pos;
  for (const Word& a : addrs) {
    auto it = std::lower_bound(leaves.begin(), leaves.end(), a);
    if (it == leaves.end() || *it != a) return false;
    pos.push_back(static_cast<size_t>(it - leaves.begin()));
  }
  for (size_t i = 0; i + 1 < pos.size(); ++i)
    if (pos[i + 1] - pos[i] - 1 != static_cast<size_t>(n - 2)) return false;
  return true;
}

bool are_alternating(const SpecialWord& a, const SpecialWord& b, int n) {
  std::vector<SignedAddr> cat = a.letters;
  cat.insert(cat.end(), b.letters.begin(), b.letters.end());
  return is_special(cat, n);
}

bool are_consecutive(const SpecialWord& a, const SpecialWord& b, int n) {
  return are_alternating(a, b, n) || are_alternating(a, b.inverse(), n);
}

bool is_sorted_list(const std::vector<SpecialWord>& list, int n) {
  for (const SpecialWord& w : list)
    if (!is_special(w.letters, n)) return false;
  for (size_t i = 0; i < list.size(); ++i)
    for (size_t j = i + 1; j < list.size(); ++j)
      for (const auto& p : list[i].letters)
        for (const auto& q : list[j].letters) {
          if (!prefix_incomparable(p.addr, q.addr)) return false;
          if (!(p.addr < q.addr)) return false;
        }
  return true;
}

bool is_proper(const std::vector<SpecialWord>& list, int n) {
  if (!is_sorted_list(list, n)) return false;
  for (size_t i = 0; i + 1 < list.size(); ++i)
    if (are_consecutive(list[i], list[i + 1], n) && !are_alternating(list[i], list[i + 1], n))
      return false;
  return true;
}

GroupWord tau_X(const std::vector<SpecialWord>& list, const std::set<int>& X, int n) {
  GroupWord w{n, {}};
  for (int j : X) {
    if (j < 1 || j > static_cast<int>(list.size()))
      throw std::invalid_argument("tau_X: index out of range");
    GroupWord t = list[static_cast<size_t>(j - 1)].as_group_word(n);
    w.letters.insert(w.letters.end(), t.letters.begin(), t.letters.end());
  }
  return w;
}

Tri coset_edge_test(const GroupWord& t1, const GroupWord& t2) {
  auto sf = to_standard_form(t1 * t2.inverse());
  if (!sf) return Tri::Inconclusive;
  if (sf->ypart.empty()) return Tri::False;  // same coset, no self-loops
  std::vector<SignedAddr> ys;
  for (const Letter& l : sf->ypart) ys.push_back({l.addr, l.sign});
  return is_special(ys, t1.n) ? Tri::True : Tri::False;
}

int Flat::dim() const {
  std::set<int> free_comps;
  for (size_t v = 0; v < comp.size(); ++v)
    if (pin[static_cast<size_t>(comp[v])] == -1) free_comps.insert(comp[v]);
  return static_cast<int>(free_comps.size());
}

namespace {

// Canonical flat from a set of active constraints. Returns false when
// inconsistent (a component pinned both 0 and 1).
bool build_flat(int m, const std::vector<std::pair<int, int>>& pins,
                const std::vector<int>& links, Flat& out) {
  std::vector<int> parent(static_cast<size_t>(m));
  for (int v = 0; v < m; ++v) parent[static_cast<size_t>(v)] = v;
  std::function<int(int)> find = [&](int v) {
    while (parent[static_cast<size_t>(v)] != v) v = parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
    return v;
  };
  for (int i : links) parent[static_cast<size_t>(find(i))] = find(i - 1);  // link x_i and x_{i+1}, 1-based i
  std::map<int, int> pinned;
  for (auto [v, val] : pins) {
    int r = find(v);
    auto it = pinned.find(r);
    if (it != pinned.end() && it->second != val) return false;
    pinned[r] = val;
  }
  out.comp.assign(static_cast<size_t>(m), 0);
  out.pin.clear();
  std::map<int, int> id;
  for (int v = 0; v < m; ++v) {
    int r = find(v);
    auto it = id.find(r);
    if (it == id.end()) {
      it = id.emplace(r, static_cast<int>(out.pin.size())).first;
      auto p = pinned.find(r);
      out.pin.push_back(p == pinned.end() ? -1 : p->second);
    }
    out.comp[static_cast<size_t>(v)] = it->second;
  }
  return true;
}

}  // namespace

std::vector<Flat> flats(const Arrangement& a) {
  std::vector<int> diag(a.type2.begin(), a.type2.end());
  size_t H = a.hyperplane_count();
  std::set<Flat> out;
  for (uint64_t mask = 0; mask < (1ull << H); ++mask) {
    std::vector<std::pair<int, int>> pins;
    std::vector<int> links;
    for (size_t h = 0; h < H; ++h) {
      if (!(mask >> h & 1)) continue;
      if (h < 2 * static_cast<size_t>(a.m))
        pins.emplace_back(static_cast<int>(h / 2), static_cast<int>(h % 2));
      else
        links.push_back(diag[h - 2 * static_cast<size_t>(a.m)]);
    }
    Flat f;
    if (build_flat(a.m, pins, links, f)) out.insert(f);
  }
  return std::vector<Flat>(out.begin(), out.end());
}

namespace {

int sgn(long v) { return v < 0 ? -1 : v > 0 ? 1 : 0; }

// Sign vector of a point (coordinates scaled by m+1, so x_i = p[i]/(m+1)).
std::vector<int8_t> sign_vector(const Arrangement& a, const std::vector<int>& p) {
  const long scale = a.m + 1;
  std::vector<int8_t> s;
  for (int v = 0; v < a.m; ++v) {
    s.push_back(static_cast<int8_t>(sgn(p[static_cast<size_t>(v)])));
    s.push_back(static_cast<int8_t>(sgn(p[static_cast<size_t>(v)] - scale)));
  }
  for (int i : a.type2)
    s.push_back(static_cast<int8_t>(sgn(p[static_cast<size_t>(i - 1)] - p[static_cast<size_t>(i)])));
  return s;
}

int cell_dim(const Arrangement& a, const std::vector<int8_t>& sign) {
  std::vector<std::pair<int, int>> pins;
  std::vector<int> links;
  size_t h = 0;
  for (int v = 0; v < a.m; ++v) {
    if (sign[h] == 0) pins.emplace_back(v, 0);
    ++h;
    if (sign[h] == 0) pins.emplace_back(v, 1);
    ++h;
  }
  for (int i : a.type2) {
    if (sign[h] == 0) links.push_back(i);
    ++h;
  }
  Flat f;
  build_flat(a.m, pins, links, f);
  return f.dim();
}

std::vector<Cell> enumerate_cells(const Arrangement& a, const std::vector<int>& values) {
  std::map<std::vector<int8_t>, std::vector<int>> seen;
  std::vector<int> p(static_cast<size_t>(a.m));
  std::function<void(int)> rec = [&](int v) {
    if (v == a.m) {
      auto s = sign_vector(a, p);
      seen.emplace(std::move(s), p);
      return;
    }
    for (int val : values) {
      p[static_cast<size_t>(v)] = val;
      rec(v + 1);
    }
  };
  rec(0);
  std::vector<Cell> cells;
  for (auto& [s, pt] : seen) cells.push_back(Cell{s, cell_dim(a, s), pt});
  std::sort(cells.begin(), cells.end());
  return cells;
}

}  // namespace

std::vector<Cell> face_complex(const Arrangement& a) {
  if (a.m < 1 || a.m > 4) throw std::invalid_argument("face_complex: supported for 1 <= m <= 4");
  // Values rich enough to realize every order type in each of the three
  // bands cut out by the breakpoints 0 and 1 (coordinates scaled by m+1):
  // m distinct values below 0, between, and above 1.
  std::vector<int> values;
  for (int k = a.m; k >= 1; --k) values.push_back(-k);
  values.push_back(0);
  for (int k = 1; k <= a.m; ++k) values.push_back(k);
  values.push_back(a.m + 1);
  for (int k = 1; k <= a.m; ++k) values.push_back(a.m + 1 + k);
  return enumerate_cells(a, values);
}

ClusterComplex cluster(const Arrangement& a) {
  if (a.m < 1 || a.m > 6) throw std::invalid_argument("cluster: supported for 1 <= m <= 6");
  std::vector<int> values{0};
  for (int k = 1; k <= a.m; ++k) values.push_back(k);
  values.push_back(a.m + 1);
  return ClusterComplex{a, enumerate_cells(a, values)};
}

std::vector<size_t> ClusterComplex::count_by_dim() const {
  std::vector<size_t> c;
  for (const Cell& cell : cells) {
    if (c.size() <= static_cast<size_t>(cell.dim)) c.resize(static_cast<size_t>(cell.dim) + 1, 0);
    ++c[static_cast<size_t>(cell.dim)];
  }
  return c;
}

ClusterComplex subcluster(const ClusterComplex& c, const Flat& f) {
  const long scale = c.arr.m + 1;
  ClusterComplex out{c.arr, {}};
  for (const Cell& cell : c.cells) {
    bool inside = true;
    for (int v = 0; v < c.arr.m && inside; ++v) {
      int comp = f.comp[static_cast<size_t>(v)];
      int pin = f.pin[static_cast<size_t>(comp)];
      if (pin == 0 && cell.point[static_cast<size_t>(v)] != 0) inside = false;
      if (pin == 1 && cell.point[static_cast<size_t>(v)] != scale) inside = false;
      if (v + 1 < c.arr.m && f.comp[static_cast<size_t>(v + 1)] == comp &&
          cell.point[static_cast<size_t>(v)] != cell.point[static_cast<size_t>(v + 1)])
        inside = false;
    }
    if (inside) out.cells.push_back(cell);
  }
  return out;
}

long euler_characteristic(const ClusterComplex& c) {
  long chi = 0;
  for (const Cell& cell : c.cells) chi += cell.dim % 2 == 0 ? 1 : -1;
  return chi;
}

namespace {

Tri coset_equal(const GroupWord& a, const GroupWord& b) {
  auto sf = to_standard_form(a * b.inverse());
  if (!sf) return Tri::Inconclusive;
  return sf->ypart.empty() ? Tri::True : Tri::False;
}

}  // namespace

HSubgraph h_subgraph(const std::vector<SpecialWord>& list, const GroupWord& base, int n) {
  const int m = static_cast<int>(list.size());
  HSubgraph g;
  g.m = m;
  for (int mask = 0; mask < (1 << m); ++mask) {
    std::set<int> X;
    for (int j = 1; j <= m; ++j)
      if (mask >> (j - 1) & 1) X.insert(j);
    g.tau_words.push_back(tau_X(list, X, n) * base);
  }
  for (int u = 0; u < (1 << m); ++u)
    for (int v = u + 1; v < (1 << m); ++v) {
      Tri eq = coset_equal(g.tau_words[static_cast<size_t>(u)], g.tau_words[static_cast<size_t>(v)]);
      if (eq == Tri::True) g.all_distinct = false;
      if (eq == Tri::Inconclusive) ++g.inconclusive;
      Tri e = coset_edge_test(g.tau_words[static_cast<size_t>(u)], g.tau_words[static_cast<size_t>(v)]);
      if (e == Tri::True) g.edges.emplace_back(u, v);
      if (e == Tri::Inconclusive) ++g.inconclusive;
    }
  return g;
}

SkeletonMatch skeleton_match(const std::vector<SpecialWord>& list, int n) {
  SkeletonMatch res;
  const int m = static_cast<int>(list.size());
  if (m == 0) {
    res.detail = "empty list";
    return res;
  }
  if (!is_proper(list, n)) {
    res.detail = "list is not proper sorted";
    return res;
  }
  Arrangement arr{m, {}};
  for (int i = 1; i < m; ++i)
    if (are_alternating(list[static_cast<size_t>(i - 1)], list[static_cast<size_t>(i)], n))
      arr.type2.insert(i);
  // Combinatorial 1-skeleton of the cluster: an edge for every partition
  // (X1, X2, X3) with X2 = {j..k} an interval inside the diagonal set,
  // joining X3 and X2 u X3.
  std::set<std::pair<int, int>> expect;
  for (int j = 1; j <= m; ++j)
    for (int k = j; k <= m; ++k) {
      bool linked = true;
      for (int i = j; i < k; ++i)
        if (!arr.type2.count(i)) linked = false;
      if (!linked) continue;
      int x2 = 0;
      for (int i = j; i <= k; ++i) x2 |= 1 << (i - 1);
      int rest = ((1 << m) - 1) & ~x2;
      for (int sub = rest;; sub = (sub - 1) & rest) {
        int u = sub, v = sub | x2;
        expect.emplace(std::min(u, v), std::max(u, v));
        if (sub == 0) break;
      }
    }
  // Geometric cross-check of the expected edge count.
  ClusterComplex cl = cluster(arr);
  auto counts = cl.count_by_dim();
  if (counts.size() < 1 || counts[0] != (1u << m) ||
      (counts.size() > 1 ? counts[1] : 0) != expect.size()) {
    res.detail = "combinatorial skeleton disagrees with the cluster cells";
    return res;
  }
  HSubgraph g = h_subgraph(list, GroupWord{n, {}}, n);
  res.inconclusive = g.inconclusive;
  if (!g.all_distinct) {
    res.detail = "tau_X cosets are not pairwise distinct";
    return res;
  }
  std::set<std::pair<int, int>> got(g.edges.begin(), g.edges.end());
  if (got != expect) {
    res.detail = "edge sets differ";
    return res;
  }
  res.ok = true;
  return res;
}

IntersectionReport h_intersection_check(const HSubgraph& c1,
                                        const std::vector<SpecialWord>& list1,
                                        const GroupWord& base1, const HSubgraph& c2,
                                        const std::vector<SpecialWord>& list2,
                                        const GroupWord& base2, int n) {
  (void)list2;
  (void)base1;
  (void)base2;
  IntersectionReport rep;
  std::vector<std::pair<int, int>> shared;
  for (int u = 0; u < (1 << c1.m); ++u)
    for (int v = 0; v < (1 << c2.m); ++v)
      if (coset_equal(c1.tau_words[static_cast<size_t>(u)], c2.tau_words[static_cast<size_t>(v)]) ==
          Tri::True) {
        shared.emplace_back(u, v);
        rep.shared.push_back(u);
        rep.shared.push_back(v);
      }
  if (shared.empty()) {
    rep.realized = true;  // empty intersection is vacuously fine
    rep.detail = "empty intersection";
    return rep;
  }
  // Bounded search: sublists of list1 with one shared vertex as base.
  const int m1 = static_cast<int>(list1.size());
  for (int mask = 0; mask < (1 << m1); ++mask) {
    std::vector<SpecialWord> sub;
    for (int j = 0; j < m1; ++j)
      if (mask >> j & 1) sub.push_back(list1[static_cast<size_t>(j)]);
    for (auto [u, v] : shared) {
      (void)v;
      HSubgraph cand = h_subgraph(sub, c1.tau_words[static_cast<size_t>(u)], n);
      if (cand.tau_words.size() != shared.size()) continue;
      bool match = true;
      for (const GroupWord& w : cand.tau_words) {
        bool found = false;
        for (auto [su, sv] : shared) {
          (void)sv;
          if (coset_equal(w, c1.tau_words[static_cast<size_t>(su)]) == Tri::True) found = true;
        }
        if (!found) match = false;
      }
      if (match) {
        rep.realized = true;
        rep.detail = "realized by a sublist of the first subgraph";
        return rep;
      }
    }
  }
  rep.detail = "bounded search did not realize the intersection";
  return rep;
}

std::vector<SignedAddr> parse_special(const std::string& text, int n) {
  std::vector<SignedAddr> out;
  size_t i = 0;
  auto skip = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  for (;;) {
    skip();
    if (i >= text.size()) break;
    if (text[i] != 'y' || i + 1 >= text.size() || text[i + 1] != '[')
      throw parse_error("expected y[addr]+ or y[addr]-", i);
    i += 2;
    std::string raw;
    while (i < text.size() && text[i] != ']') raw.push_back(text[i++]);
    if (i >= text.size()) throw parse_error("unterminated '['", i);
    ++i;
    if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
      throw parse_error("expected sign after y[addr]", i);
    int sign = text[i] == '+' ? 1 : -1;
    ++i;
    out.push_back({parse_finite_word(raw.empty() ? "e" : raw, n), sign});
  }
  return out;
}

std::string show_special(const std::vector<SignedAddr>& letters) {
  std::string s;
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) s += " ";
    s += "y[" + (letters[i].addr.empty() ? std::string("e") : show_word(letters[i].addr)) + "]";
    s += letters[i].sign > 0 ? "+" : "-";
  }
  return s;
}

}  // namespace lmwb
