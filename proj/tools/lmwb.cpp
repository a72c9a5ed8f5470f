// lmwb: a workbench for the Brown-Thompson groups F(n) and the n-adic
// Lodha-Moore groups. Words, sequences and addresses use the grammar from
// the README; every subcommand takes the global arity flag -n.

#include <iostream>
#include <fstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "lmwb/abelian.hpp"
#include "lmwb/cluster.hpp"
#include "lmwb/hnn.hpp"
#include "lmwb/standard_form.hpp"

using json = nlohmann::json;
using namespace lmwb;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 3;

json report_json(const Report& r) {
  return json{{"total", r.total}, {"inconclusive", r.inconclusive}, {"failures", r.failures}};
}

int print_report(const Report& r, bool as_json, const std::string& what) {
  if (as_json) {
    std::cout << report_json(r).dump(2) << "\n";
  } else {
    std::cout << what << ": " << r.total << " checks, " << r.failures.size() << " failures, "
              << r.inconclusive << " inconclusive\n";
    for (const auto& f : r.failures) std::cout << "  FAIL " << f << "\n";
  }
  if (!r.ok()) return kExitFail;
  return r.inconclusive ? kExitInconclusive : kExitOk;
}

json cluster_json(const ClusterComplex& c) {
  json cells = json::array();
  for (const Cell& cell : c.cells) {
    json sign = json::array();
    for (int8_t s : cell.sign) sign.push_back(static_cast<int>(s));
    cells.push_back(json{{"dim", cell.dim}, {"sign", sign}});
  }
  json type2 = json::array();
  for (int i : c.arr.type2) type2.push_back(i);
  return json{{"m", c.arr.m}, {"type2", type2}, {"cells", cells}};
}

std::string cluster_dot(const ClusterComplex& c) {
  std::string out = "graph cluster {\n";
  std::vector<const Cell*> verts, edges;
  for (const Cell& cell : c.cells) {
    if (cell.dim == 0) verts.push_back(&cell);
    if (cell.dim == 1) edges.push_back(&cell);
  }
  auto vertex_name = [&](const Cell& v) {
    std::string s = "v";
    for (int i = 0; i < c.arr.m; ++i)
      s += v.point[static_cast<size_t>(i)] == 0 ? '0' : '1';
    return s;
  };
  for (const Cell* v : verts) out += "  " + vertex_name(*v) + ";\n";
  for (const Cell* e : edges) {
    std::vector<std::string> ends;
    for (const Cell* v : verts) {
      bool weakens = true;
      for (size_t h = 0; h < e->sign.size(); ++h)
        if (v->sign[h] != 0 && v->sign[h] != e->sign[h]) weakens = false;
      if (weakens) ends.push_back(vertex_name(*v));
    }
    if (ends.size() == 2) out += "  " + ends[0] + " -- " + ends[1] + ";\n";
  }
  out += "}\n";
  return out;
}

std::vector<SpecialWord> read_list_file(const std::string& path, int n, GroupWord& base) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<SpecialWord> list;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("base:", 0) == 0) {
      base = parse_word(line.substr(5), n);
      continue;
    }
    SpecialWord w;
    w.letters = parse_special(line, n);
    list.push_back(std::move(w));
  }
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for F(n) and the n-adic Lodha-Moore groups"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  int n = 2;
  bool as_json = false;
  int samples = 200;
  int depth = 5;
  long budget = 2'000'000;
  app.add_option("-n,--arity", n, "alphabet size (2..10)")->check(CLI::Range(2, 10));
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_option("--samples", samples, "sampled instances for verification subcommands");
  app.add_option("--depth", depth, "address length bound");
  app.add_option("--budget", budget, "rewriting step budget");

  std::string word_a, word_b, seq_text, map_name = "a", variant_name_s, case_name, action,
              special_text, list_file, address = "e";
  int family = 4;
  int cluster_m = 2;
  std::string type2_csv;

  auto* eval = app.add_subcommand("eval", "apply a word to a point");
  eval->add_option("word", word_a)->required();
  eval->add_option("point", seq_text)->required();

  auto* eq = app.add_subcommand("eq", "decide equality of two words");
  eq->add_option("word1", word_a)->required();
  eq->add_option("word2", word_b)->required();

  auto* std_cmd = app.add_subcommand("std", "rewrite a word into standard form");
  std_cmd->add_option("word", word_a)->required();

  auto* abel = app.add_subcommand("abel", "abelianization images and checks");
  abel->add_option("--map", map_name, "a | G0 | yG | Gy | yGy");
  abel->add_option("word", word_a);
  abel->add_option("--verify", variant_name_s, "run the well-definedness report for a variant");

  auto* rel = app.add_subcommand("rel", "verify one relation family");
  rel->add_option("--family", family, "1..4")->required()->check(CLI::Range(1, 4));
  rel->add_option("--variant", variant_name_s, "G0 | yG | Gy | yGy")->required();

  auto* hnn = app.add_subcommand("hnn", "HNN decomposition checks");
  hnn->add_option("case,--case", case_name, "bt | f1..f4 | n5..n8")->required();
  hnn->add_option("action", action, "verify | witness")->required();

  auto* clu = app.add_subcommand("cluster", "m-cluster cells of an admissible arrangement");
  clu->add_option("--m", cluster_m)->required()->check(CLI::Range(1, 6));
  clu->add_option("--type2", type2_csv, "comma separated diagonal indices");
  clu->add_option("action", action, "cells | euler | dot | json")->required();

  auto* spc = app.add_subcommand("special", "test a signed y-word for specialness");
  spc->add_option("word", special_text)->required();

  auto* hg = app.add_subcommand("hgraph", "coset subgraph of a sorted list of special words");
  hg->add_option("--list", list_file, "file with one special word per line")->required();
  hg->add_option("action", action, "build | match")->required();

  auto* sup = app.add_subcommand("support", "support intervals of an F(n) word");
  sup->add_option("word", word_a)->required();

  auto* dns = app.add_subcommand("dense", "element with support (s 0^w, (n-1)^w)");
  dns->add_option("address", address)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval->parsed()) {
      Seq p = Seq::parse(seq_text, n);
      Seq out = evaluate_word(parse_word(word_a, n), p);
      if (as_json)
        std::cout << json{{"result", out.show()}}.dump() << "\n";
      else
        std::cout << out.show() << "\n";
      return kExitOk;
    }
    if (eq->parsed()) {
      Tri t = equals_words(parse_word(word_a, n), parse_word(word_b, n));
      std::string verdict = t == Tri::True ? "EQUAL" : t == Tri::False ? "NOT EQUAL" : "INCONCLUSIVE";
      if (as_json)
        std::cout << json{{"verdict", verdict}}.dump() << "\n";
      else
        std::cout << verdict << "\n";
      return t == Tri::True ? kExitOk : t == Tri::False ? kExitFail : kExitInconclusive;
    }
    if (std_cmd->parsed()) {
      auto sf = to_standard_form(parse_word(word_a, n), budget);
      if (!sf) {
        std::cout << "INCONCLUSIVE (budget exhausted)\n";
        return kExitInconclusive;
      }
      if (as_json) {
        json ys = json::array();
        for (const Letter& l : sf->ypart) ys.push_back(show_letter(l));
        std::cout << json{{"fpart", sf->fpart.show()}, {"ypart", ys}}.dump() << "\n";
      } else {
        std::cout << sf->show() << "\n";
      }
      return kExitOk;
    }
    if (abel->parsed()) {
      if (!variant_name_s.empty()) {
        auto v = variant_from_name(variant_name_s);
        if (!v) throw std::runtime_error("unknown variant " + variant_name_s);
        Report r = verify_pi_well_defined(*v, samples, n);
        bool rank = rank_certificate(*v, n);
        if (!rank) r.failures.push_back("rank certificate failed");
        return print_report(r, as_json, "abelianization well-definedness");
      }
      GroupWord w = parse_word(word_a, n);
      AbVec v;
      if (map_name == "a") {
        TreePair f = TreePair::identity(n);
        for (const Letter& l : w.letters) {
          if (l.kind != Letter::X) throw std::runtime_error("map 'a' takes an F(n) word");
          f = compose(f, letter_tree(l, n));
        }
        v = abelianization_a(f);
      } else {
        auto var = variant_from_name(map_name);
        if (!var) throw std::runtime_error("unknown map " + map_name);
        v = pi_word(*var, w);
      }
      if (as_json) {
        std::cout << json(v).dump() << "\n";
      } else {
        std::cout << "(";
        for (size_t i = 0; i < v.size(); ++i) std::cout << (i ? "," : "") << v[i];
        std::cout << ")\n";
      }
      return kExitOk;
    }
    if (rel->parsed()) {
      auto v = variant_from_name(variant_name_s);
      if (!v) throw std::runtime_error("unknown variant " + variant_name_s);
      Report r = verify_relation_family(family, *v, samples, n);
      return print_report(r, as_json, "relation family " + std::to_string(family));
    }
    if (hnn->parsed()) {
      auto id = hnn_from_name(case_name);
      if (!id) throw std::runtime_error("unknown case " + case_name);
      if (action == "verify") {
        AscentReport rep = verify_ascending(*id, depth, n);
        if (as_json) {
          json entries = json::array();
          for (const auto& e : rep.entries)
            entries.push_back(json{{"generator", e.generator},
                                   {"image", e.image},
                                   {"certified", e.certified},
                                   {"agrees", e.agrees}});
          std::cout << json{{"case", hnn_name(*id)}, {"ok", rep.ok()}, {"entries", entries}}.dump(2)
                    << "\n";
        } else {
          std::cout << "case " << hnn_name(*id) << ": " << rep.entries.size()
                    << " generators, ascent " << (rep.ok() ? "verified" : "FAILED") << "\n";
          for (const auto& e : rep.entries)
            if (!e.certified || !e.agrees)
              std::cout << "  FAIL " << e.generator << " -> " << e.image << "\n";
        }
        return rep.ok() ? kExitOk : kExitFail;
      }
      if (action == "witness") {
        Witness w = strictness_witness(*id, n);
        bool ok = check_witness(w);
        if (as_json) {
          json j{{"case", hnn_name(*id)},
                 {"mode", w.mode == WitnessMode::TailChange ? "tail-change" : "support-cylinder"},
                 {"element", show_word(w.element)},
                 {"ok", ok},
                 {"note", w.note}};
          if (w.point) j["point"] = w.point->show();
          if (!w.cylinder.empty()) j["cylinder"] = show_word(w.cylinder);
          std::cout << j.dump(2) << "\n";
        } else {
          std::cout << "case " << hnn_name(*id) << ": strictness witness "
                    << (ok ? "verified" : "FAILED") << "\n  element " << show_word(w.element)
                    << "\n  " << w.note << "\n";
        }
        return ok ? kExitOk : kExitFail;
      }
      throw std::runtime_error("hnn action must be verify or witness");
    }
    if (clu->parsed()) {
      Arrangement a{cluster_m, {}};
      if (!type2_csv.empty()) {
        size_t pos = 0;
        while (pos < type2_csv.size()) {
          size_t comma = type2_csv.find(',', pos);
          if (comma == std::string::npos) comma = type2_csv.size();
          int i = std::stoi(type2_csv.substr(pos, comma - pos));
          if (i < 1 || i >= cluster_m) throw std::runtime_error("type2 index out of range");
          a.type2.insert(i);
          pos = comma + 1;
        }
      }
      ClusterComplex c = cluster(a);
      if (action == "euler") {
        std::cout << euler_characteristic(c) << "\n";
      } else if (action == "cells") {
        auto counts = c.count_by_dim();
        if (as_json) {
          std::cout << json(counts).dump() << "\n";
        } else {
          for (size_t d = 0; d < counts.size(); ++d)
            std::cout << "dim " << d << ": " << counts[d] << " cells\n";
        }
      } else if (action == "json") {
        std::cout << cluster_json(c).dump(2) << "\n";
      } else if (action == "dot") {
        std::cout << cluster_dot(c);
      } else {
        throw std::runtime_error("cluster action must be cells, euler, dot or json");
      }
      return kExitOk;
    }
    if (spc->parsed()) {
      bool ok = is_special(parse_special(special_text, n), n);
      if (as_json)
        std::cout << json{{"special", ok}}.dump() << "\n";
      else
        std::cout << (ok ? "special" : "not special") << "\n";
      return ok ? kExitOk : kExitFail;
    }
    if (hg->parsed()) {
      GroupWord base{n, {}};
      std::vector<SpecialWord> list = read_list_file(list_file, n, base);
      if (action == "build") {
        HSubgraph g = h_subgraph(list, base, n);
        if (as_json) {
          json edges = json::array();
          for (auto [u, v] : g.edges) edges.push_back(json::array({u, v}));
          std::cout << json{{"m", g.m},
                            {"vertices", 1 << g.m},
                            {"distinct", g.all_distinct},
                            {"inconclusive", g.inconclusive},
                            {"edges", edges}}.dump(2)
                    << "\n";
        } else {
          std::cout << (1 << g.m) << " vertices, " << g.edges.size() << " edges, cosets "
                    << (g.all_distinct ? "distinct" : "NOT distinct") << ", " << g.inconclusive
                    << " inconclusive\n";
        }
        return g.inconclusive ? kExitInconclusive : kExitOk;
      }
      if (action == "match") {
        SkeletonMatch m = skeleton_match(list, n);
        if (as_json)
          std::cout << json{{"ok", m.ok}, {"inconclusive", m.inconclusive}, {"detail", m.detail}}.dump()
                    << "\n";
        else
          std::cout << (m.ok ? "matches the cluster 1-skeleton"
                             : "MISMATCH: " + (m.detail.empty() ? "?" : m.detail))
                    << "\n";
        return m.ok ? kExitOk : (m.inconclusive ? kExitInconclusive : kExitFail);
      }
      throw std::runtime_error("hgraph action must be build or match");
    }
    if (sup->parsed()) {
      GroupWord w = parse_word(word_a, n);
      TreePair f = TreePair::identity(n);
      for (const Letter& l : w.letters) {
        if (l.kind != Letter::X) throw std::runtime_error("support takes an F(n) word");
        f = compose(f, letter_tree(l, n));
      }
      auto sup_ivs = support(f);
      if (as_json) {
        json ivs = json::array();
        for (const auto& iv : sup_ivs) ivs.push_back(json::array({iv.lo.show(), iv.hi.show()}));
        std::cout << ivs.dump() << "\n";
      } else {
        if (sup_ivs.empty()) std::cout << "identity: empty support\n";
        for (const auto& iv : sup_ivs)
          std::cout << "(" << iv.lo.show() << ", " << iv.hi.show() << ")\n";
      }
      return kExitOk;
    }
    if (dns->parsed()) {
      Word s = parse_finite_word(address, n);
      TreePair x = dense_support_element(s, n);
      auto sup_ivs = support(x);
      std::string word_str;
      for (auto [i, sgn] : factor_normal_form(x)) {
        if (!word_str.empty()) word_str += " ";
        word_str += show_letter(numbered_x(i, n, sgn));
      }
      if (as_json) {
        std::cout << json{{"word", word_str},
                          {"tree_pair", x.show()},
                          {"support_lo", sup_ivs[0].lo.show()},
                          {"support_hi", sup_ivs[0].hi.show()}}.dump(2)
                  << "\n";
      } else {
        std::cout << word_str << "\n";
        std::cout << "support (" << sup_ivs[0].lo.show() << ", " << sup_ivs[0].hi.show() << ")\n";
      }
      return kExitOk;
    }
  } catch (const parse_error& e) {
    std::cerr << "parse error at position " << e.pos << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
