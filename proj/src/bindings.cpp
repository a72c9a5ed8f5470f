#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lmwb/abelian.hpp"
#include "lmwb/cluster.hpp"
#include "lmwb/hnn.hpp"
#include "lmwb/standard_form.hpp"

namespace py = pybind11;
using namespace lmwb;

namespace {

std::string tri_name(Tri t) {
  return t == Tri::True ? "true" : t == Tri::False ? "false" : "inconclusive";
}

Variant variant_arg(const std::string& name) {
  auto v = variant_from_name(name);
  if (!v) throw std::invalid_argument("unknown variant: " + name);
  return *v;
}

}  // namespace

PYBIND11_MODULE(_lmwb, m) {
  m.doc() = "exact calculus for F(n) and the n-adic Lodha-Moore groups";

  m.def("evaluate", [](const std::string& word, const std::string& point, int n) {
    return evaluate_word(parse_word(word, n), Seq::parse(point, n)).show();
  }, py::arg("word"), py::arg("point"), py::arg("n"));

  m.def("equal", [](const std::string& a, const std::string& b, int n) {
    return tri_name(equals_words(parse_word(a, n), parse_word(b, n)));
  }, py::arg("word1"), py::arg("word2"), py::arg("n"));

  m.def("is_identity", [](const std::string& w, int n) {
    auto r = lmwb::is_identity(parse_word(w, n));
    return py::make_tuple(tri_name(r.verdict),
                          r.witness ? py::object(py::str(r.witness->show())) : py::object(py::none()));
  }, py::arg("word"), py::arg("n"));

  m.def("standard_form", [](const std::string& w, int n) {
    auto sf = to_standard_form(parse_word(w, n));
    if (!sf) throw std::runtime_error("rewriting budget exhausted");
    std::vector<std::string> ys;
    for (const Letter& l : sf->ypart) ys.push_back(show_letter(l));
    return py::make_tuple(sf->fpart.show(), ys);
  }, py::arg("word"), py::arg("n"));

  m.def("abelianization", [](const std::string& w, const std::string& map, int n) {
    GroupWord gw = parse_word(w, n);
    if (map == "a") {
      TreePair f = TreePair::identity(n);
      for (const Letter& l : gw.letters) f = compose(f, letter_tree(l, n));
      return abelianization_a(f);
    }
    return pi_word(variant_arg(map), gw);
  }, py::arg("word"), py::arg("map"), py::arg("n"));

  m.def("rank_certificate", [](const std::string& variant, int n) {
    return rank_certificate(variant_arg(variant), n);
  }, py::arg("variant"), py::arg("n"));

  m.def("verify_relation_family", [](int family, const std::string& variant, int samples, int n) {
    Report r = verify_relation_family(family, variant_arg(variant), samples, n);
    return py::make_tuple(r.total, r.failures, r.inconclusive);
  }, py::arg("family"), py::arg("variant"), py::arg("samples"), py::arg("n"));

  m.def("hnn_verify", [](const std::string& case_name, int depth, int n) {
    auto id = hnn_from_name(case_name);
    if (!id) throw std::invalid_argument("unknown case: " + case_name);
    return verify_ascending(*id, depth, n).ok();
  }, py::arg("case_name"), py::arg("depth"), py::arg("n"));

  m.def("hnn_witness", [](const std::string& case_name, int n) {
    auto id = hnn_from_name(case_name);
    if (!id) throw std::invalid_argument("unknown case: " + case_name);
    Witness w = strictness_witness(*id, n);
    return py::make_tuple(check_witness(w), show_word(w.element), w.note);
  }, py::arg("case_name"), py::arg("n"));

  m.def("cluster_cells", [](int mdim, const std::vector<int>& type2) {
    Arrangement a{mdim, std::set<int>(type2.begin(), type2.end())};
    ClusterComplex c = cluster(a);
    return c.count_by_dim();
  }, py::arg("m"), py::arg("type2"));

  m.def("cluster_euler", [](int mdim, const std::vector<int>& type2) {
    Arrangement a{mdim, std::set<int>(type2.begin(), type2.end())};
    return euler_characteristic(cluster(a));
  }, py::arg("m"), py::arg("type2"));

  m.def("is_special", [](const std::string& word, int n) {
    return lmwb::is_special(parse_special(word, n), n);
  }, py::arg("word"), py::arg("n"));

  m.def("support", [](const std::string& word, int n) {
    GroupWord w = parse_word(word, n);
    TreePair f = TreePair::identity(n);
    for (const Letter& l : w.letters) {
      if (l.kind != Letter::X) throw std::invalid_argument("support takes an F(n) word");
      f = compose(f, letter_tree(l, n));
    }
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& iv : lmwb::support(f)) out.emplace_back(iv.lo.show(), iv.hi.show());
    return out;
  }, py::arg("word"), py::arg("n"));

  m.def("dense_support_word", [](const std::string& address, int n) {
    TreePair x = dense_support_element(parse_finite_word(address, n), n);
    std::string out;
    for (auto [i, s] : factor_normal_form(x)) {
      if (!out.empty()) out += " ";
      out += show_letter(numbered_x(i, n, s));
    }
    return out;
  }, py::arg("address"), py::arg("n"));
}
