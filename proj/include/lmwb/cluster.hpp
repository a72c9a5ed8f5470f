#pragma once

#include <cstdint>
#include <set>
#include <tuple>
#include <string>
#include <vector>

#include "lmwb/standard_form.hpp"
#include "lmwb/word.hpp"

namespace lmwb {

struct SignedAddr {
  Word addr;
  int sign;  // +1 / -1
  bool operator==(const SignedAddr& o) const { return addr == o.addr && sign == o.sign; }
};

// A word y_{s_1}^{t_1} ... y_{s_m}^{t_m} whose addresses are leaves of a
// common n-ary tree with exactly n-2 leaves between consecutive ones and
// strictly alternating signs.
struct SpecialWord {
  std::vector<SignedAddr> letters;

  SpecialWord inverse() const;  // reverse order, flip all signs
  GroupWord as_group_word(int n) const;
};

// Decided by the minimal tree containing the addresses as leaves: any other
// tree only adds multiples of n-1 leaves between a pair, and n-2 < n-1.
bool is_special(const std::vector<SignedAddr>& letters, int n);

bool are_alternating(const SpecialWord& a, const SpecialWord& b, int n);
bool are_consecutive(const SpecialWord& a, const SpecialWord& b, int n);

// Pairwise independent (all cross-pairs prefix-incomparable) and globally
// address-ordered.
bool is_sorted_list(const std::vector<SpecialWord>& list, int n);
// Whenever a consecutive neighbor pair can alternate, it does.
bool is_proper(const std::vector<SpecialWord>& list, int n);

GroupWord tau_X(const std::vector<SpecialWord>& list, const std::set<int>& X, int n);

// Edge test for the coset graph: the rewritten standard form of t1 t2^-1 has
// a non-empty special y-part.
Tri coset_edge_test(const GroupWord& t1, const GroupWord& t2);

// Hyperplanes in a fixed order: x_1=0, x_1=1, ..., x_m=0, x_m=1, then the
// diagonals x_i = x_{i+1} for i in type2 ascending.
struct Arrangement {
  int m;
  std::set<int> type2;  // subset of {1..m-1}
  size_t hyperplane_count() const { return 2 * static_cast<size_t>(m) + type2.size(); }
};

struct Cell {
  std::vector<int8_t> sign;  // one entry per hyperplane, -1/0/+1
  int dim;
  std::vector<int> point;    // a realizing point, coordinates scaled by m+1
  bool operator<(const Cell& o) const { return dim != o.dim ? dim < o.dim : sign < o.sign; }
  bool operator==(const Cell& o) const { return sign == o.sign; }
};

// A flat: variables pinned to 0/1 and chains of equalities, canonicalized.
struct Flat {
  std::vector<int> comp;    // component id per variable (diagonal links)
  std::vector<int> pin;     // per component: -1 free, 0 or 1 pinned
  int dim() const;
  bool operator<(const Flat& o) const { return std::tie(comp, pin) < std::tie(o.comp, o.pin); }
  bool operator==(const Flat& o) const { return comp == o.comp && pin == o.pin; }
};

std::vector<Flat> flats(const Arrangement& a);

// All cells of the face complex of the arrangement (whole of R^m).
std::vector<Cell> face_complex(const Arrangement& a);

struct ClusterComplex {
  Arrangement arr;
  std::vector<Cell> cells;  // sorted by (dim, sign)
  std::vector<size_t> count_by_dim() const;
};

// Cells of the face complex lying in [0,1]^m.
ClusterComplex cluster(const Arrangement& a);

ClusterComplex subcluster(const ClusterComplex& c, const Flat& f);

long euler_characteristic(const ClusterComplex& c);

// Vertices F(n) tau_X tau for X within {1..m}; edges by coset_edge_test.
struct HSubgraph {
  int m;
  std::vector<GroupWord> tau_words;           // per subset, indexed by bitmask
  std::vector<std::pair<int, int>> edges;     // bitmask pairs, lo < hi
  bool all_distinct = true;                   // cosets pairwise distinct
  int inconclusive = 0;
};

HSubgraph h_subgraph(const std::vector<SpecialWord>& list, const GroupWord& base, int n);

// Builds the admissible arrangement with type2 = {i : tau_i tau_{i+1} special},
// and checks X -> F(n) tau_X is a graph isomorphism onto the cluster 1-skeleton.
struct SkeletonMatch {
  bool ok = false;
  int inconclusive = 0;
  std::string detail;
};
SkeletonMatch skeleton_match(const std::vector<SpecialWord>& list, int n);

struct IntersectionReport {
  std::vector<int> shared;  // bitmask pairs (c1 subset, c2 subset) flattened
  bool realized = false;    // a sorted list/base pair reproducing it was found
  std::string detail;
};
IntersectionReport h_intersection_check(const HSubgraph& c1,
                                        const std::vector<SpecialWord>& list1,
                                        const GroupWord& base1, const HSubgraph& c2,
                                        const std::vector<SpecialWord>& list2,
                                        const GroupWord& base2, int n);

// Parse "y[00]+ y[01]-" style literals.
std::vector<SignedAddr> parse_special(const std::string& text, int n);
std::string show_special(const std::vector<SignedAddr>& letters);

}  // namespace lmwb
