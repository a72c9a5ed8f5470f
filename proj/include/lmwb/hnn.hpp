#pragma once

#include <string>
#include <vector>

#include "lmwb/standard_form.hpp"
#include "lmwb/word.hpp"

namespace lmwb {

// The nine strictly ascending HNN decompositions: BT is F(n) = F(n)_{>=1}*_{x0};
// F1-F4 are the F-like cases (stable letter a power of x_0, base a shifted
// copy of a larger variant); N5-N8 are the non-F-like cases (stable letter
// y_0^-1 or y_{n-1}, base a smaller variant).
enum class HnnId { BT, F1, F2, F3, F4, N5, N6, N7, N8 };

std::string hnn_name(HnnId id);
std::optional<HnnId> hnn_from_name(const std::string& s);

struct not_in_base : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The stable letter as a one-letter word.
GroupWord stable_word(HnnId id, int n);

// Syntactic membership certificate for the case's base subgroup.
bool in_base(HnnId id, const Letter& l, int n);
bool in_base(HnnId id, const GroupWord& w);

// Word for stable^-dir * w * stable^dir, rewritten letter by letter via the
// closed-form conjugation rules where available, else literally (followed by
// standard-form cleanup). Requires w to pass the base certificate.
GroupWord conjugate_by_stable(HnnId id, const GroupWord& w, int dir, long budget = 2'000'000);

struct AscentEntry {
  std::string generator;
  std::string image;
  bool certified = false;   // image passes the base certificate
  bool agrees = false;      // image evaluates like the literal conjugate
};

struct AscentReport {
  HnnId id;
  int n;
  std::vector<AscentEntry> entries;
  bool ok() const {
    for (const auto& e : entries)
      if (!e.certified || !e.agrees) return false;
    return !entries.empty();
  }
};

// Conjugates every base generator of address length <= depth (the finite
// generating set for the non-F-like cases) and checks certificate plus
// pointwise agreement with the literal conjugate.
AscentReport verify_ascending(HnnId id, int depth, int n, int eval_points = 100,
                              uint64_t seed = 0xa5cead);

enum class WitnessMode { SupportCylinder, TailChange };

struct Witness {
  HnnId id;
  int n;
  WitnessMode mode;
  GroupWord element;
  // SupportCylinder: a cylinder met by the element's support but avoided by
  // every conjugated generator's support. TailChange: a point whose tail
  // class the element changes while every base generator preserves it.
  Word cylinder;
  std::optional<Seq> point;
  std::string note;
};

Witness strictness_witness(HnnId id, int n);
bool check_witness(const Witness& w);

}  // namespace lmwb
