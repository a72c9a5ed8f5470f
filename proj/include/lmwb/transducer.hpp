#pragma once

#include "lmwb/seq.hpp"
#include "lmwb/word.hpp"

namespace lmwb {

// The recursive homeomorphism y (mode +1) and its inverse (mode -1),
// evaluated exactly on eventually periodic points. Rules that consume into
// the periodic zone recur through finitely many (mode, phase) states, and the
// emitted segment between two visits of the same state is the output period.
Seq eval_y(int mode, const Seq& xi, int n);

Seq eval_letter(const Letter& l, const Seq& xi, int n);
Seq evaluate_word(const GroupWord& w, const Seq& xi);

}  // namespace lmwb
