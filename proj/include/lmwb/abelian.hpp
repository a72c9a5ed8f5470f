#pragma once

#include <vector>

#include "lmwb/standard_form.hpp"
#include "lmwb/word.hpp"

namespace lmwb {

using AbVec = std::vector<long long>;

struct variant_mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Projection { P1, PN1, P1N1 };

// p_1 : (a_1..a_n) -> (a_2..a_{n-1}, a_1+a_n); p_{n-1} drops a_n;
// p_{1,n-1} keeps (a_2..a_{n-1}).
AbVec project(Projection kind, const AbVec& v);

// Image of one letter under the variant's surjection onto Z^{n+1}.
// X letters go through the projected Brown map; Y letters by address class.
AbVec pi_letter(Variant v, const Letter& l, int n);

// Sum of letter images. Throws variant_mismatch when a Y letter fails the
// variant's syntactic membership certificate.
AbVec pi_word(Variant v, const GroupWord& w);

// pi respects relations (1)-(4) and the partial action preserves address
// classes, on sampled instances.
Report verify_pi_well_defined(Variant v, int samples, int n, uint64_t seed = 0xabe1);

// Images of the variant's finite generating set contain n+1 columns with
// determinant +-1.
bool rank_certificate(Variant v, int n);

// Finite generating set of the variant (paper order).
std::vector<Letter> finite_generators(Variant v, int n);

}  // namespace lmwb
