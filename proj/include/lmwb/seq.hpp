#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lmwb {

// A finite word over the digit alphabet {0, ..., n-1}. The ambient arity n is
// carried by the operations, not the word itself; digits are validated at
// parse/construction boundaries.
using Word = std::vector<uint8_t>;

std::string show_word(const Word& w);            // "e" for the empty word
Word parse_finite_word(const std::string& s, int n);

bool is_prefix(const Word& a, const Word& b);
Word word_cat(const Word& a, const Word& b);
bool prefix_incomparable(const Word& a, const Word& b);

// Strict lexicographic order on finite words (plain std::vector compare).
inline bool word_lt(const Word& a, const Word& b) { return a < b; }

// A point of the Cantor set {0..n-1}^N given as prefix . period^omega.
// Stored canonically: the period is primitive and the prefix never ends with
// the last digit of the period (any such digit is absorbed by rotating the
// period). With that normalization two values are equal as points iff their
// fields are identical.
class Seq {
 public:
  Seq(Word prefix, Word period);

  const Word& prefix() const { return prefix_; }
  const Word& period() const { return period_; }

  uint8_t at(size_t i) const;
  Seq tail(size_t k) const;          // drop the first k symbols
  Word take(size_t k) const;         // first k symbols

  std::string show() const;          // "prefix(period)" literal

  bool operator==(const Seq& o) const {
    return prefix_ == o.prefix_ && period_ == o.period_;
  }
  bool operator!=(const Seq& o) const { return !(*this == o); }

  static Seq constant(uint8_t d) { return Seq(Word{}, Word{d}); }
  static Seq parse(const std::string& s, int n);

 private:
  Word prefix_;
  Word period_;
};

// -1 / 0 / +1 for <, =, >.
int lex_compare(const Seq& a, const Seq& b);
inline bool operator<(const Seq& a, const Seq& b) { return lex_compare(a, b) < 0; }

// True iff the two sequences agree from some position onward. Exact: the
// pair of tails is jointly periodic, so one lcm window decides.
bool eventually_equal(const Seq& a, const Seq& b);

bool is_prefix(const Word& a, const Seq& b);
Seq seq_cat(const Word& a, const Seq& b);

// True iff the open lexicographic interval (a, b) contains no point, i.e.
// a = c d (n-1)^w and b = c (d+1) 0^w. Requires a < b.
bool open_interval_empty(const Seq& a, const Seq& b, int n);

// The four n-adic Lodha-Moore groups.
enum class Variant { G0, yG, Gy, yGy };

std::string variant_name(Variant v);
std::optional<Variant> variant_from_name(const std::string& s);

// The displayed definition of yY(n) in the source material textually equals
// Y_0(n), which would exclude the generator y_0 it must contain. Corrected
// (default) reading: yY(n) excludes only epsilon and (n-1)^i.
enum class YReading { Corrected, Displayed };

// Membership of y_alpha in the variant's Y set: digit sum == 0 mod (n-1)
// plus the variant's address exclusions.
bool classify_y_address(const Word& alpha, Variant v, int n,
                        YReading reading = YReading::Corrected);

bool is_constant_word(const Word& w, uint8_t d);  // true for the empty word

struct parse_error : std::runtime_error {
  size_t pos;
  parse_error(const std::string& msg, size_t p) : std::runtime_error(msg), pos(p) {}
};
struct arity_error : parse_error {
  arity_error(const std::string& msg, size_t p) : parse_error(msg, p) {}
};

}  // namespace lmwb
