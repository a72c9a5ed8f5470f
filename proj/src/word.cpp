#include "lmwb/word.hpp"

#include <algorithm>
#include <cctype>

namespace lmwb {

GroupWord GroupWord::inverse() const {
  GroupWord r{n, {}};
  r.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) r.letters.push_back(it->inverse());
  return r;
}

GroupWord GroupWord::operator*(const GroupWord& o) const {
  if (n != o.n) throw std::invalid_argument("word product: arity mismatch");
  GroupWord r = *this;
  r.letters.insert(r.letters.end(), o.letters.begin(), o.letters.end());
  return r;
}

Letter numbered_x(long j, int n, int sign) {
  if (j < 0) throw std::invalid_argument("numbered_x: index must be >= 0");
  long k = j / (n - 1);
  int r = static_cast<int>(j % (n - 1));
  return Letter::x(r, Word(static_cast<size_t>(k), static_cast<uint8_t>(n - 1)), sign);
}

TreePair letter_tree(const Letter& l, int n) {
  if (l.kind != Letter::X) throw std::invalid_argument("letter_tree: not an X letter");
  TreePair t = TreePair::generator_at(l.xi, l.addr, n);
  return l.sign > 0 ? t : invert(t);
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  bool done() const { return i >= s.size(); }
  char peek() const { return s[i]; }
};

void skip_ws(Cursor& c) {
  while (!c.done() && std::isspace(static_cast<unsigned char>(c.peek()))) ++c.i;
}

Word parse_addr(Cursor& c, int n) {
  // Digits up to ']'; "e" or nothing denotes the empty address.
  size_t start = c.i;
  std::string raw;
  while (!c.done() && c.peek() != ']') raw.push_back(c.s[c.i++]);
  if (c.done()) throw parse_error("unterminated '['", start);
  ++c.i;  // ']'
  if (raw.empty() || raw == "e") return {};
  try {
    return parse_finite_word(raw, n);
  } catch (const arity_error& e) {
    throw arity_error(e.what(), start + e.pos);
  } catch (const parse_error& e) {
    throw parse_error(e.what(), start + e.pos);
  }
}

long parse_number(Cursor& c) {
  size_t start = c.i;
  long v = 0;
  bool any = false;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
    v = v * 10 + (c.peek() - '0');
    ++c.i;
    any = true;
  }
  if (!any) throw parse_error("expected a number", start);
  return v;
}

}  // namespace

GroupWord parse_word(const std::string& text, int n) {
  if (n < 2 || n > 10) throw parse_error("arity must be between 2 and 10", 0);
  GroupWord w{n, {}};
  Cursor c{text};
  for (;;) {
    skip_ws(c);
    if (c.done()) break;
    size_t start = c.i;
    char head = c.peek();
    Letter l = Letter::y({});
    if (head == 'x') {
      ++c.i;
      if (!c.done() && c.peek() == '[') {
        ++c.i;
        long i = parse_number(c);
        if (c.done() || c.peek() != ';') throw parse_error("expected ';' in x[i;addr]", c.i);
        ++c.i;
        Word a = parse_addr(c, n);
        if (i < 0 || i > n - 2) throw parse_error("x[i;..]: need 0 <= i <= n-2", start);
        l = Letter::x(static_cast<int>(i), std::move(a));
      } else {
        long j = parse_number(c);
        l = numbered_x(j, n);
      }
    } else if (head == 'y') {
      ++c.i;
      if (c.done() || c.peek() != '[') throw parse_error("expected '[' after y", c.i);
      ++c.i;
      l = Letter::y(parse_addr(c, n));
    } else {
      throw parse_error("expected 'x' or 'y'", start);
    }
    if (!c.done() && c.peek() == '\'') {
      l.sign = -1;
      ++c.i;
    }
    if (!c.done() && !std::isspace(static_cast<unsigned char>(c.peek())))
      throw parse_error("unexpected character after generator", c.i);
    w.letters.push_back(std::move(l));
  }
  return w;
}

std::string show_letter(const Letter& l) {
  std::string s;
  if (l.kind == Letter::X) {
    if (l.addr.empty()) {
      s = "x" + std::to_string(l.xi);
    } else {
      s = "x[" + std::to_string(l.xi) + ";" + show_word(l.addr) + "]";
    }
  } else {
    s = "y[" + (l.addr.empty() ? std::string("e") : show_word(l.addr)) + "]";
  }
  if (l.sign < 0) s += "'";
  return s;
}

std::string show_word(const GroupWord& w) {
  std::string s;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += " ";
    s += show_letter(w.letters[i]);
  }
  return s;
}

bool word_in_variant(const GroupWord& w, Variant v, YReading reading) {
  for (const Letter& l : w.letters)
    if (l.kind == Letter::Y && !classify_y_address(l.addr, v, w.n, reading)) return false;
  return true;
}

}  // namespace lmwb
