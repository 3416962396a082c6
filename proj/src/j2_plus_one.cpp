#include "matnum/j2_plus_one.hpp"

#include <algorithm>

namespace matnum::j2p1 {

namespace {

Int triangular_offset(const Int& b) { return b * (b - 1) / 2; }

std::size_t to_size(const Int& v, const char* what) {
  if (v < 0) throw InvalidInput(std::string(what) + " must be nonnegative");
  if (v > Int(1) << 40) throw ResourceLimit(std::string(what) + " is too large to materialise as a word");
  return static_cast<std::size_t>(v);
}

bool admissible(const Int& c, const Int& b, const Int& ell) {
  return -ell * ell <= c && c <= ell * ell + 2 * b * ell;
}

}  // namespace

DigitWord ExtremalPair::max_word() const {
  std::vector<Letter> digits(to_size(ell, "ell"), Letter::m);
  digits.resize(digits.size() + to_size(b + ell, "b + ell"), Letter::p);
  return DigitWord(std::move(digits));
}

DigitWord ExtremalPair::min_word() const {
  std::vector<Letter> digits(to_size(b + ell, "b + ell"), Letter::p);
  digits.resize(digits.size() + to_size(ell, "ell"), Letter::m);
  return DigitWord(std::move(digits));
}

ExtremalPair extremal(const Int& b, const Int& ell) {
  if (b < 0 || ell < 0) throw InvalidInput("extremal values need b >= 0 and ell >= 0");
  const Int base = triangular_offset(b);
  return {b, ell, base + 2 * b * ell + ell * ell, base - ell * ell};
}

Int least_m_count(const Int& a, const Int& b) {
  if (b < 0) throw InvalidInput("least_m_count needs b >= 0");
  const Int c = a - triangular_offset(b);
  // The admissibility window only widens as ell grows, so any start at or
  // below the real root works; walk up in steps of 2 from there.
  Int start = 0;
  if (c < 0) {
    start = isqrt(-c);
  } else if (c > 0) {
    start = isqrt(b * b + c) - b;
  }
  start = std::max<Int>(start - 2, 0);
  if (is_even(start) != is_even(c)) start += 1;
  Int ell = start;
  while (!admissible(c, b, ell)) ell += 2;
  return ell;
}

Int min_length(const Int& a, const Int& b) {
  if (b < 0) return min_length(-a, -b);
  return b + 2 * least_m_count(a, b);
}

DigitWord witness(const Int& a, const Int& b) {
  if (b < 0) return negate_word_j2p1(witness(-a, -b));
  const Int ell = least_m_count(a, b);
  const ExtremalPair ext = extremal(b, ell);
  const Int swaps = (ext.max_a - a) / 2;
  const Int ps = b + ell;
  if (swaps < 0 || swaps > ps * ell) throw InternalError("witness: swap count outside the reachable range");

  // Rightmost-pm descent from p^ps m^ell: each p in turn (lowest first)
  // travels through the whole m block. After q full passes and r extra steps
  // the word is p^(ps-q-1) m^r p m^(ell-r) p^q.
  const std::size_t n_p = to_size(ps, "b + ell");
  const std::size_t n_m = to_size(ell, "ell");
  std::size_t q = 0;
  std::size_t r = 0;
  if (n_m > 0) {
    q = to_size(swaps / ell, "swap passes");
    r = to_size(swaps % ell, "swap remainder");
  }
  std::vector<Letter> digits;
  digits.reserve(n_p + n_m);
  digits.insert(digits.end(), q, Letter::p);
  if (q < n_p) {
    digits.insert(digits.end(), n_m - r, Letter::m);
    digits.push_back(Letter::p);
    digits.insert(digits.end(), r, Letter::m);
    digits.insert(digits.end(), n_p - q - 1, Letter::p);
  } else {
    digits.insert(digits.end(), n_m, Letter::m);
  }
  DigitWord w(std::move(digits));
  if (evaluate_fast_j2p1(w) != IntVec{a, b} || Int(w.size()) != b + 2 * ell)
    throw InternalError("witness: constructed word fails certification for (" + a.str() + ", " + b.str() + ")");
  return w;
}

bool swap_once(DigitWord& word) {
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (word[i + 1] == Letter::p && word[i] == Letter::m) {
      word[i + 1] = Letter::m;
      word[i] = Letter::p;
      return true;
    }
  }
  return false;
}

std::vector<DescentRow> swap_descent(const Int& b, const Int& ell) {
  const ExtremalPair ext = extremal(b, ell);
  const Int floor_a = ell >= 2 ? extremal(b, ell - 2).max_a : ext.min_a;
  std::vector<DescentRow> rows;
  DigitWord w = ext.max_word();
  IntVec value = evaluate_fast_j2p1(w);
  rows.push_back({w, value});
  while (value[0] > floor_a) {
    if (!swap_once(w)) throw InternalError("swap_descent: ran out of pm factors");
    value = evaluate_fast_j2p1(w);
    rows.push_back({w, value});
  }
  return rows;
}

}  // namespace matnum::j2p1
