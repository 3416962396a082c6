#pragma once

// Minimal-length representations in (J_2(1), {p, m}).
//
// A word with ell copies of m and b + ell copies of p has length b + 2 ell and
// second coordinate b. For fixed (b, ell) the reachable first coordinates are
// exactly the values of the right parity between min_a = b(b-1)/2 - ell^2
// (word m^ell p^(b+ell)) and max_a = b(b-1)/2 + 2 b ell + ell^2
// (word p^(b+ell) m^ell). Each pm -> mp swap lowers the first coordinate by 2.

#include <vector>

#include "matnum/core.hpp"

namespace matnum::j2p1 {

struct ExtremalPair {
  Int b;
  Int ell;
  Int max_a;
  Int min_a;

  /// p^(b+ell) m^ell
  DigitWord max_word() const;
  /// m^ell p^(b+ell)
  DigitWord min_word() const;
};

/// Throws InvalidInput unless b >= 0 and ell >= 0.
ExtremalPair extremal(const Int& b, const Int& ell);

/// Least ell >= 0 with ell == a - b(b-1)/2 (mod 2) and
/// -ell^2 <= a - b(b-1)/2 <= ell^2 + 2 b ell. Requires b >= 0.
Int least_m_count(const Int& a, const Int& b);

/// Length of the shortest representation of (a, b).
Int min_length(const Int& a, const Int& b);

/// A representation of (a, b) of length min_length(a, b).
DigitWord witness(const Int& a, const Int& b);

/// One pm -> mp swap at the rightmost pm factor of the printed word (lowest
/// index i with d_{i+1} = p, d_i = m). Returns false if the word has no pm.
bool swap_once(DigitWord& word);

struct DescentRow {
  DigitWord word;
  IntVec value;
};

/// The swap descent from p^(b+ell) m^ell down to the first coordinate
/// A_{b,ell-2} (ell >= 2) or down to min_a (ell < 2), one row per swap,
/// starting with the unswapped word.
std::vector<DescentRow> swap_descent(const Int& b, const Int& ell);

}  // namespace matnum::j2p1
