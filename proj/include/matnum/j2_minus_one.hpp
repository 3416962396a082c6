#pragma once

// Minimal length and minimal weight in (J_2(-1), {p, z}).
//
// With p at the index set S, a word represents
//   b = #(S even) - #(S odd),   a = sum(S odd) - sum(S even).
// Minimal lengths follow a six-way case split on (a, b); minimal weights are
// |b|, |b| + 2 or |b| + 4 depending on a parity test and one inequality.

#include <optional>
#include <string>

#include "matnum/core.hpp"

namespace matnum::j2m1 {

/// n(n+1)/2 + (b - b^2 if b >= 0, b^2 - 2bn if b < 0). Strictly increasing in n.
Int threshold_term(const Int& b, const Int& n);

/// The four shortest-word shapes that occur where h(a, b) jumps.
enum class FormKind {
  pz_zp,     ///< (pz)^alpha (zp)^beta
  pz_pp_zp,  ///< (pz)^alpha pp (zp)^beta
  zp_pz,     ///< (zp)^beta (pz)^alpha
  zp_zz_pz,  ///< (zp)^beta zz (pz)^alpha
};

struct CanonicalForm {
  FormKind kind;
  Int alpha;
  Int beta;

  DigitWord expand() const;
  /// Closed-form value; defined for pz_zp and pz_pp_zp only.
  IntVec closed_form_value() const;
};

/// Shortest representation length h(a, b).
Int min_length(const Int& a, const Int& b);

/// A word of exactly `length` digits representing (a, b), if one exists.
/// Solved as two subset-sum problems over the even and odd positions.
std::optional<DigitWord> realize(const Int& a, const Int& b, const Int& length);

/// A representation of (a, b) of length min_length(a, b).
DigitWord witness(const Int& a, const Int& b);

enum class WeightCase {
  zero,             ///< (0, 0)
  base_positive,    ///< b > 0, a even, a <= -b(b-1)
  base_negative,    ///< b < 0, a + b even, a >= b^2
  plus_two_upper,   ///< b >= 0, a odd
  plus_two_lower,   ///< b < 0, a + b odd
  plus_four_upper,  ///< b >= 0, a even, not in the base class
  plus_four_lower,  ///< b < 0, a + b even, a < b^2
};

std::string to_string(WeightCase c);

struct WeightClass {
  Int a;
  Int b;
  Int weight;
  WeightCase which;
};

WeightClass classify_weight(const Int& a, const Int& b);

/// Least number of p digits over all representations of (a, b).
inline Int min_weight(const Int& a, const Int& b) { return classify_weight(a, b).weight; }

/// A representation of (a, b) with exactly min_weight(a, b) digits p.
DigitWord weight_witness(const Int& a, const Int& b);

}  // namespace matnum::j2m1
