#pragma once

// Number of length-k representations as coefficients of Laurent polynomials.
//
// In (J_2(1), {p, m}) digit i contributes t x^i (p) or 1/(t x^i) (m); the
// count of (a, b) at length k is the coefficient of x^a t^b in the product of
// the k factors. In (J_2(-1), {p, z}) digit p at index i contributes
// x^{-i} t for even i and x^i / t for odd i, and z contributes 1.

#include <cstdint>
#include <map>
#include <string>

#include "matnum/core.hpp"

namespace matnum::counting {

/// Exponent pair (e_x, e_t). Ordered by (e_t, e_x), the export order.
struct Exponent {
  std::int64_t x;
  std::int64_t t;
  friend auto operator<=>(const Exponent& l, const Exponent& r) {
    if (auto c = l.t <=> r.t; c != 0) return c;
    return l.x <=> r.x;
  }
  friend bool operator==(const Exponent&, const Exponent&) = default;
};

/// Sparse table of strictly positive coefficients.
class LaurentTable {
 public:
  /// The constant polynomial 1.
  static LaurentTable one();

  const Int& coefficient(std::int64_t ex, std::int64_t et) const;
  std::size_t support_size() const { return terms_.size(); }
  const std::map<Exponent, Int>& terms() const { return terms_; }
  /// Sum of all coefficients.
  Int mass() const;

  /// Multiplies by a two-term factor x^{dx1} t^{dt1} + x^{dx2} t^{dt2}.
  LaurentTable times_binomial(Exponent first, Exponent second) const;

  /// Rows "a,b,count" with a header line, ordered by (b, a).
  std::string to_csv() const;
  /// {"schema":1,"kind":"counts",...,"rows":[{"a":..,"b":..,"count":".."}]}
  std::string to_json(const std::string& system, std::uint64_t k) const;

  friend bool operator==(const LaurentTable&, const LaurentTable&) = default;

 private:
  std::map<Exponent, Int> terms_;
};

/// Factor contributed by digit position i.
LaurentTable extend_j2p1(const LaurentTable& table, std::uint64_t i);
LaurentTable extend_j2m1(const LaurentTable& table, std::uint64_t i);

/// Product of the first k factors.
LaurentTable count_table_j2p1(std::uint64_t k);
LaurentTable count_table_j2m1(std::uint64_t k);

/// Table for either two-dimensional system; throws InvalidInput otherwise.
LaurentTable count_table(const NumberSystem& system, std::uint64_t k);

/// Number of words of length k representing (a, b).
Int count_reps(const NumberSystem& system, const Int& a, const Int& b, std::uint64_t k);

}  // namespace matnum::counting
