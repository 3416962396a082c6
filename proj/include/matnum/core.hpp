#pragma once

// Domain types shared by every number system in the library: exact integer
// vectors, digit letters and words, Jordan-block bases, and word evaluation.
//
// A word d_{k-1} ... d_0 represents sum_i M^i d_i. Words are stored with d_0
// first; their text form prints d_{k-1} first, one character per digit.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "matnum/integer.hpp"

namespace matnum {

/// Exact integer vector in Z^n.
class IntVec {
 public:
  IntVec() = default;
  explicit IntVec(std::size_t n) : entries_(n) {}
  IntVec(std::initializer_list<Int> entries) : entries_(entries) {}
  explicit IntVec(std::vector<Int> entries) : entries_(std::move(entries)) {}

  static IntVec of(std::initializer_list<long long> entries);

  std::size_t size() const { return entries_.size(); }
  const Int& operator[](std::size_t i) const { return entries_[i]; }
  Int& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<Int>& entries() const { return entries_; }

  bool is_zero() const;
  /// Max-norm.
  Int norm() const;

  IntVec& operator+=(const IntVec& rhs);
  IntVec& operator-=(const IntVec& rhs);
  friend IntVec operator+(IntVec lhs, const IntVec& rhs) { return lhs += rhs; }
  friend IntVec operator-(IntVec lhs, const IntVec& rhs) { return lhs -= rhs; }
  friend IntVec operator-(IntVec v);
  friend bool operator==(const IntVec&, const IntVec&) = default;

  /// "(13, 2)"
  std::string str() const;
  /// "13,2"
  std::string compact_str() const;

 private:
  std::vector<Int> entries_;
};

std::ostream& operator<<(std::ostream& os, const IntVec& v);

/// Digit names. p is the last unit vector, m its negation, z the zero vector.
enum class Letter : char { p = 'p', m = 'm', z = 'z' };

inline char to_char(Letter l) { return static_cast<char>(l); }
/// Throws InvalidInput for anything but 'p', 'm', 'z'.
Letter letter_from_char(char c);

/// Finite digit sequence; index i is the coefficient of M^i.
class DigitWord {
 public:
  DigitWord() = default;
  /// Digits given least significant first.
  explicit DigitWord(std::vector<Letter> digits) : digits_(std::move(digits)) {}

  /// Parses the big-endian text form ("ppzpp"); empty string is the empty word.
  static DigitWord parse(std::string_view text);
  static DigitWord repeat(Letter l, std::size_t count) { return DigitWord(std::vector<Letter>(count, l)); }

  std::size_t size() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }
  /// Digit at index i (coefficient of M^i).
  Letter operator[](std::size_t i) const { return digits_[i]; }
  Letter& operator[](std::size_t i) { return digits_[i]; }
  const std::vector<Letter>& digits() const { return digits_; }

  std::size_t count(Letter l) const;
  /// Number of nonzero digits.
  std::size_t weight() const { return size() - count(Letter::z); }

  /// Word `high` printed to the left of `low`: high occupies the more
  /// significant positions.
  static DigitWord concat(const DigitWord& high, const DigitWord& low);
  DigitWord trim_leading_zeros() const;

  std::string str() const;
  friend bool operator==(const DigitWord&, const DigitWord&) = default;

 private:
  std::vector<Letter> digits_;
};

std::ostream& operator<<(std::ostream& os, const DigitWord& w);

/// Dense square integer matrix, used for Jordan powers and geometric sums.
class SquareMatrix {
 public:
  explicit SquareMatrix(std::size_t n) : n_(n), cells_(n * n) {}
  static SquareMatrix identity(std::size_t n);
  /// J_n(eigenvalue): eigenvalue on the diagonal, 1 on the superdiagonal.
  static SquareMatrix jordan(std::size_t n, int eigenvalue);

  std::size_t dim() const { return n_; }
  const Int& operator()(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }
  Int& operator()(std::size_t i, std::size_t j) { return cells_[i * n_ + j]; }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);
  friend SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b);
  IntVec apply(const IntVec& v) const;
  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<Int> cells_;
};

/// Base J_n(+-1) together with a digit alphabet drawn from {p, m, z}.
class NumberSystem {
 public:
  /// Throws InvalidInput unless n >= 1, eigenvalue is +-1 and the alphabet
  /// is non-empty and duplicate-free.
  NumberSystem(std::size_t dimension, int eigenvalue, std::vector<Letter> alphabet);

  /// (J_2(1), {p, m})
  static NumberSystem j2_plus_one();
  /// (J_2(-1), {p, z})
  static NumberSystem j2_minus_one();
  /// (J_n(-1), {p, z})
  static NumberSystem jn_minus_one(std::size_t n);
  /// Looks up "j2p1", "j2m1" or "jNm1" (N a positive integer).
  static NumberSystem by_name(std::string_view name);

  std::size_t dimension() const { return dimension_; }
  int eigenvalue() const { return eigenvalue_; }
  const std::vector<Letter>& alphabet() const { return alphabet_; }
  bool contains(Letter l) const;
  IntVec digit(Letter l) const;
  SquareMatrix base() const { return SquareMatrix::jordan(dimension_, eigenvalue_); }
  /// Largest max-norm over the digits.
  Int max_digit_norm() const;

  std::string name() const;
  bool is_j2_plus_one() const;
  bool is_j2_minus_one() const;
  friend bool operator==(const NumberSystem&, const NumberSystem&) = default;

 private:
  std::size_t dimension_;
  int eigenvalue_;
  std::vector<Letter> alphabet_;
};

/// C(k, r) by Pascal's rule, exact.
Int binomial(std::uint64_t k, std::uint64_t r);

/// Entry (i, j) of J_n(sign)^k: C(k, j-i) * sign^(k-(j-i)) above the
/// diagonal, zero below.
Int jordan_power_entry(std::size_t n, int sign, std::uint64_t k, std::size_t i, std::size_t j);

/// sum_i M^i d_i, exact. Throws InvalidInput if a digit is not in the alphabet.
IntVec evaluate(const NumberSystem& system, const DigitWord& word);

/// Closed form for (J_2(1), {p, m}): a = sum of p indices - sum of m indices,
/// b = #p - #m.
IntVec evaluate_fast_j2p1(const DigitWord& word);

/// Closed form for (J_2(-1), {p, z}): b = #p at even index - #p at odd index,
/// a = sum of odd p indices - sum of even p indices.
IntVec evaluate_fast_j2m1(const DigitWord& word);

/// Swaps p and m; the result represents the negated vector.
DigitWord negate_word_j2p1(const DigitWord& word);

/// Constant c with ||[w]|| <= c k^n for every word w of any length k >= 1.
/// c = H * F with H the largest digit norm; F = 1 because every row sum of
/// |J_n(+-1)^i| is sum_{r<n} C(i, r) <= (i + 1)^(n-1) <= k^(n-1) for i < k.
Int norm_constant(const NumberSystem& system);

/// c * k^n: an upper bound on ||[w]|| for every word of length k.
Int norm_bound_constant(const NumberSystem& system, std::uint64_t k);

}  // namespace matnum
