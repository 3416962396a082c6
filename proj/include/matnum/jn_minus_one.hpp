#pragma once

// Constructive fullness of (J_n(-1), {p, z}).
//
// Coordinates are numbered 1..n. A word has "shape j" when its value is zero
// in coordinates j+1..n. Shifting an even-length word by an odd number of
// places negates its coordinate j while keeping the zeros above it, which is
// how both signs of a Bezout combination are reached with the digits {p, z}.
//
// Every word built here is certified by evaluation before it is returned.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "matnum/core.hpp"
#include "matnum/run_word.hpp"

namespace matnum::jn {

/// Prepends one z when the length is odd.
RunWord pad_even(const RunWord& word);
DigitWord pad_even(const DigitWord& word);

/// x, y with x t + y u = 1. x is the representative of t^{-1} mod |u| of
/// least absolute value (ties to x >= 0); when |t| = 1 the pair is (t, 0).
/// Throws InvalidInput if gcd(t, u) != 1 or either argument is zero.
std::pair<Int, Int> bezout(const Int& t, const Int& u);

/// Words t_1 .. t_n with [t_j] = (*, ..., *, 1, 0, ..., 0), 1 at coordinate j.
struct UnitWordLadder {
  std::size_t n = 0;
  std::vector<RunWord> rungs;  // rungs[j-1] is t_j

  const RunWord& rung(std::size_t j) const { return rungs.at(j - 1); }
};

/// Constructor for one dimension n. Holds an evaluation cache, so a single
/// instance must not be shared between threads.
class Builder {
 public:
  explicit Builder(std::size_t n);

  std::size_t dimension() const { return n_; }
  const NumberSystem& system() const { return evaluator_.system(); }
  IntVec evaluate(const RunWord& word) { return evaluator_.evaluate(word); }

  /// t^{|x'|} r u^{|y'|} s with x' T + y' U = v, where T and U are coordinate
  /// j of [t] and [u]; r and s are empty or a single z, chosen so that each
  /// block contributes with the sign of its coefficient. Result has shape j
  /// with coordinate j equal to v. Empty when v = 0.
  RunWord combine_words(const RunWord& t, const RunWord& u, const Int& v, std::size_t j);

  /// From even-length w of shape j+1 with coordinate j+1 equal to 1, a word of
  /// shape j with coordinate j equal to 1, via w z w and w zzz w.
  RunWord lower_unit_word(const RunWord& w, std::size_t j);

  /// t_n = zp, then t_j = pad_even(lower_unit_word(t_{j+1}, j)). Cached.
  const UnitWordLadder& ladder();

  /// A word representing `target`, built coordinate by coordinate from n down.
  RunWord full_representation(const IntVec& target);

 private:
  /// Throws unless [word] is zero above coordinate j; returns coordinate j.
  Int shape_value(const IntVec& value, std::size_t j, const char* what) const;

  std::size_t n_;
  RunEvaluator evaluator_;
  std::optional<UnitWordLadder> ladder_;
};

UnitWordLadder build_ladder(std::size_t n);
RunWord full_representation(std::size_t n, const IntVec& target);

struct FullnessReport {
  std::size_t n = 0;
  std::int64_t box = 0;
  std::size_t targets = 0;
  std::size_t certified = 0;
  /// Targets whose expanded word was short enough to re-check with the flat evaluator.
  std::size_t flat_checked = 0;
  Int max_length = 0;
  std::vector<IntVec> failures;

  bool ok() const { return failures.empty() && certified == targets; }
};

/// Runs full_representation on every target in [-box, box]^n and certifies
/// each output by evaluation. Words of at most `flat_limit` digits are also
/// expanded and re-evaluated digit by digit.
FullnessReport fullness_certificate(std::size_t n, std::int64_t box, std::size_t flat_limit = std::size_t{1} << 20);

}  // namespace matnum::jn
