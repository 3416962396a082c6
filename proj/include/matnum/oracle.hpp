#pragma once

// Brute-force ground truth by exhaustive word enumeration.
//
// Nothing here uses the closed forms or the length/weight formulas: the
// vectors M^i d are produced by repeated matrix multiplication and every word
// is summed directly. Enumeration sizes are capped; asking for more raises
// ResourceLimit.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "matnum/core.hpp"

namespace matnum::oracle {

/// Largest number of words enumerated for a single length.
inline constexpr std::uint64_t kMaxWordsPerLength = std::uint64_t{1} << 22;

enum class Mode {
  verification,  ///< plain exhaustive sweep
  exploration,   ///< skips lengths whose norm bound cannot reach the target
};

struct SearchReport {
  IntVec target;
  std::size_t horizon = 0;
  std::optional<std::size_t> min_length;
  std::optional<std::size_t> min_weight;
  std::map<std::size_t, Int> counts_by_length;
  /// Optimal words in lexicographic order of their printed form.
  std::vector<DigitWord> witnesses;

  std::string to_json() const;
};

/// Calls visit(value, word) for every word of exactly `length` digits, where
/// value has one entry per coordinate.
void for_each_word(const NumberSystem& system, std::size_t length,
                   const std::function<void(std::span<const std::int64_t>, const DigitWord&)>& visit);

/// Iterative deepening over lengths 0, 1, ... up to `horizon`; stops at the
/// first length with a hit.
SearchReport enumerate_min_length(const NumberSystem& system, const IntVec& target, std::size_t horizon,
                                  Mode mode = Mode::verification);

/// Least number of nonzero digits over all words of length <= horizon.
/// Witnesses are the lightest words of least length.
SearchReport enumerate_min_weight(const NumberSystem& system, const IntVec& target, std::size_t horizon);

struct NormBoundReport {
  std::size_t k = 0;
  Int bound;
  Int max_norm;
  std::uint64_t words = 0;
  /// Every word satisfies ||[w]|| <= c k^n, equivalently k >= (||[w]|| / c)^(1/n).
  bool ok = false;
};

NormBoundReport verify_norm_bound(const NumberSystem& system, std::size_t k);

using Point = std::pair<std::int64_t, std::int64_t>;

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept {
    return std::hash<std::int64_t>()(p.first * 0x9E3779B97F4A7C15LL ^ p.second);
  }
};

/// All words of length 0..horizon of a two-dimensional system, enumerated
/// once: least length per value, and optionally exact counts per length.
class LengthSweep {
 public:
  LengthSweep(const NumberSystem& system, std::size_t horizon, bool keep_counts = false);

  std::size_t horizon() const { return horizon_; }
  std::optional<std::size_t> min_length(std::int64_t a, std::int64_t b) const;
  /// Counts for words of exactly k digits, keyed (a, b). Requires keep_counts.
  const std::map<Point, std::uint64_t>& counts(std::size_t k) const;
  /// Values reached, with their least length.
  const std::unordered_map<Point, std::size_t, PointHash>& reached() const { return first_hit_; }

 private:
  std::size_t horizon_;
  std::unordered_map<Point, std::size_t, PointHash> first_hit_;
  std::vector<std::map<Point, std::uint64_t>> counts_;
};

/// Least weight of every value over all words of length <= horizon of a
/// two-dimensional system, by an exhaustive position-by-position sweep over
/// a dense grid that contains every reachable partial sum.
class WeightSweep {
 public:
  WeightSweep(const NumberSystem& system, std::size_t horizon);

  std::size_t horizon() const { return horizon_; }
  std::optional<std::size_t> min_weight(std::int64_t a, std::int64_t b) const;

 private:
  std::size_t index(std::int64_t a, std::int64_t b) const;

  std::size_t horizon_;
  std::int64_t half_a_ = 0;
  std::int64_t half_b_ = 0;
  std::vector<std::uint16_t> best_;
};

}  // namespace matnum::oracle
