#pragma once

// Compressed digit words.
//
// A RunWord is a sequence of pieces, each being `count` copies of either one
// letter or a nested RunWord. Nested bodies are shared, so words built by
// repeated concatenation and repetition stay small even when their expanded
// length does not fit in memory.
//
// Text form, most significant piece first: "p*3 z*2 (zp z)*12 p".

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "matnum/core.hpp"

namespace matnum {

class RunWord {
 public:
  struct Piece {
    std::variant<Letter, std::shared_ptr<const RunWord>> body;
    Int count;
  };

  RunWord() = default;

  static RunWord letters(Letter l, const Int& count);
  static RunWord from_word(const DigitWord& word);
  /// `count` back-to-back copies of `word`.
  static RunWord repeat(const RunWord& word, const Int& count);
  /// `high` printed to the left of `low`.
  static RunWord concat(const RunWord& high, const RunWord& low);
  static RunWord parse(std::string_view text);

  /// Pieces, least significant first.
  const std::vector<Piece>& pieces() const { return pieces_; }
  const Int& length() const { return length_; }
  bool empty() const { return length_ == 0; }
  bool even_length() const { return is_even(length_); }
  /// Total number of pieces across all nesting levels (shared bodies counted once per use).
  std::size_t node_count() const;

  /// Throws ResourceLimit if the expanded word would exceed `max_length` digits.
  DigitWord expand(std::size_t max_length) const;
  std::string str() const;

 private:
  void push_low(Piece piece);

  std::vector<Piece> pieces_;
  Int length_ = 0;
};

/// Evaluates RunWords in a fixed number system. Powers and partial sums of
/// repeated bodies are computed by doubling, so cost grows with the number of
/// pieces and the bit length of the counts, not with the expanded length.
/// Summaries of shared bodies are cached; one instance is not thread-safe.
class RunEvaluator {
 public:
  explicit RunEvaluator(NumberSystem system);

  const NumberSystem& system() const { return system_; }
  IntVec evaluate(const RunWord& word);

 private:
  struct Summary {
    IntVec value;
    SquareMatrix power;  // M^length
  };

  Summary summarize(const RunWord& word);
  Summary summarize_body(const RunWord::Piece& piece);
  Summary repeat(const Summary& body, const Int& count) const;

  NumberSystem system_;
  SquareMatrix base_;
  std::map<std::shared_ptr<const RunWord>, Summary> cache_;
};

}  // namespace matnum
