#include "matnum/run_word.hpp"

#include <cctype>

namespace matnum {

namespace {

const Int& body_length(const RunWord::Piece& piece) {
  static const Int kOne = 1;
  if (std::holds_alternative<Letter>(piece.body)) return kOne;
  return std::get<std::shared_ptr<const RunWord>>(piece.body)->length();
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RunWord parse_all() {
    RunWord w = parse_sequence();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return w;
  }

 private:
  // Pieces come most significant first, so fold each new one in as the low part.
  RunWord parse_sequence() {
    RunWord acc;
    for (;;) {
      skip_space();
      if (pos_ == text_.size() || text_[pos_] == ')') return acc;
      acc = RunWord::concat(acc, parse_piece());
    }
  }

  RunWord parse_piece() {
    RunWord body;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      body = parse_sequence();
      if (pos_ == text_.size() || text_[pos_] != ')') fail("missing ')'");
      ++pos_;
    } else if (c == 'p' || c == 'm' || c == 'z') {
      body = RunWord::letters(static_cast<Letter>(c), 1);
      ++pos_;
    } else {
      fail("invalid digit");
    }
    if (pos_ < text_.size() && text_[pos_] == '*') {
      ++pos_;
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a repeat count");
      return RunWord::repeat(body, Int(std::string(text_.substr(start, pos_ - start))));
    }
    return body;
  }

  void skip_space() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }

  [[noreturn]] void fail(const char* what) const {
    std::string msg = std::string(what) + " at position " + std::to_string(pos_) + " of \"" + std::string(text_) + "\"";
    if (pos_ < text_.size()) msg += " ('" + std::string(1, text_[pos_]) + "')";
    throw InvalidInput(msg);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RunWord RunWord::letters(Letter l, const Int& count) {
  if (count < 0) throw InvalidInput("run count must be nonnegative");
  RunWord w;
  if (count > 0) w.push_low({l, count});
  return w;
}

RunWord RunWord::from_word(const DigitWord& word) {
  RunWord w;
  // push_low merges equal neighbours, so feed digits most significant first.
  for (std::size_t i = word.size(); i-- > 0;) w.push_low({word[i], 1});
  return w;
}

RunWord RunWord::repeat(const RunWord& word, const Int& count) {
  if (count < 0) throw InvalidInput("repeat count must be nonnegative");
  if (count == 0 || word.empty()) return {};
  if (count == 1) return word;
  RunWord out;
  if (word.pieces_.size() == 1) {
    Piece piece = word.pieces_.front();
    piece.count *= count;
    out.push_low(std::move(piece));
  } else {
    out.push_low({std::make_shared<const RunWord>(word), count});
  }
  return out;
}

RunWord RunWord::concat(const RunWord& high, const RunWord& low) {
  RunWord out;
  for (auto it = high.pieces_.rbegin(); it != high.pieces_.rend(); ++it) out.push_low(*it);
  for (auto it = low.pieces_.rbegin(); it != low.pieces_.rend(); ++it) out.push_low(*it);
  return out;
}

void RunWord::push_low(Piece piece) {
  // Invariant: pieces_ is stored least significant first, but construction
  // happens most significant first, so new pieces go to the front.
  if (piece.count == 0) return;
  length_ += body_length(piece) * piece.count;
  if (!pieces_.empty() && std::holds_alternative<Letter>(piece.body) &&
      std::holds_alternative<Letter>(pieces_.front().body) &&
      std::get<Letter>(piece.body) == std::get<Letter>(pieces_.front().body)) {
    pieces_.front().count += piece.count;
    return;
  }
  pieces_.insert(pieces_.begin(), std::move(piece));
}

RunWord RunWord::parse(std::string_view text) { return Parser(text).parse_all(); }

std::size_t RunWord::node_count() const {
  std::size_t total = pieces_.size();
  for (const Piece& piece : pieces_)
    if (auto sub = std::get_if<std::shared_ptr<const RunWord>>(&piece.body)) total += (*sub)->node_count();
  return total;
}

DigitWord RunWord::expand(std::size_t max_length) const {
  if (length_ > max_length)
    throw ResourceLimit("expanded word would have " + length_.str() + " digits (limit " + std::to_string(max_length) +
                        ")");
  std::vector<Letter> digits;
  digits.reserve(static_cast<std::size_t>(length_));
  for (const Piece& piece : pieces_) {
    const auto copies = static_cast<std::size_t>(piece.count);
    if (auto l = std::get_if<Letter>(&piece.body)) {
      digits.insert(digits.end(), copies, *l);
    } else {
      const DigitWord sub = std::get<std::shared_ptr<const RunWord>>(piece.body)->expand(max_length);
      for (std::size_t c = 0; c < copies; ++c) digits.insert(digits.end(), sub.digits().begin(), sub.digits().end());
    }
  }
  return DigitWord(std::move(digits));
}

std::string RunWord::str() const {
  std::string out;
  for (auto it = pieces_.rbegin(); it != pieces_.rend(); ++it) {
    if (!out.empty()) out += ' ';
    if (auto l = std::get_if<Letter>(&it->body)) {
      out += to_char(*l);
    } else {
      out += '(' + std::get<std::shared_ptr<const RunWord>>(it->body)->str() + ')';
    }
    if (it->count != 1) out += '*' + it->count.str();
  }
  return out;
}

// Evaluation -----------------------------------------------------------------

RunEvaluator::RunEvaluator(NumberSystem system) : system_(std::move(system)), base_(system_.base()) {}

IntVec RunEvaluator::evaluate(const RunWord& word) { return summarize(word).value; }

RunEvaluator::Summary RunEvaluator::summarize(const RunWord& word) {
  const std::size_t n = system_.dimension();
  Summary acc{IntVec(n), SquareMatrix::identity(n)};
  for (const RunWord::Piece& piece : word.pieces()) {
    const Summary block = repeat(summarize_body(piece), piece.count);
    acc.value += acc.power.apply(block.value);
    acc.power = acc.power * block.power;
  }
  return acc;
}

RunEvaluator::Summary RunEvaluator::summarize_body(const RunWord::Piece& piece) {
  if (auto l = std::get_if<Letter>(&piece.body)) {
    if (!system_.contains(*l))
      throw InvalidInput(std::string("digit '") + to_char(*l) + "' is not in the alphabet of " + system_.name());
    return {system_.digit(*l), base_};
  }
  const auto& sub = std::get<std::shared_ptr<const RunWord>>(piece.body);
  if (auto it = cache_.find(sub); it != cache_.end()) return it->second;
  Summary s = summarize(*sub);
  cache_.emplace(sub, s);
  return s;
}

RunEvaluator::Summary RunEvaluator::repeat(const Summary& body, const Int& count) const {
  // For c copies: value = (I + Q + ... + Q^{c-1}) v and power = Q^c, built
  // from the top bit of c down via c -> 2c and c -> c + 1.
  const std::size_t n = system_.dimension();
  Summary acc{IntVec(n), SquareMatrix::identity(n)};
  if (count <= 0) return acc;
  for (std::size_t bit = boost::multiprecision::msb(count) + 1; bit-- > 0;) {
    acc.value += acc.power.apply(acc.value);
    acc.power = acc.power * acc.power;
    if (boost::multiprecision::bit_test(count, static_cast<unsigned>(bit))) {
      acc.value += acc.power.apply(body.value);
      acc.power = acc.power * body.power;
    }
  }
  return acc;
}

}  // namespace matnum
