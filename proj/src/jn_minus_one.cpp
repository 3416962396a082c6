#include "matnum/jn_minus_one.hpp"

namespace matnum::jn {

namespace {

const RunWord& single_z() {
  static const RunWord z = RunWord::letters(Letter::z, 1);
  return z;
}

}  // namespace

RunWord pad_even(const RunWord& word) {
  return word.even_length() ? word : RunWord::concat(single_z(), word);
}

DigitWord pad_even(const DigitWord& word) {
  return word.size() % 2 == 0 ? word : DigitWord::concat(DigitWord::parse("z"), word);
}

std::pair<Int, Int> bezout(const Int& t, const Int& u) {
  if (t == 0 || u == 0) throw InvalidInput("bezout needs nonzero arguments");
  if (abs(t) == 1) return {t, 0};
  // Extended Euclid on (t, u).
  Int old_r = t, r = u;
  Int old_s = 1, s = 0;
  while (r != 0) {
    const Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (abs(old_r) != 1)
    throw InvalidInput("bezout: gcd(" + t.str() + ", " + u.str() + ") = " + abs(old_r).str() + " is not 1");
  Int x = old_s * old_r;  // x t == 1 (mod u)
  const Int m = abs(u);
  x %= m;
  if (x < 0) x += m;
  if (2 * x > m) x -= m;  // least absolute value, ties to the positive side
  const Int y = (1 - x * t) / u;
  return {x, y};
}

Builder::Builder(std::size_t n) : n_(n), evaluator_(NumberSystem::jn_minus_one(n)) {}

Int Builder::shape_value(const IntVec& value, std::size_t j, const char* what) const {
  if (j < 1 || j > n_) throw InvalidInput(std::string(what) + ": coordinate out of range");
  for (std::size_t i = j; i < n_; ++i)
    if (value[i] != 0)
      throw InvalidInput(std::string(what) + ": value " + value.str() + " is not zero above coordinate " +
                         std::to_string(j));
  return value[j - 1];
}

RunWord Builder::combine_words(const RunWord& t, const RunWord& u, const Int& v, std::size_t j) {
  if (!t.even_length() || !u.even_length()) throw InvalidInput("combine_words: words must have even length");
  const Int big_t = shape_value(evaluate(t), j, "combine_words");
  const Int big_u = shape_value(evaluate(u), j, "combine_words");
  if (v == 0) return {};
  const auto [x, y] = bezout(big_t, big_u);
  const Int xs = v * x;
  const Int ys = v * y;

  // u-block sits at offset |s|; t-block at |s| + |ys| len(u) + |r|, whose
  // parity is |s| + |r| since len(u) is even.
  const bool s_is_z = ys < 0;
  const bool r_is_z = xs != 0 && ((xs < 0) != s_is_z);
  RunWord w = RunWord::repeat(t, abs(xs));
  if (r_is_z) w = RunWord::concat(w, single_z());
  w = RunWord::concat(w, RunWord::repeat(u, abs(ys)));
  if (s_is_z) w = RunWord::concat(w, single_z());

  if (shape_value(evaluate(w), j, "combine_words") != v)
    throw InternalError("combine_words: coordinate " + std::to_string(j) + " does not equal " + v.str());
  return w;
}

RunWord Builder::lower_unit_word(const RunWord& w, std::size_t j) {
  if (j < 1 || j >= n_) throw InvalidInput("lower_unit_word: need 1 <= j < n");
  if (!w.even_length()) throw InvalidInput("lower_unit_word: word must have even length");
  if (shape_value(evaluate(w), j + 1, "lower_unit_word") != 1)
    throw InvalidInput("lower_unit_word: coordinate " + std::to_string(j + 1) + " must be 1");
  const RunWord t = pad_even(RunWord::concat(RunWord::concat(w, RunWord::letters(Letter::z, 1)), w));
  const RunWord u = pad_even(RunWord::concat(RunWord::concat(w, RunWord::letters(Letter::z, 3)), w));
  return combine_words(t, u, 1, j);
}

const UnitWordLadder& Builder::ladder() {
  if (ladder_) return *ladder_;
  UnitWordLadder out;
  out.n = n_;
  out.rungs.resize(n_);
  out.rungs[n_ - 1] = pad_even(RunWord::letters(Letter::p, 1));
  for (std::size_t j = n_ - 1; j >= 1; --j) out.rungs[j - 1] = pad_even(lower_unit_word(out.rungs[j], j));
  for (std::size_t j = 1; j <= n_; ++j) {
    if (shape_value(evaluate(out.rung(j)), j, "ladder") != 1 || !out.rung(j).even_length())
      throw InternalError("ladder rung " + std::to_string(j) + " fails certification");
  }
  ladder_ = std::move(out);
  return *ladder_;
}

RunWord Builder::full_representation(const IntVec& target) {
  if (target.size() != n_) throw InvalidInput("full_representation: target has the wrong dimension");
  const UnitWordLadder& steps = ladder();
  RunWord w;
  IntVec current(n_);
  for (std::size_t j = n_; j >= 1; --j) {
    const Int v = target[j - 1] - current[j - 1];
    const RunWord& t = steps.rung(j);
    // w is even, so v w adds [v] at an even offset: coordinate j gains v and
    // coordinates above j are untouched.
    w = RunWord::concat(pad_even(combine_words(t, t, v, j)), w);
    current = evaluate(w);
    for (std::size_t i = j - 1; i < n_; ++i)
      if (current[i] != target[i])
        throw InternalError("full_representation: coordinate " + std::to_string(i + 1) + " drifted");
  }
  if (current != target) throw InternalError("full_representation: final value does not match the target");
  return w;
}

UnitWordLadder build_ladder(std::size_t n) { return Builder(n).ladder(); }

RunWord full_representation(std::size_t n, const IntVec& target) { return Builder(n).full_representation(target); }

FullnessReport fullness_certificate(std::size_t n, std::int64_t box, std::size_t flat_limit) {
  if (n < 1) throw InvalidInput("dimension must be positive");
  if (box < 0) throw InvalidInput("box must be nonnegative");
  FullnessReport report;
  report.n = n;
  report.box = box;
  Builder builder(n);
  const NumberSystem system = NumberSystem::jn_minus_one(n);
  std::vector<std::int64_t> coords(n, -box);
  for (;;) {
    IntVec target(n);
    for (std::size_t i = 0; i < n; ++i) target[i] = coords[i];
    ++report.targets;
    try {
      const RunWord w = builder.full_representation(target);
      bool ok = builder.evaluate(w) == target;
      if (ok && w.length() <= flat_limit) {
        ok = evaluate(system, w.expand(flat_limit)) == target;
        ++report.flat_checked;
      }
      if (ok) {
        ++report.certified;
        report.max_length = std::max(report.max_length, w.length());
      } else {
        report.failures.push_back(target);
      }
    } catch (const InternalError&) {
      report.failures.push_back(target);
    }
    std::size_t i = 0;
    while (i < n && coords[i] == box) coords[i++] = -box;
    if (i == n) break;
    ++coords[i];
  }
  return report;
}

}  // namespace matnum::jn
