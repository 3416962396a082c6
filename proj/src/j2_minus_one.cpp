#include "matnum/j2_minus_one.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace matnum::j2m1 {

namespace {

constexpr std::int64_t kMaxWordLength = std::int64_t{1} << 32;

/// Least n >= 0 with pred(n), for pred monotone (false ... false true ...).
Int least_n(const std::function<bool(const Int&)>& pred) {
  if (pred(0)) return 0;
  Int lo = 0;  // pred(lo) false
  Int hi = 1;
  while (!pred(hi)) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    Int mid = (lo + hi) / 2;
    if (pred(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

Int tri(const Int& n) { return n * (n + 1) / 2; }

/// `count` distinct indices from [0, slots) summing to `total`, or nothing.
std::optional<std::vector<std::int64_t>> choose_indices(std::int64_t count, std::int64_t slots, const Int& total) {
  if (count < 0 || count > slots) return std::nullopt;
  const Int lowest = Int(count) * (count - 1) / 2;
  const Int highest = Int(count) * (2 * slots - count - 1) / 2;
  if (total < lowest || total > highest) return std::nullopt;
  std::vector<std::int64_t> idx(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) idx[static_cast<std::size_t>(i)] = i;
  if (count == 0) return idx;
  const std::int64_t room = slots - count;
  const std::int64_t excess = to_int64(total - lowest, "index excess");
  if (room == 0) return idx;
  // Push the top elements to the end of the range one by one, then shift the
  // next one by the remainder.
  const std::int64_t full = excess / room;
  const std::int64_t rest = excess % room;
  for (std::int64_t t = 0; t < full; ++t) idx[static_cast<std::size_t>(count - 1 - t)] += room;
  if (full < count) idx[static_cast<std::size_t>(count - 1 - full)] += rest;
  return idx;
}

DigitWord word_from_positions(const std::vector<std::int64_t>& positions, std::int64_t length) {
  std::vector<Letter> digits(static_cast<std::size_t>(length), Letter::z);
  for (std::int64_t pos : positions) digits.at(static_cast<std::size_t>(pos)) = Letter::p;
  return DigitWord(std::move(digits));
}

void certify(const DigitWord& w, const Int& a, const Int& b, const char* what) {
  if (evaluate_fast_j2m1(w) != IntVec{a, b})
    throw InternalError(std::string(what) + ": word " + w.str() + " does not evaluate to (" + a.str() + ", " +
                        b.str() + ")");
}

DigitWord repeat_pair(Letter high, Letter low, const Int& times) {
  const std::int64_t k = to_int64(times, "repetition count");
  std::vector<Letter> digits;
  digits.reserve(static_cast<std::size_t>(2 * k));
  for (std::int64_t i = 0; i < k; ++i) {
    digits.push_back(low);
    digits.push_back(high);
  }
  return DigitWord(std::move(digits));
}

}  // namespace

Int threshold_term(const Int& b, const Int& n) {
  if (n < 0) throw InvalidInput("threshold_term needs n >= 0");
  return tri(n) + (b >= 0 ? Int(b - b * b) : Int(b * b - 2 * b * n));
}

DigitWord CanonicalForm::expand() const {
  if (alpha < 0 || beta < 0) throw InvalidInput("canonical form exponents must be nonnegative");
  const DigitWord pz = repeat_pair(Letter::p, Letter::z, alpha);
  const DigitWord zp = repeat_pair(Letter::z, Letter::p, beta);
  switch (kind) {
    case FormKind::pz_zp: return DigitWord::concat(pz, zp);
    case FormKind::pz_pp_zp: return DigitWord::concat(DigitWord::concat(pz, DigitWord::parse("pp")), zp);
    case FormKind::zp_pz: return DigitWord::concat(zp, pz);
    case FormKind::zp_zz_pz: return DigitWord::concat(DigitWord::concat(zp, DigitWord::parse("zz")), pz);
  }
  throw InvalidInput("unknown canonical form");
}

IntVec CanonicalForm::closed_form_value() const {
  const Int base = alpha * alpha + 2 * alpha * beta - beta * beta + beta;
  switch (kind) {
    case FormKind::pz_zp: return {base, beta - alpha};
    case FormKind::pz_pp_zp: return {base + 2 * alpha + 1, beta - alpha};
    default: throw InvalidInput("closed form only known for (pz)^a(zp)^b and (pz)^a pp (zp)^b");
  }
}

Int min_length(const Int& a, const Int& b) {
  const Int b2 = b * b;
  if (b > 0 && a == -b2 + b) return 2 * b - 1;
  if (b <= 0 && a == b2) return 2 * abs(b);
  if (b >= 0 && a >= -b2 + b) {
    const Int n = least_n([&](const Int& n) { return a <= -b2 + b + tri(n); });
    return 2 * (b + n);
  }
  if (b > 0) {  // a < -b^2 + b
    const Int n = least_n([&](const Int& n) { return a >= -b2 - b - 2 * n * b - tri(n); });
    return 2 * (b + n) + 1;
  }
  if (a > b2) {  // b < 0
    const Int n = least_n([&](const Int& n) { return a <= b2 + tri(n) - 2 * n * b; });
    return 2 * (n - b);
  }
  // b <= 0, a < b^2
  const Int n = least_n([&](const Int& n) { return a >= b2 - tri(n); });
  return 2 * (n - b) + 1;
}

std::optional<DigitWord> realize(const Int& a, const Int& b, const Int& length) {
  if (length < 0) throw InvalidInput("length must be nonnegative");
  if (length > kMaxWordLength) throw ResourceLimit("word length " + length.str() + " is too large to materialise");
  const std::int64_t k = static_cast<std::int64_t>(length);
  const std::int64_t evens = (k + 1) / 2;  // positions 0, 2, 4, ...
  const std::int64_t odds = k / 2;         // positions 1, 3, 5, ...
  if (abs(b) > k) return std::nullopt;
  const std::int64_t bb = static_cast<std::int64_t>(b);

  // With e evens and o = e - b odds, positions 2s and 2t+1 give
  //   a = 2 (sum t - sum s) + o,
  // and sums of a fixed number of distinct indices from a range cover a
  // contiguous interval.
  for (std::int64_t e = std::max<std::int64_t>(0, bb); e <= std::min(evens, odds + bb); ++e) {
    const std::int64_t o = e - bb;
    if (!is_even(a - o)) continue;
    const Int diff = (a - o) / 2;
    const Int min_to = Int(o) * (o - 1) / 2;
    const Int max_to = Int(o) * (2 * odds - o - 1) / 2;
    const Int min_te = Int(e) * (e - 1) / 2;
    const Int max_te = Int(e) * (2 * evens - e - 1) / 2;
    if (diff < min_to - max_te || diff > max_to - min_te) continue;
    const Int to = std::clamp<Int>(diff + min_te, min_to, max_to);
    const Int te = to - diff;
    auto odd_idx = choose_indices(o, odds, to);
    auto even_idx = choose_indices(e, evens, te);
    if (!odd_idx || !even_idx) throw InternalError("realize: feasible sums could not be split into indices");
    std::vector<std::int64_t> positions;
    for (std::int64_t t : *odd_idx) positions.push_back(2 * t + 1);
    for (std::int64_t s : *even_idx) positions.push_back(2 * s);
    DigitWord w = word_from_positions(positions, k);
    certify(w, a, b, "realize");
    return w;
  }
  return std::nullopt;
}

DigitWord witness(const Int& a, const Int& b) {
  const Int h = min_length(a, b);
  auto w = realize(a, b, h);
  if (!w) throw InternalError("witness: no word of length " + h.str() + " for (" + a.str() + ", " + b.str() + ")");
  return *std::move(w);
}

std::string to_string(WeightCase c) {
  switch (c) {
    case WeightCase::zero: return "zero";
    case WeightCase::base_positive: return "base-positive";
    case WeightCase::base_negative: return "base-negative";
    case WeightCase::plus_two_upper: return "plus-two-upper";
    case WeightCase::plus_two_lower: return "plus-two-lower";
    case WeightCase::plus_four_upper: return "plus-four-upper";
    case WeightCase::plus_four_lower: return "plus-four-lower";
  }
  return "?";
}

WeightClass classify_weight(const Int& a, const Int& b) {
  const Int abs_b = abs(b);
  if (a == 0 && b == 0) return {a, b, 0, WeightCase::zero};
  if (b >= 0) {
    if (is_odd(a)) return {a, b, b + 2, WeightCase::plus_two_upper};
    if (b > 0 && a <= -b * (b - 1)) return {a, b, b, WeightCase::base_positive};
    return {a, b, b + 4, WeightCase::plus_four_upper};
  }
  if (is_odd(a + b)) return {a, b, abs_b + 2, WeightCase::plus_two_lower};
  if (a >= b * b) return {a, b, abs_b, WeightCase::base_negative};
  return {a, b, abs_b + 4, WeightCase::plus_four_lower};
}

DigitWord weight_witness(const Int& a, const Int& b) {
  const WeightClass cls = classify_weight(a, b);
  DigitWord w;
  switch (cls.which) {
    case WeightCase::zero: break;
    case WeightCase::base_positive: {
      // M^{2i} p = (-2i, 1): p at 0, 2, ..., 2(b-2) plus one even position
      // far enough up to absorb the rest of a.
      std::vector<std::int64_t> positions;
      const std::int64_t bb = to_int64(b, "b");
      for (std::int64_t i = 0; i + 1 < bb; ++i) positions.push_back(2 * i);
      const std::int64_t last = to_int64(-(a + (b - 1) * (b - 2)), "position");
      positions.push_back(last);
      w = word_from_positions(positions, last + 1);
      break;
    }
    case WeightCase::plus_two_upper: {
      // p at the even positions 2A .. 2(A+b) and at the odd position
      // B = a + (b+1)(2A+b); A is the least value making B >= 1.
      const Int span = b + 1;
      Int first = 0;
      const Int need = 1 - a - span * b;  // B >= 1  <=>  2A(b+1) >= need
      if (need > 0) first = (need + 2 * span - 1) / (2 * span);
      const Int odd_pos = a + span * (2 * first + b);
      std::vector<std::int64_t> positions;
      const std::int64_t lo = to_int64(first, "position");
      const std::int64_t hi = to_int64(first + b, "position");
      for (std::int64_t i = lo; i <= hi; ++i) positions.push_back(2 * i);
      const std::int64_t odd = to_int64(odd_pos, "position");
      positions.push_back(odd);
      w = word_from_positions(positions, std::max(2 * hi, odd) + 1);
      break;
    }
    case WeightCase::plus_four_upper: {
      // (a, b) = (a-1, b) + M^{2B+1} p + M^{2B} p, the pair adding (1, 0)
      // at fresh positions above the witness for (a-1, b).
      const DigitWord inner = weight_witness(a - 1, b);
      std::size_t base = inner.size() + (inner.size() % 2);
      std::vector<Letter> digits = inner.digits();
      digits.resize(base + 2, Letter::z);
      digits[base] = Letter::p;
      digits[base + 1] = Letter::p;
      w = DigitWord(std::move(digits));
      break;
    }
    case WeightCase::base_negative:
    case WeightCase::plus_two_lower:
    case WeightCase::plus_four_lower: {
      // (a, b) = M (-a-b, -b) and the conjugate target has b > 0 in the
      // matching class; appending z applies M.
      const DigitWord inner = weight_witness(-a - b, -b);
      w = DigitWord::concat(inner, DigitWord::parse("z"));
      break;
    }
  }
  certify(w, a, b, "weight_witness");
  if (Int(w.weight()) != cls.weight) throw InternalError("weight_witness: weight does not match the class");
  return w;
}

}  // namespace matnum::j2m1
