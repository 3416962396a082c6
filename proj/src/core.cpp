#include "matnum/core.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace matnum {

Int isqrt(const Int& n) {
  if (n < 0) throw InvalidInput("isqrt of a negative number");
  Int r = boost::multiprecision::sqrt(n);
  // sqrt() on cpp_int truncates; nudge defensively in both directions.
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

Int floor_div(const Int& num, const Int& den) {
  Int q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

std::int64_t to_int64(const Int& v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw ResourceLimit(std::string(what) + " does not fit in 64 bits");
  return static_cast<std::int64_t>(v);
}

// IntVec ---------------------------------------------------------------------

IntVec IntVec::of(std::initializer_list<long long> entries) {
  std::vector<Int> v;
  v.reserve(entries.size());
  for (long long e : entries) v.emplace_back(e);
  return IntVec(std::move(v));
}

bool IntVec::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Int& e) { return e == 0; });
}

Int IntVec::norm() const {
  Int best = 0;
  for (const Int& e : entries_) best = std::max<Int>(best, abs(e));
  return best;
}

IntVec& IntVec::operator+=(const IntVec& rhs) {
  if (rhs.size() != size()) throw InvalidInput("vector dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

IntVec& IntVec::operator-=(const IntVec& rhs) {
  if (rhs.size() != size()) throw InvalidInput("vector dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

IntVec operator-(IntVec v) {
  for (Int& e : v.entries_) e = -e;
  return v;
}

std::string IntVec::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) out += ", ";
    out += entries_[i].str();
  }
  return out + ")";
}

std::string IntVec::compact_str() const {
  std::string out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) out += ",";
    out += entries_[i].str();
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntVec& v) { return os << v.str(); }

// Letters and words ----------------------------------------------------------

Letter letter_from_char(char c) {
  switch (c) {
    case 'p': return Letter::p;
    case 'm': return Letter::m;
    case 'z': return Letter::z;
    default: throw InvalidInput(std::string("unknown digit '") + c + "'");
  }
}

DigitWord DigitWord::parse(std::string_view text) {
  std::vector<Letter> digits(text.size());
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c != 'p' && c != 'm' && c != 'z') {
      std::ostringstream msg;
      msg << "invalid digit '" << c << "' at position " << pos << " of \"" << text << "\"";
      throw InvalidInput(msg.str());
    }
    digits[text.size() - 1 - pos] = static_cast<Letter>(c);
  }
  return DigitWord(std::move(digits));
}

std::size_t DigitWord::count(Letter l) const {
  return static_cast<std::size_t>(std::count(digits_.begin(), digits_.end(), l));
}

DigitWord DigitWord::concat(const DigitWord& high, const DigitWord& low) {
  std::vector<Letter> out;
  out.reserve(high.size() + low.size());
  out.insert(out.end(), low.digits_.begin(), low.digits_.end());
  out.insert(out.end(), high.digits_.begin(), high.digits_.end());
  return DigitWord(std::move(out));
}

DigitWord DigitWord::trim_leading_zeros() const {
  std::size_t k = digits_.size();
  while (k > 0 && digits_[k - 1] == Letter::z) --k;
  return DigitWord(std::vector<Letter>(digits_.begin(), digits_.begin() + static_cast<std::ptrdiff_t>(k)));
}

std::string DigitWord::str() const {
  std::string out(digits_.size(), ' ');
  for (std::size_t i = 0; i < digits_.size(); ++i) out[digits_.size() - 1 - i] = to_char(digits_[i]);
  return out;
}

std::ostream& operator<<(std::ostream& os, const DigitWord& w) { return os << w.str(); }

// Matrices -------------------------------------------------------------------

SquareMatrix SquareMatrix::identity(std::size_t n) {
  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

SquareMatrix SquareMatrix::jordan(std::size_t n, int eigenvalue) {
  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = eigenvalue;
    if (i + 1 < n) m(i, i + 1) = 1;
  }
  return m;
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.n_ != b.n_) throw InvalidInput("matrix dimension mismatch");
  const std::size_t n = a.n_;
  SquareMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.n_ != b.n_) throw InvalidInput("matrix dimension mismatch");
  SquareMatrix out = a;
  for (std::size_t i = 0; i < out.cells_.size(); ++i) out.cells_[i] += b.cells_[i];
  return out;
}

IntVec SquareMatrix::apply(const IntVec& v) const {
  if (v.size() != n_) throw InvalidInput("matrix/vector dimension mismatch");
  IntVec out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if ((*this)(i, j) != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

// Number systems -------------------------------------------------------------

NumberSystem::NumberSystem(std::size_t dimension, int eigenvalue, std::vector<Letter> alphabet)
    : dimension_(dimension), eigenvalue_(eigenvalue), alphabet_(std::move(alphabet)) {
  if (dimension_ == 0) throw InvalidInput("dimension must be positive");
  if (eigenvalue_ != 1 && eigenvalue_ != -1) throw InvalidInput("eigenvalue must be +1 or -1");
  if (alphabet_.empty()) throw InvalidInput("digit alphabet is empty");
  auto sorted = alphabet_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidInput("digit alphabet has duplicates");
}

NumberSystem NumberSystem::j2_plus_one() { return {2, 1, {Letter::p, Letter::m}}; }
NumberSystem NumberSystem::j2_minus_one() { return {2, -1, {Letter::p, Letter::z}}; }
NumberSystem NumberSystem::jn_minus_one(std::size_t n) { return {n, -1, {Letter::p, Letter::z}}; }

NumberSystem NumberSystem::by_name(std::string_view name) {
  if (name == "j2p1") return j2_plus_one();
  if (name == "j2m1") return j2_minus_one();
  if (name.size() >= 4 && name.front() == 'j' && name.substr(name.size() - 2) == "m1") {
    const auto digits = name.substr(1, name.size() - 3);
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && n >= 1) return jn_minus_one(n);
  }
  throw InvalidInput("unknown number system '" + std::string(name) + "' (expected j2p1, j2m1 or jNm1)");
}

bool NumberSystem::contains(Letter l) const {
  return std::find(alphabet_.begin(), alphabet_.end(), l) != alphabet_.end();
}

IntVec NumberSystem::digit(Letter l) const {
  IntVec d(dimension_);
  if (l == Letter::p) d[dimension_ - 1] = 1;
  if (l == Letter::m) d[dimension_ - 1] = -1;
  return d;
}

Int NumberSystem::max_digit_norm() const {
  Int h = 0;
  for (Letter l : alphabet_) h = std::max(h, digit(l).norm());
  return h;
}

std::string NumberSystem::name() const {
  const bool pz = alphabet_.size() == 2 && contains(Letter::p) && contains(Letter::z);
  const bool pm = alphabet_.size() == 2 && contains(Letter::p) && contains(Letter::m);
  if (eigenvalue_ == 1 && dimension_ == 2 && pm) return "j2p1";
  if (eigenvalue_ == -1 && pz) return "j" + std::to_string(dimension_) + "m1";
  std::string out = "J" + std::to_string(dimension_) + (eigenvalue_ == 1 ? "(1)" : "(-1)") + "{";
  for (Letter l : alphabet_) out += to_char(l);
  return out + "}";
}

bool NumberSystem::is_j2_plus_one() const { return *this == j2_plus_one(); }
bool NumberSystem::is_j2_minus_one() const { return *this == j2_minus_one(); }

// Arithmetic -----------------------------------------------------------------

Int binomial(std::uint64_t k, std::uint64_t r) {
  if (r > k) return 0;
  r = std::min(r, k - r);
  // Each prefix product is itself a binomial coefficient, so the division is exact.
  Int c = 1;
  for (std::uint64_t i = 1; i <= r; ++i) c = c * (k - r + i) / i;
  return c;
}

Int jordan_power_entry(std::size_t n, int sign, std::uint64_t k, std::size_t i, std::size_t j) {
  if (i >= n || j >= n) throw InvalidInput("matrix index out of range");
  if (sign != 1 && sign != -1) throw InvalidInput("eigenvalue must be +1 or -1");
  if (j < i) return 0;
  const std::uint64_t r = j - i;
  if (r > k) return 0;
  Int c = binomial(k, r);
  if (sign == -1 && (k - r) % 2 == 1) c = -c;
  return c;
}

IntVec evaluate(const NumberSystem& system, const DigitWord& word) {
  const std::size_t n = system.dimension();
  const int a = system.eigenvalue();
  // Horner from the most significant digit: v <- M v + d_i. M is bidiagonal
  // so each step is linear in n.
  IntVec v(n);
  for (std::size_t idx = word.size(); idx-- > 0;) {
    const Letter l = word[idx];
    if (!system.contains(l))
      throw InvalidInput(std::string("digit '") + to_char(l) + "' is not in the alphabet of " + system.name());
    for (std::size_t r = 0; r < n; ++r) {
      v[r] *= a;
      if (r + 1 < n) v[r] += v[r + 1];
    }
    if (l == Letter::p) v[n - 1] += 1;
    if (l == Letter::m) v[n - 1] -= 1;
  }
  return v;
}

IntVec evaluate_fast_j2p1(const DigitWord& word) {
  std::int64_t a = 0;
  std::int64_t b = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const auto pos = static_cast<std::int64_t>(i);
    switch (word[i]) {
      case Letter::p: a += pos; ++b; break;
      case Letter::m: a -= pos; --b; break;
      default: throw InvalidInput("digit 'z' is not in the alphabet of j2p1");
    }
  }
  return IntVec{Int(a), Int(b)};
}

IntVec evaluate_fast_j2m1(const DigitWord& word) {
  std::int64_t a = 0;
  std::int64_t b = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const Letter l = word[i];
    if (l == Letter::z) continue;
    if (l != Letter::p) throw InvalidInput("digit 'm' is not in the alphabet of j2m1");
    const auto pos = static_cast<std::int64_t>(i);
    if (i % 2 == 0) {
      ++b;
      a -= pos;
    } else {
      --b;
      a += pos;
    }
  }
  return IntVec{Int(a), Int(b)};
}

DigitWord negate_word_j2p1(const DigitWord& word) {
  std::vector<Letter> out(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    switch (word[i]) {
      case Letter::p: out[i] = Letter::m; break;
      case Letter::m: out[i] = Letter::p; break;
      default: throw InvalidInput("digit 'z' is not in the alphabet of j2p1");
    }
  }
  return DigitWord(std::move(out));
}

Int norm_constant(const NumberSystem& system) { return system.max_digit_norm(); }

Int norm_bound_constant(const NumberSystem& system, std::uint64_t k) {
  Int bound = norm_constant(system);
  for (std::size_t i = 0; i < system.dimension(); ++i) bound *= k;
  return bound;
}

}  // namespace matnum
