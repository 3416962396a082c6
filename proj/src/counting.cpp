#include "matnum/counting.hpp"

#include <limits>

#include "json.hpp"

namespace matnum::counting {

namespace {

const Int kZero = 0;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw ResourceLimit("Laurent exponent overflow");
  return out;
}

std::int64_t position(std::uint64_t i) {
  if (i > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
    throw ResourceLimit("digit position overflow");
  return static_cast<std::int64_t>(i);
}

}  // namespace

LaurentTable LaurentTable::one() {
  LaurentTable t;
  t.terms_.emplace(Exponent{0, 0}, 1);
  return t;
}

const Int& LaurentTable::coefficient(std::int64_t ex, std::int64_t et) const {
  auto it = terms_.find(Exponent{ex, et});
  return it == terms_.end() ? kZero : it->second;
}

Int LaurentTable::mass() const {
  Int total = 0;
  for (const auto& [e, c] : terms_) total += c;
  return total;
}

LaurentTable LaurentTable::times_binomial(Exponent first, Exponent second) const {
  LaurentTable out;
  for (const Exponent& shift : {first, second}) {
    for (const auto& [e, c] : terms_) {
      const Exponent moved{checked_add(e.x, shift.x), checked_add(e.t, shift.t)};
      auto [it, inserted] = out.terms_.try_emplace(moved, c);
      if (!inserted) it->second += c;
    }
  }
  return out;
}

std::string LaurentTable::to_csv() const {
  std::string out = "a,b,count\n";
  for (const auto& [e, c] : terms_) {
    out += std::to_string(e.x);
    out += ',';
    out += std::to_string(e.t);
    out += ',';
    out += c.str();
    out += '\n';
  }
  return out;
}

std::string LaurentTable::to_json(const std::string& system, std::uint64_t k) const {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& [e, c] : terms_) {
    // Counts can exceed 64 bits, so they are emitted as decimal strings.
    rows.push_back({{"a", e.x}, {"b", e.t}, {"count", c.str()}});
  }
  nlohmann::ordered_json doc = {
      {"schema", 1}, {"kind", "counts"}, {"system", system}, {"k", k}, {"mass", mass().str()}, {"rows", rows}};
  return doc.dump();
}

LaurentTable extend_j2p1(const LaurentTable& table, std::uint64_t i) {
  const std::int64_t x = position(i);
  return table.times_binomial({x, 1}, {-x, -1});
}

LaurentTable extend_j2m1(const LaurentTable& table, std::uint64_t i) {
  const std::int64_t x = position(i);
  const Exponent p = (i % 2 == 0) ? Exponent{-x, 1} : Exponent{x, -1};
  return table.times_binomial(p, {0, 0});
}

LaurentTable count_table_j2p1(std::uint64_t k) {
  LaurentTable t = LaurentTable::one();
  for (std::uint64_t i = 0; i < k; ++i) t = extend_j2p1(t, i);
  return t;
}

LaurentTable count_table_j2m1(std::uint64_t k) {
  LaurentTable t = LaurentTable::one();
  for (std::uint64_t i = 0; i < k; ++i) t = extend_j2m1(t, i);
  return t;
}

LaurentTable count_table(const NumberSystem& system, std::uint64_t k) {
  if (system.is_j2_plus_one()) return count_table_j2p1(k);
  if (system.is_j2_minus_one()) return count_table_j2m1(k);
  throw InvalidInput("counting is only available for j2p1 and j2m1, not " + system.name());
}

Int count_reps(const NumberSystem& system, const Int& a, const Int& b, std::uint64_t k) {
  const LaurentTable table = count_table(system, k);
  // Targets outside int64 cannot appear in any table that fits in memory.
  const Int limit = std::numeric_limits<std::int64_t>::max();
  if (abs(a) > limit || abs(b) > limit) return 0;
  return table.coefficient(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b));
}

}  // namespace matnum::counting
