#include "matnum/oracle.hpp"

#include <algorithm>
#include <limits>

#include "json.hpp"

namespace matnum::oracle {

namespace {

/// columns[i][c] = M^i d_c as int64, by repeated multiplication.
std::vector<std::vector<std::vector<std::int64_t>>> digit_columns(const NumberSystem& system, std::size_t length) {
  const SquareMatrix m = system.base();
  SquareMatrix power = SquareMatrix::identity(system.dimension());
  std::vector<std::vector<std::vector<std::int64_t>>> columns(length);
  for (std::size_t i = 0; i < length; ++i) {
    for (Letter l : system.alphabet()) {
      const IntVec v = power.apply(system.digit(l));
      std::vector<std::int64_t> col(v.size());
      for (std::size_t r = 0; r < v.size(); ++r) col[r] = to_int64(v[r], "oracle column entry");
      columns[i].push_back(std::move(col));
    }
    power = power * m;
  }
  return columns;
}

std::uint64_t word_count(const NumberSystem& system, std::size_t length) {
  std::uint64_t total = 1;
  const std::uint64_t s = system.alphabet().size();
  for (std::size_t i = 0; i < length; ++i) {
    if (total > kMaxWordsPerLength / s)
      throw ResourceLimit("enumerating words of length " + std::to_string(length) + " exceeds the oracle budget");
    total *= s;
  }
  return total;
}

bool matches(std::span<const std::int64_t> value, const IntVec& target) {
  for (std::size_t r = 0; r < value.size(); ++r)
    if (target[r] != value[r]) return false;
  return true;
}

void sort_witnesses(std::vector<DigitWord>& words) {
  std::sort(words.begin(), words.end(), [](const DigitWord& x, const DigitWord& y) { return x.str() < y.str(); });
}

}  // namespace

std::string SearchReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  doc["kind"] = "search";
  std::vector<std::string> coords;
  for (const Int& e : target.entries()) coords.push_back(e.str());
  doc["target"] = coords;
  doc["horizon"] = horizon;
  doc["min_length"] = min_length ? nlohmann::ordered_json(*min_length) : nlohmann::ordered_json(nullptr);
  doc["min_weight"] = min_weight ? nlohmann::ordered_json(*min_weight) : nlohmann::ordered_json(nullptr);
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (const auto& [k, c] : counts_by_length) counts[std::to_string(k)] = c.str();
  doc["counts_by_length"] = counts;
  std::vector<std::string> words;
  for (const DigitWord& w : witnesses) words.push_back(w.str());
  doc["witnesses"] = words;
  return doc.dump();
}

void for_each_word(const NumberSystem& system, std::size_t length,
                   const std::function<void(std::span<const std::int64_t>, const DigitWord&)>& visit) {
  word_count(system, length);
  const std::size_t n = system.dimension();
  const auto columns = digit_columns(system, length);
  const auto& alphabet = system.alphabet();
  DigitWord word(std::vector<Letter>(length, alphabet.front()));
  // sums[i] holds the sum over positions < i.
  std::vector<std::int64_t> sums((length + 1) * n, 0);

  std::function<void(std::size_t)> descend = [&](std::size_t i) {
    if (i == length) {
      visit(std::span<const std::int64_t>(sums.data() + length * n, n), word);
      return;
    }
    for (std::size_t c = 0; c < alphabet.size(); ++c) {
      word[i] = alphabet[c];
      const std::vector<std::int64_t>& col = columns[i][c];
      for (std::size_t r = 0; r < n; ++r) sums[(i + 1) * n + r] = sums[i * n + r] + col[r];
      descend(i + 1);
    }
  };
  descend(0);
}

SearchReport enumerate_min_length(const NumberSystem& system, const IntVec& target, std::size_t horizon, Mode mode) {
  if (target.size() != system.dimension()) throw InvalidInput("target dimension does not match the system");
  word_count(system, horizon);
  SearchReport report;
  report.target = target;
  report.horizon = horizon;
  const Int norm = target.norm();
  for (std::size_t k = 0; k <= horizon; ++k) {
    if (mode == Mode::exploration && norm_bound_constant(system, k) < norm) {
      report.counts_by_length[k] = 0;
      continue;
    }
    Int hits = 0;
    std::vector<DigitWord> found;
    for_each_word(system, k, [&](std::span<const std::int64_t> value, const DigitWord& w) {
      if (!matches(value, target)) return;
      ++hits;
      found.push_back(w);
    });
    report.counts_by_length[k] = hits;
    if (hits > 0) {
      report.min_length = k;
      sort_witnesses(found);
      report.witnesses = std::move(found);
      break;
    }
  }
  return report;
}

SearchReport enumerate_min_weight(const NumberSystem& system, const IntVec& target, std::size_t horizon) {
  if (target.size() != system.dimension()) throw InvalidInput("target dimension does not match the system");
  word_count(system, horizon);
  SearchReport report;
  report.target = target;
  report.horizon = horizon;
  std::size_t best_weight = std::numeric_limits<std::size_t>::max();
  std::size_t best_length = 0;
  for (std::size_t k = 0; k <= horizon; ++k) {
    Int hits = 0;
    for_each_word(system, k, [&](std::span<const std::int64_t> value, const DigitWord& w) {
      if (!matches(value, target)) return;
      ++hits;
      const std::size_t weight = w.weight();
      if (weight < best_weight) {
        best_weight = weight;
        best_length = k;
        report.witnesses.clear();
      }
      if (weight == best_weight && k == best_length) report.witnesses.push_back(w);
    });
    report.counts_by_length[k] = hits;
    if (hits > 0 && !report.min_length) report.min_length = k;
  }
  if (best_weight != std::numeric_limits<std::size_t>::max()) report.min_weight = best_weight;
  sort_witnesses(report.witnesses);
  return report;
}

NormBoundReport verify_norm_bound(const NumberSystem& system, std::size_t k) {
  NormBoundReport report;
  report.k = k;
  report.bound = norm_bound_constant(system, k);
  report.max_norm = 0;
  std::int64_t max_norm = 0;
  for_each_word(system, k, [&](std::span<const std::int64_t> value, const DigitWord&) {
    ++report.words;
    for (std::int64_t e : value) max_norm = std::max(max_norm, e < 0 ? -e : e);
  });
  report.max_norm = max_norm;
  // Same inequality read both ways: ||v|| <= c k^n, and k >= (||v|| / c)^(1/n).
  report.ok = report.max_norm <= report.bound;
  return report;
}

// Sweeps ---------------------------------------------------------------------

LengthSweep::LengthSweep(const NumberSystem& system, std::size_t horizon, bool keep_counts) : horizon_(horizon) {
  if (system.dimension() != 2) throw InvalidInput("LengthSweep supports two-dimensional systems only");
  if (keep_counts) counts_.resize(horizon + 1);
  for (std::size_t k = 0; k <= horizon; ++k) {
    for_each_word(system, k, [&](std::span<const std::int64_t> value, const DigitWord&) {
      const Point pt{value[0], value[1]};
      first_hit_.try_emplace(pt, k);
      if (keep_counts) ++counts_[k][pt];
    });
  }
}

std::optional<std::size_t> LengthSweep::min_length(std::int64_t a, std::int64_t b) const {
  auto it = first_hit_.find({a, b});
  if (it == first_hit_.end()) return std::nullopt;
  return it->second;
}

const std::map<Point, std::uint64_t>& LengthSweep::counts(std::size_t k) const {
  if (counts_.empty()) throw InvalidInput("LengthSweep was built without counts");
  return counts_.at(k);
}

WeightSweep::WeightSweep(const NumberSystem& system, std::size_t horizon) : horizon_(horizon) {
  if (system.dimension() != 2) throw InvalidInput("WeightSweep supports two-dimensional systems only");
  if (horizon > 4096) throw ResourceLimit("WeightSweep horizon too large");
  const auto columns = digit_columns(system, horizon);
  for (const auto& at_i : columns) {
    std::int64_t da = 0, db = 0;
    for (const auto& col : at_i) {
      da = std::max(da, col[0] < 0 ? -col[0] : col[0]);
      db = std::max(db, col[1] < 0 ? -col[1] : col[1]);
    }
    half_a_ += da;
    half_b_ += db;
  }
  const std::size_t cells = static_cast<std::size_t>(2 * half_a_ + 1) * static_cast<std::size_t>(2 * half_b_ + 1);
  if (cells > (std::size_t{1} << 28)) throw ResourceLimit("WeightSweep grid too large");

  constexpr std::uint16_t kUnreached = std::numeric_limits<std::uint16_t>::max();
  std::vector<std::uint16_t> current(cells, kUnreached);
  best_.assign(cells, kUnreached);
  current[index(0, 0)] = 0;
  best_[index(0, 0)] = 0;
  const auto& alphabet = system.alphabet();
  for (std::size_t i = 0; i < horizon; ++i) {
    std::vector<std::uint16_t> next(cells, kUnreached);
    for (std::int64_t b = -half_b_; b <= half_b_; ++b) {
      for (std::int64_t a = -half_a_; a <= half_a_; ++a) {
        const std::uint16_t w = current[index(a, b)];
        if (w == kUnreached) continue;
        for (std::size_t c = 0; c < alphabet.size(); ++c) {
          const auto& col = columns[i][c];
          const std::size_t at = index(a + col[0], b + col[1]);
          const auto nw = static_cast<std::uint16_t>(w + (alphabet[c] == Letter::z ? 0 : 1));
          next[at] = std::min(next[at], nw);
        }
      }
    }
    current = std::move(next);
    for (std::size_t at = 0; at < cells; ++at) best_[at] = std::min(best_[at], current[at]);
  }
}

std::size_t WeightSweep::index(std::int64_t a, std::int64_t b) const {
  return static_cast<std::size_t>(b + half_b_) * static_cast<std::size_t>(2 * half_a_ + 1) +
         static_cast<std::size_t>(a + half_a_);
}

std::optional<std::size_t> WeightSweep::min_weight(std::int64_t a, std::int64_t b) const {
  if (a < -half_a_ || a > half_a_ || b < -half_b_ || b > half_b_) return std::nullopt;
  const std::uint16_t w = best_[index(a, b)];
  if (w == std::numeric_limits<std::uint16_t>::max()) return std::nullopt;
  return w;
}

}  // namespace matnum::oracle
