#include <map>

#include "doctest.h"
#include "json.hpp"
#include "matnum/counting.hpp"
#include "matnum/j2_minus_one.hpp"
#include "matnum/j2_plus_one.hpp"
#include "naive.hpp"

using namespace matnum;
using counting::Exponent;

namespace {

std::map<std::pair<std::int64_t, std::int64_t>, std::uint64_t> brute(const std::string& alphabet, int eig,
                                                                     std::size_t k) {
  std::map<std::pair<std::int64_t, std::int64_t>, std::uint64_t> out;
  for (const std::string& s : naive::all_words(alphabet, k)) {
    const naive::Vec v = naive::value(2, eig, s);
    ++out[{v[0], v[1]}];
  }
  return out;
}

}  // namespace

TEST_CASE("small tables") {
  const auto one = counting::count_table_j2p1(1);
  CHECK(one.support_size() == 2);
  CHECK(one.coefficient(0, 1) == 1);
  CHECK(one.coefficient(0, -1) == 1);
  CHECK(counting::count_table_j2p1(2).coefficient(0, 0) == 0);
  CHECK(counting::count_table_j2p1(6).coefficient(13, 2) == 1);
  const auto m1 = counting::count_table_j2m1(1);
  CHECK(m1.support_size() == 2);
  CHECK(m1.coefficient(0, 0) == 1);
  CHECK(m1.coefficient(0, 1) == 1);
  CHECK(counting::count_table_j2m1(5).coefficient(0, 0) == 2);
  // Reference brute force: (3, 1) has exactly one word of length 6.
  CHECK(counting::count_table_j2m1(6).coefficient(3, 1) == 1);
  CHECK(counting::count_table_j2m1(6).coefficient(0, 0) == 3);
  CHECK(counting::count_table_j2p1(8).coefficient(0, 0) == 8);
  CHECK(counting::count_table_j2p1(0) == counting::LaurentTable::one());
}

TEST_CASE("count_reps") {
  const NumberSystem plus = NumberSystem::j2_plus_one();
  const NumberSystem minus = NumberSystem::j2_minus_one();
  CHECK(counting::count_reps(plus, 0, 1, 1) == 1);
  CHECK(counting::count_reps(plus, 0, 0, 2) == 0);
  CHECK(counting::count_reps(minus, 0, 0, 5) == 2);
  CHECK_THROWS_AS(counting::count_reps(NumberSystem::jn_minus_one(3), 0, 0, 2), InvalidInput);
}

TEST_CASE("tables equal brute-force counts up to length 12") {
  for (std::size_t k = 0; k <= 12; ++k) {
    for (const auto& [alphabet, eig] : {std::pair<std::string, int>{"pm", 1}, {"pz", -1}}) {
      const auto table = eig == 1 ? counting::count_table_j2p1(k) : counting::count_table_j2m1(k);
      const auto expected = brute(alphabet, eig, k);
      REQUIRE(table.support_size() == expected.size());
      for (const auto& [pt, c] : expected) REQUIRE(table.coefficient(pt.first, pt.second) == c);
    }
  }
}

TEST_CASE("mass is 2^k up to 40") {
  for (std::uint64_t k = 0; k <= 40; ++k) {
    const Int expected = Int(1) << static_cast<unsigned>(k);
    REQUIRE(counting::count_table_j2p1(k).mass() == expected);
    REQUIRE(counting::count_table_j2m1(k).mass() == expected);
  }
}

TEST_CASE("j2p1 tables are symmetric and within the support bounds") {
  for (std::int64_t k = 0; k <= 24; ++k) {
    const auto t = counting::count_table_j2p1(static_cast<std::uint64_t>(k));
    for (const auto& [e, c] : t.terms()) {
      REQUIRE(c > 0);
      REQUIRE(t.coefficient(-e.x, -e.t) == c);
      REQUIRE(std::abs(e.t) <= k);
      REQUIRE(std::abs(e.x) <= k * (k - 1) / 2);
    }
  }
}

TEST_CASE("counts vanish below the minimal length and not at it") {
  const NumberSystem plus = NumberSystem::j2_plus_one();
  const NumberSystem minus = NumberSystem::j2_minus_one();
  std::vector<counting::LaurentTable> tp, tm;
  for (std::uint64_t k = 0; k <= 16; ++k) {
    tp.push_back(counting::count_table(plus, k));
    tm.push_back(counting::count_table(minus, k));
  }
  for (int b = -5; b <= 5; ++b)
    for (int a = -30; a <= 30; ++a) {
      const Int hp = j2p1::min_length(a, b), hm = j2m1::min_length(a, b);
      for (std::uint64_t k = 0; k <= 16; ++k) {
        if (Int(k) < hp) REQUIRE(tp[k].coefficient(a, b) == 0);
        if (Int(k) == hp) REQUIRE(tp[k].coefficient(a, b) >= 1);
        if (Int(k) < hm) REQUIRE(tm[k].coefficient(a, b) == 0);
        if (Int(k) == hm) REQUIRE(tm[k].coefficient(a, b) >= 1);
      }
    }
}

TEST_CASE("multiplication by a binomial factor") {
  const auto t = counting::LaurentTable::one().times_binomial({0, 1}, {0, -1}).times_binomial({1, 1}, {-1, -1});
  CHECK(t == counting::count_table_j2p1(2));
  CHECK(t.coefficient(1, 2) == 1);
  CHECK(t.coefficient(-1, 0) == 1);
  CHECK(t.coefficient(1, 0) == 1);
  CHECK(t.coefficient(-1, -2) == 1);
}

TEST_CASE("exponent overflow is reported") {
  const auto t = counting::LaurentTable::one().times_binomial({INT64_MAX, 0}, {0, 0});
  CHECK_THROWS_AS(t.times_binomial({1, 0}, {0, 0}), ResourceLimit);
}

TEST_CASE("csv and json export") {
  const auto t = counting::count_table_j2m1(2);
  CHECK(t.to_csv() == "a,b,count\n1,-1,1\n0,0,1\n1,0,1\n0,1,1\n");
  const auto doc = nlohmann::json::parse(t.to_json("j2m1", 2));
  CHECK(doc["schema"] == 1);
  CHECK(doc["kind"] == "counts");
  CHECK(doc["system"] == "j2m1");
  CHECK(doc["mass"] == "4");
  CHECK(doc["rows"].size() == 4);
  CHECK(doc["rows"][0]["a"] == 1);
  CHECK(doc["rows"][0]["b"] == -1);
  CHECK(doc["rows"][0]["count"] == "1");
}
