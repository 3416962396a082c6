#include <random>

#include "doctest.h"
#include "matnum/j2_plus_one.hpp"
#include "matnum/oracle.hpp"
#include "naive.hpp"

using namespace matnum;

TEST_CASE("extremal values") {
  const j2p1::ExtremalPair e = j2p1::extremal(2, 2);
  CHECK(e.max_a == 13);
  CHECK(e.min_a == -3);
  CHECK(e.max_word().str() == "ppppmm");
  CHECK(e.min_word().str() == "mmpppp");
  CHECK(evaluate_fast_j2p1(e.min_word()) == IntVec::of({-3, 2}));
  CHECK(j2p1::extremal(2, 0).max_a == 1);
  CHECK(j2p1::extremal(2, 0).min_a == 1);
  CHECK(j2p1::extremal(0, 0).max_a == 0);
  CHECK(j2p1::extremal(0, 0).min_a == 0);
  CHECK_THROWS_AS(j2p1::extremal(-1, 0), InvalidInput);
}

TEST_CASE("extremes are monotone and alternate in parity") {
  for (int b = 0; b <= 10; ++b)
    for (int ell = 0; ell < 100; ++ell) {
      const auto e0 = j2p1::extremal(b, ell), e1 = j2p1::extremal(b, ell + 1);
      REQUIRE(e1.max_a > e0.max_a);
      REQUIRE(e1.min_a < e0.min_a);
      REQUIRE(is_even(e1.max_a) != is_even(e0.max_a));
      if (ell < 8) {
        REQUIRE(evaluate_fast_j2p1(e0.max_word()) == IntVec{e0.max_a, Int(b)});
        REQUIRE(evaluate_fast_j2p1(e0.min_word()) == IntVec{e0.min_a, Int(b)});
      }
    }
}

TEST_CASE("minimal length examples") {
  CHECK(j2p1::min_length(13, 2) == 6);
  CHECK(j2p1::min_length(1, 2) == 2);
  CHECK(j2p1::min_length(0, 0) == 0);
  CHECK(j2p1::min_length(10, 5) == 5);
  CHECK(j2p1::min_length(-13, -2) == 6);
  // Reference brute force: (3, 0) has three shortest words, all of length 6.
  CHECK(j2p1::min_length(3, 0) == 6);
}

TEST_CASE("minimal length agrees with exhaustive search up to length 14") {
  const oracle::LengthSweep sweep(NumberSystem::j2_plus_one(), 14);
  for (const auto& [pt, k] : sweep.reached()) REQUIRE(j2p1::min_length(pt.first, pt.second) == Int(k));
  for (int b = -6; b <= 6; ++b)
    for (int a = -40; a <= 40; ++a)
      if (j2p1::min_length(a, b) <= 14) REQUIRE(sweep.min_length(a, b).has_value());
}

TEST_CASE("witness examples") {
  const DigitWord w = j2p1::witness(11, 2);
  CHECK(w.size() == 6);
  CHECK(evaluate_fast_j2p1(w) == IntVec::of({11, 2}));
  CHECK(w.str() == "pppmpm");
  CHECK(j2p1::witness(-13, -2).str() == "mmmmpp");
  CHECK(j2p1::witness(0, 0).empty());
  const DigitWord three = j2p1::witness(3, 0);
  CHECK(three.size() == 6);
  const std::vector<std::string> shortest{"mpppmm", "pmpmpm", "ppmmmp"};
  CHECK(std::find(shortest.begin(), shortest.end(), three.str()) != shortest.end());
}

TEST_CASE("witnesses are shortest and exact on a grid and at random") {
  for (int b = -12; b <= 12; ++b)
    for (int a = -200; a <= 200; ++a) {
      const DigitWord w = j2p1::witness(a, b);
      REQUIRE(evaluate(NumberSystem::j2_plus_one(), w) == IntVec::of({a, b}));
      REQUIRE(Int(w.size()) == j2p1::min_length(a, b));
    }
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long long> da(-1000000, 1000000), db(-1000, 1000);
  for (int i = 0; i < 500; ++i) {
    const long long a = da(rng), b = db(rng);
    const DigitWord w = j2p1::witness(a, b);
    REQUIRE(evaluate_fast_j2p1(w) == IntVec::of({a, b}));
    REQUIRE(Int(w.size()) == j2p1::min_length(a, b));
  }
}

TEST_CASE("witness follows the swap descent") {
  // Closed-form witness equals the word reached by explicit swaps.
  for (int b = 0; b <= 4; ++b)
    for (int ell = 0; ell <= 5; ++ell) {
      const auto e = j2p1::extremal(b, ell);
      DigitWord w = e.max_word();
      for (Int a = e.max_a;; a -= 2) {
        if (j2p1::least_m_count(a, b) == ell) REQUIRE(j2p1::witness(a, b) == w);
        if (!j2p1::swap_once(w)) break;
      }
    }
}

TEST_CASE("swap descent reproduces the b = 2, ell = 2 table") {
  const auto rows = j2p1::swap_descent(2, 2);
  const std::vector<std::pair<std::string, long long>> expected{
      {"ppppmm", 13}, {"pppmpm", 11}, {"pppmmp", 9}, {"ppmpmp", 7}, {"ppmmpp", 5}, {"pmpmpp", 3}, {"pmmppp", 1}};
  REQUIRE(rows.size() == expected.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].word.str() == expected[i].first);
    CHECK(rows[i].value == IntVec::of({expected[i].second, 2}));
  }
  // Erasing the leading pmmp, which is zero, leaves pp.
  CHECK(evaluate_fast_j2p1(DigitWord::parse("pmmp")).is_zero());
}

TEST_CASE("one swap moves the value by (-2, 0)") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<Letter> d(1 + trial % 30);
    for (Letter& l : d) l = (rng() & 1) ? Letter::p : Letter::m;
    DigitWord w(d);
    const IntVec before = evaluate_fast_j2p1(w);
    if (j2p1::swap_once(w)) REQUIRE(evaluate_fast_j2p1(w) == before + IntVec::of({-2, 0}));
    else REQUIRE(w.str().find("pm") == std::string::npos);
  }
}

TEST_CASE("parity of m-count, exhaustively to length 14") {
  for (std::size_t k = 0; k <= 14; ++k)
    for (const std::string& s : naive::all_words("pm", k)) {
      const DigitWord w = DigitWord::parse(s);
      const IntVec v = evaluate_fast_j2p1(w);
      const Int c = v[0] - v[1] * (v[1] - 1) / 2;
      REQUIRE(is_even(c) == (w.count(Letter::m) % 2 == 0));
    }
}
