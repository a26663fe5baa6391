#include <doctest.h>

#include "lkb/error.hpp"
#include "lkb/words.hpp"
#include "oracles.hpp"

using namespace lkb;

namespace {
const char* kBeta2 = "-2 -2 -1 -2 -3 2 2 2 1 2 3";
const char* kBeta1 = "-2 -2 -1 -2 3 2 2 2 1 2 -3";
}  // namespace

TEST_CASE("parse_braid accepts integer and symbolic forms") {
  const BraidWord b = parse_braid(kBeta2, 4);
  CHECK(b.size() == 11);
  CHECK(format_braid(b) == kBeta2);
  CHECK(parse_braid("s2^-2 s1^-1 s2^-1 s3^-1 s2^3 s1 s2 s3", 4) == b);
  CHECK(parse_braid("-2,-2,-1,-2,-3,2,2,2,1,2,3", 4) == b);
  CHECK(parse_braid("", 3).empty());
  CHECK(parse_braid("1 -1", 2).empty());
  CHECK(parse_braid("1 2 -2 -1 3", 4) == parse_braid("3", 4));
}

TEST_CASE("parse_braid rejects bad input") {
  CHECK_THROWS_AS(parse_braid("4", 4), DimensionError);
  CHECK_THROWS_AS(parse_braid("0", 4), ParseError);
  CHECK_THROWS_AS(parse_braid("1 a", 4), ParseError);
  CHECK_THROWS_AS(parse_braid("--1", 4), ParseError);
}

TEST_CASE("parse_free and format_free round trip") {
  const FreeWord w = parse_free("x2 x4 x2^-1", 4);
  CHECK(format_free(w) == "x2x4x2^-1");
  CHECK(parse_free("x2x4x2^-1", 4) == w);
  CHECK(parse_free("1", 4).empty());
  CHECK(parse_free("x1 x1^-1", 2).empty());
  CHECK(format_free(parse_free("x1^3", 2)) == "x1x1x1");
  CHECK_THROWS_AS(parse_free("x5", 4), DimensionError);
  CHECK_THROWS_AS(parse_free("y1", 4), ParseError);
}

TEST_CASE("normalization is idempotent") {
  std::mt19937 rng(oracle::seed(11));
  for (int it = 0; it < 100; ++it) {
    const BraidWord b = oracle::random_braid(rng, 5, 12);
    CHECK(BraidWord(5, b.letters()) == b);
    CHECK(parse_braid(format_braid(b), 5) == b);
    const FreeWord w = oracle::random_free(rng, 5, 12);
    CHECK(FreeWord(5, w.letters()) == w);
    CHECK(parse_free(format_free(w), 5) == w);
  }
}

TEST_CASE("generator action") {
  const FreeWord x1 = FreeWord::generator(2, 1), x2 = FreeWord::generator(2, 2);
  const BraidWord s1 = BraidWord::generator(2, 1);
  CHECK(act(s1, x1) == x2);
  CHECK(format_free(act(s1, x2)) == "x2^-1x1x2");
  CHECK(act(s1.inverse(), act(s1, x2)) == x2);
}

TEST_CASE("reference braids") {
  CHECK(format_free(act(parse_braid(kBeta2, 4), parse_free("x3", 4))) == "x1");
  CHECK(format_free(act(parse_braid(kBeta1, 4), parse_free("x1x2x3x2^-1x1^-1", 4))) == "x1x2x3x1x3^-1x2^-1x1^-1");
}

TEST_CASE("y basis words") {
  CHECK(format_free(y_basis_word(1, 3)) == "x1^-1");
  CHECK(format_free(y_basis_word(2, 4)) == "x1x2^-1x1^-1");
  CHECK(format_free(y_basis_word(3, 4)) == "x1x2x3^-1x2^-1x1^-1");
  CHECK_THROWS_AS(y_basis_word(5, 4), DimensionError);
  // y_1 ... y_i = (x_1 ... x_i)^-1
  for (int i = 0; i <= 4; ++i) {
    FreeWord prod(4);
    for (int k = 1; k <= i; ++k) prod = prod * y_basis_word(k, 4);
    CHECK(prod == x_prefix(i, 4).inverse());
  }
}

TEST_CASE("exponent sum") {
  int count = 0;
  const BraidWord b = parse_braid(kBeta2, 4);
  for (const auto& l : b.letters()) count += l.sign;
  CHECK(exponent_sum(b) == count);
  CHECK(exponent_sum(b) == 1);
  CHECK(exponent_sum(BraidWord(3)) == 0);
  CHECK(exponent_sum(parse_braid("1 1 1", 2)) == 3);
}

TEST_CASE("action agrees with letter-by-letter substitution") {
  std::mt19937 rng(oracle::seed(12));
  for (int it = 0; it < 200; ++it) {
    const int n = 2 + it % 4;
    const BraidWord b = oracle::random_braid(rng, n, 8);
    const FreeWord w = oracle::random_free(rng, n, 8);
    CHECK(act(b, w) == oracle::act_by_letters(b, w));
  }
}

TEST_CASE("action is an automorphism") {
  std::mt19937 rng(oracle::seed(13));
  for (int it = 0; it < 200; ++it) {
    const int n = 2 + it % 4;
    const BraidWord b = oracle::random_braid(rng, n, 10);
    const FreeWord u = oracle::random_free(rng, n, 10), v = oracle::random_free(rng, n, 10);
    CHECK(act(b, u * v) == act(b, u) * act(b, v));
    CHECK(act(b, u.inverse()) == act(b, u).inverse());
    CHECK(act(b.inverse(), act(b, u)) == u);
  }
}

TEST_CASE("action respects braid relations") {
  for (int n = 3; n <= 5; ++n)
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j) {
        const BraidWord si = BraidWord::generator(n, i), sj = BraidWord::generator(n, j);
        for (int k = 1; k <= n; ++k) {
          const FreeWord x = FreeWord::generator(n, k);
          if (std::abs(i - j) == 1)
            CHECK(act(si * sj * si, x) == act(sj * si * sj, x));
          else if (std::abs(i - j) >= 2)
            CHECK(act(si * sj, x) == act(sj * si, x));
        }
      }
}

TEST_CASE("boundary word is fixed") {
  std::mt19937 rng(oracle::seed(14));
  for (int it = 0; it < 100; ++it) {
    const int n = 2 + it % 4;
    CHECK(act(oracle::random_braid(rng, n, 12), x_prefix(n, n)) == x_prefix(n, n));
  }
}

TEST_CASE("action composes") {
  std::mt19937 rng(oracle::seed(15));
  for (int it = 0; it < 100; ++it) {
    const int n = 2 + it % 4;
    const BraidWord a = oracle::random_braid(rng, n, 6), b = oracle::random_braid(rng, n, 6);
    const FreeWord w = oracle::random_free(rng, n, 6);
    CHECK(act(a * b, w) == act(a, act(b, w)));
  }
}

TEST_CASE("free word concatenation is associative") {
  std::mt19937 rng(oracle::seed(16));
  for (int it = 0; it < 100; ++it) {
    const FreeWord a = oracle::random_free(rng, 3, 6), b = oracle::random_free(rng, 3, 6), c = oracle::random_free(rng, 3, 6);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("dimension checks") {
  CHECK_THROWS_AS(act(BraidWord(3), FreeWord(4)), DimensionError);
  CHECK_THROWS_AS(BraidWord(3) * BraidWord(4), DimensionError);
  CHECK_THROWS_AS(FreeWord(3) * FreeWord(4), DimensionError);
}

TEST_CASE("permutation") {
  CHECK(permutation(BraidWord(3)) == std::vector<int>{1, 2, 3});
  CHECK(permutation(parse_braid("1", 3)) == std::vector<int>{2, 1, 3});
  CHECK(permutation(parse_braid("1 1", 3)) == std::vector<int>{1, 2, 3});
  CHECK(permutation(parse_braid("1 2", 3)) == std::vector<int>{3, 1, 2});
}
