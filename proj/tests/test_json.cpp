#include <doctest.h>

#include "lkb/detect.hpp"
#include "lkb/error.hpp"
#include "lkb/json_io.hpp"
#include "lkb/magnus.hpp"
#include "oracles.hpp"

using namespace lkb;

TEST_CASE("polynomial JSON layout") {
  CHECK(to_json(parse_laurent("1 - q - t + q*t")).dump() == "[[0,0,1],[1,0,-1],[0,1,-1],[1,1,1]]");
  CHECK(to_json(LaurentPoly()).dump() == "[]");
}

TEST_CASE("polynomial JSON round trip is byte identical") {
  std::mt19937 rng(oracle::seed(81));
  for (int it = 0; it < 50; ++it) {
    const LaurentPoly p = oracle::random_poly(rng, 5, 4);
    const std::string text = to_json(p).dump();
    const LaurentPoly back = laurent_from_json(Json::parse(text));
    CHECK(back == p);
    CHECK(to_json(back).dump() == text);
  }
}

TEST_CASE("coefficients beyond 64 bits are strings") {
  LaurentPoly p = LaurentPoly(1) + LaurentPoly::q();
  LaurentPoly big = LaurentPoly(1);
  for (int k = 0; k < 80; ++k) big = big * p;
  const Json j = to_json(big);
  bool has_string = false;
  for (const auto& t : j) has_string = has_string || t[2].is_string();
  CHECK(has_string);
  CHECK(laurent_from_json(j) == big);
  CHECK(to_json(laurent_from_json(j)).dump() == j.dump());
}

TEST_CASE("matrix JSON round trip") {
  std::mt19937 rng(oracle::seed(82));
  for (int it = 0; it < 10; ++it) {
    const PolyMatrix m = tau(oracle::random_braid(rng, 4, 5));
    const std::string text = to_json(m).dump();
    CHECK(matrix_from_json(Json::parse(text)) == m);
    CHECK(to_json(matrix_from_json(Json::parse(text))).dump() == text);
  }
}

TEST_CASE("malformed JSON is rejected") {
  CHECK_THROWS_AS(laurent_from_json(Json::parse("{\"a\":1}")), ParseError);
  CHECK_THROWS_AS(laurent_from_json(Json::parse("[[1,2]]")), ParseError);
  CHECK_THROWS_AS(laurent_from_json(Json::parse("[[1,2,1.5]]")), ParseError);
  CHECK_THROWS_AS(matrix_from_json(Json::parse("[[[]],[[],[]]]")), DimensionError);
}

TEST_CASE("detection result keys") {
  DetectionResult r = detect_reducing(parse_braid("-2 -2 -1 -2 -3 2 2 2 1 2 3", 4), {0});
  const Json j = to_json(r);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"found", "kind", "witness_words", "witness_braids", "rewritten_braid",
                                         "depth_searched"});
  CHECK(j["found"] == true);
  CHECK(j["kind"] == "reduce_negative");
  CHECK(j["witness_words"][0] == "x3");
  CHECK(j["rewritten_braid"].is_null());
  CHECK(j["depth_searched"] == 0);
}
