#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "lkb/json_io.hpp"
#include "lkb/magnus.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(LKB_BIN) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const std::string kBeta2 = "\"-2 -2 -1 -2 -3 2 2 2 1 2 3\"";
const std::string kMorton = "\"-2 -2 1 -2 3 2 2 2 -1 2 -3\"";

}  // namespace

TEST_CASE("act and fox") {
  Run r = run("act -n 4 " + kBeta2 + " x3");
  CHECK(r.code == 0);
  CHECK(r.out == "x1\n");
  r = run("fox -n 4 --basis x x2x4x2^-1");
  CHECK(r.code == 0);
  CHECK(r.out == "e2*(-x2^-1 + x4x2^-1) + e4*x2^-1\n");
}

TEST_CASE("reducing detection exit codes") {
  Run r = run("detect-reduce -n 4 --depth 0 " + kBeta2);
  CHECK(r.code == 0);
  CHECK(r.out.find("reduce_negative") != std::string::npos);
  CHECK(r.out.find("x3") != std::string::npos);
  r = run("detect-reduce -n 4 --depth 1 " + kMorton);
  CHECK(r.code == 10);
  CHECK(r.out.find("not found") != std::string::npos);
}

TEST_CASE("exchange detection with rewrite") {
  const Run r = run("detect-exchange -n 4 --depth 2 --rewrite --json " + kMorton);
  CHECK(r.code == 0);
  const lkb::Json j = lkb::Json::parse(r.out);
  CHECK(j["found"] == true);
  CHECK(j["kind"] == "exchange");
  REQUIRE(j["rewritten_braid"].is_string());
  CHECK(lkb::is_identity(lkb::parse_braid(j["rewritten_braid"].get<std::string>(), 4) *
                         lkb::parse_braid("-2 -2 1 -2 -3 2 2 2 -1 2 3", 4).inverse()));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("act -n 4 \"5\" x1").code == 2);
  CHECK(run("fox -n 2 x3").code == 2);
  CHECK(run("fox -n 2 --basis z x1").code == 2);
  CHECK(run("pair -n 4 --y x1").code == 2);
  CHECK(run("no-such-command").code == 2);
}

TEST_CASE("matrix JSON round trips through the library") {
  const Run r = run("matrix -n 4 --rep tau --json \"1 -2 x3\"");
  CHECK(r.code == 0);
  const lkb::PolyMatrix m = lkb::matrix_from_json(lkb::Json::parse(r.out));
  CHECK(m == lkb::tau(lkb::parse_b1n("1 -2 x3", 4)));
  CHECK(lkb::to_json(m).dump() + "\n" == r.out);
}

TEST_CASE("identity and entries") {
  Run r = run("is-identity -n 3 \"1 2 1 -2 -1 -2\"");
  CHECK(r.code == 0);
  CHECK(r.out == "true\n");
  r = run("is-identity -n 3 \"1 2\"");
  CHECK(r.out == "false\n");
  r = run("entry -n 4 --i 2 --j 3 " + kBeta2);
  CHECK(r.code == 0);
  CHECK(r.out == "0\n");
}

TEST_CASE("simple class listing") {
  const Run r = run("enumerate-simple -n 2 --depth 1 --json");
  CHECK(r.code == 0);
  const lkb::Json j = lkb::Json::parse(r.out);
  REQUIRE(j.size() == 4);
  CHECK(j[2]["word"] == "x2^-1x1x2");
  CHECK(j[3]["word"] == "x1x2x1^-1");
}
