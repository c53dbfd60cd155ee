#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "wreath/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = wreath::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json strip_elapsed(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  j.erase("elapsed_ms");
  return j;
}

} // namespace

TEST_CASE("aut commands") {
  auto r = call({"aut", "mul", "--d", "3", "--n", "2", "(0 1)", "((0 1),e,e)"});
  CHECK(r.code == 0);
  CHECK(r.out == "(e,(0 1),e)(0 1)\n");
  CHECK(call({"aut", "inv", "--d", "3", "--n", "1", "(0 1 2)"}).out == "(0 2 1)\n");
  CHECK(call({"aut", "sgn2", "--d", "3", "--n", "2", "((0 1),e,e)(0 1)"}).out == "1\n");
  CHECK(call({"aut", "act", "--d", "3", "--n", "2", "((0 1),e,e)", "00"}).out == "01\n");
  CHECK(call({"aut", "restrict", "--d", "3", "--n", "2", "--m", "1", "((0 1),e,e)(0 1 2)"}).out ==
        "(0 1 2)\n");
  CHECK(call({"aut", "order", "--d", "3", "--n", "3", "(0 1 2)"}).out == "3\n");
}

TEST_CASE("group, norm and belyi commands") {
  CHECK(call({"group", "order", "--d", "3", "--n", "3", "--family", "u"}).out == "1594323\n");
  CHECK(call({"group", "member", "--d", "3", "--n", "2", "--family", "E", "((0 1),e,e)(0 1)"}).out ==
        "member\n");
  CHECK(call({"norm", "decompose", "--d", "3", "--n", "3", "--family", "U", "((0 1),(0 1),(0 1))"}).out ==
        "(0,1,0)\n");
  CHECK(call({"belyi", "classify", "5:3,3,5"}).out == "family U, level-1 alternating\n");
  const auto q = nlohmann::json::parse(call({"belyi", "quotient", "--json", "3:2,2,3", "-9"}).out);
  CHECK(q["result"]["field"] == "Q(sqrt(-1))");
  CHECK(q["result"]["squarefree"] == "-1");
}

TEST_CASE("exit codes") {
  CHECK(call({}).code == 2);
  CHECK(call({"aut", "bogus"}).code == 2);
  CHECK(call({"verify", "no-such-suite"}).code == 2);
  CHECK(call({"aut", "mul", "--d", "3", "(0 3)"}).code == 2);
  CHECK(call({"group", "member", "--d", "3", "--n", "2", "(0 1)"}).code == 2);  // no family
  CHECK(call({"belyi", "validate", "4:3,3,3"}).code == 2);
  const std::vector<std::string> query = {"norm", "member", "--d", "3", "--n", "2", "--family", "U",
                                          "((0 1),e,e)"};
  CHECK(call(query).code == 0);
  auto strict = query;
  strict.push_back("--strict");
  CHECK(call(strict).code == 1);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("json reports") {
  const auto r = call({"verify", "subgroup-orders", "--d", "3", "--n", "2", "--json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"command", "parameters", "checks", "seed", "elapsed_ms", "version"});
  CHECK(j["checks"].size() > 0);
  const auto& counts = j["checks"][0]["counts"];
  CHECK(counts["W"] == 1296);
  CHECK(counts["E"] == 648);
  CHECK(counts["U"] == 81);
  for (const auto& c : j["checks"]) CHECK(c["passed"] == true);

  const auto big = nlohmann::json::parse(call({"group", "order", "--d", "5", "--n", "4", "--family", "W", "--json"}).out);
  CHECK(big["result"].is_string());
}

TEST_CASE("same seed gives identical reports") {
  const std::vector<std::string> args = {"verify", "prop-components", "--d", "3", "--n", "3",
                                         "--samples", "50", "--seed", "42", "--json"};
  CHECK(strip_elapsed(call(args).out) == strip_elapsed(call(args).out));
  const auto a = call({"verify", "sgn2-hom", "--d", "3", "--n", "3", "--samples", "50", "--seed", "1", "--json"});
  const auto b = call({"verify", "sgn2-hom", "--d", "3", "--n", "3", "--samples", "50", "--seed", "1", "--json"});
  CHECK(strip_elapsed(a.out) == strip_elapsed(b.out));
}
