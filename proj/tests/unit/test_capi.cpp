#include <string>

#include "doctest.h"
#include "genus_forge/genus_forge.h"
#include "json.hpp"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  gf_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("C API round trip") {
  gf_manifold* m = nullptr;
  REQUIRE(gf_manifold_parse("proj(tangent(cp(3)))", &m) == GF_OK);
  CHECK(gf_manifold_dim(m) == 5);

  char* s = nullptr;
  REQUIRE(gf_milnor(m, &s) == GF_OK);
  CHECK(take(s) == "20");

  REQUIRE(gf_chern_numbers(m, &s) == GF_OK);
  auto j = nlohmann::ordered_json::parse(take(s));
  CHECK(j["dim"] == 5);
  CHECK(j["numbers"].begin().key() == "c1^5");
  CHECK(j["numbers"]["c1^5"] == "4500");
  CHECK(j["numbers"]["c5"] == "12");

  REQUIRE(gf_eval(m, "chi_y", 0, &s) == GF_OK);
  CHECK(!take(s).empty());
  CHECK(gf_eval(m, "nope", 0, &s) == GF_ERR_ARGUMENT);
  CHECK(gf_eval(m, "psi", 3, &s) == GF_ERR_DOMAIN);
  gf_manifold_free(m);

  REQUIRE(gf_manifold_parse("cp(2)", &m) == GF_OK);
  REQUIRE(gf_eval(m, "psi", 0, &s) == GF_OK);
  CHECK(take(s) == "3/8*q1^2 - 1/2*q2");
  gf_manifold_free(m);
}

TEST_CASE("C API errors") {
  gf_manifold* m = nullptr;
  CHECK(gf_manifold_parse("proj(cp(2)", &m) == GF_ERR_PARSE);
  CHECK(m == nullptr);
  CHECK(gf_last_error_position() == 10);
  CHECK(std::string(gf_last_error()).find("missing ')'") != std::string::npos);
  CHECK(gf_manifold_parse(nullptr, &m) == GF_ERR_ARGUMENT);

  char* s = nullptr;
  int ok = -1;
  CHECK(gf_check("nope", nullptr, &s, &ok) == GF_ERR_ARGUMENT);
  CHECK(gf_check("gcd-odd", "{not json", &s, &ok) == GF_ERR_ARGUMENT);
  CHECK(gf_check("gcd-odd", "{\"m_from\": 5, \"m_to\": 40}", &s, &ok) == GF_ERR_DOMAIN);
  CHECK(gf_q_expansion(9, 4, &s) == GF_ERR_DOMAIN);
}

TEST_CASE("C API check") {
  char* s = nullptr;
  int ok = 0;
  REQUIRE(gf_check("gcd-even", "{\"m_from\": 3, \"m_to\": 6}", &s, &ok) == GF_OK);
  CHECK(ok == 1);
  auto items = nlohmann::json::parse(take(s));
  REQUIRE(items.size() == 4);
  for (const auto& it : items) {
    CHECK(it.contains("check"));
    CHECK(it.contains("params"));
    CHECK(it.contains("expected"));
    CHECK(it.contains("got"));
    CHECK(it["verdict"] == "pass");
  }
  REQUIRE(gf_q_expansion(1, 2, &s) == GF_OK);
  auto q = nlohmann::json::parse(take(s));
  CHECK(q["q^0"]["coeff_of"]["x^0"] == "1");
  CHECK(q["q^1"]["coeff_of"]["x^0"] == "0");
}
