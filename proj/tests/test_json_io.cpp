#include "doctest.h"

#include "cluster_roots/errors.hpp"
#include "cluster_roots/json_io.hpp"
#include "cluster_roots/presets.hpp"

using namespace cluster_roots;

TEST_CASE("quiver documents") {
  ExchangeMatrix markov = from_arrows(presets::markov());
  CHECK(parse_quiver_text(R"({"n":3,"arrows":[[1,2,2],[2,3,2],[3,1,2]]})") == markov);
  CHECK(parse_quiver_text(R"({"matrix":[[0,2,-2],[-2,0,2],[2,-2,0]]})") == markov);
  CHECK(parse_quiver_text(R"({"n":2,"arrows":[[1,2]]})") == from_arrows(presets::a2()));
  CHECK(parse_quiver_text(R"({"n":2,"arrows":[]})").matrix() == IntMatrix(2, 2));
}

TEST_CASE("malformed quiver documents") {
  for (const char* bad : {"", "[]", "{}", "{\"n\":2}", R"({"n":2,"arrows":[[1]]})", R"({"n":2,"arrows":[[1,1]]})",
                          R"({"n":2,"arrows":[[1,2],[2,1]]})", R"({"n":"2","arrows":[]})",
                          R"({"matrix":[[0,1],[1,0]]})", R"({"matrix":[[0,1]]})", R"({"n":2,"arrows":[[1,2,1.5]]})",
                          "{not json"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_quiver_text(bad), InvalidQuiver);
  }
}

TEST_CASE("integer lists") {
  CHECK(parse_int_list("1,2,1") == std::vector<std::int64_t>{1, 2, 1});
  CHECK(parse_int_list("1 2 1") == std::vector<std::int64_t>{1, 2, 1});
  CHECK(parse_int_list("[1,2,1]") == std::vector<std::int64_t>{1, 2, 1});
  CHECK(parse_int_list("-3, 4") == std::vector<std::int64_t>{-3, 4});
  CHECK(parse_int_list("").empty());
  CHECK_THROWS_AS(parse_int_list("1,x"), std::invalid_argument);
}

TEST_CASE("seed documents keep a stable key order") {
  Seed s = mutate(initial_seed(from_arrows(presets::a2())), 1);
  CHECK(seed_to_json(s).dump() ==
        R"({"word":[1],"b":[[0,-1],[1,0]],"c":[[-1,1],[0,1]],"g":[[-1,0],[1,1]],)"
        R"("c_vectors":[[-1,0],[1,1]],"g_vectors":[[-1,1],[0,1]]})");
}

TEST_CASE("vector and matrix round-trips") {
  IntMatrix m{{1, -2}, {3, 4}};
  CHECK(matrix_from_json(to_json(m)) == m);
  IntVector v{4, 4, 4};
  CHECK(vector_from_json(to_json(v)) == v);
  CHECK_THROWS(vector_from_json(Json::parse(R"(["a"])")));
}
