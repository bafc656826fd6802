#include <motzeta/errors.hpp>
#include <motzeta/io.hpp>

#include <doctest.h>

using namespace motzeta;

TEST_CASE("fan JSON parsing") {
  const Fan f = fan_from_json(R"({"rank": 1, "rays": [[1], [-1]], "max_cones": [[0], [1]]})");
  CHECK(f.rank() == 1);
  CHECK(f.num_rays() == 2);
  CHECK(fan_from_json(R"({"fan": {"rank": 1, "rays": [[1], [-1]], "max_cones": [[0], [1]]}})")
            .rays() == f.rays());

  CHECK_THROWS_WITH(fan_from_json("{\n  \"rank\": 2,\n  \"rays\": [[1,0]]\n  \"max_cones\": []\n}"),
                    doctest::Contains("line 4"));
  CHECK_THROWS_WITH(fan_from_json(R"({"rays": [], "max_cones": []})"),
                    doctest::Contains("\"rank\""));
  CHECK_THROWS_WITH(fan_from_json(R"({"rank": 2, "rays": [[1, 0.5]], "max_cones": [[0]]})"),
                    doctest::Contains("must be an integer"));
  CHECK_THROWS_AS(fan_from_json("[1, 2]"), InputError);
  CHECK_THROWS_AS(load_fan_file("/nonexistent/fan.json"), InputError);
}

TEST_CASE("fan JSON round trip") {
  for (const auto& name : bundled_fan_names()) {
    const Fan f = builtin_fan(name);
    const std::string s = fan_to_json(f);
    const Fan g = fan_from_json(s);
    CHECK(g.rays() == f.rays());
    CHECK(g.max_cones() == f.max_cones());
    CHECK(fan_to_json(g) == s);
  }
}

TEST_CASE("formats") {
  CHECK(parse_format("csv") == Format::csv);
  CHECK(parse_format("json") == Format::json);
  CHECK_THROWS_AS(parse_format("xml"), InputError);

  const auto hs = height_series(projective_space_fan(1), 2);
  const std::string text = heights_report(hs, {2}, Format::text);
  CHECK(text.find("d=0  n=1  [U] = L - 1  @2=1") != std::string::npos);
  CHECK(text.find("d=2  n=1  [U] = L^3 - L  @2=6") != std::string::npos);
  const std::string csv = heights_report(hs, {2, 3}, Format::csv);
  CHECK(csv.rfind("d,n,vdim,class,at_2,at_3\n", 0) == 0);
  CHECK(csv.find("2,1,3,\"L^3 - L\",6,24") != std::string::npos);
  const std::string js = heights_report(hs, {}, Format::json);
  CHECK(js.find("\"vdim\": null") != std::string::npos);

  const auto mu = mobius_table(ObstructionSet(2, {0b11}), 2);
  const std::string mcsv = mobius_table_csv(mu);
  CHECK(mcsv.rfind("e_0,e_1,mu\n", 0) == 0);
  CHECK(mcsv.find("1,1,\"-L - 1\"") != std::string::npos);
  CHECK(mobius_table_json(mu).find("\"trunc\": 2") != std::string::npos);
}
