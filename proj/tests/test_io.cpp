#include <doctest.h>

#include <sstream>

#include "coarsedim/error.hpp"
#include "coarsedim/io.hpp"

using namespace coarsedim;

TEST_CASE("ordinal JSON") {
  CHECK(ordinalToJson(Ordinal{}) == Json(0));
  CHECK(ordinalToJson(Ordinal::natural(3)).dump() == R"([{"exp":0,"coef":3}])");
  CHECK(ordinalToJson(Ordinal::omega()).dump() == R"([{"exp":[{"exp":0,"coef":1}],"coef":1}])");
  CHECK(ordinalFromJson(Json(5)) == Ordinal::natural(5));
  CHECK(ordinalFromJson(Json("w")) == Ordinal::omega());
  CHECK(ordinalFromJson(Json::parse(R"([{"exp":"w","coef":2},{"exp":1}])")) ==
        Ordinal::parse("w^w*2+w"));
  for (const char* text : {"0", "1", "w", "w^2*3+w+1", "w^(w+1)*2+w^w+4"}) {
    const Ordinal x = Ordinal::parse(text);
    CHECK(ordinalFromJson(ordinalToJson(x)) == x);
  }
  CHECK_THROWS_AS(ordinalFromJson(Json(-1)), ParseError);
  CHECK_THROWS_AS(ordinalFromJson(Json::parse(R"([{"exp":0,"coef":1},{"exp":1,"coef":1}])")), ParseError);
  CHECK_THROWS_AS(ordinalFromJson(Json::parse(R"([{"coef":1}])")), ParseError);
  CHECK_THROWS_AS(ordinalFromJson(Json("w^")), ParseError);
}

TEST_CASE("family JSON") {
  const ExplicitFamily f{{1, 3}, {2}};
  CHECK(familyToJson(f).dump() == R"({"members":[[1,3],[2]]})");
  CHECK(familyFromJson(familyToJson(f)) == f);
  CHECK(familyFromJson(Json::parse(R"({"members":[]})")).empty());
  CHECK_THROWS_AS(familyFromJson(Json::parse(R"({"members":[[0]]})")), ParseError);
  CHECK_THROWS_AS(familyFromJson(Json::parse(R"({"members":[[]]})")), ParseError);
  CHECK_THROWS_AS(familyFromJson(Json::parse(R"({"sets":[]})")), ParseError);
}

TEST_CASE("sets, labels and boxes") {
  CHECK(parseFinSet("2,3,4") == FinSet{2, 3, 4});
  CHECK(parseTau("2,3") == TauLabel{2, 3});
  const Box box = parseBox("0:8,-4:4");
  REQUIRE(box.size() == 2);
  CHECK(box[1].lo == -4);
  CHECK(box[1].hi == 4);
  CHECK_THROWS_AS(parseFinSet("2,,3"), ParseError);
  CHECK_THROWS_AS(parseTau("1,2"), ParseError);
  CHECK_THROWS_AS(parseBox("0-8"), ParseError);
}

TEST_CASE("point CSV") {
  std::istringstream in("# comment\n2,3;0;1\n\n2;5\r\n");
  const auto pts = readPointsCsv(in);
  REQUIRE(pts.size() == 2);
  CHECK(pts[0] == LatticePoint({2, 3}, {0, 1}));
  CHECK(pts[1] == LatticePoint({2}, {5}));
  std::ostringstream out;
  writePointsCsv(out, pts);
  CHECK(out.str() == "2,3;0;1\n2;5\n");
  std::istringstream bad("2,3;1;1\n");
  CHECK_THROWS_AS(readPointsCsv(bad), ParseError);
  std::istringstream garbage("2;x\n");
  CHECK_THROWS_AS(readPointsCsv(garbage), ParseError);
}

TEST_CASE("cover JSON round trip") {
  const CoverSpec spec{{{{LatticePoint({2}, {0}), LatticePoint({2}, {1})}, {LatticePoint({2}, {8})}}, {}}, {4, 8}, 8};
  const Json j = coverToJson(spec);
  CHECK(j.dump().starts_with(R"({"radii":[4,8],"bound":8,"families":[[[{"label":[2],"coords":[0]})"));
  const CoverSpec back = coverFromJson(j);
  CHECK(back.radii == spec.radii);
  CHECK(back.bound == spec.bound);
  CHECK(back.families == spec.families);
  CHECK_THROWS_AS(coverFromJson(Json::parse(R"({"radii":[4],"bound":8,"families":[[[{"label":[2,3],"coords":[1,1]}]]]})")),
                  ParseError);
}

TEST_CASE("partition instance JSON round trip") {
  PartitionInstance instance{DiscreteCube{2, 24, 1}, 2, {{{{1, 2}, {3, 4}}}, {}}};
  const PartitionInstance back = partitionFromJson(partitionToJson(instance));
  CHECK(back.cube.dimension == 2);
  CHECK(back.cube.side == 24);
  CHECK(back.eps == 2);
  CHECK(back.families == instance.families);
  CHECK_THROWS_AS(partitionFromJson(Json::parse(R"({"dimension":2,"side":24,"eps":2,"families":[[[[1]]]]})")),
                  ParseError);
}

TEST_CASE("files") {
  CHECK_THROWS_AS(readJsonFile("/nonexistent/file.json"), ParseError);
}
