#include "isograss/errors.hpp"
#include "isograss/io.hpp"
#include "isograss/orbits.hpp"

#include <doctest.h>

#include <filesystem>
#include <sstream>

using namespace isograss;

TEST_CASE("scalars") {
  CHECK(scalar_to_json(Scalar::ratio(-3, 6), Field::Rational) == "-1/2");
  CHECK(scalar_to_json(Scalar(4), Field::Rational) == "4");
  const Json g = scalar_to_json(Scalar(mpq_class(1, 2), mpq_class(-1)), Field::GaussianHermitian);
  CHECK(g["re"] == "1/2");
  CHECK(g["im"] == "-1");
  CHECK(scalar_from_json(g) == Scalar(mpq_class(1, 2), mpq_class(-1)));
  CHECK(scalar_from_json(Json(3)) == Scalar(3));
  CHECK(scalar_from_json(Json("5/10")) == Scalar::ratio(1, 2));
  CHECK_THROWS_AS(scalar_from_json(Json("1/0")), ParseError);
  CHECK_THROWS_AS(scalar_from_json(Json::array()), ParseError);
}

TEST_CASE("subspace files round-trip") {
  for (CaseTag c : {CaseTag::RealOrthogonal, CaseTag::Unitary, CaseTag::ComplexOrthogonal,
                    CaseTag::Symplectic}) {
    const GroupParams g = is_signed_case(c) ? GroupParams::signed_params(3, 3, 1, 2)
                                            : GroupParams::nm(4, 2);
    const auto sp = standard_space(c, g);
    for (const auto& t : valid_tuples(c, g, 2)) {
      const Subspace s = canonical_rep(sp, t);
      const Json j = subspace_to_json(s);
      CHECK(subspace_from_json(Json::parse(j.dump())) == s);
    }
  }
}

TEST_CASE("malformed subspace files") {
  const Json good = Json::parse(
      R"({"case":"real-orthogonal","params":{"p":2,"q":2,"p1":1,"q1":1},"basis":[["1","0","0","1"]]})");
  CHECK(subspace_from_json(good).dim() == 1);

  Json short_row = good;
  short_row["basis"] = Json::parse(R"([["1","0","0"]])");
  CHECK_THROWS_AS(subspace_from_json(short_row), ParseError);

  Json bad_case = good;
  bad_case["case"] = "orthogonal";
  CHECK_THROWS_AS(subspace_from_json(bad_case), ParseError);

  Json bad_params = good;
  bad_params["params"]["p1"] = 2;
  CHECK_THROWS_AS(subspace_from_json(bad_params), InvalidArgument);

  Json gaussian = good;
  gaussian["basis"] = Json::parse(R"([[{"re":"1","im":"1"},"0","0","1"]])");
  CHECK_THROWS_AS(subspace_from_json(gaussian), ParseError);

  Json missing = good;
  missing.erase("basis");
  CHECK_THROWS_AS(subspace_from_json(missing), ParseError);
}

TEST_CASE("atlas emitters") {
  const GroupParams g = GroupParams::signed_params(2, 2, 1, 1);
  const auto orbits = enumerate_orbits(CaseTag::RealOrthogonal, g, 1);
  const std::string csv = atlas_to_csv(CaseTag::RealOrthogonal, g, orbits);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "case,params,tuple,dim_H,dim_stab,dim_orbit,is_open,component_count");
  int records = 0;
  while (std::getline(in, line)) ++records;
  CHECK(records == 5);
  CHECK(csv.find("real-orthogonal,\"(2,2,1,1)\",\"(0,0,0,1,0)\",2,0,2,true,") != std::string::npos);

  const Json j = atlas_to_json(CaseTag::RealOrthogonal, g, 1, orbits);
  CHECK(j["orbits"].size() == 5);
  CHECK(j.dump() == atlas_to_json(CaseTag::RealOrthogonal, g, 1, orbits).dump());
}

TEST_CASE("files") {
  const auto dir = std::filesystem::temp_directory_path() / "isograss_io_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "x.json").string();
  write_text_file(path, "{\"a\": 1}\n");
  CHECK(read_json_file(path)["a"] == 1);
  write_text_file(path, "{not json");
  CHECK_THROWS_AS(read_json_file(path), ParseError);
  CHECK_THROWS_AS(read_text_file((dir / "missing.json").string()), ParseError);
  std::filesystem::remove_all(dir);
}
