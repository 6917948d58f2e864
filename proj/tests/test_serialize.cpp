#include <gtest/gtest.h>

#include "galcomp/error.hpp"
#include "galcomp/serialize.hpp"

using namespace galcomp;

namespace {

json c2_doc() {
  return json::parse(R"json({
    "label": "C over R", "degree": 2, "ambient_generators": [[1, 0]],
    "realization": {"name": "cyclotomic", "n": 4},
    "fields": {"C": []},
    "composita": [{"source": "C", "target": "C", "phi": "(0 1)", "label": "A"}]
  })json");
}

}  // namespace

TEST(Serialize, ParsesAndRoundTrips) {
  SystemDocument doc = parse_system(c2_doc());
  EXPECT_EQ(doc.system.context().label(), "C over R");
  EXPECT_EQ(doc.system.composita().size(), 1u);
  EXPECT_EQ(label_of(doc.system.composita()[0], doc.names), "A");
  SystemDocument again = parse_system(system_to_json(doc));
  EXPECT_EQ(again.system.composita(), doc.system.composita());
  EXPECT_EQ(again.names, doc.names);
  EXPECT_EQ(system_to_json(again).dump(), system_to_json(doc).dump());
}

TEST(Serialize, RejectsMalformedDocuments) {
  json bad = c2_doc();
  bad["degree"] = 0;
  EXPECT_THROW(parse_system(bad), InvalidInput);
  bad = c2_doc();
  bad["composita"][0]["target"] = "Q";
  EXPECT_THROW(parse_system(bad), InvalidInput);
  bad = c2_doc();
  bad["composita"][0]["phi"] = json::array({0, 0});
  EXPECT_THROW(parse_system(bad), InvalidInput);
  bad = c2_doc();
  bad["fields"]["C"] = json::array({json::array({1, 0, 2})});
  EXPECT_THROW(parse_system(bad), InvalidInput);
  bad = c2_doc();
  bad.erase("ambient_generators");
  EXPECT_THROW(parse_system(bad), InvalidInput);
  EXPECT_THROW(load_system("/nonexistent/file.json"), InvalidInput);
}

TEST(Serialize, GroupCap) {
  json doc = json::parse(R"json({"degree": 6, "ambient_generators": ["(0 1 2 3 4 5)", "(0 1)"], "fields": {}})json");
  EXPECT_THROW(parse_system(doc, 100), CapExceeded);
  EXPECT_NO_THROW(parse_system(doc, 720));
}

TEST(Serialize, Polynomials) {
  nf::RatPoly p(std::vector<mpq_class>{mpq_class(1, 2), 0, -3});
  json j = poly_to_json(p);
  EXPECT_EQ(j.dump(), R"(["1/2",0,-3])");
  EXPECT_EQ(poly_from_json(j), p);
  EXPECT_THROW(poly_from_json(json::array({"x"})), InvalidInput);
}

TEST(Serialize, RealizationRoundTrip) {
  nf::Realization r = nf::s3_x3m2_realization();
  nf::Realization back = realization_from_json(realization_to_json(r));
  EXPECT_EQ(back.omega(), r.omega());
  EXPECT_EQ(back.context().ambient(), r.context().ambient());
  EXPECT_EQ(realization_to_json(back).dump(), realization_to_json(r).dump());
}
