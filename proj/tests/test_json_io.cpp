#include <gtest/gtest.h>

#include "arcdiag/arcdiag.hpp"

using namespace arcdiag;

namespace {

template <class P, class S>
void round_trip(const P& p, std::uint64_t seed) {
  Category<P, S> cat(p);
  RandomMorphisms<P, S> rnd(cat, seed, 2);
  for (int i = 0; i < 100; ++i) {
    const auto m = rnd.morphism(rnd.uniform(0, 3), rnd.uniform(0, 3), 3);
    const Json j = arcdiag::to_json(cat, m);
    const auto back = arcdiag::from_json(cat, Json::parse(j.dump()));
    ASSERT_TRUE(cat.equal(back, m)) << j.dump();
    ASSERT_EQ(arcdiag::to_json(cat, back).dump(), j.dump());
  }
}

}  // namespace

TEST(Json, RoundTrip) {
  round_trip<Jacobson, Rational>(Jacobson(), 1);
  round_trip<Jacobson, Gf2>(Jacobson(), 2);
  round_trip<Leavitt, Rational>(Leavitt(3), 3);
  round_trip<Leavitt, Rational>(Leavitt(5), 4);
  round_trip<Quiver, Gf2>(Quiver(), 5);
}

TEST(Json, Layout) {
  Category<Jacobson, Rational> cat{Jacobson()};
  const Json j = arcdiag::to_json(cat, eval(cat, "1/2 x^2 * z"));
  EXPECT_EQ(j["preset"], "jacobson-dg");
  EXPECT_EQ(j["field"], "q");
  EXPECT_EQ(j["n"], 1);
  EXPECT_EQ(j["m"], 2);
  ASSERT_EQ(j["terms"].size(), 1u);
  const Json& t = j["terms"][0];
  EXPECT_EQ(t["coeff"], "1/2");
  EXPECT_EQ(t["pairs"], Json::parse("[[1,1]]"));
  EXPECT_EQ(t["tops"], Json::parse(R"(["z"])"));
  EXPECT_EQ(t["longs"], Json::parse(R"(["x^2"])"));
  EXPECT_TRUE(t["bottoms"].empty());
}

TEST(Json, Rejections) {
  Category<Jacobson, Rational> cat{Jacobson()};
  Category<Leavitt, Rational> lea{Leavitt(3)};
  const Json good = arcdiag::to_json(cat, eval(cat, "x"));
  EXPECT_THROW(arcdiag::from_json(lea, good), FormatError);

  Json bad = good;
  bad["terms"][0]["pairs"] = Json::parse("[[1,1],[1,1]]");
  EXPECT_THROW(arcdiag::from_json(cat, bad), FormatError);

  bad = good;
  bad["terms"][0]["longs"] = Json::parse(R"(["x + y"])");
  EXPECT_THROW(arcdiag::from_json(cat, bad), FormatError);

  bad = good;
  bad["terms"][0]["longs"] = Json::parse(R"(["z"])");
  EXPECT_THROW(arcdiag::from_json(cat, bad), FormatError);

  bad = good;
  bad["terms"][0]["coeff"] = "1/0";
  EXPECT_THROW(arcdiag::from_json(cat, bad), FormatError);

  bad = good;
  bad.erase("n");
  EXPECT_THROW(arcdiag::from_json(cat, bad), FormatError);
}

TEST(Registry, Presets) {
  EXPECT_EQ(parse_preset("jacobson-dg").param, 1);
  EXPECT_EQ(parse_preset("jacobson-dg:-1").param, -1);
  EXPECT_EQ(parse_preset("leavitt:4").kind, PresetKind::Leavitt);
  EXPECT_EQ(parse_preset("quiver-example1").kind, PresetKind::Quiver);
  EXPECT_EQ(preset_name(parse_preset("leavitt:5")), "leavitt:5");
  EXPECT_EQ(preset_name(parse_preset("jacobson-dg:-1")), "jacobson-dg:-1");
  EXPECT_THROW(parse_preset("leavitt:1"), UsageError);
  EXPECT_THROW(parse_preset("jacobson-dg:0"), UsageError);
  EXPECT_THROW(parse_preset("leavitt"), UsageError);
  EXPECT_THROW(parse_preset("nope"), UsageError);
}

TEST(Registry, DefaultFields) {
  EXPECT_EQ(parse_field(std::nullopt, parse_preset("jacobson-dg")), FieldKind::Gf2);
  EXPECT_EQ(parse_field(std::nullopt, parse_preset("leavitt:3")), FieldKind::Q);
  EXPECT_EQ(parse_field(std::nullopt, parse_preset("quiver-example1")), FieldKind::Q);
  EXPECT_EQ(parse_field(std::string("q"), parse_preset("jacobson-dg")), FieldKind::Q);
  EXPECT_THROW(parse_field(std::string("r"), parse_preset("jacobson-dg")), UsageError);
}

TEST(Registry, DispatchReachesTheRightCategory) {
  const auto name = with_category(parse_preset("leavitt:4"), FieldKind::Gf2, [](auto& cat) {
    using Cat = std::decay_t<decltype(cat)>;
    return cat.presentation().name() + "/" + std::string(Cat::Scalar::field_name);
  });
  EXPECT_EQ(name, "leavitt:4/gf2");
}
