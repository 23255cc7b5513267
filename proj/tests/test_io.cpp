#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "arrkit/error.hpp"
#include "arrkit/intermediate/intermediate.hpp"
#include "arrkit/io/fixtures.hpp"
#include "arrkit/io/forms.hpp"
#include "arrkit/io/json_io.hpp"
#include "support.hpp"

using namespace arrkit;
using namespace arrkit::testing;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Arrangement parse(std::string_view s, std::optional<std::size_t> dim = std::nullopt) {
  return parse_linear_forms(s, dim).arrangement;
}

}  // namespace

TEST(ParseForms, Examples) {
  EXPECT_TRUE(parse("x1; x2").same_hyperplanes(boolean_arrangement(2)));
  const auto a = parse("2*x1 + x2 + x3", 5);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a.normal(0), (Vec{Scalar(1L), Scalar(Rational(1, 2)), Scalar(Rational(1, 2)), Scalar(0L), Scalar(0L)}));
}

TEST(ParseForms, FixtureD) {
  const auto text = read_file(ARRKIT_SOURCE_DIR "/data/fixtures/arrangement_d.txt");
  const auto p = parse_linear_forms(text);
  EXPECT_EQ(p.duplicates, 0u);
  EXPECT_EQ(p.arrangement.size(), 21u);
  EXPECT_EQ(p.arrangement.rank(), 5u);
  EXPECT_TRUE(p.arrangement.same_hyperplanes(arrangement_d()));
  EXPECT_EQ(characteristic_polynomial(p.arrangement), IntPoly::from_roots({1, 5, 5, 5, 5}));
  auto trimmed = text;
  while (!trimmed.empty() && trimmed.back() == '\n') trimmed.pop_back();
  EXPECT_EQ(arrangement_d_polynomial(), trimmed);
}

TEST(ParseForms, Syntax) {
  EXPECT_TRUE(parse("x_{1} - x_2\n x3-x1").same_hyperplanes(from_int_rows(3, {{1, -1, 0}, {1, 0, -1}})));
  EXPECT_TRUE(parse("(x1 - x2)(x2 - x3) * x1").same_hyperplanes(from_int_rows(3, {{1, -1, 0}, {0, 1, -1}, {1, 0, 0}})));
  // z is the coordinate after the last x.
  EXPECT_TRUE(parse("x1 - 2z; z").same_hyperplanes(from_int_rows(2, {{1, -2}, {0, 1}})));
  EXPECT_TRUE(parse("x1 - z", 3).same_hyperplanes(from_int_rows(3, {{1, 0, -1}})));
  EXPECT_TRUE(parse("1/2 x1 + 3/4*x2").same_hyperplanes(from_int_rows(2, {{2, 3}})));
  EXPECT_TRUE(parse("x1 + x1 - x2").same_hyperplanes(from_int_rows(2, {{2, -1}})));

  const auto dup = parse_linear_forms("x1 - x2; 2x1 - 2x2; x2");
  EXPECT_EQ(dup.duplicates, 1u);
  EXPECT_EQ(dup.warnings.size(), 1u);
  EXPECT_EQ(dup.arrangement.size(), 2u);
}

TEST(ParseForms, Cyclotomic) {
  const Field f = Field::cyclotomic(3);
  const auto p = parse_linear_forms("x1 - x2; x1 - zeta x2; x1 - \\zeta^2 x2; x1 - (1 + zeta)*x2", 2, f);
  // 1 + zeta = -zeta^2, so the last form is x1 + zeta^2 x2: a new hyperplane.
  EXPECT_EQ(p.arrangement.size(), 4u);
  const auto q = parse_linear_forms("x1 - (-1 - zeta)*x2", 2, f);
  EXPECT_EQ(q.arrangement.normal(0), (Vec{Scalar::one(f), -Scalar::zeta_power(2, f)}));
  EXPECT_TRUE(parse_linear_forms("x_1 - \xCE\xB6^{2} x_2", 2, f)
                  .arrangement.same_hyperplanes(parse_linear_forms("x1 - zeta^2*x2", 2, f).arrangement));
}

TEST(ParseForms, Errors) {
  auto position = [](std::string_view s, const Field& f = Field::rational()) -> std::size_t {
    try {
      parse_linear_forms(s, std::nullopt, f);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::string::npos;
  };
  EXPECT_EQ(position("x1 + 3"), 6u);
  EXPECT_EQ(position("x1 + y2"), 5u);
  EXPECT_EQ(position("x1 - zeta x2"), 5u);
  EXPECT_EQ(position("(x1 - x2"), 8u);
  EXPECT_EQ(position("x0"), 1u);
  EXPECT_NE(position("x1 - x1"), std::string::npos);
  EXPECT_NE(position("x1 + x2 (x1 - x2)"), std::string::npos);
  EXPECT_THROW(parse("x3", 2), InvalidInput);
  EXPECT_THROW(parse(""), ParseError);
}

TEST(FormatForms, RoundTrip) {
  std::mt19937 rng(5);
  for (int t = 0; t < 100; ++t) {
    const auto a = random_arrangement(rng, 2 + t % 4, 6, 3);
    std::string text;
    for (const auto& n : a.normals()) text += format_linear_form(n) + "\n";
    EXPECT_EQ(parse(text, a.dim()).normals(), a.normals()) << text;
  }
  const auto c = build_intermediate({3, 5, 1});
  std::string text;
  for (const auto& n : c.normals()) text += format_linear_form(n) + ";";
  EXPECT_EQ(parse_linear_forms(text, 3, c.field()).arrangement.normals(), c.normals());
}

TEST(JsonIO, ArrangementRoundTrip) {
  std::mt19937 rng(8);
  for (int t = 0; t < 50; ++t) {
    const auto a = random_arrangement(rng, 2 + t % 4, 7, 3);
    const auto j = arrangement_to_json(a);
    const auto b = arrangement_from_json(Json::parse(dump(j)));
    EXPECT_EQ(b.normals(), a.normals());
    EXPECT_EQ(dump(arrangement_to_json(b)), dump(j));
  }
  const auto c = build_intermediate({3, 4, 2});
  const auto j = arrangement_to_json(c);
  EXPECT_EQ(j.at("field").at("kind"), "cyclotomic");
  EXPECT_EQ(j.at("field").at("order"), 4);
  EXPECT_EQ(arrangement_from_json(j).normals(), c.normals());
  EXPECT_THROW(arrangement_from_json(Json::parse(R"({"dim": 2, "hyperplanes": [["1"]]})")), InvalidInput);
  EXPECT_THROW(arrangement_from_json(Json::parse(R"({"dim": 2, "hyperplanes": [["0", "0"]]})")), InvalidInput);
  EXPECT_THROW(arrangement_from_json(Json::parse(R"({"hyperplanes": []})")), InvalidInput);
}

TEST(JsonIO, Shapes) {
  EXPECT_EQ(poly_to_json(IntPoly::from_roots({1, 2})), Json::parse("[2, -3, 1]"));

  const auto a = braid(3);
  const auto rep = check_accuracy(a, {0, 1, 2});
  const auto j = report_to_json(rep);
  EXPECT_EQ(j.at("verdict"), "accurate");
  EXPECT_EQ(j.at("mode"), "exact");
  ASSERT_EQ(j.at("dimensions").size(), 3u);
  EXPECT_EQ(j.at("dimensions")[1].at("d"), 2);
  EXPECT_EQ(j.at("dimensions")[1].at("exponents"), Json::parse("[0, 1]"));
  const auto w = flat_from_json(a, j.at("dimensions")[1].at("witness"));
  EXPECT_EQ(w.dim(), 2u);

  const auto g = graph_from_json(Json::parse(R"({"n": 3, "edges": [[1, 2], [2, 3]]})"));
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(graph_from_json(graph_to_json(g)), g);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"n": 3})")), InvalidInput);

  const RootSystem b3(RootSystemType::parse("B3"));
  const auto I = ideal_from_json(b3, Json::parse(R"({"type": "B3", "generators": [[1, 1, 0]]})"));
  EXPECT_EQ(I.roots.size(), 3u);
  const auto J = ideal_from_json(b3, ideal_to_json(b3, I));
  EXPECT_EQ(J.roots, I.roots);
  EXPECT_THROW(ideal_from_json(b3, Json::parse(R"({"roots": [[1, 1, 0]]})")), InvalidInput);
  EXPECT_THROW(ideal_from_json(b3, Json::parse(R"({"type": "A3", "roots": []})")), InvalidInput);
}

TEST(JsonIO, Certificate) {
  const RootSystem g2(RootSystemType::parse("G2"));
  const auto I = full_ideal(g2);
  const auto c = certify_partition(ideal_arrangement(g2, I), root_height_partition(g2, I));
  const auto j = certificate_to_json(c);
  EXPECT_EQ(j.at("exponents"), Json::parse("[1, 5]"));
  EXPECT_TRUE(j.at("valid").get<bool>());
  EXPECT_EQ(j.at("partition").size(), j.at("steps").size());
  for (const auto& s : j.at("steps")) {
    EXPECT_TRUE(s.at("rank_ok").get<bool>());
    EXPECT_TRUE(s.at("noncover_ok").get<bool>());
    EXPECT_EQ(s.at("counts").size(), s.at("q").get<std::size_t>());
  }
  EXPECT_EQ(dump(j), dump(certificate_to_json(certify_partition(ideal_arrangement(g2, I), root_height_partition(g2, I)))));
}
