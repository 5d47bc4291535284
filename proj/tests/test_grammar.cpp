#include <gtest/gtest.h>

#include "mcg/mcg.hpp"

using namespace mcg;

namespace {

FreeWord g(GeneratorId x, int p = 1) { return FreeWord::generator(x, p); }

void expect_error_at(const std::string& text, std::size_t line, std::size_t column) {
  try {
    parse_presentation(text);
    FAIL() << "accepted: " << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), column) << e.what();
  }
}

}  // namespace

TEST(Parse, Basics) {
  const Presentation p = parse_presentation("< a, b | a^2, b^-3 = a*b, (a*b)^2 >");
  EXPECT_EQ(p.generators(), (std::vector<std::string>{"a", "b"}));
  ASSERT_EQ(p.relators().size(), 3u);
  EXPECT_EQ(p.relators()[0].lhs, g(0, 2));
  EXPECT_TRUE(p.relators()[0].rhs.is_identity());
  EXPECT_EQ(p.relators()[1].lhs, g(1, -3));
  EXPECT_EQ(p.relators()[1].rhs, g(0) * g(1));
  EXPECT_EQ(p.relators()[2].lhs, (g(0) * g(1)).pow(2));
}

TEST(Parse, LabelsCommentsAndIdentity) {
  const Presentation p = parse_presentation(
      "# a comment\n"
      "<x, y_2 |   # generators\n"
      "  R1: x*y_2 = y_2*x,\n"
      "  x^(-2) * 1 = 1,\n"
      "  Q: 1\n"
      ">\n");
  ASSERT_EQ(p.relators().size(), 3u);
  EXPECT_EQ(p.relators()[0].label, "R1");
  EXPECT_EQ(p.relators()[1].label, "");
  EXPECT_EQ(p.relators()[1].lhs, g(0, -2));
  EXPECT_EQ(p.relators()[2].label, "Q");
  EXPECT_TRUE(p.relators()[2].is_trivial());
}

TEST(Parse, EmptyPresentations) {
  EXPECT_EQ(parse_presentation("<|>").generator_count(), 0u);
  const Presentation p = parse_presentation("< a , b | >");
  EXPECT_EQ(p.generator_count(), 2u);
  EXPECT_TRUE(p.relators().empty());
}

TEST(Parse, ExponentsReduce) {
  const Presentation p = parse_presentation("<a, b | a^3 * a^-3 * b, (a*b^-1)^-1 >");
  EXPECT_EQ(p.relators()[0].lhs, g(1));
  EXPECT_EQ(p.relators()[1].lhs, g(1) * g(0, -1));
  EXPECT_TRUE(parse_presentation("<a|a^0>").relators()[0].is_trivial());
}

TEST(Parse, ErrorsCarryPositions) {
  expect_error_at("<a, b | a*c>", 1, 11);
  expect_error_at("<a, b |\n  a*b,\n  a^2 * c\n>", 3, 9);
  expect_error_at("<a, a | >", 1, 5);
  expect_error_at("<a | a^ >", 1, 9);
  expect_error_at("<a | a", 1, 7);
  expect_error_at("<a | a > x", 1, 10);
  expect_error_at("a | a >", 1, 1);
  expect_error_at("<a | a**a >", 1, 8);
  // columns count characters, not bytes
  expect_error_at("# ⊕⊕\n<a | ⊕ >", 2, 6);
}

TEST(Format, CompressesRuns) {
  const std::vector<std::string> names{"s1", "s2"};
  EXPECT_EQ(format_word(FreeWord(), names), "1");
  EXPECT_EQ(format_word(g(0) * g(1, -1) * g(0, 3), names), "s1*s2^-1*s1^3");
}

TEST(Format, RoundTripsEveryCatalogPresentation) {
  for (const auto& [f, name] : kFamilyNames)
    for (int genus = 1; genus <= 6; ++genus) {
      const FamilyId id{f, genus};
      try {
        check_genus(id);
      } catch (const Error&) {
        continue;
      }
      const Presentation p = build_presentation(id);
      EXPECT_EQ(parse_presentation(to_grammar(p)), p) << name << " g=" << genus;
    }
}

TEST(Words, ParseAgainstPresentation) {
  const Presentation p = build_presentation({Family::SphereBraid, 3});
  EXPECT_EQ(parse_word("s3*s2", p), g(2) * g(1));
  EXPECT_TRUE(parse_word("1", p).is_identity());
  EXPECT_THROW(parse_word("s4", p), ParseError);
  const auto list = parse_word_list("1; s3 ;s3*s2;", ';', p);
  ASSERT_EQ(list.size(), 3u);
  EXPECT_EQ(list[2], g(2) * g(1));
  EXPECT_TRUE(parse_word_list("", ',', p).empty());
}
