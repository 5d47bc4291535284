#include <gtest/gtest.h>

#include <random>

#include "mcg/mcg.hpp"

using namespace mcg;

namespace {

constexpr Letter X{0, 1}, Xi{0, -1}, Y{1, 1}, Yi{1, -1};

std::vector<Letter> random_letters(std::mt19937& rng, std::size_t len, GeneratorId gens) {
  std::uniform_int_distribution<GeneratorId> g(0, gens - 1);
  std::bernoulli_distribution s(0.5);
  std::vector<Letter> out;
  for (std::size_t i = 0; i < len; ++i) out.push_back({g(rng), s(rng) ? 1 : -1});
  return out;
}

// Reference reduction: keep cancelling adjacent inverse pairs until none remain.
std::vector<Letter> naive_reduce(std::vector<Letter> w) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i].gen == w[i + 1].gen && w[i].sign == -w[i + 1].sign) {
        w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
  }
  return w;
}

}  // namespace

TEST(Reduce, Examples) {
  EXPECT_TRUE(reduce({}).is_identity());
  EXPECT_TRUE((FreeWord{X, Xi}).is_identity());
  EXPECT_EQ((FreeWord{X, Y, Yi, X}), FreeWord::generator(0, 2));
  EXPECT_TRUE((FreeWord{Y, X, Xi, Yi}).is_identity());
}

TEST(Reduce, MatchesNaiveAndIsIdempotent) {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 500; ++trial) {
    const auto raw = random_letters(rng, trial % 40, 3);
    const FreeWord w(raw);
    const auto expect = naive_reduce(raw);
    ASSERT_EQ(std::vector<Letter>(w.letters().begin(), w.letters().end()), expect);
    EXPECT_EQ(reduce(w.letters()), w);
    for (std::size_t i = 0; i + 1 < w.size(); ++i) EXPECT_FALSE(w[i].cancels(w[i + 1]));
  }
}

TEST(Invert, Examples) {
  EXPECT_TRUE(invert(FreeWord()).is_identity());
  EXPECT_EQ(invert(FreeWord{X, Y}), (FreeWord{Yi, Xi}));
  EXPECT_EQ(invert(FreeWord::generator(0, 2)), FreeWord::generator(0, -2));
}

TEST(Invert, ProductWithInverseIsIdentity) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const FreeWord w(random_letters(rng, 30, 4));
    EXPECT_TRUE((w * invert(w)).is_identity());
    EXPECT_TRUE((invert(w) * w).is_identity());
    EXPECT_EQ(invert(invert(w)), w);
  }
}

TEST(FreeWordOps, PowersAndCounts) {
  const FreeWord xy{X, Y};
  EXPECT_EQ(xy.pow(3).size(), 6u);
  EXPECT_EQ(xy.pow(-2), (FreeWord{Yi, Xi, Yi, Xi}));
  EXPECT_TRUE(xy.pow(0).is_identity());
  const FreeWord w{X, Y, X, X, Yi};
  EXPECT_EQ(w.occurrences(0), 3u);
  EXPECT_EQ(w.exponent_sum(1), 0);
  EXPECT_TRUE(w.mentions(1));
  EXPECT_FALSE(w.mentions(2));
}

TEST(PresentationType, RejectsOutOfRangeAndDuplicates) {
  EXPECT_THROW(Presentation({"x"}, {{FreeWord{Y}, {}, ""}}), Error);
  EXPECT_THROW(Presentation({"x", "x"}, {}), Error);
  EXPECT_THROW(Presentation({""}, {}), Error);
  const Presentation p({"x", "y"}, {{FreeWord{X, Y}, FreeWord{Y, X}, "c"}});
  EXPECT_EQ(p.at("y"), 1u);
  EXPECT_THROW(p.at("z"), Error);
  EXPECT_EQ(p.normalized_relators()[0], (FreeWord{X, Y, Xi, Yi}));
}

TEST(Substitute, DefiningRelatorBecomesTrivial) {
  // <x, y | y = x^2>, y -> x^2  gives  <x | >
  const Presentation p({"x", "y"}, {{FreeWord{Y}, FreeWord::generator(0, 2), ""}});
  const Presentation q = substitute(p, 1, FreeWord::generator(0, 2));
  EXPECT_EQ(q.generators(), std::vector<std::string>{"x"});
  EXPECT_TRUE(q.relators().empty());
}

TEST(Substitute, IdentitySubstitutionLeavesWordsUnchanged) {
  const Presentation p = build_presentation({Family::N3, 3});
  EXPECT_EQ(substitute(p, 2, FreeWord::generator(2)), p);
}

TEST(Substitute, RejectsReplacementMentioningVictim) {
  const Presentation p({"x", "y"}, {{FreeWord{X, Y}, {}, ""}});
  EXPECT_THROW(substitute(p, 0, FreeWord{X, Y}), Error);
}

TEST(Substitute, ShiftsHigherGenerators) {
  // <a, b, c | a*c = c*b>, a -> c  gives  <b, c | c*c = c*b>
  const Letter a{0, 1}, b{1, 1}, c{2, 1};
  const Presentation p({"a", "b", "c"}, {{FreeWord{a, c}, FreeWord{c, b}, "r"}});
  const Presentation q = substitute(p, 0, FreeWord{c});
  ASSERT_EQ(q.generators(), (std::vector<std::string>{"b", "c"}));
  EXPECT_EQ(q.relators()[0].lhs, (FreeWord{Letter{1, 1}, Letter{1, 1}}));
  EXPECT_EQ(q.relators()[0].rhs, (FreeWord{Letter{1, 1}, Letter{0, 1}}));
}

TEST(Substitute, RhoEliminationGivesTheN3Relator) {
  // Removing rho from M^h(N_3) via rho = (t1 t2 t1)^2: rho^2 = 1 becomes (t1 t2 t1)^4 = 1.
  const Presentation p = build_presentation({Family::HyperellipticN, 3});
  const GeneratorId rho = p.at("rho");
  const FreeWord t1 = FreeWord::generator(p.at("t1")), t2 = FreeWord::generator(p.at("t2"));
  const Presentation q = substitute(p, rho, (t1 * t2 * t1).pow(2));
  EXPECT_EQ(q.generators(), (std::vector<std::string>{"t1", "t2", "s"}));
  const FreeWord target = (t1 * t2 * t1).pow(4);
  bool found = false;
  for (const FreeWord& w : q.normalized_relators()) found = found || w == target;
  EXPECT_TRUE(found);
  EXPECT_EQ(abelianization(q), abelianization(p));
}

TEST(Substitute, PreservesAbelianizationOnRandomPresentations) {
  // Adding y = w(x...) and then eliminating y must not change the group.
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Relator> rels;
    for (int k = 0; k < 3; ++k) rels.push_back({FreeWord(random_letters(rng, 6, 3)), {}, ""});
    const Presentation base({"a", "b", "c"}, rels);
    const FreeWord def(random_letters(rng, 5, 3));
    std::vector<Relator> extended = rels;
    extended.push_back({FreeWord::generator(3), def, "def"});
    // mix the new generator into an old relator
    extended.push_back({FreeWord::generator(3) * FreeWord(random_letters(rng, 3, 3)), {}, ""});
    const Presentation ext({"a", "b", "c", "y"}, extended);
    const Presentation elim = substitute(ext, 3, def);
    EXPECT_EQ(abelianization(elim), abelianization(ext));
    EXPECT_EQ(elim.generator_count(), 3u);
  }
}

TEST(Eliminate, RemovesGeneratorsOccurringOnce) {
  // <a, b, c | a = b*c, (b*c)^2>: a and then b or c go away
  const Letter a{0, 1}, b{1, 1}, c{2, 1};
  const Presentation p({"a", "b", "c"}, {{FreeWord{a}, FreeWord{b, c}, ""}, {FreeWord{b, c, b, c}, {}, ""}});
  const Presentation q = eliminate_generators(p);
  EXPECT_LT(q.generator_count(), p.generator_count());
  EXPECT_EQ(abelianization(q), abelianization(p));
}
