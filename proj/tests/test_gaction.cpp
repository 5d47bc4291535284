#include <gtest/gtest.h>

#include <random>

#include "mcg/mcg.hpp"

using namespace mcg;

namespace {

ModElement scaled(const ModElement& v, long k) {
  ModElement out = v;
  for (auto& x : out) x *= k;
  return out;
}

ModElement sum(const ModElement& a, const ModElement& b) {
  ModElement out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

FreeWord random_word(std::mt19937& rng, std::size_t len, GeneratorId gens) {
  std::uniform_int_distribution<GeneratorId> g(0, gens - 1);
  std::bernoulli_distribution s(0.5);
  std::vector<Letter> out;
  for (std::size_t i = 0; i < len; ++i) out.push_back({g(rng), s(rng) ? 1 : -1});
  return FreeWord(out);
}

const std::vector<Family> kNFamilies{Family::HyperellipticN, Family::HyperellipticNPlus};

}  // namespace

TEST(Module, CanonicalForm) {
  const GModule m = GModule::nonorientable_h1(4);
  const ModElement rel{2, 2, 2, 2};
  EXPECT_TRUE(m.is_zero(rel));
  EXPECT_FALSE(m.is_zero(ModElement{1, 1, 1, 1}));
  EXPECT_EQ(m.canonical(rel), ModElement(4));
  EXPECT_EQ(m.canonical(sum(m.gamma(2), rel)), m.canonical(m.gamma(2)));
  EXPECT_TRUE(m.equal(sum(m.gamma(0), scaled(rel, -3)), m.gamma(0)));
  // representatives are reduced in the coordinate carrying the relation pivot
  const ModElement c = m.canonical(ModElement{7, 0, 0, 0});
  EXPECT_TRUE(c[0] >= 0 && c[0] < 2);
}

TEST(Action, Examples) {
  for (int g = 3; g <= 8; ++g) {
    const FamilyId id{Family::HyperellipticN, g};
    const Presentation p = build_presentation(id);
    const GAction a = build_h1_action(id);
    const GModule& m = a.module();
    const FreeWord rho = FreeWord::generator(p.at("rho"));
    for (int j = 0; j < g; ++j) {
      EXPECT_TRUE(m.equal(act(a, rho, m.gamma(j)), scaled(m.gamma(j), -1)));
      for (int i = 1; i < g; ++i) {
        const FreeWord t = FreeWord::generator(p.at("t" + std::to_string(i)));
        if (j != i - 1 && j != i) {
          EXPECT_TRUE(m.equal(act(a, t, m.gamma(j)), m.gamma(j)));
        }
      }
    }
    for (int i = 1; i < g; ++i) {
      const FreeWord tinv = FreeWord::generator(p.at("t" + std::to_string(i)), -1);
      const ModElement expect = sum(scaled(m.gamma(i - 1), 2), m.gamma(i));
      EXPECT_TRUE(m.equal(act(a, tinv, m.gamma(i - 1)), expect));
    }
  }
}

TEST(EndoEqual, Examples) {
  const GModule m = GModule::nonorientable_h1(5);
  const IntMatrix a = psi_twist(5, 2);
  EXPECT_TRUE(endo_equal(a, a, m));
  IntMatrix shifted = IntMatrix::identity(5);
  for (std::size_t i = 0; i < 5; ++i) shifted(i, 0) += 2;
  EXPECT_TRUE(endo_equal(IntMatrix::identity(5), shifted, m));
  EXPECT_FALSE(endo_equal(IntMatrix::identity(5), psi_rho(5), m));
  for (int g = 3; g <= 8; ++g) {
    const IntMatrix s = psi_reflection(g);
    EXPECT_TRUE(endo_equal(s * s, IntMatrix::identity(static_cast<std::size_t>(g)),
                           GModule::nonorientable_h1(static_cast<std::size_t>(g))));
  }
}

TEST(Verify, ToyRepresentations) {
  const Presentation p({"x"}, {{FreeWord::generator(0, 2), {}, "sq"}});
  EXPECT_TRUE(all_pass(verify_representation(p, GAction(GModule::free(1), {IntMatrix{{-1}}}))));
  // x -> 2 is no automorphism of Z; on Z/5 it is, with inverse 3, and fails x^2 = 1
  EXPECT_THROW(GAction(GModule::free(1), {IntMatrix{{2}}}), Error);
  const GAction doubling(GModule(1, IntMatrix{{5}}), {IntMatrix{{2}}}, {IntMatrix{{3}}});
  const auto report = verify_representation(p, doubling);
  ASSERT_EQ(report.size(), 1u);
  EXPECT_FALSE(report[0].pass);
  EXPECT_EQ(report[0].label, "sq");
}

TEST(Verify, RejectsIllFormedActions) {
  EXPECT_THROW(GAction(GModule::free(1), {IntMatrix{{2}}}), Error);
  EXPECT_THROW(GAction(GModule::free(1), {IntMatrix{{1}}}, {IntMatrix{{-1}}}), Error);
  // swapping gamma_1 and gamma_2 preserves 2(g1+g2+g3); doubling g1 does not
  const GModule m = GModule::nonorientable_h1(3);
  EXPECT_NO_THROW(GAction(m, {IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}}));
  EXPECT_THROW(GAction(m, {IntMatrix{{1, 0, 0}, {0, 1, 0}, {1, 0, 1}}}), Error);
}

TEST(Verify, CatalogActionsRespectAllRelators) {
  for (Family f : kNFamilies)
    for (int g = 3; g <= 10; ++g) {
      const FamilyId id{f, g};
      const auto report = verify_representation(build_presentation(id), build_h1_action(id));
      for (const RelatorCheck& c : report) EXPECT_TRUE(c.pass) << family_name(f) << " g=" << g << " " << c.label;
    }
  const FamilyId n3{Family::N3, 3};
  EXPECT_TRUE(all_pass(verify_representation(build_presentation(n3), build_h1_action(n3))));
}

TEST(Verify, PerturbedRhoBreaksC3ForOddGenus) {
  const FamilyId id{Family::HyperellipticN, 5};
  const Presentation p = build_presentation(id);
  const GAction a = build_h1_action(id).with_matrix(p.at("rho"), IntMatrix::identity(5));
  for (const RelatorCheck& c : verify_representation(p, a)) EXPECT_EQ(c.pass, c.label != "C3") << c.label;
}

TEST(Pairing, Examples) {
  const GModule m = GModule::nonorientable_h1(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(pairing(m.gamma(i), m.gamma(j)), i == j ? 1 : 0);
  const ModElement rel{2, 2, 2, 2};
  for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(pairing(rel, m.gamma(j)), 0);
  const IntMatrix s = psi_reflection(4);
  EXPECT_EQ(pairing(s * m.gamma(0), s * m.gamma(1)), 0);
}

TEST(Pairing, PreservedByEveryGenerator) {
  for (Family f : kNFamilies)
    for (int g = 3; g <= 10; ++g) {
      const GAction a = build_h1_action({f, g});
      for (GeneratorId x = 0; x < a.generator_count(); ++x) EXPECT_TRUE(preserves_pairing(a.matrix(x)));
    }
}

TEST(Properties, InverseTableAndCentralRho) {
  for (int g = 3; g <= 8; ++g) {
    const FamilyId id{Family::HyperellipticN, g};
    const Presentation p = build_presentation(id);
    const GAction a = build_h1_action(id);
    const IntMatrix id_m = IntMatrix::identity(static_cast<std::size_t>(g));
    const IntMatrix& rho = a.matrix(p.at("rho"));
    for (GeneratorId x = 0; x < a.generator_count(); ++x) {
      EXPECT_EQ(a.matrix(x) * a.inverse_matrix(x), id_m);
      EXPECT_EQ(a.inverse_matrix(x) * a.matrix(x), id_m);
      EXPECT_TRUE(endo_equal(rho * a.matrix(x), a.matrix(x) * rho, a.module()));
    }
  }
}

TEST(Properties, Composition) {
  std::mt19937 rng(42);
  for (int g = 3; g <= 6; ++g) {
    const GAction a = build_h1_action({Family::HyperellipticN, g});
    const GModule& m = a.module();
    for (int t = 0; t < 40; ++t) {
      const FreeWord u = random_word(rng, 8, static_cast<GeneratorId>(a.generator_count()));
      const FreeWord v = random_word(rng, 8, static_cast<GeneratorId>(a.generator_count()));
      const ModElement x = m.gamma(static_cast<std::size_t>(t % g));
      EXPECT_TRUE(m.equal(act(a, u * v, x), act(a, u, act(a, v, x))));
      EXPECT_TRUE(m.equal(a.evaluate(u * v) * x, a.evaluate(u) * (a.evaluate(v) * x)));
    }
  }
}

TEST(Catalog, ActionShapes) {
  EXPECT_EQ(build_h1_action({Family::HyperellipticN, 3}).generator_count(), 4u);
  EXPECT_EQ(build_h1_action({Family::HyperellipticN, 3}).matrix(3), psi_rho(3));
  EXPECT_EQ(build_h1_action({Family::HyperellipticNPlus, 5}).generator_count(), 5u);
  EXPECT_EQ(build_h1_action({Family::N3, 3}).generator_count(), 3u);
  EXPECT_THROW(build_h1_action({Family::HyperellipticS, 3}), Error);
}
