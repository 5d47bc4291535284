#pragma once

// Presentations and H_1 actions for the mapping class groups of punctured
// spheres and the (hyperelliptic) mapping class groups of closed surfaces.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcg/abelianize.hpp"
#include "mcg/error.hpp"
#include "mcg/gaction.hpp"
#include "mcg/linalg.hpp"
#include "mcg/words.hpp"

namespace mcg {

enum class Family {
  SphereBraid,         // M(S_0^{g+1}), generators s1..sg
  PuncturedSphere,     // M(S_0^{g,1}), generators s1..s(g-1)
  PuncturedSphereExt,  // M^{+-}(S_0^{g,1}), adds the reflection s
  HyperellipticN,      // M^h(N_g)
  HyperellipticNPlus,  // M^{h+}(N_g)
  N3,                  // M(N_3) on t1, t2, s
  HyperellipticS,      // M^h(S_g)
  HyperellipticSExt,   // M^{h+-}(S_g)
  Braid,               // B_g
};

struct FamilyId {
  Family family;
  int genus;
};

inline constexpr std::array<std::pair<Family, std::string_view>, 9> kFamilyNames{{
    {Family::SphereBraid, "sphere-braid"},
    {Family::PuncturedSphere, "punctured-sphere"},
    {Family::PuncturedSphereExt, "punctured-sphere-ext"},
    {Family::HyperellipticN, "hyperelliptic-n"},
    {Family::HyperellipticNPlus, "hyperelliptic-n-plus"},
    {Family::N3, "n3"},
    {Family::HyperellipticS, "hyperelliptic-s"},
    {Family::HyperellipticSExt, "hyperelliptic-s-ext"},
    {Family::Braid, "braid"},
}};

inline std::string_view family_name(Family f) {
  for (const auto& [fam, name] : kFamilyNames)
    if (fam == f) return name;
  return "?";
}

inline std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [fam, n] : kFamilyNames)
    if (n == name) return fam;
  return std::nullopt;
}

/// Families whose genus parameter counts crosscaps of N_g.
inline bool is_nonorientable_family(Family f) {
  return f == Family::HyperellipticN || f == Family::HyperellipticNPlus || f == Family::N3;
}

inline int min_genus(Family f) {
  switch (f) {
    case Family::SphereBraid:
    case Family::HyperellipticS:
    case Family::HyperellipticSExt:
    case Family::Braid:
      return 1;
    default:
      return 3;
  }
}

inline void check_genus(const FamilyId& id) {
  const std::string name(family_name(id.family));
  if (id.family == Family::N3) {
    if (id.genus != 3) throw Error("family n3 has fixed genus 3");
    return;
  }
  if (id.genus >= min_genus(id.family)) return;
  if (is_nonorientable_family(id.family) && id.genus == 2)
    throw Error("family " + name +
                " needs genus >= 3: for N_2 the quotient by the hyperelliptic involution does not "
                "induce the required epimorphism (the Birman-Hilden theorem fails for the torus)");
  throw Error("family " + name + " needs genus >= " + std::to_string(min_genus(id.family)) +
              ", got " + std::to_string(id.genus));
}

namespace detail {

inline FreeWord gen(GeneratorId x, int power = 1) { return FreeWord::generator(x, power); }

/// x_first * x_{first+1} * ... * x_last
inline FreeWord ascending(GeneratorId first, GeneratorId last) {
  FreeWord w;
  for (GeneratorId x = first; x <= last; ++x) w *= gen(x);
  return w;
}

/// x_last * ... * x_first
inline FreeWord descending(GeneratorId last, GeneratorId first) {
  FreeWord w;
  for (GeneratorId x = last + 1; x-- > first;) w *= gen(x);
  return w;
}

inline std::vector<std::string> numbered(std::string_view prefix, int count) {
  std::vector<std::string> names;
  for (int i = 1; i <= count; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return names;
}

/// Braid-group relations on generators offset..offset+count-1: far
/// commutation for |k - j| > 1 and the braid relation for neighbours.
inline void add_braid_relations(std::vector<Relator>& rels, GeneratorId offset, int count,
                                const std::string& commute_label, const std::string& braid_label) {
  for (int j = 0; j < count; ++j)
    for (int k = j + 2; k < count; ++k)
      rels.push_back({gen(offset + k) * gen(offset + j), gen(offset + j) * gen(offset + k), commute_label});
  for (int j = 0; j + 1 < count; ++j) {
    const FreeWord a = gen(offset + j), b = gen(offset + j + 1);
    rels.push_back({a * b * a, b * a * b, braid_label});
  }
}

/// Relations shared by M^h(N_g) and M^{h+}(N_g): braid relations on the
/// twists t1..t(g-1) and (t1...t(g-1))^g = 1 or rho depending on parity.
inline void add_hyperelliptic_core(std::vector<Relator>& rels, int g, GeneratorId rho,
                                   const std::string& prefix) {
  add_braid_relations(rels, 0, g - 1, prefix + "1", prefix + "2");
  const FreeWord power = ascending(0, static_cast<GeneratorId>(g - 2)).pow(g);
  rels.push_back({power, g % 2 == 1 ? gen(rho) : FreeWord(), prefix + "3"});
}

}  // namespace detail

/// Presentation of a catalog group. Relator labels follow the standard
/// lettering of each family: (A*) punctured sphere, (B*) its extension,
/// (C*) M^h(N_g), (D*) M(N_3), (E*) M^{h+}(N_g). Families without a
/// conventional lettering use (M*) for the sphere braid group and (H*) for
/// the orientable hyperelliptic groups.
inline Presentation build_presentation(const FamilyId& id) {
  using detail::ascending;
  using detail::descending;
  using detail::gen;
  check_genus(id);
  const int g = id.genus;
  std::vector<Relator> rels;

  switch (id.family) {
    case Family::SphereBraid: {
      const auto last = static_cast<GeneratorId>(g - 1);
      detail::add_braid_relations(rels, 0, g, "M1", "M2");
      FreeWord closing = last > 0 ? ascending(0, last - 1) : FreeWord();
      closing *= gen(last, 2);
      if (last > 0) closing *= descending(last - 1, 0);
      rels.push_back({closing, FreeWord(), "M3"});
      rels.push_back({ascending(0, last).pow(g + 1), FreeWord(), "M4"});
      return Presentation(detail::numbered("s", g), std::move(rels));
    }
    case Family::Braid: {
      detail::add_braid_relations(rels, 0, g - 1, "A1", "A2");
      return Presentation(detail::numbered("s", g - 1), std::move(rels));
    }
    case Family::PuncturedSphere:
    case Family::PuncturedSphereExt: {
      const bool ext = id.family == Family::PuncturedSphereExt;
      const std::string p = ext ? "B" : "A";
      detail::add_braid_relations(rels, 0, g - 1, p + "1", p + "2");
      rels.push_back({ascending(0, static_cast<GeneratorId>(g - 2)).pow(g), FreeWord(), p + "3"});
      auto names = detail::numbered("s", g - 1);
      if (ext) {
        const auto s = static_cast<GeneratorId>(g - 1);
        rels.push_back({gen(s, 2), FreeWord(), "B4"});
        for (GeneratorId i = 0; i + 1 < static_cast<GeneratorId>(g); ++i)
          rels.push_back({gen(s) * gen(i) * gen(s), gen(i, -1), "B5"});
        names.push_back("s");
      }
      return Presentation(std::move(names), std::move(rels));
    }
    case Family::HyperellipticN: {
      const auto s = static_cast<GeneratorId>(g - 1), rho = s + 1;
      detail::add_hyperelliptic_core(rels, g, rho, "C");
      rels.push_back({gen(s, 2), FreeWord(), "C4"});
      for (GeneratorId j = 0; j < s; ++j) rels.push_back({gen(s) * gen(j) * gen(s), gen(j, -1), "C5"});
      rels.push_back({gen(rho, 2), FreeWord(), "C6"});
      for (GeneratorId j = 0; j < s; ++j) rels.push_back({gen(rho) * gen(j) * gen(rho), gen(j), "C7"});
      rels.push_back({gen(rho) * gen(s) * gen(rho), gen(s), "C8"});
      auto names = detail::numbered("t", g - 1);
      names.push_back("s");
      names.push_back("rho");
      return Presentation(std::move(names), std::move(rels));
    }
    case Family::HyperellipticNPlus: {
      const auto rho = static_cast<GeneratorId>(g - 1);
      detail::add_hyperelliptic_core(rels, g, rho, "E");
      rels.push_back({gen(rho, 2), FreeWord(), "E4"});
      for (GeneratorId j = 0; j < rho; ++j) rels.push_back({gen(rho) * gen(j) * gen(rho), gen(j), "E5"});
      auto names = detail::numbered("t", g - 1);
      names.push_back("rho");
      return Presentation(std::move(names), std::move(rels));
    }
    case Family::N3: {
      const FreeWord t1 = gen(0), t2 = gen(1), s = gen(2);
      rels.push_back({t1 * t2 * t1, t2 * t1 * t2, "D1"});
      rels.push_back({(t1 * t2 * t1).pow(4), FreeWord(), "D2"});
      rels.push_back({s.pow(2), FreeWord(), "D3"});
      rels.push_back({s * t1 * s, t1.inverse(), "D4"});
      rels.push_back({s * t2 * s, t2.inverse(), "D4"});
      return Presentation({"t1", "t2", "s"}, std::move(rels));
    }
    case Family::HyperellipticS:
    case Family::HyperellipticSExt: {
      const int n = 2 * g + 1;  // twists t1..t(2g+1)
      const auto rho = static_cast<GeneratorId>(n);
      const auto last = static_cast<GeneratorId>(n - 1);
      detail::add_braid_relations(rels, 0, n, "H1", "H2");
      rels.push_back({ascending(0, last).pow(2 * g + 2), FreeWord(), "H3"});
      rels.push_back({gen(rho), ascending(0, last) * descending(last, 0), "H4"});
      rels.push_back({gen(rho, 2), FreeWord(), "H5"});
      rels.push_back({gen(rho) * gen(0) * gen(rho), gen(0), "H6"});
      auto names = detail::numbered("t", n);
      names.push_back("rho");
      if (id.family == Family::HyperellipticSExt) {
        const auto s = rho + 1;
        rels.push_back({gen(s, 2), FreeWord(), "H7"});
        rels.push_back({gen(s) * gen(0) * gen(s), gen(0, -1), "H8"});
        rels.push_back({gen(rho) * gen(s) * gen(rho), gen(s), "H9"});
        names.push_back("s");
      }
      return Presentation(std::move(names), std::move(rels));
    }
  }
  throw Error("unknown family");
}

// ---------------------------------------------------------------------------
// The action on H_1(N_g; Z)

/// Twist about a_i (1-based, 1 <= i < g): identity except for the block
/// [[0, 1], [-1, 2]] on gamma_i, gamma_{i+1}.
inline IntMatrix psi_twist(int g, int i) {
  IntMatrix m = IntMatrix::identity(static_cast<std::size_t>(g));
  const auto a = static_cast<std::size_t>(i - 1);
  m(a, a) = 0;
  m(a, a + 1) = 1;
  m(a + 1, a) = -1;
  m(a + 1, a + 1) = 2;
  return m;
}

inline IntMatrix psi_twist_inverse(int g, int i) {
  IntMatrix m = IntMatrix::identity(static_cast<std::size_t>(g));
  const auto a = static_cast<std::size_t>(i - 1);
  m(a, a) = 2;
  m(a, a + 1) = -1;
  m(a + 1, a) = 1;
  m(a + 1, a + 1) = 0;
  return m;
}

/// The reflection s: upper triangular, (-1)^r on the diagonal and 2(-1)^c
/// above it (1-based row r, column c).
inline IntMatrix psi_reflection(int g) {
  IntMatrix m(static_cast<std::size_t>(g), static_cast<std::size_t>(g));
  for (int r = 1; r <= g; ++r) {
    m(r - 1, r - 1) = (r % 2 == 0) ? 1 : -1;
    for (int c = r + 1; c <= g; ++c) m(r - 1, c - 1) = (c % 2 == 0) ? 2 : -2;
  }
  return m;
}

inline IntMatrix psi_rho(int g) { return -IntMatrix::identity(static_cast<std::size_t>(g)); }

/// The action psi on H_1(N_g; Z) for the nonorientable families, one matrix
/// per presentation generator in presentation order.
inline GAction build_h1_action(const FamilyId& id) {
  check_genus(id);
  if (!is_nonorientable_family(id.family))
    throw Error("family " + std::string(family_name(id.family)) + " has no H_1(N_g) action");
  const int g = id.genus;
  std::vector<IntMatrix> ms;
  std::vector<std::optional<IntMatrix>> inv;
  for (int i = 1; i < g; ++i) {
    ms.push_back(psi_twist(g, i));
    inv.emplace_back(psi_twist_inverse(g, i));
  }
  if (id.family != Family::HyperellipticNPlus) {
    ms.push_back(psi_reflection(g));
    inv.emplace_back(ms.back());
  }
  if (id.family != Family::N3) {
    ms.push_back(psi_rho(g));
    inv.emplace_back(ms.back());
  }
  return GAction(GModule::nonorientable_h1(static_cast<std::size_t>(g)), std::move(ms), std::move(inv));
}

/// Known abelianizations, or nullopt for families without a closed form here.
inline std::optional<InvariantFactors> stated_abelianization(const FamilyId& id) {
  check_genus(id);
  const long g = id.genus;
  const bool odd = g % 2 == 1;
  switch (id.family) {
    case Family::HyperellipticN:
      return odd ? InvariantFactors::of({2, 2}) : InvariantFactors::of({2, 2, 2});
    case Family::N3:
      return InvariantFactors::of({2, 2});
    case Family::HyperellipticNPlus:
      return odd ? InvariantFactors::of({2 * (g - 1) * g}) : InvariantFactors::of({2, (g - 1) * g});
    case Family::HyperellipticS:
      return odd ? InvariantFactors::of({8 * g + 4}) : InvariantFactors::of({4 * g + 2});
    case Family::HyperellipticSExt:
      return InvariantFactors::of({2, 2});
    default:
      return std::nullopt;
  }
}

inline InvariantFactors expected_abelianization(const FamilyId& id) {
  if (auto f = stated_abelianization(id)) return *f;
  throw Error("no known abelianization for family " + std::string(family_name(id.family)));
}

/// Known H_1 with coefficients in H_1(N_g; Z).
inline std::optional<InvariantFactors> stated_twisted_h1(const FamilyId& id) {
  check_genus(id);
  switch (id.family) {
    case Family::HyperellipticNPlus:
      return InvariantFactors::of({2, 2});
    case Family::HyperellipticN:
    case Family::N3:
      return InvariantFactors::of({2, 2, 2});
    default:
      return std::nullopt;
  }
}

}  // namespace mcg
