#pragma once

// First homology of a finitely presented group with coefficients in a module,
// from the degree <= 2 part of the bar resolution.
//
// C_1 (x) M is modelled as one block of module coordinates per presentation
// generator: block x, coordinate i stands for [x] (x) gamma_i. Tensoring over
// ZG moves group elements across the tensor sign as
//     h[x] (x) m = [x] (x) psi(h)^-1 m,
// which is why inverse matrices appear throughout. Consequently
//     d_1([x] (x) m) = (psi(x)^-1 - I) m,
// and a relator x_1...x_k = y_1...y_n contributes, for each module element m,
//     sum_i [x_i] (x) psi(x_1...x_{i-1})^-1 m  -  sum_i [y_i] (x) psi(y_1...y_{i-1})^-1 m,
// where an inverse letter x^-1 after a prefix u contributes
//     -[x] (x) psi(u x^-1)^-1 m.

#include <cstddef>
#include <string>
#include <vector>

#include "mcg/catalog.hpp"
#include "mcg/error.hpp"
#include "mcg/gaction.hpp"
#include "mcg/linalg.hpp"
#include "mcg/words.hpp"

namespace mcg {

/// d_1([x] (x) m) = (psi(x)^-1 - I) m, canonical form.
inline ModElement boundary1(const GAction& a, GeneratorId x, const ModElement& m) {
  ModElement v = a.inverse_matrix(x) * m;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= m[i];
  return a.module().canonical(std::move(v));
}

struct RewrittenRelator {
  std::string label;
  /// Block vector of length |X| * rank: block x holds the coefficient of [x].
  IntVector element;
};

namespace detail {

/// Adds sum over letters of the word's Fox terms (scaled by `sign`) into `out`.
inline void accumulate_fox_terms(const GAction& a, const FreeWord& w, const ModElement& m, int sign,
                                 IntVector& out) {
  const std::size_t rank = a.module().rank();
  ModElement prefix_inv = m;  // psi(prefix)^-1 m
  for (const Letter& l : w.letters()) {
    const std::size_t base = static_cast<std::size_t>(l.gen) * rank;
    if (l.sign > 0) {
      for (std::size_t i = 0; i < rank; ++i) out[base + i] += sign * prefix_inv[i];
      prefix_inv = a.inverse_matrix(l.gen) * prefix_inv;
    } else {
      prefix_inv = a.matrix(l.gen) * prefix_inv;
      for (std::size_t i = 0; i < rank; ++i) out[base + i] -= sign * prefix_inv[i];
    }
  }
}

}  // namespace detail

/// The relation a relator imposes on C_1 (x) M for the module element m.
inline RewrittenRelator rewrite_relator(const GAction& a, const Relator& r, const ModElement& m) {
  if (m.size() != a.module().rank()) throw Error("rewrite_relator: module element has the wrong length");
  RewrittenRelator out{r.label, IntVector(a.generator_count() * a.module().rank())};
  detail::accumulate_fox_terms(a, r.lhs, m, 1, out.element);
  detail::accumulate_fox_terms(a, r.rhs, m, -1, out.element);
  return out;
}

/// The complex  Z^{|R| rank} --alpha--> (C_1 (x) M) --beta--> M  with the
/// module relations on the middle and target terms.
struct TwistedComplex {
  IntMatrix alpha;             // |X| rank x (|R| rank)
  IntMatrix beta;              // rank x |X| rank
  IntMatrix middle_relations;  // one copy of the module relations per block
  IntMatrix target_relations;
};

inline TwistedComplex build_twisted_complex(const Presentation& p, const GAction& a) {
  if (a.generator_count() != p.generator_count())
    throw Error("action has " + std::to_string(a.generator_count()) + " matrices for " +
                std::to_string(p.generator_count()) + " generators");
  const GModule& mod = a.module();
  const std::size_t rank = mod.rank(), gens = p.generator_count(), n = gens * rank;
  const std::size_t k = mod.relations().cols();

  TwistedComplex c{IntMatrix(n, p.relators().size() * rank), IntMatrix(rank, n), IntMatrix(n, gens * k),
                   mod.relations()};
  const IntMatrix id = IntMatrix::identity(rank);
  for (GeneratorId x = 0; x < gens; ++x) {
    const IntMatrix block = a.inverse_matrix(x) - id;
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < rank; ++j) c.beta(i, x * rank + j) = block(i, j);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t i = 0; i < rank; ++i) c.middle_relations(x * rank + i, x * k + r) = mod.relations()(i, r);
  }
  for (std::size_t r = 0; r < p.relators().size(); ++r)
    for (std::size_t i = 0; i < rank; ++i) {
      const RewrittenRelator rr = rewrite_relator(a, p.relators()[r], mod.gamma(i));
      for (std::size_t row = 0; row < n; ++row) c.alpha(row, r * rank + i) = rr.element[row];
    }
  return c;
}

/// True iff d_1 of the block vector vanishes in M.
inline bool is_cycle(const TwistedComplex& c, const IntVector& v) {
  return in_column_span(c.target_relations, c.beta * v);
}

/// True iff the block vector is zero in H_1 (a boundary, up to module relations).
inline bool is_boundary(const TwistedComplex& c, const IntVector& v) {
  return in_column_span(hcat(c.alpha, c.middle_relations), v);
}

/// H_1(G; M). Throws ComplexError when the action does not respect a relator.
inline InvariantFactors twisted_h1(const Presentation& p, const GAction& a) {
  const TwistedComplex c = build_twisted_complex(p, a);
  return homology_at_middle(c.alpha, c.beta, c.middle_relations, c.target_relations);
}

// ---------------------------------------------------------------------------
// Explicit generators of the cycle group for M^{h+}(N_g) and M^h(N_g)

struct KernelGenerator {
  std::string name;    // family tag, e.g. "F3"
  std::string detail;  // index, e.g. "j=2"
  IntVector element;
};

/// Block vectors over the catalog presentation of `id` (hyperelliptic-n or
/// hyperelliptic-n-plus):
///   F1  t_{i,j}                       j not in {i, i+1}
///   F2  t_{j,j} + t_{j,j+1}
///   F3  2 t_{j,j} + rho_j + rho_{j+1}
///   F4  2(t_{1,1} + t_{3,3} + ...) (- rho_g for odd g)
///   F5  s_j + s_{j-1}                 j even            (M^h only)
///   F6  s_j - rho_1 - ... - rho_j     j odd             (M^h only)
/// where x_{,j} = [x] (x) gamma_j. Each is checked to be a cycle.
inline std::vector<KernelGenerator> standard_kernel_generators(const FamilyId& id) {
  if (id.family != Family::HyperellipticN && id.family != Family::HyperellipticNPlus)
    throw Error("kernel generators are tabulated for hyperelliptic-n and hyperelliptic-n-plus only");
  const Presentation p = build_presentation(id);
  const int g = id.genus;
  const auto rank = static_cast<std::size_t>(g);
  const std::size_t n = p.generator_count() * rank;
  const GeneratorId rho = p.at("rho");

  // 1-based (generator, gamma index) -> coordinate
  auto at = [&](GeneratorId x, int j) { return static_cast<std::size_t>(x) * rank + static_cast<std::size_t>(j - 1); };
  auto t = [&](int i) { return static_cast<GeneratorId>(i - 1); };

  std::vector<KernelGenerator> out;
  auto add = [&](std::string name, std::string detail, IntVector v) {
    out.push_back({std::move(name), std::move(detail), std::move(v)});
  };

  for (int i = 1; i < g; ++i)
    for (int j = 1; j <= g; ++j) {
      if (j == i || j == i + 1) continue;
      IntVector v(n);
      v[at(t(i), j)] = 1;
      add("F1", "i=" + std::to_string(i) + ",j=" + std::to_string(j), std::move(v));
    }
  for (int j = 1; j < g; ++j) {
    IntVector v(n);
    v[at(t(j), j)] = 1;
    v[at(t(j), j + 1)] = 1;
    add("F2", "j=" + std::to_string(j), std::move(v));
  }
  for (int j = 1; j < g; ++j) {
    IntVector v(n);
    v[at(t(j), j)] = 2;
    v[at(rho, j)] = 1;
    v[at(rho, j + 1)] = 1;
    add("F3", "j=" + std::to_string(j), std::move(v));
  }
  {
    IntVector v(n);
    for (int j = 1; j < g; j += 2) v[at(t(j), j)] = 2;
    if (g % 2 == 1) v[at(rho, g)] = -1;
    add("F4", "", std::move(v));
  }
  if (id.family == Family::HyperellipticN) {
    const GeneratorId s = p.at("s");
    for (int j = 2; j <= g; j += 2) {
      IntVector v(n);
      v[at(s, j)] = 1;
      v[at(s, j - 1)] = 1;
      add("F5", "j=" + std::to_string(j), std::move(v));
    }
    for (int j = 1; j <= g; j += 2) {
      IntVector v(n);
      v[at(s, j)] = 1;
      for (int k = 1; k <= j; ++k) v[at(rho, k)] = -1;
      add("F6", "j=" + std::to_string(j), std::move(v));
    }
  }

  const TwistedComplex c = build_twisted_complex(p, build_h1_action(id));
  for (const KernelGenerator& k : out)
    if (!is_cycle(c, k.element)) throw Error("kernel generator " + k.name + " " + k.detail + " is not a cycle");
  return out;
}

}  // namespace mcg
