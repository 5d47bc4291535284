#pragma once

// Coefficient modules presented as cokernels of integer matrices, and actions
// of a finitely presented group on them by integer matrices.
//
// Convention: column j of the matrix of h is the coordinate vector of h(gamma_j),
// and words act by psi(uv) = psi(u) psi(v).

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcg/error.hpp"
#include "mcg/linalg.hpp"
#include "mcg/words.hpp"

namespace mcg {

/// Module element as a coordinate vector over the module generators.
using ModElement = IntVector;

class GModule {
 public:
  GModule() : GModule(0, IntMatrix(0, 0)) {}
  GModule(std::size_t rank, IntMatrix relations)
      : rank_(rank), relations_(std::move(relations)), echelon_(column_echelon(relations_)) {
    if (relations_.rows() != rank_) throw Error("module relations must have one row per generator");
  }

  /// Z^rank with no relations.
  static GModule free(std::size_t rank) { return GModule(rank, IntMatrix(rank, 0)); }

  /// First homology of the closed nonorientable surface of genus g:
  /// generators gamma_1..gamma_g with the single relation 2(gamma_1 + ... + gamma_g) = 0.
  static GModule nonorientable_h1(std::size_t g) {
    IntMatrix rel(g, 1);
    for (std::size_t i = 0; i < g; ++i) rel(i, 0) = 2;
    return GModule(g, std::move(rel));
  }

  std::size_t rank() const { return rank_; }
  const IntMatrix& relations() const { return relations_; }

  /// Basis element gamma_{i+1} (0-based index).
  ModElement gamma(std::size_t i) const {
    ModElement v(rank_);
    v.at(i) = 1;
    return v;
  }

  /// Canonical representative: reduced modulo the Hermite form of the relations.
  ModElement canonical(ModElement v) const {
    check(v);
    return reduce_modulo(echelon_, std::move(v));
  }

  bool is_zero(const ModElement& v) const {
    check(v);
    return solve_echelon(echelon_, v).has_value();
  }

  bool equal(const ModElement& a, const ModElement& b) const {
    check(a);
    check(b);
    ModElement d(rank_);
    for (std::size_t i = 0; i < rank_; ++i) d[i] = a[i] - b[i];
    return is_zero(d);
  }

 private:
  void check(const ModElement& v) const {
    if (v.size() != rank_) throw Error("module element has the wrong length");
  }

  std::size_t rank_;
  IntMatrix relations_;
  HermiteDecomposition<Integer> echelon_;
};

/// True iff a and b induce the same endomorphism of the module: every column
/// difference lies in the relation span.
inline bool endo_equal(const IntMatrix& a, const IntMatrix& b, const GModule& m) {
  if (a.rows() != m.rank() || a.cols() != m.rank() || b.rows() != m.rank() || b.cols() != m.rank())
    throw Error("endo_equal: matrices must be square of the module rank");
  const IntMatrix d = a - b;
  for (std::size_t j = 0; j < m.rank(); ++j)
    if (!m.is_zero(d.column(j))) return false;
  return true;
}

class GAction {
 public:
  GAction() = default;

  /// `inverses[x]`, when given, must invert `matrices[x]` on the module
  /// (exactly, when the module is free); missing inverses are computed and
  /// the matrix must then be unimodular.
  GAction(GModule module, std::vector<IntMatrix> matrices,
          std::vector<std::optional<IntMatrix>> inverses = {})
      : module_(std::move(module)), forward_(std::move(matrices)) {
    if (!inverses.empty() && inverses.size() != forward_.size())
      throw Error("inverse table must match the generator count");
    const IntMatrix id = IntMatrix::identity(module_.rank());
    for (std::size_t x = 0; x < forward_.size(); ++x) {
      const IntMatrix& a = forward_[x];
      if (a.rows() != module_.rank() || a.cols() != module_.rank())
        throw Error("action matrix " + std::to_string(x) + " has the wrong size");
      std::optional<IntMatrix> inv = inverses.empty() ? std::nullopt : inverses[x];
      if (inv) {
        if (!(endo_equal(a * *inv, id, module_) && endo_equal(*inv * a, id, module_)))
          throw Error("action matrix " + std::to_string(x) + ": supplied inverse is not exact");
      } else {
        inv = unimodular_inverse(a);
        if (!inv) throw Error("action matrix " + std::to_string(x) + " is not invertible over Z");
      }
      inverse_.push_back(std::move(*inv));
      for (const IntMatrix* m : {&a, static_cast<const IntMatrix*>(&inverse_.back())})
        for (std::size_t j = 0; j < module_.relations().cols(); ++j)
          if (!module_.is_zero(*m * module_.relations().column(j)))
            throw Error("action matrix " + std::to_string(x) +
                        " does not preserve the relation submodule");
    }
  }

  /// Every generator acts as the identity on Z.
  static GAction trivial(std::size_t generators) {
    return GAction(GModule::free(1), std::vector<IntMatrix>(generators, IntMatrix::identity(1)));
  }

  const GModule& module() const { return module_; }
  std::size_t generator_count() const { return forward_.size(); }

  const IntMatrix& matrix(GeneratorId x) const { return forward_.at(checked(x)); }
  const IntMatrix& inverse_matrix(GeneratorId x) const { return inverse_.at(checked(x)); }
  const IntMatrix& matrix(Letter l) const { return l.sign > 0 ? matrix(l.gen) : inverse_matrix(l.gen); }

  /// psi(w) as a matrix product, left to right.
  IntMatrix evaluate(const FreeWord& w) const {
    IntMatrix m = IntMatrix::identity(module_.rank());
    for (const Letter& l : w.letters()) m = m * matrix(l);
    return m;
  }

  /// psi(w) m, in canonical form.
  ModElement act(const FreeWord& w, ModElement m) const {
    const auto ls = w.letters();
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) m = matrix(*it) * m;
    return module_.canonical(std::move(m));
  }

  /// Copy with one generator's matrix replaced (used for negative controls).
  GAction with_matrix(GeneratorId x, IntMatrix a) const {
    std::vector<IntMatrix> ms = forward_;
    ms.at(checked(x)) = std::move(a);
    return GAction(module_, std::move(ms));
  }

 private:
  GeneratorId checked(GeneratorId x) const {
    if (x >= forward_.size())
      throw Error("no action matrix for generator index " + std::to_string(x));
    return x;
  }

  GModule module_;
  std::vector<IntMatrix> forward_;
  std::vector<IntMatrix> inverse_;
};

inline ModElement act(const GAction& a, const FreeWord& w, const ModElement& m) { return a.act(w, m); }

struct RelatorCheck {
  std::size_t index = 0;
  std::string label;
  bool pass = false;
};

/// Evaluates both sides of every relator and compares them as endomorphisms.
inline std::vector<RelatorCheck> verify_representation(const Presentation& p, const GAction& a) {
  if (a.generator_count() != p.generator_count())
    throw Error("action has " + std::to_string(a.generator_count()) + " matrices for " +
                std::to_string(p.generator_count()) + " generators");
  std::vector<RelatorCheck> out;
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    const Relator& r = p.relators()[i];
    out.push_back({i, r.label, endo_equal(a.evaluate(r.lhs), a.evaluate(r.rhs), a.module())});
  }
  return out;
}

inline bool all_pass(const std::vector<RelatorCheck>& report) {
  for (const RelatorCheck& c : report)
    if (!c.pass) return false;
  return true;
}

/// Z/2-valued pairing with <gamma_i, gamma_j> = delta_ij. Well defined on
/// H_1(N_g; Z) because its relation vector is even.
inline int pairing(const ModElement& u, const ModElement& v) {
  if (u.size() != v.size()) throw Error("pairing: length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return static_cast<int>(abs_value(Integer(s % 2)));
}

inline bool preserves_pairing(const IntMatrix& a) {
  const std::size_t n = a.cols();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (pairing(a.column(i), a.column(j)) != (i == j ? 1 : 0)) return false;
  return true;
}

}  // namespace mcg
