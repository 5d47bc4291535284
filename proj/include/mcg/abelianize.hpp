#pragma once

#include "mcg/linalg.hpp"
#include "mcg/words.hpp"

namespace mcg {

/// Exponent-sum matrix: one row per generator, one column per relator.
inline IntMatrix relation_matrix(const Presentation& p) {
  IntMatrix m(p.generator_count(), p.relators().size());
  for (std::size_t j = 0; j < p.relators().size(); ++j) {
    const FreeWord w = p.relators()[j].normalized();
    for (const Letter& l : w.letters()) m(l.gen, j) += l.sign;
  }
  return m;
}

inline FpAbelianGroup abelianized(const Presentation& p) {
  return FpAbelianGroup(p.generator_count(), relation_matrix(p));
}

inline InvariantFactors abelianization(const Presentation& p) {
  return invariant_factors(abelianized(p));
}

}  // namespace mcg
