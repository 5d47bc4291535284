#pragma once

// Todd-Coxeter coset enumeration (HLT strategy with union-find coincidence
// collapse) and Reidemeister-Schreier subgroup presentations.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "mcg/error.hpp"
#include "mcg/words.hpp"

namespace mcg {

inline constexpr std::size_t kDefaultMaxCosets = 100000;

/// Complete right action of the generators on the cosets of a subgroup.
/// Coset 0 is the subgroup itself; cosets are numbered in discovery order.
struct CosetTable {
  std::size_t cosets = 0;
  /// action[x][c] = c . x and inverse_action[x][c] = c . x^-1
  std::vector<std::vector<std::size_t>> action;
  std::vector<std::vector<std::size_t>> inverse_action;
  /// transversal[c] maps coset 0 to coset c.
  std::vector<FreeWord> transversal;

  std::size_t generators() const { return action.size(); }

  std::size_t apply(std::size_t c, Letter l) const {
    return l.sign > 0 ? action[l.gen][c] : inverse_action[l.gen][c];
  }
  std::size_t trace(std::size_t c, const FreeWord& w) const {
    for (const Letter& l : w.letters()) c = apply(c, l);
    return c;
  }
};

namespace detail {

inline constexpr std::size_t kUndefined = std::numeric_limits<std::size_t>::max();

class CosetEnumerator {
 public:
  CosetEnumerator(std::size_t generators, std::size_t max_cosets)
      : columns_(2 * generators), max_cosets_(max_cosets) {
    new_coset();
  }

  CosetTable run(const std::vector<std::vector<std::size_t>>& relators,
                 const std::vector<std::vector<std::size_t>>& subgroup) {
    for (const auto& w : subgroup) scan_and_fill(0, w);
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      for (const auto& r : relators) {
        if (!alive(c)) break;
        scan_and_fill(c, r);
      }
      for (std::size_t x = 0; x < columns_ && alive(c); ++x)
        if (table_[c][x] == kUndefined) define(c, x);
    }
    return compact();
  }

 private:
  static std::size_t inv(std::size_t col) { return col ^ 1U; }

  bool alive(std::size_t c) const { return parent_[c] == c; }

  std::size_t rep(std::size_t c) {
    std::size_t r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      const std::size_t next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  std::size_t new_coset() {
    if (active_ >= max_cosets_) throw CosetLimitError(max_cosets_);
    const std::size_t c = parent_.size();
    parent_.push_back(c);
    table_.emplace_back(columns_, kUndefined);
    ++active_;
    return c;
  }

  void define(std::size_t c, std::size_t x) {
    const std::size_t d = new_coset();
    table_[c][x] = d;
    table_[d][inv(x)] = c;
  }

  void scan_and_fill(std::size_t c, const std::vector<std::size_t>& w) {
    if (w.empty()) return;
    std::size_t f = c, b = c;
    std::size_t i = 0, j = w.size();  // unscanned letters are w[i, j)
    for (;;) {
      while (i < j && table_[f][w[i]] != kUndefined) f = table_[f][w[i++]];
      if (i == j) {
        coincidence(f, b);
        return;
      }
      while (j > i && table_[b][inv(w[j - 1])] != kUndefined) b = table_[b][inv(w[--j])];
      if (i == j) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        table_[f][w[i]] = b;
        table_[b][inv(w[i])] = f;
        return;
      }
      define(f, w[i]);
    }
  }

  void merge(std::size_t a, std::size_t b, std::deque<std::size_t>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    --active_;
    queue.push_back(b);
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::deque<std::size_t> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      const std::size_t e = queue.front();
      queue.pop_front();
      for (std::size_t x = 0; x < columns_; ++x) {
        const std::size_t f = table_[e][x];
        if (f == kUndefined) continue;
        if (table_[f][inv(x)] == e) table_[f][inv(x)] = kUndefined;
        const std::size_t e1 = rep(e), f1 = rep(f);
        if (table_[e1][x] != kUndefined) {
          merge(f1, table_[e1][x], queue);
        } else if (table_[f1][inv(x)] != kUndefined) {
          merge(e1, table_[f1][inv(x)], queue);
        } else {
          table_[e1][x] = f1;
          table_[f1][inv(x)] = e1;
        }
      }
    }
  }

  CosetTable compact() {
    std::vector<std::size_t> index(parent_.size(), kUndefined);
    std::size_t n = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c)
      if (alive(c)) index[c] = n++;
    CosetTable t;
    t.cosets = n;
    const std::size_t gens = columns_ / 2;
    t.action.assign(gens, std::vector<std::size_t>(n));
    t.inverse_action.assign(gens, std::vector<std::size_t>(n));
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (!alive(c)) continue;
      for (std::size_t x = 0; x < gens; ++x) {
        t.action[x][index[c]] = index[rep(table_[c][2 * x])];
        t.inverse_action[x][index[c]] = index[rep(table_[c][2 * x + 1])];
      }
    }
    return t;
  }

  std::size_t columns_;
  std::size_t max_cosets_;
  std::size_t active_ = 0;
  std::vector<std::size_t> parent_;
  std::vector<std::vector<std::size_t>> table_;
};

inline std::vector<std::size_t> to_columns(const FreeWord& w) {
  std::vector<std::size_t> cols;
  cols.reserve(w.size());
  for (const Letter& l : w.letters()) cols.push_back(2 * l.gen + (l.sign < 0 ? 1 : 0));
  return cols;
}

/// Breadth-first spanning tree, scanning cosets in order and each coset's
/// edges in column order x0, x0^-1, x1, x1^-1, ...
inline std::vector<FreeWord> breadth_first_transversal(const CosetTable& t) {
  std::vector<std::optional<FreeWord>> found(t.cosets);
  found[0] = FreeWord();
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t c = queue.front();
    queue.pop_front();
    for (GeneratorId x = 0; x < t.generators(); ++x)
      for (int sign : {1, -1}) {
        const Letter l{x, sign};
        const std::size_t d = t.apply(c, l);
        if (found[d]) continue;
        found[d] = *found[c] * FreeWord{l};
        queue.push_back(d);
      }
  }
  std::vector<FreeWord> out;
  for (auto& w : found) {
    if (!w) throw Error("coset table is not connected");
    out.push_back(std::move(*w));
  }
  return out;
}

}  // namespace detail

/// Audits a complete table: permutations, relator loops at every coset and
/// subgroup words fixing coset 0. Throws on any violation.
inline void audit_coset_table(const CosetTable& t, const Presentation& p,
                              const std::vector<FreeWord>& subgroup) {
  if (t.generators() != p.generator_count()) throw Error("coset table generator count mismatch");
  for (std::size_t x = 0; x < t.generators(); ++x)
    for (std::size_t c = 0; c < t.cosets; ++c)
      if (t.action[x][c] >= t.cosets || t.inverse_action[x][t.action[x][c]] != c)
        throw Error("coset table: generator does not act as a permutation");
  for (const FreeWord& r : p.normalized_relators())
    for (std::size_t c = 0; c < t.cosets; ++c)
      if (t.trace(c, r) != c) throw Error("coset table: relator does not close at a coset");
  for (const FreeWord& w : subgroup)
    if (t.trace(0, w) != 0) throw Error("coset table: subgroup word moves coset 0");
}

/// Enumerates the cosets of the subgroup generated by `subgroup`.
/// Throws CosetLimitError when more than `max_cosets` cosets are live at once.
inline CosetTable todd_coxeter(const Presentation& p, const std::vector<FreeWord>& subgroup,
                               std::size_t max_cosets = kDefaultMaxCosets) {
  if (max_cosets < 1) throw Error("max_cosets must be at least 1");
  for (const FreeWord& w : subgroup)
    if (!w.is_identity() && w.max_generator() >= p.generator_count())
      throw Error("subgroup word mentions an unknown generator");
  std::vector<std::vector<std::size_t>> rels, sub;
  for (const FreeWord& r : p.normalized_relators())
    if (!r.is_identity()) rels.push_back(detail::to_columns(r));
  for (const FreeWord& w : subgroup) sub.push_back(detail::to_columns(w));

  detail::CosetEnumerator e(p.generator_count(), max_cosets);
  CosetTable t = e.run(rels, sub);
  t.transversal = detail::breadth_first_transversal(t);
  audit_coset_table(t, p, subgroup);
  return t;
}

/// n|X| - (n - 1): the number of free generators the Reidemeister-Schreier
/// method produces for an index-n subgroup before any elimination.
inline std::size_t schreier_generator_count(const CosetTable& t, const Presentation& p) {
  return t.cosets * p.generator_count() - (t.cosets - 1);
}

/// Reorders candidate coset representatives so that word c maps coset 0 to
/// c. Requires a bijection onto the cosets and a prefix-closed word set.
inline std::vector<FreeWord> order_transversal(const CosetTable& t, const std::vector<FreeWord>& words) {
  if (words.size() != t.cosets)
    throw Error("transversal has " + std::to_string(words.size()) + " words but there are " +
                std::to_string(t.cosets) + " cosets");
  std::vector<std::optional<FreeWord>> slot(t.cosets);
  for (const FreeWord& w : words) {
    if (!w.is_identity() && w.max_generator() >= t.generators())
      throw Error("transversal word mentions an unknown generator");
    const std::size_t c = t.trace(0, w);
    if (slot[c]) throw Error("transversal words land on the same coset " + std::to_string(c));
    slot[c] = w;
  }
  std::vector<FreeWord> out;
  for (auto& w : slot) out.push_back(*w);
  if (!out[0].is_identity()) throw Error("transversal must represent coset 0 by the identity");
  for (const FreeWord& w : out) {
    const auto ls = w.letters();
    for (std::size_t k = 1; k < ls.size(); ++k) {
      const FreeWord prefix(ls.subspan(0, k));
      if (std::find(out.begin(), out.end(), prefix) == out.end())
        throw Error("transversal is not prefix-closed (Schreier)");
    }
  }
  return out;
}

struct SchreierPresentation {
  Presentation base;
  /// schreier_generators[c][x]: subgroup generator for the pair (coset c,
  /// ambient generator x), or nullopt when the pair is a tree edge.
  std::vector<std::vector<std::optional<GeneratorId>>> schreier_generators;
  /// Ambient word t_c x t_{c.x}^-1 for each subgroup generator.
  std::vector<FreeWord> embedding;
  std::vector<FreeWord> transversal;
};

/// Rewrites an ambient word read from coset `start` as a word in the
/// Schreier generators.
inline FreeWord rewrite_schreier(const SchreierPresentation& s, const CosetTable& t, const FreeWord& w,
                                 std::size_t start = 0) {
  FreeWord out;
  std::size_t c = start;
  for (const Letter& l : w.letters()) {
    if (l.sign > 0) {
      if (auto g = s.schreier_generators[c][l.gen]) out *= Letter{*g, 1};
      c = t.apply(c, l);
    } else {
      const std::size_t d = t.apply(c, l);
      if (auto g = s.schreier_generators[d][l.gen]) out *= Letter{*g, -1};
      c = d;
    }
  }
  return out;
}

/// Presentation of the subgroup with one generator per non-tree (coset,
/// generator) pair and one relator per (coset, relator) pair. Freely trivial
/// relators are dropped; no further simplification happens here.
inline SchreierPresentation reidemeister_schreier(const Presentation& p, const CosetTable& t,
                                                  const std::optional<std::vector<FreeWord>>& transversal_override = std::nullopt) {
  SchreierPresentation s;
  s.transversal = transversal_override ? order_transversal(t, *transversal_override) : t.transversal;
  for (std::size_t c = 0; c < t.cosets; ++c)
    if (t.trace(0, s.transversal[c]) != c) throw Error("transversal word does not reach its coset");

  std::vector<std::string> names;
  s.schreier_generators.assign(t.cosets, std::vector<std::optional<GeneratorId>>(p.generator_count()));
  for (std::size_t c = 0; c < t.cosets; ++c)
    for (GeneratorId x = 0; x < p.generator_count(); ++x) {
      const std::size_t d = t.action[x][c];
      FreeWord w = s.transversal[c] * FreeWord::generator(x) * s.transversal[d].inverse();
      if (w.is_identity()) continue;
      s.schreier_generators[c][x] = static_cast<GeneratorId>(names.size());
      names.push_back(p.generators()[x] + "_" + std::to_string(c));
      s.embedding.push_back(std::move(w));
    }

  s.base = Presentation(std::move(names), {});
  for (std::size_t c = 0; c < t.cosets; ++c)
    for (const Relator& r : p.relators()) {
      Relator rewritten{rewrite_schreier(s, t, r.normalized(), c), FreeWord(),
                        r.label.empty() ? "@" + std::to_string(c) : r.label + "@" + std::to_string(c)};
      if (!rewritten.is_trivial()) s.base.add_relator(std::move(rewritten));
    }
  return s;
}

}  // namespace mcg
