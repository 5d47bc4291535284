#pragma once

// Free-group words, relators and finite presentations.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcg/error.hpp"

namespace mcg {

/// Dense generator index within one presentation.
using GeneratorId = std::uint32_t;

struct Letter {
  GeneratorId gen = 0;
  int sign = 1;  // +1 or -1

  constexpr Letter inverse() const { return {gen, -sign}; }
  constexpr bool cancels(const Letter& other) const {
    return gen == other.gen && sign == -other.sign;
  }
  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
};

/// A freely reduced word. Reduction happens eagerly on construction, so
/// every FreeWord in the program is reduced.
class FreeWord {
 public:
  FreeWord() = default;

  explicit FreeWord(std::span<const Letter> raw) {
    letters_.reserve(raw.size());
    for (const Letter& l : raw) push(l);
  }
  FreeWord(std::initializer_list<Letter> raw)
      : FreeWord(std::span<const Letter>(raw.begin(), raw.size())) {}

  static FreeWord generator(GeneratorId g, int power = 1) {
    FreeWord w;
    const Letter l{g, power < 0 ? -1 : 1};
    for (int i = 0; i < std::abs(power); ++i) w.letters_.push_back(l);
    return w;
  }

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  FreeWord inverse() const {
    FreeWord w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      w.letters_.push_back(it->inverse());
    return w;
  }

  FreeWord& operator*=(const FreeWord& rhs) {
    for (const Letter& l : rhs.letters_) push(l);
    return *this;
  }
  FreeWord& operator*=(Letter l) {
    push(l);
    return *this;
  }
  friend FreeWord operator*(FreeWord lhs, const FreeWord& rhs) { return lhs *= rhs; }

  FreeWord pow(int n) const {
    const FreeWord base = n < 0 ? inverse() : *this;
    FreeWord w;
    for (int i = 0; i < std::abs(n); ++i) w *= base;
    return w;
  }

  bool mentions(GeneratorId g) const {
    return std::any_of(letters_.begin(), letters_.end(),
                       [g](const Letter& l) { return l.gen == g; });
  }

  std::size_t occurrences(GeneratorId g) const {
    return static_cast<std::size_t>(std::count_if(
        letters_.begin(), letters_.end(), [g](const Letter& l) { return l.gen == g; }));
  }

  long exponent_sum(GeneratorId g) const {
    long s = 0;
    for (const Letter& l : letters_)
      if (l.gen == g) s += l.sign;
    return s;
  }

  GeneratorId max_generator() const {
    GeneratorId m = 0;
    for (const Letter& l : letters_) m = std::max(m, l.gen);
    return m;
  }

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord& a, const FreeWord& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

 private:
  void push(Letter l) {
    if (!letters_.empty() && letters_.back().cancels(l))
      letters_.pop_back();
    else
      letters_.push_back(l);
  }

  std::vector<Letter> letters_;
};

inline FreeWord reduce(std::span<const Letter> raw) { return FreeWord(raw); }
inline FreeWord invert(const FreeWord& w) { return w.inverse(); }

/// A defining relation lhs = rhs. `rhs` is the identity for one-sided relators.
struct Relator {
  FreeWord lhs;
  FreeWord rhs;
  std::string label;

  /// One-sided form lhs * rhs^-1.
  FreeWord normalized() const { return lhs * rhs.inverse(); }
  bool is_trivial() const { return normalized().is_identity(); }

  friend bool operator==(const Relator&, const Relator&) = default;
};

class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<std::string> generators, std::vector<Relator> relators)
      : generators_(std::move(generators)), relators_(std::move(relators)) {
    validate();
  }

  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<Relator>& relators() const { return relators_; }
  std::size_t generator_count() const { return generators_.size(); }

  std::optional<GeneratorId> find(std::string_view name) const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
      if (generators_[i] == name) return static_cast<GeneratorId>(i);
    return std::nullopt;
  }

  GeneratorId at(std::string_view name) const {
    if (auto g = find(name)) return *g;
    throw Error("unknown generator '" + std::string(name) + "'");
  }

  std::vector<FreeWord> normalized_relators() const {
    std::vector<FreeWord> out;
    out.reserve(relators_.size());
    for (const Relator& r : relators_) out.push_back(r.normalized());
    return out;
  }

  std::size_t count_label(std::string_view label) const {
    return static_cast<std::size_t>(std::count_if(
        relators_.begin(), relators_.end(), [&](const Relator& r) { return r.label == label; }));
  }

  void add_relator(Relator r) {
    check_word(r.lhs);
    check_word(r.rhs);
    relators_.push_back(std::move(r));
  }

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  void validate() const {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      if (generators_[i].empty()) throw Error("empty generator name");
      for (std::size_t j = 0; j < i; ++j)
        if (generators_[i] == generators_[j])
          throw Error("duplicate generator name '" + generators_[i] + "'");
    }
    for (const Relator& r : relators_) {
      check_word(r.lhs);
      check_word(r.rhs);
    }
  }

  void check_word(const FreeWord& w) const {
    if (!w.is_identity() && w.max_generator() >= generators_.size())
      throw Error("relator mentions a generator outside the presentation");
  }

  std::vector<std::string> generators_;
  std::vector<Relator> relators_;
};

namespace detail {

// `replacement` is already in the post-elimination indexing.
inline FreeWord substitute_word(const FreeWord& w, GeneratorId victim, const FreeWord& replacement) {
  std::vector<Letter> raw;
  raw.reserve(w.size());
  for (const Letter& l : w.letters()) {
    if (l.gen == victim) {
      const FreeWord piece = l.sign > 0 ? replacement : replacement.inverse();
      raw.insert(raw.end(), piece.letters().begin(), piece.letters().end());
    } else {
      raw.push_back({l.gen > victim ? l.gen - 1 : l.gen, l.sign});
    }
  }
  return FreeWord(raw);
}

}  // namespace detail

/// Tietze elimination: removes `victim` and replaces each occurrence by
/// `replacement` (written in the old indexing). Relators that become freely
/// trivial are dropped. Substituting a generator by itself is a no-op.
inline Presentation substitute(const Presentation& p, GeneratorId victim, const FreeWord& replacement) {
  if (victim >= p.generator_count()) throw Error("substitution victim out of range");
  if (replacement == FreeWord::generator(victim)) return p;
  if (replacement.mentions(victim))
    throw Error("replacement word mentions the eliminated generator '" +
                p.generators()[victim] + "'");

  std::vector<std::string> gens;
  for (std::size_t i = 0; i < p.generator_count(); ++i)
    if (i != victim) gens.push_back(p.generators()[i]);

  // Shift the replacement into the new indexing once.
  std::vector<Letter> shifted;
  for (const Letter& l : replacement.letters())
    shifted.push_back({l.gen > victim ? l.gen - 1 : l.gen, l.sign});
  const FreeWord rep(shifted);

  std::vector<Relator> rels;
  for (const Relator& r : p.relators()) {
    Relator s{detail::substitute_word(r.lhs, victim, rep),
              detail::substitute_word(r.rhs, victim, rep), r.label};
    if (!s.is_trivial()) rels.push_back(std::move(s));
  }
  return Presentation(std::move(gens), std::move(rels));
}

/// Repeatedly eliminates a generator that occurs exactly once in some
/// relator, always taking the shortest such relator first. Returns the
/// simplified presentation; the generators that survive keep their names.
inline Presentation eliminate_generators(Presentation p, std::size_t max_relator_length = 4096) {
  for (;;) {
    std::optional<std::pair<GeneratorId, FreeWord>> best;
    std::size_t best_len = 0;
    for (const Relator& r : p.relators()) {
      const FreeWord w = r.normalized();
      if (w.is_identity() || (best && w.size() >= best_len)) continue;
      for (GeneratorId g = 0; g < p.generator_count(); ++g) {
        if (w.occurrences(g) != 1) continue;
        // w = u x^e v  =>  x = u^-1 v^-1 (e = 1) or x = v u (e = -1).
        std::size_t pos = 0;
        while (w[pos].gen != g) ++pos;
        const auto ls = w.letters();
        const FreeWord u(ls.subspan(0, pos));
        const FreeWord v(ls.subspan(pos + 1));
        FreeWord rep = w[pos].sign > 0 ? u.inverse() * v.inverse() : v * u;
        best = std::make_pair(g, std::move(rep));
        best_len = w.size();
        break;
      }
    }
    if (!best) return p;
    Presentation next = substitute(p, best->first, best->second);
    std::size_t longest = 0;
    for (const Relator& r : next.relators())
      longest = std::max(longest, r.lhs.size() + r.rhs.size());
    if (longest > max_relator_length) return p;
    p = std::move(next);
  }
}

}  // namespace mcg
