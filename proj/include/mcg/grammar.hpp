#pragma once

// Text format for presentations:
//
//   < t1, t2, s | D1: t1*t2*t1 = t2*t1*t2, (t1*t2*t1)^4, s^2 >
//
// Words are products of generators, parenthesised words and the identity `1`,
// joined by `*`; `^n` raises to an integer power (negative for inverses).
// A relator without `=` means `= 1`. An optional `label:` prefix names a
// relator. `#` starts a comment that runs to the end of the line.

#include <cctype>
#include <cstddef>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "mcg/error.hpp"
#include "mcg/words.hpp"

namespace mcg {

namespace detail {

class GrammarParser {
 public:
  explicit GrammarParser(std::string_view text) : text_(text) {}

  Presentation presentation() {
    expect('<');
    std::vector<std::string> gens;
    skip();
    if (peek() != '|') {
      for (;;) {
        skip();
        const auto [line, col] = position();
        std::string name = identifier("generator name");
        for (const auto& g : gens)
          if (g == name) throw ParseError("duplicate generator '" + name + "'", line, col);
        gens.push_back(std::move(name));
        skip();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    expect('|');
    gens_ = gens;
    std::vector<Relator> rels;
    skip();
    if (peek() != '>') {
      for (;;) {
        rels.push_back(relator());
        skip();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    expect('>');
    skip();
    if (pos_ != text_.size()) fail("unexpected text after the closing '>'");
    return Presentation(std::move(gens), std::move(rels));
  }

  FreeWord standalone_word(const std::vector<std::string>& gens) {
    gens_ = gens;
    FreeWord w = word();
    skip();
    if (pos_ != text_.size()) fail("unexpected text after word");
    return w;
  }

 private:
  Relator relator() {
    Relator r;
    skip();
    // A label is an identifier immediately followed by ':'.
    const std::size_t save = pos_;
    if (is_ident_start(peek())) {
      std::string name = identifier("label");
      skip();
      if (peek() == ':') {
        ++pos_;
        r.label = std::move(name);
      } else {
        pos_ = save;
      }
    }
    r.lhs = word();
    skip();
    if (peek() == '=') {
      ++pos_;
      r.rhs = word();
    }
    return r;
  }

  FreeWord word() {
    FreeWord w = factor();
    for (;;) {
      skip();
      if (peek() != '*') return w;
      ++pos_;
      w *= factor();
    }
  }

  FreeWord factor() {
    skip();
    FreeWord base;
    const char c = peek();
    if (c == '(') {
      ++pos_;
      base = word();
      expect(')');
    } else if (c == '1') {
      ++pos_;
    } else if (is_ident_start(c)) {
      const auto [line, col] = position();
      const std::string name = identifier("generator");
      GeneratorId id = 0;
      bool found = false;
      for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i] == name) {
          id = static_cast<GeneratorId>(i);
          found = true;
        }
      if (!found) throw ParseError("undeclared generator '" + name + "'", line, col);
      base = FreeWord::generator(id);
    } else {
      fail(c == '\0' ? "unexpected end of input, expected a word" : std::string("unexpected '") + c + "', expected a word");
    }
    skip();
    if (peek() == '^') {
      ++pos_;
      return base.pow(exponent());
    }
    return base;
  }

  int exponent() {
    skip();
    bool paren = false;
    if (peek() == '(') {
      paren = true;
      ++pos_;
      skip();
    }
    int sign = 1;
    if (peek() == '-' || peek() == '+') {
      if (peek() == '-') sign = -1;
      ++pos_;
      skip();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer exponent");
    long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (text_[pos_++] - '0');
      if (value > 1'000'000) fail("exponent too large");
    }
    if (paren) expect(')');
    return sign * static_cast<int>(value);
  }

  static bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  std::string identifier(const char* what) {
    skip();
    if (!is_ident_start(peek())) fail(std::string("expected ") + what);
    const std::size_t start = pos_;
    while (is_ident_char(peek())) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c) {
    skip();
    if (peek() != c) {
      const char got = peek();
      fail(std::string("expected '") + c + "'" +
           (got == '\0' ? std::string(" before end of input") : std::string(", found '") + got + "'"));
    }
    ++pos_;
  }

  std::pair<std::size_t, std::size_t> position() const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(text_[i]) & 0xC0) != 0x80) {
        ++col;  // count code points, not UTF-8 continuation bytes
      }
    }
    return {line, col};
  }

  [[noreturn]] void fail(const std::string& what) const {
    const auto [line, col] = position();
    throw ParseError(what, line, col);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::string> gens_;
};

}  // namespace detail

inline Presentation parse_presentation(std::string_view text) {
  return detail::GrammarParser(text).presentation();
}

/// Parses a word over the generators of `p`.
inline FreeWord parse_word(std::string_view text, const Presentation& p) {
  return detail::GrammarParser(text).standalone_word(p.generators());
}

/// Splits on `sep` and parses each piece as a word over `p`.
inline std::vector<FreeWord> parse_word_list(std::string_view text, char sep, const Presentation& p) {
  std::vector<FreeWord> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = text.find(sep, start);
    const std::string_view piece = text.substr(start, end == std::string_view::npos ? end : end - start);
    if (piece.find_first_not_of(" \t\r\n") != std::string_view::npos) out.push_back(parse_word(piece, p));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

/// Runs of one letter are written with an exponent: s1*s2^-1*s3^2. The
/// identity is `1`.
inline std::string format_word(const FreeWord& w, const std::vector<std::string>& names) {
  if (w.is_identity()) return "1";
  std::ostringstream os;
  const auto ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    const long power = static_cast<long>(j - i) * ls[i].sign;
    if (i) os << '*';
    os << names.at(ls[i].gen);
    if (power != 1) os << '^' << power;
    i = j;
  }
  return os.str();
}

inline std::string format_relator(const Relator& r, const std::vector<std::string>& names) {
  std::string s = format_word(r.lhs, names);
  if (!r.rhs.is_identity()) s += " = " + format_word(r.rhs, names);
  return s;
}

/// Serializes in the grammar above, one relator per line.
inline std::string to_grammar(const Presentation& p) {
  std::ostringstream os;
  os << "< ";
  for (std::size_t i = 0; i < p.generator_count(); ++i) os << (i ? ", " : "") << p.generators()[i];
  os << " |";
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    const Relator& r = p.relators()[i];
    os << (i ? ",\n  " : "\n  ");
    if (!r.label.empty()) os << r.label << ": ";
    os << format_relator(r, p.generators());
  }
  os << (p.relators().empty() ? " >\n" : "\n>\n");
  return os.str();
}

}  // namespace mcg
