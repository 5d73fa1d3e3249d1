// Copyright 2026 The symfer Authors
// SPDX-License-Identifier: Apache-2.0

#include "symfer/exprdsl.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <vector>

namespace symfer {
namespace {

bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  Parser(std::string_view text, const FockSpace& space) : text_(text), space_(space) {}

  [[noreturn]] void fail(const std::string& message, std::size_t at) const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(message, at, line, column);
  }
  [[noreturn]] void fail(const std::string& message) const { fail(message, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  bool accept(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  void expect_end() {
    if (peek() != '\0') fail("unexpected trailing input");
  }

  std::size_t pos() {
    skip_ws();
    return pos_;
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected an identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  long integer() {
    const std::size_t start = pos();
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    skip_ws();
    std::string_view d = digits();
    long value = 0;
    auto [ptr, ec] = std::from_chars(d.data(), d.data() + d.size(), value);
    if (d.empty() || ec != std::errc() || ptr != d.data() + d.size()) fail("expected an integer", start);
    return negative ? -value : value;
  }

  Rational rational() {
    const std::size_t start = pos();
    std::string_view num = digits();
    if (num.empty()) fail("expected a rational number", start);
    std::string literal(num);
    if (accept('/')) {
      skip_ws();
      std::string_view den = digits();
      if (den.empty()) fail("expected a denominator");
      if (den.find_first_not_of('0') == std::string_view::npos) fail("zero denominator", start);
      literal += "/" + std::string(den);
    }
    Rational r(literal, 10);
    r.canonicalize();
    return r;
  }

  // Optional sign, digits, fraction and exponent; no internal whitespace.
  std::optional<double> real() {
    skip_ws();
    const std::size_t start = pos_;
    std::size_t i = pos_;
    if (i < text_.size() && (text_[i] == '+' || text_[i] == '-')) ++i;
    const std::size_t mantissa = i;
    while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]))) ++i;
    if (i < text_.size() && text_[i] == '.') {
      ++i;
      while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]))) ++i;
    }
    if (i == mantissa || (i == mantissa + 1 && text_[mantissa] == '.')) return std::nullopt;
    if (i < text_.size() && (text_[i] == 'e' || text_[i] == 'E')) {
      std::size_t j = i + 1;
      if (j < text_.size() && (text_[j] == '+' || text_[j] == '-')) ++j;
      if (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) {
        while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
        i = j;
      }
    }
    std::string_view lit = text_.substr(start, i - start);
    if (!lit.empty() && lit.front() == '+') lit.remove_prefix(1);
    double value = 0;
    auto [ptr, ec] = std::from_chars(lit.data(), lit.data() + lit.size(), value);
    if (ec != std::errc() || ptr != lit.data() + lit.size()) return std::nullopt;
    pos_ = i;
    return value;
  }

  Complex complex_literal(bool allow_bare_real) {
    const std::size_t start = pos();
    auto re = real();
    if (!re) fail("malformed complex literal", start);
    skip_ws();
    if (pos_ >= text_.size() || (text_[pos_] != '+' && text_[pos_] != '-')) {
      if (allow_bare_real) return {*re, 0};
      fail("complex literal needs an explicit imaginary part (a+bi)", start);
    }
    const bool negative = text_[pos_] == '-';
    ++pos_;
    skip_ws();
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-'))
      fail("malformed complex literal", start);
    auto im = real();
    if (!im) fail("malformed complex literal", start);
    if (pos_ >= text_.size() || text_[pos_] != 'i') fail("expected 'i' after the imaginary part");
    ++pos_;
    return {*re, negative ? -*im : *im};
  }

  std::optional<Generator> generator_named(const std::string& name) {
    if (name == "eta") return Generator::eta(0);
    if (name == "chi") return Generator::chi(0);
    if (name == "etabar") return Generator::etabar(0);
    if (name == "chibar") return Generator::chibar(0);
    return std::nullopt;
  }

  State ground_named(const std::string& name, std::size_t at) {
    static const std::pair<const char*, GroundName> table[] = {
        {"omega", GroundName::Omega},         {"one", GroundName::One},
        {"xi", GroundName::Xi},               {"theta", GroundName::Theta},
        {"chi", GroundName::ChiCurrent},      {"eta", GroundName::EtaCurrent},
        {"chibar", GroundName::ChibarCurrent}, {"etabar", GroundName::EtabarCurrent},
    };
    for (const auto& [key, value] : table) {
      if (name == key) {
        try {
          return space_.ground_state(value);
        } catch (const ChiralityError& e) {
          fail(e.what(), at);
        }
      }
    }
    fail("unknown identifier '" + name + "'", at);
  }

  State factorchain() {
    std::vector<std::pair<Generator, std::size_t>> gens;
    for (;;) {
      const std::size_t at = pos();
      if (accept("|omega>")) return apply_chain(gens, State::omega());
      if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected a generator or a state name");
      const std::string name = identifier();
      auto gen = generator_named(name);
      if (gen && peek() == '(') {
        expect('(');
        const long index = integer();
        expect(')');
        if (index < -kMaxIndex || index > kMaxIndex) fail("mode index out of range", at);
        gen->index = static_cast<int>(index);
        gens.emplace_back(*gen, at);
        if (peek() == '|') continue;
        if (!accept('*')) fail("expected '*' or '|omega>' after a generator");
        continue;
      }
      return apply_chain(gens, ground_named(name, at));
    }
  }

  Generator generator() {
    const std::size_t at = pos();
    auto gen = generator_named(identifier());
    if (!gen) fail("expected eta, chi, etabar or chibar", at);
    expect('(');
    const long index = integer();
    expect(')');
    if (index < -kMaxIndex || index > kMaxIndex) fail("mode index out of range", at);
    gen->index = static_cast<int>(index);
    try {
      space_.check_generator(*gen);
    } catch (const ChiralityError& e) {
      fail(e.what(), at);
    }
    return *gen;
  }

  State apply_chain(const std::vector<std::pair<Generator, std::size_t>>& gens, State s) {
    for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
      try {
        s = space_.apply(it->first, s);
      } catch (const ChiralityError& e) {
        fail(e.what(), it->second);
      }
    }
    return s;
  }

  State term() {
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const Rational c = rational();
      expect('*');
      State s = factorchain();
      s *= c;
      return s;
    }
    return factorchain();
  }

  State state() {
    State out;
    Rational sign = 1;
    if (accept('-')) {
      sign = -1;
    } else {
      accept('+');
    }
    for (;;) {
      State t = term();
      t *= sign;
      out += t;
      if (accept('+')) {
        sign = 1;
      } else if (accept('-')) {
        sign = -1;
      } else {
        return out;
      }
    }
  }

  Domain domain() {
    const std::size_t at = pos();
    const std::string name = identifier();
    if (name == "disk") return Domain::disk();
    if (name == "halfplane") return Domain::half_plane();
    if (name == "quadrant") return Domain::quadrant();
    if (name == "mobius") {
      expect(':');
      Domain base = domain();
      expect(':');
      Mobius m;
      m.a = complex_literal(true);
      expect(',');
      m.b = complex_literal(true);
      expect(',');
      m.c = complex_literal(true);
      expect(',');
      m.d = complex_literal(true);
      try {
        return Domain::mobius_of(base, m);
      } catch (const GeometryError& e) {
        fail(e.what(), at);
      }
    }
    fail("unknown domain '" + name + "'", at);
  }

  CorrelatorQuery query() {
    if (!accept("corr")) fail("expected 'corr('");
    expect('(');
    CorrelatorQuery q;
    q.domain = domain();
    expect(';');
    q.alpha = complex_literal(true);
    expect(';');
    expect('[');
    std::vector<std::size_t> offsets;
    do {
      Insertion ins;
      ins.state = state();
      expect('@');
      offsets.push_back(pos());
      ins.point = complex_literal(false);
      q.insertions.push_back(std::move(ins));
    } while (accept(','));
    expect(']');
    expect(')');
    expect_end();
    for (std::size_t i = 0; i < q.insertions.size(); ++i) {
      const Complex z = q.insertions[i].point;
      if (!q.domain.contains(z)) fail("point " + format_complex(z) + " is not inside " + q.domain.descriptor(), offsets[i]);
      for (std::size_t j = 0; j < i; ++j)
        if (q.insertions[j].point == z) fail("coincident points", offsets[i]);
    }
    return q;
  }

 private:
  std::string_view text_;
  const FockSpace& space_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t offset, std::size_t line, std::size_t column)
    : std::runtime_error(message + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
      message_(message),
      offset_(offset),
      line_(line),
      column_(column) {}

State parse_state(std::string_view text, const FockSpace& space) {
  Parser p(text, space);
  State s = p.state();
  p.expect_end();
  return s;
}

CorrelatorQuery parse_query(std::string_view text, const FockSpace& space) {
  Parser p(text, space);
  return p.query();
}

Domain parse_domain(std::string_view text) {
  const FockSpace space;
  Parser p(text, space);
  Domain d = p.domain();
  p.expect_end();
  return d;
}

Generator parse_generator(std::string_view text) {
  const FockSpace space;
  Parser p(text, space);
  Generator g = p.generator();
  p.expect_end();
  return g;
}

Complex parse_complex(std::string_view text) {
  const FockSpace space;
  Parser p(text, space);
  Complex z = p.complex_literal(false);
  p.expect_end();
  return z;
}

std::string render(const BasisWord& w) {
  std::string out;
  for (const Generator& g : w.generators()) {
    if (!out.empty()) out += '*';
    out += to_string(g);
  }
  return out + "|omega>";
}

std::string render(const State& s) {
  if (s.is_zero()) return "0*omega";
  std::string out;
  for (const auto& [w, c] : s) {
    const bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = abs(c);
    if (magnitude != 1) out += magnitude.get_str() + "*";
    out += render(w);
  }
  return out;
}

std::string render(const CorrelatorQuery& q) {
  std::string out = "corr(" + q.domain.descriptor() + "; " + format_complex(q.alpha) + "; [";
  for (std::size_t i = 0; i < q.insertions.size(); ++i) {
    if (i) out += ", ";
    out += render(q.insertions[i].state) + "@" + format_complex(q.insertions[i].point);
  }
  return out + "])";
}

}  // namespace symfer
