/*
 * Copyright 2026 The f4decomp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "f4/wordlang.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "f4/errors.hpp"

namespace f4 {

namespace {

// Parses a whitespace-free copy of the source; pos_ maps back to offsets
// in the original text for error messages.
class Parser {
 public:
  explicit Parser(const std::string& src) {
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (std::isspace(static_cast<unsigned char>(src[i]))) continue;
      s_.push_back(src[i]);
      pos_.push_back(i);
    }
    pos_.push_back(src.size());
  }

  GroupWord parse() {
    GroupWord w = word();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return w;
  }

 private:
  std::string s_;
  std::vector<std::size_t> pos_;
  std::size_t i_ = 0;
  int depth_ = 0;

  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    throw SyntaxError("position " + std::to_string(pos_[std::min(at, s_.size())]) + ": " + what);
  }
  [[noreturn]] void fail(const std::string& what) const { fail(what, i_); }

  bool eof() const { return i_ >= s_.size(); }
  bool peek(char c) const { return !eof() && s_[i_] == c; }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++i_;
    return true;
  }
  bool accept(const char* tok) {
    const std::size_t n = std::char_traits<char>::length(tok);
    if (s_.compare(i_, n, tok) != 0) return false;
    i_ += n;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  GroupWord word() {
    GroupWord w;
    w.factors.push_back(factor());
    while (accept('*')) w.factors.push_back(factor());
    return w;
  }

  Factor factor() {
    Factor f;
    if (accept('(')) {
      if (++depth_ > 256) fail("nesting too deep");
      f.base = std::make_shared<const GroupWord>(word());
      --depth_;
      expect(')');
    } else {
      f.base = atom();
    }
    if (accept('^')) f.power = integer("exponent");
    return f;
  }

  int integer(const char* what) {
    const std::size_t start = i_;
    if (peek('+') || peek('-')) ++i_;
    while (!eof() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    int v = 0;
    const char* b = s_.data() + start + (s_[start] == '+' ? 1 : 0);
    const auto r = std::from_chars(b, s_.data() + i_, v);
    if (r.ec != std::errc() || r.ptr != s_.data() + i_)
      fail(std::string("expected integer ") + what, start);
    return v;
  }

  double real() {
    const std::size_t start = i_;
    while (!eof() && s_[i_] != ';' && s_[i_] != ')') ++i_;
    const char* b = s_.data() + start;
    if (b != s_.data() + i_ && *b == '+') ++b;
    double v = 0;
    const auto r = std::from_chars(b, s_.data() + i_, v);
    if (r.ec != std::errc() || r.ptr != s_.data() + i_) fail("expected real number", start);
    return v;
  }

  // Octonion literal up to the next ',', ';' or ')'.
  Octonion oct() {
    const std::size_t start = i_;
    while (!eof() && s_[i_] != ',' && s_[i_] != ';' && s_[i_] != ')') ++i_;
    if (i_ == start) fail("expected octonion literal", start);
    try {
      return parse_octonion(s_.substr(start, i_ - start));
    } catch (const std::invalid_argument& e) {
      fail(std::string("bad octonion literal: ") + e.what(), start);
    }
  }

  Atom atom() {
    Atom a;
    const std::size_t start = i_;
    if (accept("D4")) {
      a.kind = Atom::Kind::D4;
      expect('(');
      a.index = integer("D4 index");
      expect(',');
      a.o1 = oct();
      expect(',');
      a.o2 = oct();
      a.has_o2 = true;
      expect(')');
    } else if (accept('A')) {
      a.kind = Atom::Kind::A;
      a.index = integer("A index");
      expect('(');
      a.t = real();
      if (!peek(';')) fail("expected ';' and direction");
      ++i_;
      a.o1 = oct();
      expect(')');
    } else if (accept('G')) {
      a.kind = Atom::Kind::G;
      if (accept("m1")) a.index = -1;
      else if (accept("m2")) a.index = -2;
      else if (accept('1')) a.index = 1;
      else if (accept('2')) a.index = 2;
      else fail("expected G level 1, 2, m1 or m2");
      expect('(');
      a.o1 = oct();
      if ((a.index == 1 || a.index == -1) && accept(';')) {
        a.o2 = oct();
        a.has_o2 = true;
      }
      expect(')');
    } else if (accept('S')) {
      a.kind = Atom::Kind::S;
      a.index = integer("S index");
    } else {
      fail(eof() ? "unexpected end of word" : "expected atom", start);
    }
    return a;
  }
};

std::string format_real(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

void print_into(const GroupWord& w, std::string& out);

void print_atom(const Atom& a, std::string& out) {
  switch (a.kind) {
    case Atom::Kind::A:
      out += "A" + std::to_string(a.index) + "(" + format_real(a.t) + ";" +
             format_octonion(a.o1) + ")";
      break;
    case Atom::Kind::G: {
      static const char* names[] = {"Gm2", "Gm1", "", "G1", "G2"};
      out += names[a.index + 2];
      out += "(" + format_octonion(a.o1);
      if (a.has_o2) out += ";" + format_octonion(a.o2);
      out += ")";
      break;
    }
    case Atom::Kind::S:
      out += "S" + std::to_string(a.index);
      break;
    case Atom::Kind::D4:
      out += "D4(" + std::to_string(a.index) + "," + format_octonion(a.o1) + "," +
             format_octonion(a.o2) + ")";
      break;
  }
}

void print_into(const GroupWord& w, std::string& out) {
  for (std::size_t k = 0; k < w.factors.size(); ++k) {
    if (k) out += "*";
    const Factor& f = w.factors[k];
    if (const Atom* a = std::get_if<Atom>(&f.base)) {
      print_atom(*a, out);
    } else {
      out += "(";
      print_into(*std::get<std::shared_ptr<const GroupWord>>(f.base), out);
      out += ")";
    }
    if (f.power != 1) out += "^" + std::to_string(f.power);
  }
}

GroupElement eval_atom(const Atom& a) {
  switch (a.kind) {
    case Atom::Kind::A:
      return exp_A(a.index, a.t, a.o1);
    case Atom::Kind::G: {
      const int sign = a.index > 0 ? 1 : -1;
      if (a.index == 1 || a.index == -1) return exp_N(sign, a.o1, a.has_o2 ? a.o2 : Octonion());
      return exp_N(sign, Octonion(), a.o1);
    }
    case Atom::Kind::S:
      return sigma(a.index);
    case Atom::Kind::D4:
      return d4_rotate(a.index, a.o1, a.o2);
  }
  throw DomainError("eval: unknown atom");
}

GroupElement power(const GroupElement& g, int n) {
  GroupElement base = n < 0 ? g.inverse() : g;
  unsigned k = n < 0 ? -static_cast<unsigned>(n) : static_cast<unsigned>(n);
  GroupElement acc;
  for (; k; k >>= 1) {
    if (k & 1u) acc = acc * base;
    if (k > 1) base = base * base;
  }
  return acc;
}

Octonion scaled_unit(std::mt19937_64& rng, double s) { return s * random_unit(rng); }

}  // namespace

GroupWord parse_word(const std::string& src) { return Parser(src).parse(); }

std::string print_word(const GroupWord& w) {
  std::string out;
  print_into(w, out);
  return out;
}

GroupElement eval_word(const GroupWord& w) {
  GroupElement g;
  for (const Factor& f : w.factors) {
    const GroupElement base = std::holds_alternative<Atom>(f.base)
                                  ? eval_atom(std::get<Atom>(f.base))
                                  : eval_word(*std::get<std::shared_ptr<const GroupWord>>(f.base));
    g = g * power(base, f.power);
  }
  return g;
}

GroupElement eval_word(const std::string& src) { return eval_word(parse_word(src)); }

GroupWord random_word(std::mt19937_64& rng, const RandomWordSpec& spec) {
  std::uniform_int_distribution<int> len(1, spec.max_length), kind(0, 6), idx(1, 3);
  std::uniform_real_distribution<double> t(-spec.t_range, spec.t_range);
  std::bernoulli_distribution up(0.5);
  GroupWord w;
  const int n = len(rng);
  for (int k = 0; k < n; ++k) {
    Atom a;
    switch (kind(rng)) {
      case 0:
        a.kind = Atom::Kind::A;
        a.index = idx(rng);
        a.t = t(rng);
        a.o1 = random_unit(rng);
        break;
      case 1:
      case 2:
        a.kind = Atom::Kind::G;
        a.index = up(rng) ? 1 : -1;
        a.o1 = random_octonion(rng, spec.n_scale);
        a.o2 = random_imag(rng, spec.n_scale);
        a.has_o2 = true;
        break;
      case 3:
      case 4:
        a.kind = Atom::Kind::G;
        a.index = up(rng) ? 2 : -2;
        a.o1 = random_imag(rng, spec.n_scale);
        break;
      case 5:
        a.kind = Atom::Kind::S;
        a.index = idx(rng);
        break;
      default:
        a.kind = Atom::Kind::D4;
        a.index = idx(rng);
        a.o1 = scaled_unit(rng, spec.d4_scale);
        a.o2 = scaled_unit(rng, spec.d4_scale);
        a.has_o2 = true;
        break;
    }
    w.factors.push_back(Factor{a, 1});
  }
  return w;
}

GroupWord random_ast(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> len(1, 4), pw(-3, 3), coin(0, 3), exp10(-12, 12);
  std::uniform_real_distribution<double> mant(-1.0, 1.0);
  auto wild = [&] { return mant(rng) * std::pow(10.0, exp10(rng)); };
  auto oct = [&] {
    Octonion o;
    for (int i = 0; i < 8; ++i)
      if (coin(rng)) o[i] = wild();
    return o;
  };
  RandomWordSpec spec;
  spec.max_length = 1;
  GroupWord w;
  const int n = len(rng);
  for (int k = 0; k < n; ++k) {
    Factor f;
    if (depth > 0 && coin(rng) == 0) {
      f.base = std::make_shared<const GroupWord>(random_ast(rng, depth - 1));
    } else {
      Atom a = std::get<Atom>(random_word(rng, spec).factors.front().base);
      if (a.kind == Atom::Kind::A) a.t = wild();
      if (a.kind != Atom::Kind::S) a.o1 = oct();
      if (a.has_o2) a.o2 = oct();
      f.base = a;
    }
    f.power = pw(rng);
    w.factors.push_back(f);
  }
  return w;
}

}  // namespace f4
