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

#include "f4/octonion.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace f4 {

namespace {

// Formats a double with the shortest fixed-notation round-trip repr.
std::string shortest(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed);
  if (res.ec != std::errc()) throw std::runtime_error("to_chars failed");
  return std::string(buf, res.ptr);
}

}  // namespace

Octonion parse_octonion(const std::string& text) {
  Octonion out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto skip = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const char* what) {
    throw std::invalid_argument(std::string("octonion literal: ") + what +
                                " at position " + std::to_string(i) + " in '" +
                                text + "'");
  };
  skip();
  if (i == n) fail("empty literal");
  bool first = true;
  while (true) {
    skip();
    if (i == n) break;
    double sign = 1.0;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1.0 : 1.0;
      ++i;
      skip();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    double coef = 1.0;
    bool have_coef = false;
    if (i < n && (std::isdigit(static_cast<unsigned char>(text[i])) ||
                  text[i] == '.')) {
      std::size_t j = i;
      while (j < n && (std::isdigit(static_cast<unsigned char>(text[j])) ||
                       text[j] == '.'))
        ++j;
      auto res = std::from_chars(text.data() + i, text.data() + j, coef,
                                 std::chars_format::fixed);
      if (res.ec != std::errc() || res.ptr != text.data() + j)
        fail("bad coefficient");
      i = j;
      have_coef = true;
    }
    skip();
    int basis = 0;
    if (i < n && text[i] == 'e') {
      ++i;
      if (i >= n || text[i] < '1' || text[i] > '7') fail("expected e1..e7");
      basis = text[i] - '0';
      ++i;
    } else if (!have_coef) {
      fail("expected coefficient or basis token");
    }
    out.c[basis] += sign * coef;
  }
  return out;
}

std::string format_octonion(const Octonion& x) {
  std::string s;
  for (int k = 0; k < 8; ++k) {
    double v = x.c[k];
    if (v == 0.0) continue;
    std::string mag = shortest(std::fabs(v));
    if (v < 0)
      s += '-';
    else if (!s.empty())
      s += '+';
    if (k == 0) {
      s += mag;
    } else {
      if (mag != "1") s += mag;
      s += 'e';
      s += static_cast<char>('0' + k);
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace f4
