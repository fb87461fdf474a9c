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

// Group words:
//
//   word   := factor ('*' factor)*
//   factor := atom ('^' int)?
//   atom   := 'A' i '(' real ';' oct ')'          exp(t A_i(a)), a a unit
//           | 'G1' '(' oct (';' oct)? ')'        exp(G_1(x) + G_2(p))
//           | 'Gm1' '(' oct (';' oct)? ')'       exp(G_-1(x) + G_-2(p))
//           | 'G2' '(' oct ')' | 'Gm2' '(' oct ')'
//           | 'S' i
//           | 'D4' '(' j ',' oct ',' oct ')'     d4_rotate(j, u, v)
//           | '(' word ')'
//
// Words act on the left of algebra vectors and multiply left to right.

#pragma once

#include <memory>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "f4/liegroup.hpp"

namespace f4 {

struct Atom {
  enum class Kind { A, G, S, D4 };
  Kind kind = Kind::S;
  int index = 1;  // i for A and S, level (1, 2, -1, -2) for G, j for D4
  double t = 0;   // A only
  Octonion o1;    // direction, x, p or u
  Octonion o2;    // p for G levels +-1, v for D4
  bool has_o2 = false;
};

struct GroupWord;

struct Factor {
  std::variant<Atom, std::shared_ptr<const GroupWord>> base;
  int power = 1;
};

struct GroupWord {
  std::vector<Factor> factors;
};

/// Throws SyntaxError with the byte offset of the failure.
GroupWord parse_word(const std::string& src);

/// Canonical text; parse_word(print_word(w)) evaluates to the same matrix.
std::string print_word(const GroupWord& w);

/// Product of the verified generator matrices, left to right.
GroupElement eval_word(const GroupWord& w);
GroupElement eval_word(const std::string& src);

struct RandomWordSpec {
  int max_length = 8;
  double t_range = 0.4;   // A-atom parameter drawn from [-t_range, t_range]
  double n_scale = 0.25;  // Gaussian scale of N-atom coordinates
  double d4_scale = 1.0;  // norm of D4-atom vectors
};

/// Random word over every atom kind, uniformly, of length 1..max_length.
GroupWord random_word(std::mt19937_64& rng, const RandomWordSpec& spec = {});

/// Random nested word with arbitrary powers and literals, up to the given
/// nesting depth. Not meant for evaluation.
GroupWord random_ast(std::mt19937_64& rng, int depth);

}  // namespace f4
