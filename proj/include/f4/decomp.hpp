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

#pragma once

#include "f4/liegroup.hpp"

namespace f4 {

/// Parameters (x, p) of exp(G_{+-1}(x) + G_{+-2}(p)); re(p) = 0.
struct NParams {
  Octonion x;
  Octonion p;
};

GroupElement n_plus(const NParams& n);   // exp_N(+1, x, p)
GroupElement n_minus(const NParams& n);  // exp_N(-1, x, p)

/// g = k a_t exp_N(+, n), k fixes E1.
struct IwasawaFactors {
  GroupElement k;
  double t = 0;
  NParams n;
  double residual = 0;
};

/// g = k_eps a_t exp_N(+, n), k_eps fixes E2.
struct KEpsFactors {
  GroupElement k;
  double t = 0;
  NParams n;
  double residual = 0;
};

enum class Cell { Open, Closed };
const char* to_string(Cell c);

/// g = k_eps (g0 if closed) m a_t exp_N(+, n).
struct MatsukiFactors {
  Cell cell = Cell::Open;
  GroupElement k_eps;
  bool w = false;
  GroupElement m;
  double t = 0;
  NParams n;
  double residual = 0;
};

/// g = exp_N(-, z) m a_t exp_N(+, n).
struct GaussFactors {
  NParams z;
  GroupElement m;
  double t = 0;
  NParams n;
  double residual = 0;
};

/// n_X = n_1(X) n_2(X) as N+ parameters; requires (P-|X) != 0.
NParams n_pair(const JordanElement& X);

/// Closed form of n_X X for rank-one X.
JordanElement nx_closed_form(const JordanElement& X);

IwasawaFactors iwasawa(const GroupElement& g);
KEpsFactors keps_iwasawa(const GroupElement& g);
MatsukiFactors matsuki(const GroupElement& g);
GaussFactors gauss(const GroupElement& g);
Cell bruhat_classify(const GroupElement& g);
Cell matsuki_classify(const GroupElement& g);

/// z_X in N- with z_X X = (X|sigma P-)/4 P-.
NParams z_of_X(const JordanElement& X);

enum class KEpsOrbit { P12, P13 };
enum class NMinusOrbit { P, SigmaP };
const char* to_string(KEpsOrbit o);
const char* to_string(NMinusOrbit o);

/// K_eps orbit of the ray [X] with witness k: k X = scale * (P12- or P13-).
struct KEpsClassification {
  KEpsOrbit orbit = KEpsOrbit::P12;
  GroupElement witness;
  double scale = 0;
};

KEpsClassification flag_classify_keps(const JordanElement& X);
NMinusOrbit flag_classify_nminus(const JordanElement& X);

/// True iff g P- is a positive multiple of P-.
bool stabilizer_flag(const GroupElement& g);

double reconstruction_error(const Mat27& product, const GroupElement& g);

}  // namespace f4
