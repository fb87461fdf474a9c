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

#include <json.hpp>
#include <string>
#include <vector>

#include "f4/decomp.hpp"

namespace f4 {

using json = nlohmann::json;

json to_json(const Octonion& o);         // [8 reals]
json imag_to_json(const Octonion& p);    // [7 reals], the e1..e7 part
json to_json(const NParams& n);          // {"x": [8], "p": [7]}
json to_json(const JordanElement& X);    // {"xi": [3], "x1": [8], "x2": [8], "x3": [8]}
json to_json(const Mat27& m);            // 729 reals, row-major
json to_json(const GroupElement& g);     // {"mat": [...], "residual": r}
json to_json(const AlgebraElement& a);   // {"mat": [...]}

json to_json(const IwasawaFactors& f);
json to_json(const KEpsFactors& f);
json to_json(const MatsukiFactors& f);
json to_json(const GaussFactors& f);

Octonion octonion_from_json(const json& j);
NParams nparams_from_json(const json& j);
JordanElement jordan_from_json(const json& j);

/// Accepts {"mat": [729]}, a flat [729] array or 27 rows of 27.
/// Throws DomainError.
Mat27 matrix_from_json(const json& j);

/// Product of the emitted factors of a factorization record, for re-validation.
Mat27 recompose(const json& record);

/// Copy with every number rounded to 9 decimals and -0 written as 0.
json round_for_fixture(const json& j);

/// Fixture expectation for one word: parameters and cells of every
/// factorization, or the error kind where one is raised.
json fixture_expect(const std::string& word);

/// The checked-in fixture word list.
std::vector<std::string> fixture_words();

}  // namespace f4
