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

#include "f4/serialize.hpp"

#include <cmath>
#include <random>

#include "f4/errors.hpp"
#include "f4/wordlang.hpp"

namespace f4 {

namespace {

std::vector<double> octonion_array(const Octonion& o) { return {o.c.begin(), o.c.end()}; }

Octonion array_octonion(const json& j, int first, const char* what) {
  const std::size_t want = 8 - first;
  if (!j.is_array() || j.size() != want)
    throw DomainError(std::string(what) + ": expected an array of " + std::to_string(want) +
                      " reals");
  Octonion o;
  for (int k = first; k < 8; ++k) o[k] = j[k - first].get<double>();
  return o;
}

template <class F>
json attempt(F f) {
  try {
    return f();
  } catch (const F4Error& e) {
    return json{{"error", e.kind()}};
  }
}

}  // namespace

json to_json(const Octonion& o) { return octonion_array(o); }

json imag_to_json(const Octonion& p) { return std::vector<double>(p.c.begin() + 1, p.c.end()); }

json to_json(const NParams& n) { return {{"x", to_json(n.x)}, {"p", imag_to_json(n.p)}}; }

json to_json(const JordanElement& X) {
  return {{"xi", {X.xi(1), X.xi(2), X.xi(3)}},
          {"x1", to_json(X.x(1))},
          {"x2", to_json(X.x(2))},
          {"x3", to_json(X.x(3))}};
}

json to_json(const Mat27& m) {
  std::vector<double> v;
  v.reserve(kDim * kDim);
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) v.push_back(m(i, j));
  return v;
}

json to_json(const GroupElement& g) { return {{"mat", to_json(g.mat())}, {"residual", g.residual()}}; }

json to_json(const AlgebraElement& a) { return {{"mat", to_json(a.mat)}}; }

json to_json(const IwasawaFactors& f) {
  return {{"kind", "iwasawa"}, {"k", to_json(f.k)},         {"t", f.t},
          {"n", to_json(f.n)},  {"residual", f.residual}};
}

json to_json(const KEpsFactors& f) {
  return {{"kind", "keps"},    {"cell", "open"},           {"k", to_json(f.k)}, {"t", f.t},
          {"n", to_json(f.n)}, {"residual", f.residual}};
}

json to_json(const MatsukiFactors& f) {
  return {{"kind", "matsuki"}, {"cell", to_string(f.cell)}, {"k", to_json(f.k_eps)},
          {"w", f.w},          {"m", to_json(f.m)},         {"t", f.t},
          {"n", to_json(f.n)}, {"residual", f.residual}};
}

json to_json(const GaussFactors& f) {
  return {{"kind", "gauss"},   {"cell", "open"},   {"z", to_json(f.z)},
          {"m", to_json(f.m)}, {"t", f.t},         {"n", to_json(f.n)},
          {"residual", f.residual}};
}

Octonion octonion_from_json(const json& j) { return array_octonion(j, 0, "octonion"); }

NParams nparams_from_json(const json& j) {
  if (!j.is_object() || !j.contains("x") || !j.contains("p"))
    throw DomainError("N parameters: expected {\"x\": [8], \"p\": [7]}");
  return {array_octonion(j["x"], 0, "N parameter x"), array_octonion(j["p"], 1, "N parameter p")};
}

JordanElement jordan_from_json(const json& j) {
  const json& xi = j.at("xi");
  if (!xi.is_array() || xi.size() != 3) throw DomainError("jordan: \"xi\" must hold 3 reals");
  return JordanElement(xi[0].get<double>(), xi[1].get<double>(), xi[2].get<double>(),
                       array_octonion(j.at("x1"), 0, "x1"), array_octonion(j.at("x2"), 0, "x2"),
                       array_octonion(j.at("x3"), 0, "x3"));
}

Mat27 matrix_from_json(const json& j) {
  const json& a = j.is_object() ? j.at("mat") : j;
  Mat27 m;
  if (a.is_array() && a.size() == kDim * kDim && a[0].is_number()) {
    for (int i = 0; i < kDim; ++i)
      for (int k = 0; k < kDim; ++k) m(i, k) = a[i * kDim + k].get<double>();
    return m;
  }
  if (a.is_array() && a.size() == kDim) {
    for (int i = 0; i < kDim; ++i) {
      if (!a[i].is_array() || a[i].size() != kDim) throw DomainError("matrix: row is not 27 reals");
      for (int k = 0; k < kDim; ++k) m(i, k) = a[i][k].get<double>();
    }
    return m;
  }
  throw DomainError("matrix: expected 729 reals or 27 rows of 27");
}

// Same association as the residual computed by the decompositions, so the
// recomposition error of an emitted record equals its residual.
Mat27 recompose(const json& r) {
  const std::string kind = r.at("kind");
  const Mat27 a = a_t(r.at("t").get<double>()).mat();
  const Mat27 n = n_plus(nparams_from_json(r.at("n"))).mat();
  if (kind == "iwasawa" || kind == "keps") return matrix_from_json(r.at("k")) * a * n;
  if (kind == "matsuki") {
    if (!r.at("w").get<bool>()) return matrix_from_json(r.at("k")) * a * n;
    return matrix_from_json(r.at("k")) * g0().mat() * matrix_from_json(r.at("m")) * a * n;
  }
  if (kind == "gauss")
    return n_minus(nparams_from_json(r.at("z"))).mat() * matrix_from_json(r.at("m")) * a * n;
  throw DomainError("recompose: unknown kind '" + kind + "'");
}

json round_for_fixture(const json& j) {
  if (j.is_number_float()) {
    const double v = std::round(j.get<double>() * 1e9) / 1e9;
    return v == 0.0 ? 0.0 : v;
  }
  if (j.is_array() || j.is_object()) {
    json out = j;
    for (auto it = out.begin(); it != out.end(); ++it) *it = round_for_fixture(*it);
    return out;
  }
  return j;
}

json fixture_expect(const std::string& word) {
  const GroupElement g = eval_word(word);
  json e;
  e["iwasawa"] = attempt([&] {
    const IwasawaFactors f = iwasawa(g);
    return json{{"t", f.t}, {"n", to_json(f.n)}};
  });
  e["keps"] = attempt([&] {
    const KEpsFactors f = keps_iwasawa(g);
    return json{{"t", f.t}, {"n", to_json(f.n)}};
  });
  e["matsuki"] = attempt([&] {
    const MatsukiFactors f = matsuki(g);
    return json{{"cell", to_string(f.cell)}, {"w", f.w}, {"t", f.t}};
  });
  e["gauss"] = attempt([&] {
    const GaussFactors f = gauss(g);
    return json{{"t", f.t}, {"n", to_json(f.n)}, {"z", to_json(f.z)}};
  });
  e["classify"] = attempt([&] {
    return json{{"bruhat", to_string(bruhat_classify(g))},
                {"matsuki", to_string(matsuki_classify(g))}};
  });
  return round_for_fixture(e);
}

std::vector<std::string> fixture_words() {
  std::vector<std::string> words = {
      "S1",
      "S2",
      "S3",
      "S1*S2",
      "A3(0.5;1)",
      "A3(-0.25;1)",
      "A1(0.7;1)",
      "A2(0.4;e3)",
      "A1(-1.5707963267948966;1)",
      "A1(0.3;e5)*A3(0.2;1)",
      "G1(e2)",
      "G2(e1)",
      "Gm1(1+2e3)",
      "Gm2(0.5e7)",
      "Gm1(0.3e1;0.2e4)*A3(0.1;1)",
      "G2(e1)*G1(e2)",
      "D4(1,e1,e2)*A3(0.3;1)",
      "D4(3,1,e6)*Gm1(0.5)",
      "S1*A3(0.4;1)*G1(0.2e5)",
      "(A2(0.2;e1)*Gm2(0.1e2))^2",
      "(S2*G1(e4))^-1",
  };
  std::mt19937_64 rng(20260101);
  while (words.size() < 40) {
    const std::string w = print_word(random_word(rng));
    // Keep words whose every factorization is well conditioned; near-wall
    // Gauss inputs are not bit-stable.
    const json e = fixture_expect(w);
    bool stable = true;
    for (const auto& [op, v] : e.items())
      if (v.contains("error") && v["error"] != "DegenerateCell") stable = false;
    if (stable) words.push_back(w);
  }
  return words;
}

}  // namespace f4
