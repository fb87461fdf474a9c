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

// f4decomp: evaluate group words and factor them.
//
// Exit codes: 0 success, 2 degenerate cell, 1 anything else. Errors are
// written to stderr as {"error": kind, "message": text}.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "f4/batch.hpp"
#include "f4/decomp.hpp"
#include "f4/errors.hpp"
#include "f4/harmonic.hpp"
#include "f4/serialize.hpp"
#include "f4/tolerance.hpp"
#include "f4/wordlang.hpp"

namespace {

using namespace f4;

struct Failure {
  std::string kind;
  std::string message;
};

int report(const Failure& f) {
  std::cerr << json{{"error", f.kind}, {"message", f.message}}.dump() << "\n";
  return f.kind == "DegenerateCell" ? 2 : 1;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::complex<double> parse_lambda(const std::string& s) {
  const auto comma = s.find(',');
  try {
    std::size_t used = 0;
    const std::string re = s.substr(0, comma);
    const double r = std::stod(re, &used);
    if (used != re.size()) throw std::invalid_argument(s);
    double i = 0;
    if (comma != std::string::npos) {
      const std::string im = s.substr(comma + 1);
      i = std::stod(im, &used);
      if (used != im.size()) throw std::invalid_argument(s);
    }
    return {r, i};
  } catch (const std::logic_error&) {
    throw DomainError("--lambda expects RE or RE,IM, got '" + s + "'");
  }
}

json complex_json(std::complex<double> z) { return {z.real(), z.imag()}; }

json classify_json(const GroupElement& g) {
  const JordanElement X = g(P_minus());
  return {{"bruhat", to_string(bruhat_classify(g))},
          {"matsuki", to_string(matsuki_classify(g))},
          {"flag_keps", to_string(flag_classify_keps(X).orbit)},
          {"flag_nminus", to_string(flag_classify_nminus(X))}};
}

// ---- selftest ----

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::vector<Check> invariant_suite() {
  std::vector<Check> out;
  std::mt19937_64 rng(7);

  double worst = 0;
  for (int s = 0; s < 1000; ++s) {
    const Octonion a = random_octonion(rng), b = random_octonion(rng);
    worst = std::fmax(worst, std::fabs(norm_sq(a * b) - norm_sq(a) * norm_sq(b)));
    worst = std::fmax(worst, max_abs((a * a) * b - a * (a * b)));
  }
  out.push_back({"octonion composition and alternativity", worst < 1e-12, fmt("%.2e", worst)});

  worst = 0;
  for (int i = 1; i <= 3; ++i) {
    worst = std::fmax(worst, sigma(i).residual());
    worst = std::fmax(worst, exp_A(i, 0.7, random_unit(rng)).residual());
  }
  worst = std::fmax(worst, exp_N(1, random_octonion(rng), random_imag(rng)).residual());
  worst = std::fmax(worst, exp_N(-1, random_octonion(rng), random_imag(rng)).residual());
  out.push_back({"generator verification", worst < 1e-9, fmt("%.2e", worst)});

  const Mat27 I = Mat27::Identity();
  const double e1 = (eval_word("S1*S1").mat() - I).cwiseAbs().maxCoeff();
  const double e2 = (eval_word("A3(0.3;1)*A3(-0.3;1)").mat() - I).cwiseAbs().maxCoeff();
  const double e3 = (eval_word("G2(e1)*G1(e2)").mat() - eval_word("G1(e2)*G2(e1)").mat())
                        .cwiseAbs()
                        .maxCoeff();
  out.push_back({"word identities", e1 == 0 && e2 < 1e-10 && e3 < 1e-10,
                 fmt("%.2e", std::fmax(e1, std::fmax(e2, e3)))});

  std::vector<GroupElement> gs;
  for (int s = 0; s < 100; ++s) gs.push_back(eval_word(random_word(rng)));
  for (auto [d, name] : {std::pair{Decomposition::Iwasawa, "iwasawa round trip"},
                         std::pair{Decomposition::KEps, "keps round trip"}}) {
    double r = 0;
    int failed = 0;
    for (const Outcome& o : decompose_batch(d, gs, Exec::Serial)) {
      if (o.ok) r = std::fmax(r, o.residual);
      else if (o.error != "DegenerateCell") ++failed;
    }
    out.push_back({name, failed == 0 && r < 1e-8,
                   fmt("%.2e", r) + ", " + std::to_string(failed) + " failures"});
  }

  bool closed = false;
  try {
    gauss(sigma(1));
  } catch (const DegenerateCell&) {
    closed = true;
  }
  out.push_back({"sigma_1 in the closed Bruhat cell", closed, ""});

  const double c = std::abs(c_quadrature(SpectralParam{4.0}) / c_gamma(SpectralParam{4.0}) - 1.0);
  out.push_back({"c-function quadrature against Gamma form", c < 1e-5, fmt("%.2e", c)});
  return out;
}

std::vector<Check> replay_fixtures(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open fixture file " + path);
  set_tolerances(Tolerances{});
  std::vector<Check> out;
  std::string line;
  int n = 0, mismatched = 0;
  std::string first_bad;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ++n;
    const json rec = json::parse(line);
    const std::string word = rec.at("word");
    json got;
    try {
      got = fixture_expect(word);
    } catch (const F4Error& e) {
      got = json{{"error", e.kind()}};
    }
    if (got.dump() != rec.at("expect").dump()) {
      ++mismatched;
      if (first_bad.empty()) first_bad = word;
    }
  }
  out.push_back({"fixture replay", n >= 30 && mismatched == 0,
                 std::to_string(n) + " records, " + std::to_string(mismatched) + " mismatched" +
                     (first_bad.empty() ? "" : ", first: " + first_bad)});
  return out;
}

void bless(const std::string& path) {
  set_tolerances(Tolerances{});
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write fixture file " + path);
  for (const std::string& w : fixture_words())
    out << json{{"word", w}, {"expect", fixture_expect(w)}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Group words, factorizations and spherical functions of F4(-20)"};
  app.require_subcommand(1);

  std::string word, out_format = "json", lambda = "22", method = "gamma", matrix_path,
              fixtures, t_list = "0";
  double rel_tol = 1e-6;
  bool do_bless = false;

  auto* eval = app.add_subcommand("eval", "Evaluate a word to a verified 27x27 matrix");
  eval->add_option("--word", word, "Group word")->required();
  eval->add_option("--out", out_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  std::vector<CLI::App*> factor_cmds;
  for (const char* name : {"iwasawa", "keps", "matsuki", "gauss", "classify"}) {
    auto* c = app.add_subcommand(name, std::string("Run ") + name + " on a word");
    c->add_option("--word", word, "Group word")->required();
    factor_cmds.push_back(c);
  }

  auto* cfun = app.add_subcommand("cfunction", "Harish-Chandra c-function");
  cfun->add_option("--lambda", lambda, "lambda_alpha as RE or RE,IM")->required();
  cfun->add_option("--method", method, "gamma or quad")->check(CLI::IsMember({"gamma", "quad"}));
  cfun->add_option("--rel-tol", rel_tol, "Quadrature relative tolerance");

  auto* sph = app.add_subcommand("spherical", "Spherical function on a grid of t");
  sph->add_option("--lambda", lambda, "lambda_alpha as RE or RE,IM")->required();
  sph->add_option("--t", t_list, "Comma-separated t values");
  sph->add_option("--rel-tol", rel_tol, "Quadrature relative tolerance");

  auto* ver = app.add_subcommand("verify", "Automorphism residual of a matrix");
  ver->add_option("--matrix", matrix_path, "JSON file with the matrix")->required();

  auto* self = app.add_subcommand("selftest", "Run the invariant suites");
  self->add_option("--fixtures", fixtures, "Golden fixture file (JSON lines)");
  self->add_flag("--bless", do_bless, "Regenerate the fixture file instead of replaying it");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    return report({"UsageError", e.what()});
  }

  try {
    (void)tolerances();
    if (eval->parsed()) {
      const GroupWord w = parse_word(word);
      const GroupElement g = eval_word(w);
      if (out_format == "text") {
        std::cout << print_word(w) << "\nresidual " << g.residual() << "\n";
      } else {
        json j = to_json(g);
        j["word"] = print_word(w);
        emit(j);
      }
      return 0;
    }
    for (CLI::App* c : factor_cmds) {
      if (!c->parsed()) continue;
      const GroupElement g = eval_word(word);
      const std::string name = c->get_name();
      json j;
      if (name == "iwasawa") j = to_json(iwasawa(g));
      else if (name == "keps") j = to_json(keps_iwasawa(g));
      else if (name == "matsuki") j = to_json(matsuki(g));
      else if (name == "gauss") j = to_json(gauss(g));
      else j = classify_json(g);
      j["word"] = word;
      emit(j);
      return 0;
    }
    if (cfun->parsed()) {
      const SpectralParam lam{parse_lambda(lambda)};
      json j{{"lambda_alpha", complex_json(lam.lambda_alpha)}, {"method", method}};
      if (method == "gamma") {
        j["c"] = complex_json(c_gamma(lam));
      } else {
        const QuadratureResult r = c_quadrature_result(lam, QuadratureSpec{rel_tol});
        j["c"] = complex_json(r.value);
        j["error_estimate"] = r.error;
      }
      emit(j);
      return 0;
    }
    if (sph->parsed()) {
      const SpectralParam lam{parse_lambda(lambda)};
      std::vector<double> ts;
      std::stringstream ss(t_list);
      for (std::string item; std::getline(ss, item, ',');) ts.push_back(std::stod(item));
      const auto vals = spherical_batch(lam, ts, QuadratureSpec{rel_tol}, Exec::Parallel);
      json rows = json::array();
      for (std::size_t i = 0; i < ts.size(); ++i) {
        if (std::isnan(vals[i].real()))
          throw NonConvergent("spherical: quadrature failed at t = " + std::to_string(ts[i]));
        rows.push_back({{"t", ts[i]}, {"phi", complex_json(vals[i])}});
      }
      emit({{"lambda_alpha", complex_json(lam.lambda_alpha)}, {"values", rows}});
      return 0;
    }
    if (ver->parsed()) {
      std::ifstream in(matrix_path);
      if (!in) throw DomainError("cannot open " + matrix_path);
      const Mat27 m = matrix_from_json(json::parse(in));
      const double r = verify(m), bound = verify_bound(m);
      emit({{"residual", r}, {"bound", bound}, {"pass", r < bound}});
      if (!(r < bound)) return report({"VerificationError", "residual exceeds bound"});
      return 0;
    }
    if (self->parsed()) {
      if (do_bless) {
        if (fixtures.empty()) throw DomainError("--bless needs --fixtures FILE");
        bless(fixtures);
        std::cerr << "wrote " << fixtures << "\n";
        return 0;
      }
      std::vector<Check> checks = invariant_suite();
      if (!fixtures.empty())
        for (Check& c : replay_fixtures(fixtures)) checks.push_back(std::move(c));
      bool all = true;
      json arr = json::array();
      for (const Check& c : checks) {
        all = all && c.pass;
        arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      }
      emit({{"checks", arr}, {"pass", all}});
      return all ? 0 : 1;
    }
  } catch (const F4Error& e) {
    return report({e.kind(), e.what()});
  } catch (const json::exception& e) {
    return report({"JsonError", e.what()});
  } catch (const std::exception& e) {
    return report({"InvalidArgument", e.what()});
  }
  return 1;
}
