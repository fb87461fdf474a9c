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

#include <doctest.h>

#include "f4/errors.hpp"
#include "f4/jordan.hpp"
#include "f4/wordlang.hpp"
#include "helpers.hpp"

using namespace f4;
using f4::test::max_diff;
using f4::test::random_jordan;

namespace {

// Cubic norm written out coordinate by coordinate.
double det_explicit(const JordanElement& X) {
  const double a = X.xi(1), b = X.xi(2), c = X.xi(3);
  const Octonion x1 = X.x(1), x2 = X.x(2), x3 = X.x(3);
  return a * b * c - 2.0 * re((x1 * x2) * x3) - a * norm_sq(x1) + b * norm_sq(x2) +
         c * norm_sq(x3);
}

JordanElement random_in_orbit(std::mt19937_64& rng, const JordanElement& base) {
  return eval_word(random_word(rng))(base);
}

}  // namespace

TEST_CASE("named elements and the inner product") {
  CHECK(inner(P_minus(), E_(1)) == -1.0);
  CHECK(inner(P_minus(), P_minus()) == 0.0);
  CHECK(trace(E()) == 3.0);
  CHECK(inner(P_minus(), sigma_P_minus()) == 4.0);
}

TEST_CASE("cross products") {
  CHECK(norm_inf(cross_square(E_(1))) == 0.0);
  CHECK(max_diff(cross_square(E()), E()) == 0.0);
  CHECK(norm_inf(cross_square(P_minus())) == 0.0);
  CHECK(max_diff(cross(E_(1), E_(2)), 0.5 * E_(3)) < 1e-15);
  CHECK(det(E()) == 1.0);
}

TEST_CASE("cubic norm: trace form against explicit cubic") {
  std::mt19937_64 rng(21);
  for (int s = 0; s < 300; ++s) {
    const JordanElement X = random_jordan(rng);
    CHECK(det(X) == doctest::Approx(det_explicit(X)).epsilon(1e-10));
  }
}

TEST_CASE("Jordan product: unit, commutativity, Jordan identity") {
  std::mt19937_64 rng(22);
  for (int s = 0; s < 100; ++s) {
    const JordanElement X = random_jordan(rng), Y = random_jordan(rng);
    CHECK(max_diff(jordan_mul(E(), X), X) < 1e-14);
    CHECK(max_diff(jordan_mul(X, Y), jordan_mul(Y, X)) < 1e-14);
    const JordanElement X2 = jordan_mul(X, X);
    CHECK(max_diff(jordan_mul(X2, jordan_mul(X, Y)), jordan_mul(X, jordan_mul(X2, Y))) < 1e-9);
    // Adjoint identity (X#)# = det(X) X.
    CHECK(max_diff(cross_square(cross_square(X)), det(X) * X) < 1e-9);
  }
}

TEST_CASE("coordinate view") {
  const CoordView p = coords(P_minus());
  CHECK(p.s == 1.0);
  CHECK(p.r == 0.0);
  CHECK(p.u == 0.0);
  CHECK(p.v == 0.0);
  const CoordView r = coords(E_(2) - E_(1));
  CHECK(r.r == doctest::Approx(1.0));
  CHECK(r.s == doctest::Approx(0.0));
  const CoordView q = coords(Q_minus(Octonion::unit(2)));
  CHECK(max_diff(q.y, Octonion::unit(2)) < 1e-15);
  CHECK(max_abs(q.x) < 1e-15);
  std::mt19937_64 rng(23);
  for (int s = 0; s < 100; ++s) {
    const JordanElement X = random_jordan(rng);
    CHECK(max_diff(from_coords(coords(X)), X) < 1e-14);
  }
}

TEST_CASE("orbit membership") {
  const Membership e1 = classify(E_(1));
  CHECK(e1.in_H);
  CHECK(e1.in_R1);
  CHECK(classify(P_minus()).in_N1m);
  const Membership e = classify(E());
  CHECK_FALSE(e.in_R1);
  CHECK_FALSE(e.in_H);
  CHECK_FALSE(e.in_N1m);
  CHECK(classify(E_(2)).in_Hp);
}

TEST_CASE("sign inequalities between orbits") {
  std::mt19937_64 rng(24);
  for (int s = 0; s < 300; ++s) {
    const JordanElement X = random_in_orbit(rng, E_(1));
    const JordanElement Xp = random_in_orbit(rng, E_(2));
    const JordanElement Y = random_in_orbit(rng, P_minus());
    const JordanElement Z = random_in_orbit(rng, P_minus());
    CHECK(inner(X, Y) < 0.0);
    CHECK(inner(Xp, Y) >= -1e-9 * norm_inf(Xp) * norm_inf(Y));
    CHECK(inner(Y, Z) >= -1e-9 * norm_inf(Y) * norm_inf(Z));
    const JordanElement y = normalize_ray(Y);
    CHECK(std::fabs(inner(y, y)) < 1e-9 * norm_inf(y) * norm_inf(y));
  }
}

TEST_CASE("unit sphere parametrization of the flag rays") {
  CHECK(max_diff(s15_from(Octonion(), Octonion(1)), P_minus()) == 0.0);
  CHECK(max_diff(s15_from(Octonion(1), Octonion()), P13_minus()) == 0.0);
  CHECK_THROWS_AS(s15_from(Octonion(1), Octonion(1)), DomainError);
  CHECK_THROWS_AS(s15_to(E()), DomainError);
  std::mt19937_64 rng(25);
  for (int s = 0; s < 1000; ++s) {
    Octonion x = random_octonion(rng), y = random_octonion(rng);
    const double n = std::sqrt(norm_sq(x) + norm_sq(y));
    x = x / n;
    y = y / n;
    const JordanElement X = s15_from(x, y);
    CHECK(classify(X).in_N1m);
    const auto [u, v] = s15_to(X);
    CHECK(max_diff(u, x) < 1e-10);
    CHECK(max_diff(v, y) < 1e-10);
  }
}

TEST_CASE("only E1 in the hyperboloid sheet has (E1|X) = 1") {
  std::mt19937_64 rng(26);
  for (int s = 0; s < 200; ++s) {
    const JordanElement X = random_in_orbit(rng, E_(1));
    CHECK(X.xi(1) >= 1.0 - 1e-9 * norm_inf(X));
  }
  // S^8 of xi(E2 - E3) + F1(x) lies in H' with (E1|X) = 0.
  for (int s = 0; s < 200; ++s) {
    Octonion x = random_octonion(rng);
    double xi = std::normal_distribution<double>()(rng);
    const double n = std::sqrt(xi * xi + norm_sq(x));
    x = x / n;
    xi /= n;
    const JordanElement X = 0.5 * (E() - E_(1)) + 0.5 * (xi * (E_(2) - E_(3)) + F(1, x));
    const Membership m = classify(X);
    CHECK(m.in_Hp);
    CHECK(std::fabs(X.xi(1)) < 1e-15);
  }
}
