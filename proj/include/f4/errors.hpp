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

#include <stdexcept>
#include <string>

namespace f4 {

class F4Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

#define F4_ERROR(Name)                                              \
  class Name : public F4Error {                                     \
   public:                                                          \
    using F4Error::F4Error;                                         \
    const char* kind() const noexcept override { return #Name; }    \
  }

F4_ERROR(DomainError);          // precondition on an argument
F4_ERROR(VerificationError);    // automorphism residual too large
F4_ERROR(DegeneratePairing);    // pairing with P- vanishes
F4_ERROR(DegenerateCell);       // element lies on a lower-dimensional cell
F4_ERROR(ShapeViolation);       // closed-cell zero pattern not met
F4_ERROR(ConvergenceError);     // numerical solve or factorization lost accuracy
F4_ERROR(NonConvergent);        // quadrature error estimate too large
F4_ERROR(PoleError);            // Gamma pole
F4_ERROR(SyntaxError);          // word DSL

#undef F4_ERROR

}  // namespace f4
