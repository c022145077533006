// Copyright 2026 The jlcs Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef JLCS_ERROR_H_
#define JLCS_ERROR_H_

#include <stdexcept>
#include <string>

namespace jlcs {

// Base for every error the library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside an operation's domain (zero where a unit is required,
// a field that is not a declared subfield, an element outside an order).
class DomainError : public Error {
 public:
  using Error::Error;
};

// An enumeration or a field would exceed the configured budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// Truncated Laurent data does not determine the requested quantity.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

// A mathematical guarantee failed to hold. Always a bug or a
// counterexample, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace jlcs

#endif  // JLCS_ERROR_H_
