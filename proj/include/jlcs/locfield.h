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

#ifndef JLCS_LOCFIELD_H_
#define JLCS_LOCFIELD_H_

// Truncated Laurent series over a finite field F, modelling F((w)) for a
// formal uniformizer w.
//
// A value is known modulo w^prec. Coefficients are stored densely from the
// valuation up to the last nonzero term; terms between that and prec are
// zero. Exact values (finite Laurent polynomials such as Teichmuller
// constants or powers of w) carry prec == kExact and never limit the
// precision of a result.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "jlcs/chars.h"
#include "jlcs/cyc.h"
#include "jlcs/ff.h"

namespace jlcs::locfield {

inline constexpr int64_t kExact = int64_t{1} << 40;
inline constexpr int64_t kDefaultPrecision = 8;

class LaurentTrunc {
 public:
  LaurentTrunc() = default;

  static LaurentTrunc zero(const ff::FieldDesc& field, int64_t prec = kExact);
  static LaurentTrunc one(const ff::FieldDesc& field);
  // c w^power, exact.
  static LaurentTrunc monomial(const ff::FFElem& c, int64_t power);
  // sum_i coeffs[i] w^{val + i} mod w^prec, coefficients as field indices.
  static LaurentTrunc from_indices(const ff::FieldDesc& field, int64_t val,
                                   std::vector<uint32_t> coeffs, int64_t prec);

  const ff::FieldDesc& field() const { return *field_; }
  const ff::FieldDesc* field_ptr() const { return field_; }
  bool valid() const { return field_ != nullptr; }
  // Valuation of the lowest nonzero tracked term; prec when is_zero().
  int64_t val() const { return val_; }
  int64_t prec() const { return prec_; }
  bool exact() const { return prec_ >= kExact; }
  // All tracked terms vanish.
  bool is_zero() const { return val_ >= prec_; }
  // Coefficient of w^v; PrecisionError for v >= prec.
  ff::FFElem coeff(int64_t v) const;
  const std::vector<uint32_t>& stored() const { return coeffs_; }

  LaurentTrunc operator+(const LaurentTrunc& o) const;
  LaurentTrunc operator-(const LaurentTrunc& o) const;
  LaurentTrunc operator-() const;
  LaurentTrunc operator*(const LaurentTrunc& o) const;
  LaurentTrunc& operator+=(const LaurentTrunc& o) { return *this = *this + o; }
  LaurentTrunc& operator-=(const LaurentTrunc& o) { return *this = *this - o; }
  LaurentTrunc& operator*=(const LaurentTrunc& o) { return *this = *this * o; }
  // Product with a constant of the coefficient field.
  LaurentTrunc scaled(const ff::FFElem& c) const;
  // Multiplication by w^k.
  LaurentTrunc shift(int64_t k) const;
  // Inverse; an exact non-monomial input is expanded to fallback_prec.
  // DomainError when no term is known to be nonzero.
  LaurentTrunc inverse(int64_t fallback_prec = kDefaultPrecision) const;
  // Lowers prec to at most p.
  LaurentTrunc truncated(int64_t p) const;
  // Applies a ring automorphism (given on indices) to every coefficient.
  LaurentTrunc map_coeffs(const std::function<uint32_t(uint32_t)>& f) const;
  // Same series over an extension or a subfield of the coefficient field.
  LaurentTrunc lift_to(const ff::FieldDesc& ext) const;
  std::optional<LaurentTrunc> restrict_to(const ff::FieldDesc& sub) const;

  // Difference is zero modulo w^{min prec}.
  bool agrees_with(const LaurentTrunc& o) const { return (*this - o).is_zero(); }
  // Exact equality including precision.
  friend bool operator==(const LaurentTrunc& a, const LaurentTrunc& b);

  std::string to_string() const;

 private:
  void normalize();
  const ff::FieldDesc* field_ = nullptr;
  int64_t val_ = kExact;
  int64_t prec_ = kExact;
  std::vector<uint32_t> coeffs_;
};

// Constant lift of c. In equal characteristic the multiplicative section
// of the residue map is the inclusion of constants.
LaurentTrunc teichmuller(const ff::FFElem& c);
// Reduction of an integral element; DomainError for negative valuation,
// PrecisionError when the constant term is beyond prec.
ff::FFElem residue(const LaurentTrunc& x);
inline int64_t valuation(const LaurentTrunc& x) { return x.val(); }
// x - 1 has valuation >= 1.
bool in_principal_units(const LaurentTrunc& x);
// psi of the residue for integral x, x over psi's field.
cyc::CycValue psi_K(const chars::AddChar& psi, const LaurentTrunc& x);

}  // namespace jlcs::locfield

#endif  // JLCS_LOCFIELD_H_
