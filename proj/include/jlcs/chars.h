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

#ifndef JLCS_CHARS_H_
#define JLCS_CHARS_H_

// Additive and multiplicative characters of finite fields with values in a
// cyclotomic ring. The ring modulus must be divisible by p (additive) or
// by |F^x| (multiplicative).

#include <cstdint>

#include "jlcs/cyc.h"
#include "jlcs/ff.h"

namespace jlcs::chars {

// x -> z_p^{Tr_{F/F_p}(t x)} with t != 0.
class AddChar {
 public:
  AddChar(ff::FieldPtr field, const ff::FFElem& twist, cyc::RingPtr ring);

  const ff::FieldPtr& field() const { return field_; }
  const ff::FFElem& twist() const { return twist_; }
  const cyc::RingPtr& ring() const { return ring_; }

  // Exponent e in [0, p) with value z_p^e, on raw indices.
  uint32_t exponent_idx(uint32_t x) const { return field_->abs_trace(field_->mul(twist_.index(), x)); }
  // The same exponent scaled to z_M.
  uint64_t ring_exponent_idx(uint32_t x) const { return uint64_t{exponent_idx(x)} * step_; }
  cyc::CycValue eval(const ff::FFElem& x) const;

 private:
  ff::FieldPtr field_;
  ff::FFElem twist_;
  cyc::RingPtr ring_;
  uint64_t step_ = 0;  // M / p
};

// g^i -> z_{Q-1}^{i j} for the fixed generator g.
class MultChar {
 public:
  MultChar(ff::FieldPtr field, int64_t exponent, cyc::RingPtr ring);

  const ff::FieldPtr& field() const { return field_; }
  uint32_t exponent() const { return exponent_; }
  const cyc::RingPtr& ring() const { return ring_; }
  bool is_trivial() const { return exponent_ == 0; }

  // Exponent of z_M for a nonzero index.
  uint64_t ring_exponent_idx(uint32_t x) const;
  cyc::CycValue eval(const ff::FFElem& x) const;
  // chi^k.
  MultChar power(int64_t k) const;

 private:
  ff::FieldPtr field_;
  uint32_t exponent_ = 0;
  cyc::RingPtr ring_;
  uint64_t step_ = 0;  // M / (Q - 1)
};

cyc::CycValue eval_add(const AddChar& psi, const ff::FFElem& x);
cyc::CycValue eval_mult(const MultChar& chi, const ff::FFElem& x);

// psi composed with Tr_{ext/psi.field}. The twist of the result is the
// embedded twist, since Tr(t x) = t Tr(x) for t in the base.
AddChar inflate_add(const AddChar& psi, const ff::FieldPtr& ext);

}  // namespace jlcs::chars

#endif  // JLCS_CHARS_H_
