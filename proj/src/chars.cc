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

#include "jlcs/chars.h"

#include <string>

#include "jlcs/error.h"

namespace jlcs::chars {
namespace {

void check_field(const ff::FieldPtr& field, const ff::FFElem& x) {
  if (!x.valid() || x.field_ptr() != field.get()) {
    throw DomainError("element does not lie in the character's field");
  }
}

}  // namespace

AddChar::AddChar(ff::FieldPtr field, const ff::FFElem& twist, cyc::RingPtr ring)
    : field_(std::move(field)), twist_(twist), ring_(std::move(ring)) {
  if (!field_ || !ring_) throw DomainError("null field or ring");
  check_field(field_, twist_);
  if (twist_.is_zero()) throw DomainError("additive character twist must be nonzero");
  if (ring_->modulus() % field_->p() != 0) {
    throw DomainError("ring modulus " + std::to_string(ring_->modulus()) + " not divisible by p");
  }
  step_ = ring_->modulus() / field_->p();
}

cyc::CycValue AddChar::eval(const ff::FFElem& x) const {
  check_field(field_, x);
  return cyc::CycValue::zeta_power(ring_, static_cast<int64_t>(ring_exponent_idx(x.index())));
}

MultChar::MultChar(ff::FieldPtr field, int64_t exponent, cyc::RingPtr ring)
    : field_(std::move(field)), ring_(std::move(ring)) {
  if (!field_ || !ring_) throw DomainError("null field or ring");
  const int64_t order = field_->unit_order();
  if (ring_->modulus() % order != 0) {
    throw DomainError("ring modulus " + std::to_string(ring_->modulus()) +
                      " not divisible by |F^x| = " + std::to_string(order));
  }
  exponent_ = static_cast<uint32_t>(((exponent % order) + order) % order);
  step_ = ring_->modulus() / order;
}

uint64_t MultChar::ring_exponent_idx(uint32_t x) const {
  if (x == 0) throw DomainError("multiplicative character evaluated at 0");
  const uint64_t order = field_->unit_order();
  return (uint64_t{field_->log_idx(x)} * exponent_ % order) * step_;
}

cyc::CycValue MultChar::eval(const ff::FFElem& x) const {
  check_field(field_, x);
  return cyc::CycValue::zeta_power(ring_, static_cast<int64_t>(ring_exponent_idx(x.index())));
}

MultChar MultChar::power(int64_t k) const {
  const int64_t order = field_->unit_order();
  int64_t e = (static_cast<int64_t>(exponent_) * (k % order)) % order;
  return MultChar(field_, e, ring_);
}

cyc::CycValue eval_add(const AddChar& psi, const ff::FFElem& x) { return psi.eval(x); }
cyc::CycValue eval_mult(const MultChar& chi, const ff::FFElem& x) { return chi.eval(x); }

AddChar inflate_add(const AddChar& psi, const ff::FieldPtr& ext) {
  if (!ext || !ext->has_subfield(*psi.field())) {
    throw DomainError("inflation target does not contain the character's field");
  }
  AddChar out(ext, ext->embed(psi.twist()), psi.ring());
  // Tr is surjective, so some element has nonzero exponent.
  bool nontrivial = false;
  for (uint32_t x = 1; x < ext->size() && !nontrivial; ++x) nontrivial = out.exponent_idx(x) != 0;
  if (!nontrivial) throw InternalError("inflated additive character is trivial");
  return out;
}

}  // namespace jlcs::chars
