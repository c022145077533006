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

#include "jlcs/locfield.h"

#include <algorithm>
#include <sstream>

#include "jlcs/error.h"

namespace jlcs::locfield {
namespace {

int64_t clamp_prec(int64_t p) { return p >= kExact / 2 ? kExact : p; }

void check_same(const LaurentTrunc& a, const LaurentTrunc& b) {
  if (!a.valid() || !b.valid() || a.field_ptr() != b.field_ptr()) {
    throw DomainError("Laurent series over different coefficient fields");
  }
}

}  // namespace

LaurentTrunc LaurentTrunc::zero(const ff::FieldDesc& field, int64_t prec) {
  LaurentTrunc out;
  out.field_ = &field;
  out.prec_ = clamp_prec(prec);
  out.val_ = out.prec_;
  return out;
}

LaurentTrunc LaurentTrunc::one(const ff::FieldDesc& field) { return monomial(field.one(), 0); }

LaurentTrunc LaurentTrunc::monomial(const ff::FFElem& c, int64_t power) {
  return from_indices(c.field(), power, {c.index()}, kExact);
}

LaurentTrunc LaurentTrunc::from_indices(const ff::FieldDesc& field, int64_t val,
                                        std::vector<uint32_t> coeffs, int64_t prec) {
  LaurentTrunc out;
  out.field_ = &field;
  out.val_ = val;
  out.prec_ = clamp_prec(prec);
  out.coeffs_ = std::move(coeffs);
  out.normalize();
  return out;
}

void LaurentTrunc::normalize() {
  // Drop terms at or beyond prec, then zeros at both ends.
  if (!exact() && val_ + static_cast<int64_t>(coeffs_.size()) > prec_) {
    coeffs_.resize(static_cast<size_t>(std::max<int64_t>(0, prec_ - val_)));
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    val_ = prec_;
    return;
  }
  if (lead > 0) coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<ptrdiff_t>(lead));
  val_ += static_cast<int64_t>(lead);
}

ff::FFElem LaurentTrunc::coeff(int64_t v) const {
  if (v >= prec_) {
    throw PrecisionError("coefficient of w^" + std::to_string(v) + " beyond precision " +
                         std::to_string(prec_));
  }
  if (v < val_ || v >= val_ + static_cast<int64_t>(coeffs_.size())) return field_->zero();
  return field_->element(coeffs_[static_cast<size_t>(v - val_)]);
}

LaurentTrunc LaurentTrunc::operator+(const LaurentTrunc& o) const {
  check_same(*this, o);
  const int64_t prec = std::min(prec_, o.prec_);
  if (is_zero() && o.is_zero()) return zero(*field_, prec);
  int64_t lo = std::min(is_zero() ? o.val_ : val_, o.is_zero() ? val_ : o.val_);
  int64_t hi = lo;
  if (!is_zero()) hi = std::max<int64_t>(hi, val_ + static_cast<int64_t>(coeffs_.size()));
  if (!o.is_zero()) hi = std::max<int64_t>(hi, o.val_ + static_cast<int64_t>(o.coeffs_.size()));
  hi = std::min(hi, prec);
  if (hi <= lo) return zero(*field_, prec);
  std::vector<uint32_t> c(static_cast<size_t>(hi - lo), 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    int64_t v = val_ + static_cast<int64_t>(i);
    if (v < hi) c[static_cast<size_t>(v - lo)] = coeffs_[i];
  }
  for (size_t i = 0; i < o.coeffs_.size(); ++i) {
    int64_t v = o.val_ + static_cast<int64_t>(i);
    if (v < hi) {
      auto& slot = c[static_cast<size_t>(v - lo)];
      slot = field_->add(slot, o.coeffs_[i]);
    }
  }
  return from_indices(*field_, lo, std::move(c), prec);
}

LaurentTrunc LaurentTrunc::operator-() const {
  LaurentTrunc out = *this;
  for (auto& c : out.coeffs_) c = field_->neg(c);
  return out;
}

LaurentTrunc LaurentTrunc::operator-(const LaurentTrunc& o) const { return *this + (-o); }

LaurentTrunc LaurentTrunc::operator*(const LaurentTrunc& o) const {
  check_same(*this, o);
  const int64_t prec = clamp_prec(std::min(prec_ + o.val_, o.prec_ + val_));
  if (is_zero() || o.is_zero()) return zero(*field_, prec);
  const int64_t lo = val_ + o.val_;
  int64_t hi = lo + static_cast<int64_t>(coeffs_.size() + o.coeffs_.size()) - 1;
  hi = std::min(hi, prec);
  if (hi <= lo) return zero(*field_, prec);
  std::vector<uint32_t> c(static_cast<size_t>(hi - lo), 0);
  const size_t len = c.size();
  for (size_t i = 0; i < coeffs_.size() && i < len; ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size() && i + j < len; ++j) {
      c[i + j] = field_->add(c[i + j], field_->mul(coeffs_[i], o.coeffs_[j]));
    }
  }
  return from_indices(*field_, lo, std::move(c), prec);
}

LaurentTrunc LaurentTrunc::scaled(const ff::FFElem& c) const {
  if (c.field_ptr() != field_) throw DomainError("scalar from a different field");
  LaurentTrunc out = *this;
  for (auto& x : out.coeffs_) x = field_->mul(x, c.index());
  out.normalize();
  return out;
}

LaurentTrunc LaurentTrunc::shift(int64_t k) const {
  LaurentTrunc out = *this;
  out.prec_ = clamp_prec(prec_ + k);
  out.val_ = is_zero() ? out.prec_ : val_ + k;
  return out;
}

LaurentTrunc LaurentTrunc::inverse(int64_t fallback_prec) const {
  if (!valid()) throw DomainError("inverse of an empty series");
  if (is_zero()) throw DomainError("series not invertible at available precision");
  const int64_t v = val_;
  // Unit part u = x w^{-v}, known modulo w^{prec - v}.
  int64_t unit_prec = exact() ? kExact : prec_ - v;
  if (coeffs_.size() == 1) {
    LaurentTrunc out = from_indices(*field_, -v, {field_->inv(coeffs_[0])}, kExact);
    return exact() ? out : out.truncated(unit_prec - v);
  }
  if (exact()) unit_prec = fallback_prec + v;  // result prec = fallback_prec
  if (unit_prec <= 0) throw PrecisionError("inverse has no known terms");
  const size_t len = static_cast<size_t>(unit_prec);
  std::vector<uint32_t> inv(len, 0);
  const uint32_t lead_inv = field_->inv(coeffs_[0]);
  inv[0] = lead_inv;
  for (size_t i = 1; i < len; ++i) {
    uint32_t acc = 0;
    for (size_t j = 1; j <= i && j < coeffs_.size(); ++j) {
      acc = field_->add(acc, field_->mul(coeffs_[j], inv[i - j]));
    }
    inv[i] = field_->mul(field_->neg(acc), lead_inv);
  }
  return from_indices(*field_, -v, std::move(inv), unit_prec - v);
}

LaurentTrunc LaurentTrunc::truncated(int64_t p) const {
  if (p >= prec_) return *this;
  return from_indices(*field_, val_, coeffs_, p);
}

LaurentTrunc LaurentTrunc::map_coeffs(const std::function<uint32_t(uint32_t)>& f) const {
  LaurentTrunc out = *this;
  for (auto& c : out.coeffs_) c = f(c);
  out.normalize();
  return out;
}

LaurentTrunc LaurentTrunc::lift_to(const ff::FieldDesc& ext) const {
  if (&ext == field_) return *this;
  LaurentTrunc out = *this;
  out.field_ = &ext;
  for (auto& c : out.coeffs_) c = ext.embed(field_->element(c)).index();
  return out;
}

std::optional<LaurentTrunc> LaurentTrunc::restrict_to(const ff::FieldDesc& sub) const {
  if (&sub == field_) return *this;
  LaurentTrunc out = *this;
  out.field_ = &sub;
  for (auto& c : out.coeffs_) {
    auto r = field_->restrict_to(field_->element(c), sub);
    if (!r) return std::nullopt;
    c = r->index();
  }
  return out;
}

bool operator==(const LaurentTrunc& a, const LaurentTrunc& b) {
  return a.field_ == b.field_ && a.prec_ == b.prec_ && a.val_ == b.val_ && a.coeffs_ == b.coeffs_;
}

std::string LaurentTrunc::to_string() const {
  std::ostringstream os;
  if (is_zero()) {
    os << "0";
  } else {
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      if (!first) os << " + ";
      first = false;
      os << "[" << coeffs_[i] << "]";
      int64_t v = val_ + static_cast<int64_t>(i);
      if (v != 0) os << "w^" << v;
    }
  }
  if (!exact()) os << " + O(w^" << prec_ << ")";
  return os.str();
}

LaurentTrunc teichmuller(const ff::FFElem& c) { return LaurentTrunc::monomial(c, 0); }

ff::FFElem residue(const LaurentTrunc& x) {
  if (!x.is_zero() && x.val() < 0) throw DomainError("residue of an element of negative valuation");
  return x.coeff(0);
}

bool in_principal_units(const LaurentTrunc& x) {
  LaurentTrunc d = x - LaurentTrunc::one(x.field());
  if (d.is_zero() && d.prec() < 1) throw PrecisionError("principal-unit test beyond precision");
  return d.val() >= 1;
}

cyc::CycValue psi_K(const chars::AddChar& psi, const LaurentTrunc& x) {
  if (x.field_ptr() != psi.field().get()) throw DomainError("psi_K argument over the wrong field");
  if (!x.is_zero() && x.val() < 0) throw DomainError("psi_K is defined on integral elements only");
  return psi.eval(residue(x));
}

}  // namespace jlcs::locfield
