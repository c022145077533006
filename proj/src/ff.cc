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

#include "jlcs/ff.h"

#include <numeric>
#include <string>

#include "jlcs/error.h"

namespace jlcs::ff {
namespace {

constexpr uint32_t kNoLog = 0xFFFFFFFFu;

using Poly = std::vector<uint32_t>;  // lowest coefficient first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint64_t> prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + uint64_t{a[i]} * b[j]) % p;
  }
  const size_t d = mod.size() - 1;  // mod is monic
  for (size_t i = prod.size(); i-- > d;) {
    uint64_t c = prod[i];
    if (c == 0) continue;
    for (size_t j = 0; j <= d; ++j) {
      prod[i - d + j] = (prod[i - d + j] + (p - c) * mod[j]) % p;
    }
  }
  Poly out(prod.begin(), prod.begin() + std::min(prod.size(), d));
  trim(out);
  return out;
}

Poly poly_powmod(Poly base, uint64_t e, const Poly& mod, uint32_t p) {
  Poly result{1};
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, mod, p);
    e >>= 1;
    if (e) base = poly_mulmod(base, base, mod, p);
  }
  return result;
}

uint32_t inv_mod(uint32_t a, uint32_t p) {
  uint64_t r = 1, b = a % p;
  for (uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<uint32_t>(r);
}

Poly poly_mod(Poly a, const Poly& m, uint32_t p) {
  trim(a);
  const size_t dm = m.size() - 1;
  const uint32_t lead_inv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    uint64_t c = uint64_t{a.back()} * lead_inv % p;
    size_t shift = a.size() - 1 - dm;
    for (size_t j = 0; j <= dm; ++j) {
      a[shift + j] = static_cast<uint32_t>((a[shift + j] + (p - c) * m[j]) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b, uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin's test for a monic polynomial of degree d.
bool is_irreducible(const Poly& poly, uint32_t p) {
  const size_t d = poly.size() - 1;
  Poly x = poly_mod(Poly{0, 1}, poly, p);
  std::vector<Poly> frob(d + 1);
  frob[0] = x;
  for (size_t i = 1; i <= d; ++i) frob[i] = poly_powmod(frob[i - 1], p, poly, p);
  if (frob[d] != x) return false;
  for (uint64_t ell : prime_factors(d)) {
    Poly h = frob[d / ell];
    h.resize(std::max<size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    Poly g = poly_gcd(poly, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

Poly digits_of(uint64_t index, uint32_t p, uint32_t d) {
  Poly out(d, 0);
  for (uint32_t i = 0; i < d; ++i) {
    out[i] = static_cast<uint32_t>(index % p);
    index /= p;
  }
  return out;
}

uint64_t index_of(const Poly& digits, uint32_t p) {
  uint64_t idx = 0;
  for (size_t i = digits.size(); i-- > 0;) idx = idx * p + digits[i];
  return idx;
}

uint64_t checked_power(uint64_t base, uint64_t e, uint64_t cap) {
  uint64_t r = 1;
  for (uint64_t i = 0; i < e; ++i) {
    r *= base;
    if (r > cap) return cap + 1;
  }
  return r;
}

uint64_t powmod_u64(uint64_t b, uint64_t e, uint64_t m) {
  if (m == 1) return 0;
  unsigned __int128 r = 1, x = b % m;
  while (e > 0) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
    e >>= 1;
  }
  return static_cast<uint64_t>(r);
}

}  // namespace

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::optional<std::pair<uint32_t, uint32_t>> prime_power(uint64_t q) {
  auto fs = prime_factors(q);
  if (fs.size() != 1) return std::nullopt;
  uint32_t f = 0;
  while (q > 1) {
    q /= fs[0];
    ++f;
  }
  return std::make_pair(static_cast<uint32_t>(fs[0]), f);
}

// ---------------------------------------------------------------------------
// FFElem

std::vector<uint32_t> FFElem::coeffs() const {
  return digits_of(index_, field_->p(), field_->degree());
}

namespace {
void check_same(const FFElem& a, const FFElem& b) {
  if (!a.valid() || a.field_ptr() != b.field_ptr()) {
    throw DomainError("finite field elements from different fields");
  }
}
}  // namespace

FFElem FFElem::operator+(const FFElem& o) const {
  check_same(*this, o);
  return FFElem(field_, field_->add(index_, o.index_));
}
FFElem FFElem::operator-(const FFElem& o) const {
  check_same(*this, o);
  return FFElem(field_, field_->sub(index_, o.index_));
}
FFElem FFElem::operator-() const { return FFElem(field_, field_->neg(index_)); }
FFElem FFElem::operator*(const FFElem& o) const {
  check_same(*this, o);
  return FFElem(field_, field_->mul(index_, o.index_));
}
FFElem FFElem::operator/(const FFElem& o) const {
  check_same(*this, o);
  return FFElem(field_, field_->mul(index_, field_->inv(o.index_)));
}
FFElem FFElem::inverse() const { return FFElem(field_, field_->inv(index_)); }
FFElem FFElem::pow(int64_t e) const { return FFElem(field_, field_->pow_idx(index_, e)); }

// ---------------------------------------------------------------------------
// FieldDesc

FieldPtr FieldDesc::make_field(uint32_t p, uint32_t f, const FieldLimits& limits) {
  if (!is_prime(p)) throw DomainError("characteristic " + std::to_string(p) + " is not prime");
  if (f == 0) throw DomainError("field degree must be positive");
  std::shared_ptr<FieldDesc> field(new FieldDesc());
  field->p_ = p;
  field->f_ = f;
  field->l_ = 1;
  field->build_tables(limits);
  return field;
}

FieldPtr FieldDesc::make_extension(const FieldPtr& base, uint32_t l, const FieldLimits& limits) {
  if (!base) throw DomainError("null base field");
  if (l == 0) throw DomainError("extension degree must be positive");
  std::shared_ptr<FieldDesc> field(new FieldDesc());
  field->p_ = base->p_;
  field->f_ = base->f_;
  field->l_ = base->l_ * l;
  field->base_ = base;
  field->build_tables(limits);
  field->build_embedding();
  return field;
}

void FieldDesc::build_tables(const FieldLimits& limits) {
  const uint32_t d = degree();
  uint64_t size = checked_power(p_, d, limits.max_size);
  if (size > limits.max_size || size > (uint64_t{1} << 31)) {
    throw BudgetError("field of size " + std::to_string(p_) + "^" + std::to_string(d) +
                      " exceeds the configured limit");
  }
  size_ = static_cast<uint32_t>(size);
  if (p_ > 255) throw BudgetError("characteristic too large for trace table");
  const uint64_t lower_count = size;  // p^d choices of lower coefficients

  // Least irreducible monic polynomial of degree d.
  bool found = false;
  for (uint64_t c = 0; c < lower_count; ++c) {
    Poly cand = digits_of(c, p_, d);
    cand.push_back(1);
    if (is_irreducible(cand, p_)) {
      poly_ = cand;
      found = true;
      break;
    }
  }
  if (!found) throw InternalError("no irreducible polynomial found");

  // Least element of full multiplicative order.
  const uint64_t q1 = size_ - 1;
  const auto q1_primes = prime_factors(q1);
  Poly gen;
  for (uint64_t idx = 1; idx < size_; ++idx) {
    Poly g = digits_of(idx, p_, d);
    trim(g);
    bool full = true;
    for (uint64_t ell : q1_primes) {
      if (poly_powmod(g, q1 / ell, poly_, p_) == Poly{1}) {
        full = false;
        break;
      }
    }
    if (full) {
      gen = g;
      break;
    }
  }
  if (gen.empty()) throw InternalError("no multiplicative generator found");

  exp_.assign(q1, 0);
  log_.assign(size_, kNoLog);
  Poly cur{1};
  for (uint64_t i = 0; i < q1; ++i) {
    Poly digits = cur;
    digits.resize(d, 0);
    uint64_t idx = index_of(digits, p_);
    if (log_[idx] != kNoLog) throw InternalError("generator order is smaller than |F|-1");
    exp_[i] = static_cast<uint32_t>(idx);
    log_[idx] = static_cast<uint32_t>(i);
    cur = poly_mulmod(cur, gen, poly_, p_);
  }
  if (cur != Poly{1}) throw InternalError("generator power does not return to 1");

  zech_.assign(q1, kNoLog);
  for (uint64_t e = 0; e < q1; ++e) {
    uint32_t idx = exp_[e];
    uint32_t d0 = idx % p_;
    uint32_t plus_one = idx - d0 + (d0 + 1) % p_;
    zech_[e] = plus_one == 0 ? kNoLog : log_[plus_one];
  }

  // Tr(x^j) for the power basis, then extend linearly.
  std::vector<uint32_t> basis_trace(d, 0);
  uint64_t pj = 1;
  for (uint32_t j = 0; j < d; ++j, pj *= p_) {
    uint32_t y = static_cast<uint32_t>(pj);
    uint32_t s = 0;
    for (uint32_t i = 0; i < d; ++i) {
      s = add(s, y);
      y = pow_idx(y, p_);
    }
    if (s >= p_) throw InternalError("absolute trace left the prime field");
    basis_trace[j] = s;
  }
  trace_.assign(size_, 0);
  for (uint64_t idx = 0; idx < size_; ++idx) {
    uint64_t rest = idx, t = 0;
    for (uint32_t j = 0; j < d && rest > 0; ++j) {
      t += (rest % p_) * basis_trace[j];
      rest /= p_;
    }
    trace_[idx] = static_cast<uint8_t>(t % p_);
  }
}

void FieldDesc::build_embedding() {
  const FieldDesc& b = *base_;
  // Least-index root of the base's defining polynomial.
  uint32_t root = 0;
  bool found = false;
  for (uint32_t idx = 0; idx < size_ && !found; ++idx) {
    uint32_t acc = 0;
    for (size_t i = b.poly_.size(); i-- > 0;) acc = add(mul(acc, idx), b.poly_[i]);
    if (acc == 0) {
      root = idx;
      found = true;
    }
  }
  if (!found) throw InternalError("base polynomial has no root in the extension");

  const uint32_t bd = b.degree();
  std::vector<uint32_t> root_pow(bd, 1);
  for (uint32_t j = 1; j < bd; ++j) root_pow[j] = mul(root_pow[j - 1], root);
  embed_.assign(b.size_, 0);
  restrict_.assign(size_, -1);
  for (uint32_t bi = 0; bi < b.size_; ++bi) {
    uint32_t img = 0, rest = bi;
    for (uint32_t j = 0; j < bd; ++j) {
      img = add(img, mul(rest % p_, root_pow[j]));
      rest /= p_;
    }
    if (restrict_[img] != -1) throw InternalError("base embedding is not injective");
    embed_[bi] = img;
    restrict_[img] = static_cast<int32_t>(bi);
  }
  // The image of the base generator must again have full order.
  if (b.size_ > 2) {
    uint32_t lg = log_[embed_[b.exp_[1]]];
    uint64_t order = unit_order() / std::gcd<uint64_t>(lg, unit_order());
    if (order != b.unit_order()) throw InternalError("embedding is not multiplicative");
  }
}

FFElem FieldDesc::element(uint32_t index) const {
  if (index >= size_) throw DomainError("element index out of range");
  return FFElem(this, index);
}

FFElem FieldDesc::from_coeffs(std::span<const uint32_t> coeffs) const {
  if (coeffs.size() > degree()) throw DomainError("too many coefficients for field");
  Poly digits(coeffs.begin(), coeffs.end());
  for (auto& c : digits) c %= p_;
  return FFElem(this, static_cast<uint32_t>(index_of(digits, p_)));
}

FFElem FieldDesc::from_int(int64_t v) const {
  int64_t r = v % static_cast<int64_t>(p_);
  if (r < 0) r += p_;
  return FFElem(this, static_cast<uint32_t>(r));
}

uint32_t FieldDesc::add(uint32_t a, uint32_t b) const {
  if (p_ == 2) return a ^ b;
  if (degree() == 1) {
    uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (a == 0) return b;
  if (b == 0) return a;
  const uint32_t q1 = unit_order();
  uint32_t la = log_[a], lb = log_[b];
  uint32_t diff = lb >= la ? lb - la : lb + q1 - la;
  uint32_t z = zech_[diff];
  if (z == kNoLog) return 0;
  uint64_t e = uint64_t{la} + z;
  if (e >= q1) e -= q1;
  return exp_[e];
}

uint32_t FieldDesc::neg(uint32_t a) const {
  if (p_ == 2 || a == 0) return a;
  if (degree() == 1) return p_ - a;
  uint64_t e = uint64_t{log_[a]} + unit_order() / 2;
  if (e >= unit_order()) e -= unit_order();
  return exp_[e];
}

uint32_t FieldDesc::inv(uint32_t a) const {
  if (a == 0) throw DomainError("inverse of zero in a finite field");
  uint32_t la = log_[a];
  return exp_[la == 0 ? 0 : unit_order() - la];
}

uint32_t FieldDesc::exp_idx(int64_t e) const {
  int64_t q1 = unit_order();
  int64_t r = e % q1;
  if (r < 0) r += q1;
  return exp_[r];
}

uint32_t FieldDesc::pow_idx(uint32_t a, int64_t e) const {
  if (a == 0) {
    if (e == 0) return 1;
    if (e < 0) throw DomainError("negative power of zero");
    return 0;
  }
  int64_t q1 = unit_order();
  int64_t em = e % q1;
  if (em < 0) em += q1;
  return exp_[static_cast<uint64_t>((static_cast<unsigned __int128>(log_[a]) * em) % q1)];
}

uint32_t FieldDesc::log_idx(uint32_t a) const {
  if (a == 0) throw DomainError("discrete log of zero");
  return log_[a];
}

bool FieldDesc::has_subfield(const FieldDesc& sub) const {
  for (const FieldDesc* cur = this; cur != nullptr; cur = cur->base_.get()) {
    if (cur == &sub) return true;
  }
  return false;
}

FFElem FieldDesc::embed(const FFElem& x) const {
  if (x.field_ptr() == this) return x;
  if (!base_ || !base_->has_subfield(x.field())) {
    throw DomainError("element does not belong to a declared subfield");
  }
  FFElem in_base = base_->embed(x);
  return FFElem(this, embed_[in_base.index()]);
}

std::optional<FFElem> FieldDesc::restrict_to(const FFElem& x, const FieldDesc& sub) const {
  if (x.field_ptr() != this) throw DomainError("element does not belong to this field");
  if (&sub == this) return x;
  if (!base_ || !base_->has_subfield(sub)) throw DomainError("not a declared subfield");
  int32_t b = restrict_[x.index()];
  if (b < 0) return std::nullopt;
  return base_->restrict_to(FFElem(base_.get(), static_cast<uint32_t>(b)), sub);
}

// ---------------------------------------------------------------------------
// Free operations

namespace {
uint32_t relative_degree(const FieldDesc& big, const FieldDesc& small) {
  if (!big.has_subfield(small)) throw DomainError("not a declared subfield");
  return big.degree() / small.degree();
}
}  // namespace

FFElem frobenius(const FFElem& x, int64_t j, const FieldDesc& over) {
  const FieldDesc& big = x.field();
  const int64_t rel = relative_degree(big, over);
  if (x.is_zero()) return x;
  int64_t jj = j % rel;
  if (jj < 0) jj += rel;
  uint64_t mult = powmod_u64(over.size(), static_cast<uint64_t>(jj), big.unit_order());
  if (big.unit_order() == 1) mult = 1;
  return FFElem(&big, big.pow_idx(x.index(), static_cast<int64_t>(mult)));
}

FFElem rel_trace(const FFElem& x, const FieldDesc& over) {
  const FieldDesc& big = x.field();
  const uint32_t rel = relative_degree(big, over);
  FFElem s = big.zero();
  for (uint32_t i = 0; i < rel; ++i) s = s + frobenius(x, i, over);
  auto r = big.restrict_to(s, over);
  if (!r) throw InternalError("relative trace is not in the subfield");
  return *r;
}

FFElem rel_norm(const FFElem& x, const FieldDesc& over) {
  const FieldDesc& big = x.field();
  const uint32_t rel = relative_degree(big, over);
  FFElem s = big.one();
  for (uint32_t i = 0; i < rel; ++i) s = s * frobenius(x, i, over);
  auto r = big.restrict_to(s, over);
  if (!r) throw InternalError("relative norm is not in the subfield");
  return *r;
}

uint32_t dlog(const FFElem& x) { return x.field().log_idx(x.index()); }

std::vector<FFElem> enumerate_mu(const FieldDesc& field, uint32_t d) {
  if (d == 0 || field.unit_order() % d != 0) {
    throw DomainError("d does not divide |F^x|");
  }
  std::vector<FFElem> out;
  out.reserve(d);
  const uint32_t step = field.unit_order() / d;
  for (uint32_t j = 0; j < d; ++j) out.push_back(field.gen_pow(int64_t{j} * step));
  return out;
}

}  // namespace jlcs::ff
