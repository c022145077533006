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

#include "jlcs/cyc.h"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "jlcs/error.h"

namespace jlcs::cyc {
namespace {

using IPoly = std::vector<int64_t>;

// Exact division by a monic integer polynomial.
IPoly divide_exact(IPoly num, const IPoly& den) {
  const size_t dd = den.size() - 1;
  if (num.size() < den.size()) throw InternalError("cyclotomic division underflow");
  IPoly quot(num.size() - dd, 0);
  for (size_t i = num.size(); i-- > dd;) {
    int64_t c = num[i];
    quot[i - dd] = c;
    if (c == 0) continue;
    for (size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  for (size_t i = 0; i < dd; ++i) {
    if (num[i] != 0) throw InternalError("cyclotomic division left a remainder");
  }
  return quot;
}

IPoly cyclotomic(uint32_t m) {
  static std::mutex mu;
  static std::map<uint32_t, IPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  IPoly num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (uint32_t d = 1; d < m; ++d) {
    if (m % d == 0) num = divide_exact(num, cyclotomic(d));
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(m, num);
  return num;
}

uint32_t euler_phi(uint32_t m) {
  uint32_t r = m;
  for (uint32_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      r = r / d * (d - 1);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) r = r / m * (m - 1);
  return r;
}

uint32_t mod_exp(int64_t e, uint32_t m) {
  int64_t r = e % static_cast<int64_t>(m);
  if (r < 0) r += m;
  return static_cast<uint32_t>(r);
}

}  // namespace

uint64_t lcm(uint64_t a, uint64_t b) { return a / std::gcd(a, b) * b; }

RingPtr CycRing::make(uint32_t modulus) {
  if (modulus == 0) throw DomainError("cyclotomic modulus must be positive");
  std::shared_ptr<CycRing> ring(new CycRing());
  ring->modulus_ = modulus;
  ring->phi_poly_ = cyclotomic(modulus);
  ring->degree_ = static_cast<uint32_t>(ring->phi_poly_.size() - 1);
  if (ring->degree_ != euler_phi(modulus)) throw InternalError("deg Phi_M != phi(M)");
  const uint32_t d = ring->degree_;
  ring->powers_.assign(size_t{modulus} * d, 0);
  // z^e for e < d is a basis vector; afterwards multiply by z and reduce.
  std::vector<int64_t> cur(d, 0);
  cur[0] = 1;
  for (uint32_t e = 0; e < modulus; ++e) {
    std::copy(cur.begin(), cur.end(), ring->powers_.begin() + size_t{e} * d);
    int64_t top = cur[d - 1];
    for (uint32_t i = d - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (uint32_t i = 0; i < d; ++i) cur[i] -= top * ring->phi_poly_[i];
  }
  for (uint32_t i = 0; i < d; ++i) {
    if (cur[i] != (i == 0 ? 1 : 0)) throw InternalError("z^M != 1 in cyclotomic ring");
  }
  return ring;
}

CycValue::CycValue(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw DomainError("null cyclotomic ring");
  coeffs_.assign(ring_->degree(), 0);
}

CycValue CycValue::from_int(const RingPtr& ring, int64_t v) {
  CycValue out(ring);
  out.coeffs_[0] = v;
  return out;
}

CycValue CycValue::from_coeffs(const RingPtr& ring, std::vector<int64_t> coeffs) {
  if (coeffs.size() != ring->degree()) throw DomainError("coefficient vector has wrong length");
  CycValue out(ring);
  out.coeffs_ = std::move(coeffs);
  return out;
}

CycValue CycValue::zeta_power(const RingPtr& ring, int64_t e) {
  CycValue out(ring);
  auto p = ring->power(mod_exp(e, ring->modulus()));
  std::copy(p.begin(), p.end(), out.coeffs_.begin());
  return out;
}

bool CycValue::is_zero() const {
  for (int64_t c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

void CycValue::check_ring(const CycValue& o) const {
  if (!ring_ || !o.ring_ || ring_->modulus() != o.ring_->modulus()) {
    throw DomainError("cyclotomic values from different rings");
  }
}

CycValue& CycValue::operator+=(const CycValue& o) {
  check_ring(o);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycValue& CycValue::operator-=(const CycValue& o) {
  check_ring(o);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycValue& CycValue::operator*=(const CycValue& o) {
  check_ring(o);
  const uint32_t d = ring_->degree(), m = ring_->modulus();
  std::vector<int64_t> prod(2 * d - 1, 0);
  for (uint32_t i = 0; i < d; ++i) {
    if (coeffs_[i] == 0) continue;
    for (uint32_t j = 0; j < d; ++j) {
      int64_t t;
      if (__builtin_mul_overflow(coeffs_[i], o.coeffs_[j], &t) ||
          __builtin_add_overflow(prod[i + j], t, &prod[i + j])) {
        throw InternalError("cyclotomic coefficient overflow");
      }
    }
  }
  std::vector<int64_t> out(prod.begin(), prod.begin() + d);
  for (uint32_t e = d; e < 2 * d - 1; ++e) {
    if (prod[e] == 0) continue;
    auto p = ring_->power(e % m);
    for (uint32_t i = 0; i < d; ++i) out[i] += prod[e] * p[i];
  }
  coeffs_ = std::move(out);
  return *this;
}

CycValue CycValue::operator-() const {
  CycValue out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycValue CycValue::scaled(int64_t k) const {
  CycValue out = *this;
  for (auto& c : out.coeffs_) c *= k;
  return out;
}

CycValue CycValue::rotated(int64_t e) const { return *this * zeta_power(ring_, e); }

CycValue CycValue::pow(uint64_t e) const {
  CycValue result = from_int(ring_, 1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

CycValue CycValue::galois(int64_t t) const {
  const uint32_t m = ring_->modulus();
  if (std::gcd<int64_t>(t < 0 ? -t : t, m) != 1) throw DomainError("Galois exponent not coprime to M");
  CycValue out(ring_);
  for (uint32_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    auto p = ring_->power(mod_exp(static_cast<int64_t>(i) * t, m));
    for (uint32_t j = 0; j < out.coeffs_.size(); ++j) out.coeffs_[j] += coeffs_[i] * p[j];
  }
  return out;
}

bool operator==(const CycValue& a, const CycValue& b) {
  if (!a.ring_ || !b.ring_) return !a.ring_ && !b.ring_;
  return a.ring_->modulus() == b.ring_->modulus() && a.coeffs_ == b.coeffs_;
}

std::string CycValue::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    int64_t c = coeffs_[i];
    if (c == 0) continue;
    int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (i == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

CycValue root_of_unity(const RingPtr& ring, uint32_t order, int64_t power) {
  if (order == 0 || ring->modulus() % order != 0) {
    throw DomainError("root of unity order " + std::to_string(order) + " does not divide M = " +
                      std::to_string(ring->modulus()));
  }
  int64_t step = ring->modulus() / order;
  return CycValue::zeta_power(ring, static_cast<int64_t>(mod_exp(power, order)) * step);
}

std::complex<double> complex_embed(const CycValue& v) {
  const double m = v.ring()->modulus();
  std::complex<double> acc = 0.0;
  auto c = v.coeffs();
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    double ang = 2.0 * std::numbers::pi * static_cast<double>(i) / m;
    acc += static_cast<double>(c[i]) * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return acc;
}

ExpAccumulator::ExpAccumulator(RingPtr ring) : ring_(std::move(ring)) {
  counts_.assign(ring_->modulus(), 0);
}

void ExpAccumulator::add(int64_t exponent, int64_t count) {
  counts_[mod_exp(exponent, ring_->modulus())] += count;
}

void ExpAccumulator::merge(const ExpAccumulator& o) {
  if (o.ring_->modulus() != ring_->modulus()) throw DomainError("accumulators from different rings");
  for (size_t i = 0; i < counts_.size(); ++i) counts_[i] += o.counts_[i];
}

CycValue ExpAccumulator::value() const {
  std::vector<int64_t> acc(ring_->degree(), 0);
  for (uint32_t e = 0; e < counts_.size(); ++e) {
    if (counts_[e] == 0) continue;
    auto p = ring_->power(e);
    for (size_t i = 0; i < acc.size(); ++i) acc[i] += counts_[e] * p[i];
  }
  return CycValue::from_coeffs(ring_, std::move(acc));
}

}  // namespace jlcs::cyc
