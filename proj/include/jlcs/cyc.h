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

#ifndef JLCS_CYC_H_
#define JLCS_CYC_H_

// Exact arithmetic in Z[z], z = exp(2*pi*i/M), represented modulo the
// cyclotomic polynomial Phi_M. Values are kept canonically reduced after
// every operation, so equality is coefficient-wise.

#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace jlcs::cyc {

class CycRing;
using RingPtr = std::shared_ptr<const CycRing>;

class CycRing {
 public:
  static RingPtr make(uint32_t modulus);

  uint32_t modulus() const { return modulus_; }
  // phi(M), the number of stored coefficients.
  uint32_t degree() const { return degree_; }
  // Phi_M, lowest coefficient first.
  const std::vector<int64_t>& reduction_poly() const { return phi_poly_; }
  // Canonical coefficients of z^e, 0 <= e < M.
  std::span<const int64_t> power(uint32_t e) const {
    return {powers_.data() + size_t{e} * degree_, degree_};
  }

 private:
  CycRing() = default;
  uint32_t modulus_ = 0, degree_ = 0;
  std::vector<int64_t> phi_poly_;
  std::vector<int64_t> powers_;  // M rows of degree_ coefficients
};

class CycValue {
 public:
  CycValue() = default;
  explicit CycValue(RingPtr ring);  // zero

  static CycValue from_int(const RingPtr& ring, int64_t v);
  // Coefficients already reduced, length phi(M).
  static CycValue from_coeffs(const RingPtr& ring, std::vector<int64_t> coeffs);
  // z^e for any integer e.
  static CycValue zeta_power(const RingPtr& ring, int64_t e);

  const RingPtr& ring() const { return ring_; }
  std::span<const int64_t> coeffs() const { return coeffs_; }
  bool is_zero() const;

  CycValue& operator+=(const CycValue& o);
  CycValue& operator-=(const CycValue& o);
  CycValue& operator*=(const CycValue& o);
  friend CycValue operator+(CycValue a, const CycValue& b) { return a += b; }
  friend CycValue operator-(CycValue a, const CycValue& b) { return a -= b; }
  friend CycValue operator*(CycValue a, const CycValue& b) { return a *= b; }
  CycValue operator-() const;
  CycValue scaled(int64_t k) const;
  // Multiplication by z^e.
  CycValue rotated(int64_t e) const;
  CycValue pow(uint64_t e) const;
  // The automorphism z -> z^t, gcd(t, M) = 1.
  CycValue galois(int64_t t) const;
  // Complex conjugate; the inverse when the value is a root of unity.
  CycValue conj() const { return galois(-1); }

  friend bool operator==(const CycValue& a, const CycValue& b);

  // Polynomial in z, e.g. "1 - z + 2*z^3".
  std::string to_string() const;

 private:
  void check_ring(const CycValue& o) const;
  RingPtr ring_;
  std::vector<int64_t> coeffs_;
};

// The value exp(2*pi*i*power/order); order must divide M.
CycValue root_of_unity(const RingPtr& ring, uint32_t order, int64_t power);
std::complex<double> complex_embed(const CycValue& v);

// Sum of roots of unity z^e kept as a histogram of exponents. Merging
// accumulators in any order gives the same exact value.
class ExpAccumulator {
 public:
  explicit ExpAccumulator(RingPtr ring);
  void add(int64_t exponent, int64_t count = 1);
  void merge(const ExpAccumulator& o);
  CycValue value() const;
  std::span<const int64_t> counts() const { return counts_; }

 private:
  RingPtr ring_;
  std::vector<int64_t> counts_;
};

uint64_t lcm(uint64_t a, uint64_t b);

}  // namespace jlcs::cyc

#endif  // JLCS_CYC_H_
