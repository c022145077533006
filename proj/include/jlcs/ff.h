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

#ifndef JLCS_FF_H_
#define JLCS_FF_H_

// Finite fields F_p ⊂ k = F_q ⊂ k_l built as explicit towers.
//
// Every field is F_p[x]/(P) for the least irreducible monic P of the
// absolute degree, where polynomials are ordered by the integer
// sum(c_i * p^i) of their lower coefficients. An element is stored as the
// same integer encoding of its coefficient vector ("index"), so index 0 is
// zero, index 1 is one and the index order is coefficient-lexicographic.
//
// Subfields are never inferred. make_extension records an embedding of the
// base (its defining root is sent to the least-index root in the new
// field), and subfield queries walk that declared chain.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace jlcs::ff {

class FieldDesc;
using FieldPtr = std::shared_ptr<const FieldDesc>;

struct FieldLimits {
  uint64_t max_size = uint64_t{1} << 20;
};

// A field element. Holds a non-owning pointer to its field, which must
// outlive it.
class FFElem {
 public:
  FFElem() = default;
  FFElem(const FieldDesc* field, uint32_t index) : field_(field), index_(index) {}

  const FieldDesc& field() const { return *field_; }
  const FieldDesc* field_ptr() const { return field_; }
  uint32_t index() const { return index_; }
  bool valid() const { return field_ != nullptr; }

  // Coefficients over F_p of the basis 1, x, ..., x^{D-1}.
  std::vector<uint32_t> coeffs() const;

  bool is_zero() const { return index_ == 0; }
  bool is_one() const { return index_ == 1; }

  FFElem operator+(const FFElem& o) const;
  FFElem operator-(const FFElem& o) const;
  FFElem operator-() const;
  FFElem operator*(const FFElem& o) const;
  FFElem operator/(const FFElem& o) const;
  FFElem inverse() const;
  FFElem pow(int64_t e) const;

  friend bool operator==(const FFElem& a, const FFElem& b) {
    return a.field_ == b.field_ && a.index_ == b.index_;
  }

 private:
  const FieldDesc* field_ = nullptr;
  uint32_t index_ = 0;
};

class FieldDesc {
 public:
  static FieldPtr make_field(uint32_t p, uint32_t f, const FieldLimits& limits = {});
  static FieldPtr make_extension(const FieldPtr& base, uint32_t l,
                                 const FieldLimits& limits = {});

  FieldDesc(const FieldDesc&) = delete;
  FieldDesc& operator=(const FieldDesc&) = delete;

  uint32_t p() const { return p_; }
  // Degree of k over F_p, k being the root of the declared chain.
  uint32_t f() const { return f_; }
  // Degree of this field over k.
  uint32_t l() const { return l_; }
  uint32_t degree() const { return f_ * l_; }
  uint32_t size() const { return size_; }
  uint32_t unit_order() const { return size_ - 1; }

  // Monic, lowest coefficient first, length degree() + 1.
  const std::vector<uint32_t>& defining_poly() const { return poly_; }
  FFElem generator() const { return FFElem(this, exp_[size_ > 2 ? 1 : 0]); }
  // The field this one was declared as an extension of, or null.
  const FieldPtr& base() const { return base_; }

  FFElem zero() const { return FFElem(this, 0); }
  FFElem one() const { return FFElem(this, 1); }
  FFElem element(uint32_t index) const;
  FFElem from_coeffs(std::span<const uint32_t> coeffs) const;
  FFElem from_int(int64_t v) const;
  // generator()^e for any integer e.
  FFElem gen_pow(int64_t e) const { return FFElem(this, exp_idx(e)); }

  // True if sub is this field or lies on the declared chain below it.
  bool has_subfield(const FieldDesc& sub) const;
  // Image of x, an element of a declared subfield, in this field.
  FFElem embed(const FFElem& x) const;
  // Preimage of x in the declared subfield sub, if x lies in it.
  std::optional<FFElem> restrict_to(const FFElem& x, const FieldDesc& sub) const;

  // Index-level arithmetic, used by the enumeration kernels.
  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
  uint32_t neg(uint32_t a) const;
  uint32_t mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    uint64_t e = uint64_t{log_[a]} + log_[b];
    if (e >= unit_order()) e -= unit_order();
    return exp_[e];
  }
  uint32_t inv(uint32_t a) const;
  uint32_t pow_idx(uint32_t a, int64_t e) const;
  uint32_t exp_idx(int64_t e) const;
  // Discrete logarithm of a nonzero index.
  uint32_t log_idx(uint32_t a) const;
  // Tr_{F/F_p} of an index, as an integer in [0, p).
  uint32_t abs_trace(uint32_t a) const { return trace_[a]; }

 private:
  FieldDesc() = default;
  void build_tables(const FieldLimits& limits);
  void build_embedding();
  const FieldDesc* chain_step(const FieldDesc& sub) const;

  uint32_t p_ = 0, f_ = 0, l_ = 0, size_ = 0;
  std::vector<uint32_t> poly_;
  std::vector<uint32_t> exp_;    // generator power -> index
  std::vector<uint32_t> log_;    // index -> generator power
  std::vector<uint32_t> zech_;   // e -> log(1 + g^e), kNoLog if that is 0
  std::vector<uint8_t> trace_;   // index -> absolute trace
  FieldPtr base_;
  std::vector<uint32_t> embed_;     // base index -> index here
  std::vector<int32_t> restrict_;   // index here -> base index or -1
};

// x^{|over|^j}; over must be a declared subfield of x's field.
FFElem frobenius(const FFElem& x, int64_t j, const FieldDesc& over);
// Relative trace and norm; the results are elements of over.
FFElem rel_trace(const FFElem& x, const FieldDesc& over);
FFElem rel_norm(const FFElem& x, const FieldDesc& over);
uint32_t dlog(const FFElem& x);
// The d-th roots of unity, sorted by discrete log.
std::vector<FFElem> enumerate_mu(const FieldDesc& field, uint32_t d);

bool is_prime(uint64_t n);
std::vector<uint64_t> prime_factors(uint64_t n);
// Returns (p, f) if q = p^f with p prime.
std::optional<std::pair<uint32_t, uint32_t>> prime_power(uint64_t q);

}  // namespace jlcs::ff

#endif  // JLCS_FF_H_
