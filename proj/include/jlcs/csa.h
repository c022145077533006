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

#ifndef JLCS_CSA_H_
#define JLCS_CSA_H_

// The central simple algebra A = M_m(D) over K = k((w)).
//
// D is the cyclic algebra K_r<Pi> with Pi^r = w and Pi a = sigma^s(a) Pi,
// sigma acting as x -> x^q on the coefficients of K_r = k_r((w)). For r = 1,
// D = K and Pi = w. An element of D is sum_i a_i Pi^i with a_i in K_r
// written to the left of Pi^i.
//
// Reduced invariants come from the splitting A (x) K_r = M_n(K_r), n = m r,
// given blockwise by the left regular representation of D on the right
// K_r-basis 1, Pi, ..., Pi^{r-1}.
//
// AlgElem and MatA hold a raw pointer to their DivAlgebra, which must
// outlive them.

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "jlcs/ff.h"
#include "jlcs/locfield.h"

namespace jlcs::csa {

using locfield::LaurentTrunc;
using KMatrix = std::vector<std::vector<LaurentTrunc>>;

class DivAlgebra;
using AlgebraPtr = std::shared_ptr<const DivAlgebra>;

class DivAlgebra {
 public:
  // s is ignored (taken as 0) when r = 1; otherwise 1 <= s < r, gcd(s, r) = 1.
  static AlgebraPtr make(ff::FieldPtr k, uint32_t r, uint32_t s,
                         int64_t precision = locfield::kDefaultPrecision);

  DivAlgebra(const DivAlgebra&) = delete;
  DivAlgebra& operator=(const DivAlgebra&) = delete;

  const ff::FieldPtr& k() const { return k_; }
  const ff::FieldPtr& kr() const { return kr_; }
  uint32_t r() const { return r_; }
  uint32_t s() const { return s_; }
  int64_t precision() const { return precision_; }

  // x -> x^{q^j} on a k_r index.
  uint32_t frob_idx(uint32_t idx, int64_t j) const;
  // sigma^j applied to every coefficient.
  LaurentTrunc sigma(const LaurentTrunc& a, int64_t j) const;
  // Exact constants and w over k_r.
  LaurentTrunc constant(const ff::FFElem& c) const;
  LaurentTrunc varpi() const;
  LaurentTrunc zero() const { return LaurentTrunc::zero(*kr_); }
  LaurentTrunc one() const { return LaurentTrunc::one(*kr_); }
  // Tr_{K_r/K} and Nr-free restriction of a series to K.
  LaurentTrunc trace_to_k(const LaurentTrunc& a) const;
  LaurentTrunc restrict_to_k(const LaurentTrunc& a) const;
  LaurentTrunc lift_from_k(const LaurentTrunc& a) const { return a.lift_to(*kr_); }

 private:
  DivAlgebra() = default;
  ff::FieldPtr k_, kr_;
  uint32_t r_ = 1, s_ = 0;
  int64_t precision_ = locfield::kDefaultPrecision;
};

class AlgElem {
 public:
  AlgElem() = default;
  explicit AlgElem(const DivAlgebra* alg);  // zero
  static AlgElem scalar(const DivAlgebra* alg, const LaurentTrunc& a);
  static AlgElem one(const DivAlgebra* alg) { return scalar(alg, alg->one()); }
  static AlgElem pi(const DivAlgebra* alg);
  // a Pi^i for any i >= 0.
  static AlgElem monomial(const DivAlgebra* alg, const LaurentTrunc& a, uint32_t i);

  const DivAlgebra& algebra() const { return *alg_; }
  const DivAlgebra* algebra_ptr() const { return alg_; }
  const LaurentTrunc& coeff(uint32_t i) const { return coeffs_[i]; }
  LaurentTrunc& coeff(uint32_t i) { return coeffs_[i]; }
  bool is_zero() const;

  AlgElem operator+(const AlgElem& o) const;
  AlgElem operator-(const AlgElem& o) const;
  AlgElem operator-() const;
  AlgElem operator*(const AlgElem& o) const;
  // Inverse through the reduced characteristic polynomial.
  AlgElem inverse() const;
  // Pi-adic valuation min_i (r val(a_i) + i).
  int64_t w() const;
  bool agrees_with(const AlgElem& o) const;
  std::string to_string() const;

 private:
  const DivAlgebra* alg_ = nullptr;
  std::vector<LaurentTrunc> coeffs_;
};

class MatA {
 public:
  MatA() = default;
  MatA(const DivAlgebra* alg, uint32_t m);  // zero
  static MatA identity(const DivAlgebra* alg, uint32_t m);
  static MatA scalar(const DivAlgebra* alg, uint32_t m, const AlgElem& d);

  const DivAlgebra& algebra() const { return *alg_; }
  const DivAlgebra* algebra_ptr() const { return alg_; }
  uint32_t m() const { return m_; }
  uint32_t n() const { return m_ * alg_->r(); }
  const AlgElem& at(uint32_t i, uint32_t j) const { return entries_[size_t{i} * m_ + j]; }
  AlgElem& at(uint32_t i, uint32_t j) { return entries_[size_t{i} * m_ + j]; }

  MatA operator+(const MatA& o) const;
  MatA operator-(const MatA& o) const;
  MatA operator-() const;
  MatA operator*(const MatA& o) const;
  MatA pow(uint32_t e) const;
  // Inverse through the reduced characteristic polynomial.
  MatA inverse() const;
  bool agrees_with(const MatA& o) const;
  std::string to_string() const;

 private:
  void check_shape(const MatA& o) const;
  const DivAlgebra* alg_ = nullptr;
  uint32_t m_ = 0;
  std::vector<AlgElem> entries_;
};

// Left multiplication by d on the right K_r-basis 1, Pi, ..., Pi^{r-1}.
KMatrix regular_rep(const AlgElem& d);
// regular_rep applied blockwise.
KMatrix embed_A(const MatA& g);

// Monic reduced characteristic polynomial; coeffs are a_0 .. a_{n-1} over k.
struct RedCharPoly {
  std::vector<LaurentTrunc> coeffs;
  uint32_t degree() const { return static_cast<uint32_t>(coeffs.size()); }
  bool agrees_with(const RedCharPoly& o) const;
  std::string to_string() const;
};

// Throws InternalError if a coefficient is not K-rational.
RedCharPoly red_charpoly(const MatA& g);
RedCharPoly red_charpoly(const AlgElem& d);
LaurentTrunc rtrace(const MatA& g);
LaurentTrunc rnorm(const MatA& g);
LaurentTrunc rtrace(const AlgElem& d);

// Every c in k_r with Nr_{k_r/k}(c) = zeta, in dlog order.
std::vector<ff::FFElem> norm_preimages(const DivAlgebra& alg, const ff::FFElem& zeta);
// c Pi for the least-dlog c with Nr(c) = zeta.
AlgElem make_phi_D(const DivAlgebra& alg, const ff::FFElem& zeta);
AlgElem phi_D_from_constant(const DivAlgebra& alg, const ff::FFElem& c);
// 1 on the superdiagonal and phi_D in the bottom-left corner.
MatA make_phi_zeta(uint32_t m, const DivAlgebra& alg, const ff::FFElem& zeta);
MatA phi_zeta_from(uint32_t m, const AlgElem& phi_D);
// (zeta w)^{-1} phi^{n-1}.
MatA phi_zeta_inverse(const MatA& phi, const ff::FFElem& zeta);

// min_ij (m w(X_ij) + j - i); X lies in P^k iff the result is >= k, and in
// the order iff it is >= 0.
int64_t order_valuation(const MatA& x);
bool in_order(const MatA& x);

MatA make_g_u(const MatA& phi, const MatA& u);

struct EisensteinReport {
  bool middle_in_p = false;         // a_i in p_K for 1 <= i <= n - 1
  bool constant_unit = false;       // -a_0 / (zeta w) in U_K^1
  bool eisenstein = false;
  bool elliptic_quasi_regular = false;
};
EisensteinReport eisenstein_check(const RedCharPoly& f, const ff::FFElem& zeta);

enum class QrClass { kRegular, kEllipticQuasiRegular, kQuasiRegular, kUnknown };
std::string to_string(QrClass c);
QrClass classify_qr(const MatA& g);
// Resultant of f and its formal derivative, over k.
LaurentTrunc resultant_with_derivative(const RedCharPoly& f);

struct MatchedElement {
  std::vector<LaurentTrunc> alpha;  // alpha_1 .. alpha_n
  MatA u_alpha, g_alpha;
  bool charpoly_match = false;
  // Set when the D-side reduced trace of u_xi was supplied.
  std::optional<bool> residue_trace_match;
};
// split must have r = 1 over the same k as f.
MatchedElement matching_element(const RedCharPoly& f, const ff::FFElem& zeta, const DivAlgebra& split,
                                const std::optional<LaurentTrunc>& trd_u_xi = std::nullopt);

// Seeded samples. Entries carry the algebra's precision.
MatA random_order_element(const DivAlgebra& alg, uint32_t m, std::mt19937_64& rng);
struct UnitSample {
  MatA h, h_inv;
};
// Diagonal Teichmuller times upper and lower unipotent factors of the order.
UnitSample random_order_unit(const DivAlgebra& alg, uint32_t m, std::mt19937_64& rng);

}  // namespace jlcs::csa

#endif  // JLCS_CSA_H_
