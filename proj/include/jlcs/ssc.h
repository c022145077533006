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


#ifndef JLCS_SSC_H_
#define JLCS_SSC_H_

// Simple supercuspidal parameters eta = (zeta, chi, c) on a side
// A = M_m(D), the character theta of L^x U^1 they define, and the character
// values of the induced representation at the two element families g_u and
// 1 + phi_{zeta lambda}, each by a closed form and by a finite direct sum.
//
// Conventions: psi is a nontrivial additive character of k; psi_K(x) is
// psi of the residue of x on integral elements. phi is the block element
// with 1 on the superdiagonal and c_D Pi in the corner, c_D the least-dlog
// norm-zeta constant, so phi^n = zeta w.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jlcs/chars.h"
#include "jlcs/csa.h"
#include "jlcs/cyc.h"
#include "jlcs/expsum.h"
#include "jlcs/ff.h"

namespace jlcs::ssc {

using csa::MatA;
using locfield::LaurentTrunc;

struct Side {
  uint32_t m = 1, r = 1, s = 0;
  uint32_t n() const { return m * r; }
  std::string to_string() const;
  friend bool operator==(const Side&, const Side&) = default;
};
// DomainError unless m, r >= 1 and either r = 1, s = 0 or 1 <= s < r with
// gcd(s, r) = 1.
void validate(const Side& side);
// Every valid side with n = m r <= max_n, ordered by n, then r, then s.
std::vector<Side> sides_up_to(uint32_t max_n);

// eta with its side. In exact mode c is the root of unity z_{c_order}^{c_power}
// in chi's ring; c_complex, when set, replaces c in the *_complex evaluators.
struct SscParam {
  ff::FFElem zeta;
  chars::MultChar chi;
  cyc::CycValue c;
  uint32_t c_order = 1, c_power = 0;
  Side side;
  std::optional<std::complex<double>> c_complex;

  uint32_t n() const { return side.n(); }
};
// c_order must divide the modulus of chi's ring.
SscParam make_param(const ff::FFElem& zeta, const chars::MultChar& chi, uint32_t c_order,
                    uint32_t c_power, const Side& side);

// A character of K^x trivial on 1 + p_K: chi on Teichmuller units, a root of
// unity of order varpi_order at w.
struct TameChar {
  chars::MultChar unit_part;
  cyc::CycValue varpi_value;
  uint32_t varpi_order = 1, varpi_power = 0;

  cyc::CycValue eval(const LaurentTrunc& y) const;
  TameChar operator*(const TameChar& o) const;
};
TameChar make_tame(const chars::MultChar& unit_part, uint32_t varpi_order, uint32_t varpi_power);

// The algebra of a side together with phi and phi^{-1} for one zeta.
class Frame {
 public:
  static Frame make(const ff::FieldPtr& k, const Side& side, const ff::FFElem& zeta,
                    int64_t precision = locfield::kDefaultPrecision);

  const csa::DivAlgebra& algebra() const { return *alg_; }
  const csa::DivAlgebra* algebra_ptr() const { return alg_.get(); }
  const csa::AlgebraPtr& algebra_shared() const { return alg_; }
  const Side& side() const { return side_; }
  uint32_t m() const { return side_.m; }
  uint32_t n() const { return side_.n(); }
  const ff::FFElem& zeta() const { return zeta_; }
  const csa::AlgElem& phi_D() const { return phi_D_; }
  const MatA& phi() const { return phi_; }
  const MatA& phi_inv() const { return phi_inv_; }

 private:
  csa::AlgebraPtr alg_;
  Side side_;
  ff::FFElem zeta_;
  csa::AlgElem phi_D_;
  MatA phi_, phi_inv_;
};

// g = phi^v x u with x a Teichmuller unit of k and u in U^1; theta(g) depends
// on g only through v, x and the residue of Trd(phi^{-1}(u - 1)).
struct ThetaArgs {
  int64_t v = 0;
  ff::FFElem unit;
  ff::FFElem trace_residue;
};
// DomainError when g is not in L^x U^1; PrecisionError when the residue data
// is beyond the tracked precision.
ThetaArgs decompose(const Frame& frame, const MatA& g);

// ((-1)^{m-1} c)^v chi(x) psi(trace_residue).
cyc::CycValue theta_value(const SscParam& eta, const chars::AddChar& psi, const ThetaArgs& a);
std::complex<double> theta_value_complex(const SscParam& eta, const chars::AddChar& psi,
                                         const ThetaArgs& a);
cyc::CycValue theta_eval(const Frame& frame, const SscParam& eta, const chars::AddChar& psi,
                         const MatA& g);

// ---- g_u

// (-1)^{m-1} c G_n(chi, psi, residue of Trd(u)).
cyc::CycValue char_at_gu_closed(const Frame& frame, const SscParam& eta, const chars::AddChar& psi,
                                const MatA& u);

// A coset representative d diag(1, lambda, ..., lambda^{m-1}) needs d in k_r
// with d^{q^s - 1} = lambda^m; choices are listed in dlog order.
struct GuCoset {
  ff::FFElem lambda;
  std::vector<ff::FFElem> d_choices;
};
// Every lambda in k^x admitting some d, in dlog order. Throws InternalError
// unless this set is mu_{n_q}(k).
std::vector<GuCoset> gu_cosets(const Frame& frame);
MatA gu_coset_rep(const Frame& frame, const ff::FFElem& lambda, const ff::FFElem& d);
MatA gu_coset_rep_inverse(const Frame& frame, const ff::FFElem& lambda, const ff::FFElem& d);
// theta data of h^{-1} g_u h for each coset, with h built from the
// d_choice-th d (modulo the number of choices).
std::vector<ThetaArgs> gu_direct_terms(const Frame& frame, const MatA& u, size_t d_choice = 0);
cyc::CycValue char_at_gu_direct(const Frame& frame, const SscParam& eta, const chars::AddChar& psi,
                                const MatA& u);
cyc::CycValue sum_terms(const SscParam& eta, const chars::AddChar& psi,
                        const std::vector<ThetaArgs>& terms);
std::complex<double> sum_terms_complex(const SscParam& eta, const chars::AddChar& psi,
                                       const std::vector<ThetaArgs>& terms);

// ---- 1 + phi_{zeta lambda}

// (-1)^{n-m} K_{n, lambda}(psi).
cyc::CycValue char_at_unipotent_closed(const Side& side, const chars::AddChar& psi,
                                       const ff::FFElem& lambda, const expsum::Budget& budget = {});
// For every lambda in k^x (by dlog): the sum over (z_1, ..., z_m) in (k_r^x)^m
// with Nr(z_1 ... z_m) = lambda of psi(Tr(z_1 + ... + z_m)), one pass over all
// tuples.
std::vector<cyc::CycValue> unipotent_tuple_sums(const Frame& frame, const chars::AddChar& psi,
                                                const expsum::Budget& budget = {});
cyc::CycValue char_at_unipotent_direct(const Frame& frame, const chars::AddChar& psi,
                                       const ff::FFElem& lambda, const expsum::Budget& budget = {});
// 1 + phi' where phi' has c0 phi_D in the corner; phi'^n = zeta lambda w when
// Nr(c0) = lambda.
MatA one_plus_phi(const Frame& frame, const ff::FFElem& c0);
// Sum of theta over the conjugates h^{-1} (1 + phi') h, h = diag(a_1, ..., a_m)
// with Teichmuller entries, a_1 over k_r^x / k^x.
cyc::CycValue char_at_unipotent_deep(const Frame& frame, const chars::AddChar& psi,
                                     const ff::FFElem& c0, const expsum::Budget& budget = {});

// ---- correspondence

struct CharTableRow {
  std::string kind;  // "g_u" or "one_plus_phi"
  std::vector<std::pair<std::string, std::string>> parameters;
  cyc::CycValue closed_form, direct_sum;
  // Split-side direct value and the sign relating it to direct_sum.
  std::optional<cyc::CycValue> split_direct;
  int sign = 1;
  std::optional<bool> charpoly_match;
  bool match = false;
};

// Closed form against direct sum on one side.
std::vector<CharTableRow> char_table(const Frame& frame, const SscParam& eta,
                                     const chars::AddChar& psi,
                                     const std::vector<ff::FFElem>& lambdas,
                                     const std::vector<MatA>& us, const expsum::Budget& budget = {});
// D-side direct values against sign times split-side direct values, with
// g_u matched to g_alpha through its reduced characteristic polynomial.
std::vector<CharTableRow> character_relation_check(const Frame& d_frame, const Frame& split_frame,
                                                   const SscParam& eta, const chars::AddChar& psi,
                                                   const std::vector<ff::FFElem>& lambdas,
                                                   const std::vector<MatA>& us,
                                                   const expsum::Budget& budget = {});

struct JlImage {
  SscParam eta;
  int sign = 1;  // (-1)^{n-m}
  uint32_t conductor = 0;
};
JlImage jl_transfer(const SscParam& eta);
uint32_t conductor(const SscParam& eta);

// ---- epsilon factors

cyc::CycValue epsilon(const SscParam& eta);
cyc::CycValue epsilon_twisted(const SscParam& eta, const TameChar& xi);
// (theta (x) xi_A)^vee(phi^{-1}) psi_A(phi^{-1}), evaluated on the matrices.
cyc::CycValue normalized_tau(const Frame& frame, const SscParam& eta, const chars::AddChar& psi,
                             const TameChar& xi);
// psi of the w^0 coefficient. Extends psi_K to K and is trivial on p_K.
cyc::CycValue psi_K_constant_term(const chars::AddChar& psi, const LaurentTrunc& x);

class CentralChar {
 public:
  explicit CentralChar(const SscParam& eta);
  cyc::CycValue at_varpi() const { return at_varpi_; }
  // x in K^x, Teichmuller times w^v times a principal unit.
  cyc::CycValue eval(const LaurentTrunc& x) const;

 private:
  chars::MultChar chi_;
  cyc::CycValue at_varpi_;
};
CentralChar central_char(const SscParam& eta);

struct EndoLabel {
  uint32_t p = 0, f = 0, n = 0;
  uint32_t zeta_index = 0, psi_twist_index = 0;
  std::string to_string() const;
  friend bool operator==(const EndoLabel&, const EndoLabel&) = default;
};
EndoLabel endoclass_label(const SscParam& eta, const chars::AddChar& psi);

}  // namespace jlcs::ssc

#endif  // JLCS_SSC_H_
