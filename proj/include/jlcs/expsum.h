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

#ifndef JLCS_EXPSUM_H_
#define JLCS_EXPSUM_H_

// Exact exponential sums over finite fields: restricted Gauss sums,
// generalized Kloosterman sums, norm-fiber sums, and verifiers for the
// identities relating them.
//
// Every enumeration is charged against a Budget before it starts; an
// over-budget request throws BudgetError instead of truncating.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jlcs/chars.h"
#include "jlcs/cyc.h"
#include "jlcs/ff.h"

namespace jlcs::expsum {

struct Budget {
  uint64_t max_tuples = 10'000'000;
};

// Throws BudgetError if cost exceeds the budget.
void charge(const Budget& budget, uint64_t cost, const std::string& what);

struct SumReport {
  std::string kind;
  std::vector<std::pair<std::string, std::string>> parameters;
  cyc::CycValue lhs, rhs;
  // Further named quantities taking part in the comparison.
  std::vector<std::pair<std::string, cyc::CycValue>> extra;
  bool equal = false;
  std::optional<ff::FFElem> witness;
  double elapsed_seconds = 0;
};

// gcd(n, q - 1).
uint32_t n_q(uint32_t n, const ff::FieldDesc& k);

// Sum over x in mu_{n_q}(k) of chi(x) psi(a x).
cyc::CycValue restricted_gauss(uint32_t n, const chars::MultChar& chi, const chars::AddChar& psi,
                               const ff::FFElem& a);
cyc::CycValue gauss_sum(const chars::MultChar& chi, const chars::AddChar& psi);

// K_{l,a}(psi) over psi's field by enumerating the first l - 1 factors.
cyc::CycValue kloosterman(uint32_t l, const ff::FFElem& a, const chars::AddChar& psi,
                          const Budget& budget = {});

// K_{l,a}(psi) for every a at once. Built by convolving exponent
// histograms over (log, psi-exponent) pairs, independent of kloosterman().
class KloostermanTable {
 public:
  static KloostermanTable build(uint32_t l, const chars::AddChar& psi, const Budget& budget = {});

  uint32_t l() const { return l_; }
  cyc::CycValue at(const ff::FFElem& a) const;
  // By discrete log of a.
  cyc::CycValue at_log(uint32_t log_a) const;
  // Counts of psi-exponents in [0, p) for the given log; equal rows mean
  // equal sums.
  std::span<const int64_t> row(uint32_t log_a) const {
    return {hist_.data() + size_t{log_a} * p_, p_};
  }

 private:
  KloostermanTable(const chars::AddChar& psi) : psi_(psi) {}
  chars::AddChar psi_;
  uint32_t l_ = 0, p_ = 0, units_ = 0;
  std::vector<int64_t> hist_;  // units_ rows of p_ counts
};

// Sum over y in ext with Nr_{ext/k}(y) = lambda of psi(Tr_{ext/k}(y)),
// k being psi's field.
cyc::CycValue norm_fiber_sum(const ff::FieldPtr& ext, const ff::FFElem& lambda,
                             const chars::AddChar& psi, const Budget& budget = {});

// sum_{a in k^x} chi(a) K_{n,a}(psi) against G(chi, psi)^n.
SumReport check_gauss_power_identity(uint32_t n, const chars::MultChar& chi, const chars::AddChar& psi,
                             const Budget& budget = {});

// Three-way equality for n = m r:
//   sum_{Nr x = lambda} K_{m,x}(psi o Tr_{k_r/k})
//   = (-1)^{m-1} norm_fiber_sum(k_n, lambda, psi)
//   = (-1)^{n-m} K_{n,lambda}(psi).
// k_r and k_n must be declared extensions of psi's field of degrees r, mr.
SumReport check_norm_fiber_identity(const ff::FieldPtr& k_r, const ff::FieldPtr& k_n, uint32_t m,
                             const ff::FFElem& lambda, const chars::AddChar& psi,
                             const Budget& budget = {});
SumReport check_norm_fiber_identity(uint32_t m, uint32_t r, const ff::FFElem& lambda,
                             const chars::AddChar& psi, const Budget& budget = {});

// Least a (zero first, then by discrete log) with G_n(chi, psi, a) != 0.
ff::FFElem gn_nonzero_witness(uint32_t n, const chars::MultChar& chi, const chars::AddChar& psi);

// One report per x in k: sum_a G_n(chi, psi, a) psi(-a x) against
// q F(x), F(x) = chi(x) on mu_{n_q}(k) and 0 elsewhere.
std::vector<SumReport> fourier_inversion_check(uint32_t n, const chars::MultChar& chi,
                                               const chars::AddChar& psi);

// Least-dlog a with K_{n,a}(psi) != K_{n,a a'}(psi).
ff::FFElem separation_witness(const KloostermanTable& table, const ff::FFElem& a_prime);
ff::FFElem separation_witness(uint32_t n, const chars::AddChar& psi, const ff::FFElem& a_prime,
                              const Budget& budget = {});

}  // namespace jlcs::expsum

#endif  // JLCS_EXPSUM_H_
