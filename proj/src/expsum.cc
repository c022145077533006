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

#include "jlcs/expsum.h"

#include <chrono>
#include <numeric>

#include "jlcs/error.h"
#include "jlcs/parallel.h"

namespace jlcs::expsum {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void check_in(const ff::FieldDesc& field, const ff::FFElem& x, const char* what) {
  if (!x.valid() || x.field_ptr() != &field) {
    throw DomainError(std::string(what) + " does not lie in the character's field");
  }
}

// psi exponents of g^d for d in [0, q - 1).
std::vector<uint32_t> exponent_by_log(const chars::AddChar& psi) {
  const ff::FieldDesc& field = *psi.field();
  std::vector<uint32_t> out(field.unit_order());
  for (uint32_t d = 0; d < out.size(); ++d) out[d] = psi.exponent_idx(field.exp_idx(d));
  return out;
}

// sum_e counts[e] z_p^e.
cyc::CycValue from_p_histogram(const cyc::RingPtr& ring, uint32_t p, std::span<const int64_t> counts) {
  cyc::ExpAccumulator acc(ring);
  const int64_t step = ring->modulus() / p;
  for (uint32_t e = 0; e < p; ++e) {
    if (counts[e] != 0) acc.add(step * e, counts[e]);
  }
  return acc.value();
}

int64_t sign(uint64_t e) { return e % 2 == 0 ? 1 : -1; }

// log_k(Nr_{ext/k}(g_ext)); Nr(g_ext^d) = g_k^{d * result}.
uint32_t norm_log_of_generator(const ff::FieldDesc& ext, const ff::FieldDesc& k) {
  return ff::dlog(ff::rel_norm(ext.generator(), k));
}

std::string str(uint64_t v) { return std::to_string(v); }

}  // namespace

void charge(const Budget& budget, uint64_t cost, const std::string& what) {
  if (cost > budget.max_tuples) {
    throw BudgetError(what + " needs " + std::to_string(cost) + " evaluations, budget is " +
                      std::to_string(budget.max_tuples));
  }
}

uint32_t n_q(uint32_t n, const ff::FieldDesc& k) { return std::gcd(n, k.unit_order()); }

cyc::CycValue restricted_gauss(uint32_t n, const chars::MultChar& chi, const chars::AddChar& psi,
                               const ff::FFElem& a) {
  if (n == 0) throw DomainError("restricted Gauss sum needs n >= 1");
  if (chi.field() != psi.field()) throw DomainError("characters on different fields");
  const ff::FieldDesc& k = *psi.field();
  check_in(k, a, "a");
  const uint32_t count = n_q(n, k), step = k.unit_order() / count;
  cyc::ExpAccumulator acc(psi.ring());
  for (uint32_t j = 0; j < count; ++j) {
    uint32_t x = k.exp_idx(int64_t{j} * step);
    acc.add(static_cast<int64_t>(chi.ring_exponent_idx(x) + psi.ring_exponent_idx(k.mul(a.index(), x))));
  }
  return acc.value();
}

cyc::CycValue gauss_sum(const chars::MultChar& chi, const chars::AddChar& psi) {
  return restricted_gauss(psi.field()->unit_order(), chi, psi, psi.field()->one());
}

cyc::CycValue kloosterman(uint32_t l, const ff::FFElem& a, const chars::AddChar& psi,
                          const Budget& budget) {
  const ff::FieldDesc& field = *psi.field();
  check_in(field, a, "a");
  if (l == 0) throw DomainError("Kloosterman sum needs l >= 1");
  if (a.is_zero()) throw DomainError("Kloosterman sum needs a != 0");
  if (l == 1) return psi.eval(a);
  const uint32_t units = field.unit_order(), p = field.p();
  const uint64_t tuples = parallel::tuple_count(units, l - 1, budget.max_tuples);
  charge(budget, tuples, "Kloosterman enumeration");
  const auto expo = exponent_by_log(psi);
  const uint32_t log_a = field.log_idx(a.index());
  auto hist = parallel::reduce_range<std::vector<int64_t>>(
      tuples, [&] { return std::vector<int64_t>(p, 0); },
      [&](uint64_t begin, uint64_t end, std::vector<int64_t>& acc) {
        parallel::TupleCursor cur(units, l - 1, begin);
        for (uint64_t t = begin; t < end; ++t, cur.next()) {
          uint64_t log_sum = 0, e_sum = 0;
          for (uint32_t d : cur.digits()) {
            log_sum += d;
            e_sum += expo[d];
          }
          uint32_t last = static_cast<uint32_t>((log_a + uint64_t{units} * l - log_sum % units) % units);
          ++acc[(e_sum + expo[last]) % p];
        }
      },
      [](std::vector<int64_t>& into, const std::vector<int64_t>& from) {
        for (size_t i = 0; i < into.size(); ++i) into[i] += from[i];
      });
  return from_p_histogram(psi.ring(), p, hist);
}

KloostermanTable KloostermanTable::build(uint32_t l, const chars::AddChar& psi, const Budget& budget) {
  if (l == 0) throw DomainError("Kloosterman sum needs l >= 1");
  const ff::FieldDesc& field = *psi.field();
  KloostermanTable t(psi);
  t.l_ = l;
  t.p_ = field.p();
  t.units_ = field.unit_order();
  const uint64_t units = t.units_, p = t.p_;
  charge(budget, units + uint64_t{l - 1} * units * units * p, "Kloosterman table");
  const auto expo = exponent_by_log(psi);
  std::vector<int64_t> cur(units * p, 0);
  for (uint64_t d = 0; d < units; ++d) cur[d * p + expo[d]] = 1;
  std::vector<int64_t> next(units * p);
  for (uint32_t step = 1; step < l; ++step) {
    std::fill(next.begin(), next.end(), 0);
    for (uint64_t d2 = 0; d2 < units; ++d2) {
      const uint64_t e2 = expo[d2];
      for (uint64_t d1 = 0; d1 < units; ++d1) {
        const int64_t* src = cur.data() + d1 * p;
        uint64_t d = d1 + d2;
        if (d >= units) d -= units;
        int64_t* dst = next.data() + d * p;
        for (uint64_t e1 = 0; e1 < p; ++e1) {
          uint64_t e = e1 + e2;
          if (e >= p) e -= p;
          dst[e] += src[e1];
        }
      }
    }
    cur.swap(next);
  }
  t.hist_ = std::move(cur);
  return t;
}

cyc::CycValue KloostermanTable::at_log(uint32_t log_a) const {
  return from_p_histogram(psi_.ring(), p_, row(log_a % units_));
}

cyc::CycValue KloostermanTable::at(const ff::FFElem& a) const {
  check_in(*psi_.field(), a, "a");
  if (a.is_zero()) throw DomainError("Kloosterman sum needs a != 0");
  return at_log(psi_.field()->log_idx(a.index()));
}

cyc::CycValue norm_fiber_sum(const ff::FieldPtr& ext, const ff::FFElem& lambda,
                             const chars::AddChar& psi, const Budget& budget) {
  const ff::FieldDesc& k = *psi.field();
  check_in(k, lambda, "lambda");
  if (lambda.is_zero()) throw DomainError("norm fiber needs lambda != 0");
  charge(budget, ext->size(), "norm fiber enumeration");
  const chars::AddChar inflated = chars::inflate_add(psi, ext);
  const uint32_t nu = norm_log_of_generator(*ext, k), units = k.unit_order();
  const uint32_t target = k.log_idx(lambda.index());
  std::vector<int64_t> hist(k.p(), 0);
  uint64_t fiber = 0;
  for (uint64_t d = 0; d < ext->unit_order(); ++d) {
    if (d * nu % units != target) continue;
    ++fiber;
    ++hist[inflated.exponent_idx(ext->exp_idx(static_cast<int64_t>(d)))];
  }
  if (fiber != ext->unit_order() / units) throw InternalError("norm fiber has the wrong size");
  return from_p_histogram(psi.ring(), k.p(), hist);
}

SumReport check_gauss_power_identity(uint32_t n, const chars::MultChar& chi, const chars::AddChar& psi,
                             const Budget& budget) {
  const auto start = Clock::now();
  if (chi.field() != psi.field()) throw DomainError("characters on different fields");
  const ff::FieldDesc& k = *psi.field();
  charge(budget, parallel::tuple_count(k.unit_order(), n, budget.max_tuples), "Gauss power identity");
  SumReport rep;
  rep.kind = "gauss_power";
  rep.parameters = {{"q", str(k.size())}, {"n", str(n)}, {"chi", str(chi.exponent())},
                    {"psi_twist", str(psi.twist().index())}};
  rep.lhs = cyc::CycValue(psi.ring());
  for (uint32_t d = 0; d < k.unit_order(); ++d) {
    ff::FFElem a = k.gen_pow(d);
    rep.lhs += kloosterman(n, a, psi, budget).rotated(static_cast<int64_t>(chi.ring_exponent_idx(a.index())));
  }
  rep.rhs = gauss_sum(chi, psi).pow(n);
  rep.equal = rep.lhs == rep.rhs;
  rep.elapsed_seconds = seconds_since(start);
  return rep;
}

SumReport check_norm_fiber_identity(const ff::FieldPtr& k_r, const ff::FieldPtr& k_n, uint32_t m,
                             const ff::FFElem& lambda, const chars::AddChar& psi,
                             const Budget& budget) {
  const auto start = Clock::now();
  const ff::FieldPtr& k = psi.field();
  check_in(*k, lambda, "lambda");
  if (lambda.is_zero()) throw DomainError("norm fiber identity needs lambda != 0");
  if (m == 0) throw DomainError("norm fiber identity needs m >= 1");
  if (!k_r->has_subfield(*k) || !k_n->has_subfield(*k)) {
    throw DomainError("extension fields must be declared over the character's field");
  }
  const uint32_t deg = k->degree(), r = k_r->degree() / deg, n = k_n->degree() / deg;
  if (k_r->degree() != r * deg || n != m * r) throw DomainError("extension degrees must be r and m r");

  // Sum of K_{m,x}(psi o Tr) over the norm fiber of lambda in k_r.
  const chars::AddChar psi_r = chars::inflate_add(psi, k_r);
  const KloostermanTable table = KloostermanTable::build(m, psi_r, budget);
  const uint32_t nu = norm_log_of_generator(*k_r, *k), units = k->unit_order();
  const uint32_t target = k->log_idx(lambda.index());
  cyc::CycValue fiber_kl(psi.ring());
  for (uint64_t d = 0; d < k_r->unit_order(); ++d) {
    if (d * nu % units == target) fiber_kl += table.at_log(static_cast<uint32_t>(d));
  }
  const cyc::CycValue fiber = norm_fiber_sum(k_n, lambda, psi, budget).scaled(sign(m - 1));
  const cyc::CycValue kl = kloosterman(n, lambda, psi, budget).scaled(sign(n - m));

  SumReport rep;
  rep.kind = "norm_fiber_identity";
  rep.parameters = {{"q", str(k->size())}, {"m", str(m)},
                    {"r", str(r)},         {"lambda_dlog", str(target)},
                    {"psi_twist", str(psi.twist().index())}};
  rep.lhs = fiber_kl;
  rep.rhs = kl;
  rep.extra = {{"norm_fiber", fiber}};
  rep.equal = fiber_kl == fiber && fiber == kl;
  rep.elapsed_seconds = seconds_since(start);
  return rep;
}

SumReport check_norm_fiber_identity(uint32_t m, uint32_t r, const ff::FFElem& lambda,
                             const chars::AddChar& psi, const Budget& budget) {
  const ff::FieldPtr k_r = ff::FieldDesc::make_extension(psi.field(), r);
  const ff::FieldPtr k_n = ff::FieldDesc::make_extension(psi.field(), m * r);
  return check_norm_fiber_identity(k_r, k_n, m, lambda, psi, budget);
}

ff::FFElem gn_nonzero_witness(uint32_t n, const chars::MultChar& chi, const chars::AddChar& psi) {
  const ff::FieldDesc& k = *psi.field();
  if (!restricted_gauss(n, chi, psi, k.zero()).is_zero()) return k.zero();
  for (uint32_t d = 0; d < k.unit_order(); ++d) {
    ff::FFElem a = k.gen_pow(d);
    if (!restricted_gauss(n, chi, psi, a).is_zero()) return a;
  }
  throw InternalError("G_n(chi, psi, .) vanishes identically");
}

std::vector<SumReport> fourier_inversion_check(uint32_t n, const chars::MultChar& chi,
                                               const chars::AddChar& psi) {
  const ff::FieldDesc& k = *psi.field();
  const uint32_t count = n_q(n, k);
  std::vector<cyc::CycValue> gn;
  gn.reserve(k.size());
  for (uint32_t a = 0; a < k.size(); ++a) gn.push_back(restricted_gauss(n, chi, psi, k.element(a)));
  std::vector<SumReport> out;
  for (uint32_t x = 0; x < k.size(); ++x) {
    const auto start = Clock::now();
    SumReport rep;
    rep.kind = "fourier";
    rep.parameters = {{"q", str(k.size())},     {"n", str(n)},
                      {"chi", str(chi.exponent())}, {"psi_twist", str(psi.twist().index())},
                      {"x", str(x)}};
    rep.lhs = cyc::CycValue(psi.ring());
    for (uint32_t a = 0; a < k.size(); ++a) {
      uint32_t arg = k.neg(k.mul(a, x));
      rep.lhs += gn[a].rotated(static_cast<int64_t>(psi.ring_exponent_idx(arg)));
    }
    const bool in_mu = x != 0 && k.log_idx(x) % (k.unit_order() / count) == 0;
    rep.rhs = in_mu ? chi.eval(k.element(x)).scaled(k.size()) : cyc::CycValue(psi.ring());
    rep.equal = rep.lhs == rep.rhs;
    rep.elapsed_seconds = seconds_since(start);
    out.push_back(std::move(rep));
  }
  return out;
}

ff::FFElem separation_witness(const KloostermanTable& table, const ff::FFElem& a_prime) {
  if (a_prime.is_zero() || a_prime.is_one()) throw DomainError("a' must lie in k^x minus {1}");
  const ff::FieldDesc& k = a_prime.field();
  const uint32_t units = k.unit_order(), shift = k.log_idx(a_prime.index());
  for (uint32_t d = 0; d < units; ++d) {
    if (table.at_log(d) != table.at_log((d + shift) % units)) return k.gen_pow(d);
  }
  throw InternalError("no a separates K_{n,a} from K_{n,a a'}");
}

ff::FFElem separation_witness(uint32_t n, const chars::AddChar& psi, const ff::FFElem& a_prime,
                              const Budget& budget) {
  check_in(*psi.field(), a_prime, "a'");
  return separation_witness(KloostermanTable::build(n, psi, budget), a_prime);
}

}  // namespace jlcs::expsum
