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


#include "jlcs/ssc.h"

#include <algorithm>
#include <numeric>

#include "jlcs/error.h"
#include "jlcs/parallel.h"

namespace jlcs::ssc {
namespace {

int sign_of(int64_t e) { return e % 2 == 0 ? 1 : -1; }

std::string str(uint64_t v) { return std::to_string(v); }

void check_rings(const SscParam& eta, const chars::AddChar& psi) {
  if (eta.chi.ring() != psi.ring() || eta.c.ring() != psi.ring()) {
    throw DomainError("eta and psi use different cyclotomic rings");
  }
  if (eta.chi.field() != psi.field() || eta.zeta.field_ptr() != psi.field().get()) {
    throw DomainError("eta and psi live over different residue fields");
  }
}

void check_frame(const Frame& frame, const SscParam& eta) {
  if (!(frame.side() == eta.side)) throw DomainError("frame and eta are on different sides");
  if (!(frame.zeta() == eta.zeta)) throw DomainError("frame and eta use different zeta");
}

// v-th power of a root of unity; negative v through conjugation.
cyc::CycValue unit_pow(const cyc::CycValue& x, int64_t v) {
  return v >= 0 ? x.pow(static_cast<uint64_t>(v)) : x.conj().pow(static_cast<uint64_t>(-v));
}

MatA teich_diag(const csa::DivAlgebra& alg, const std::vector<ff::FFElem>& entries) {
  MatA out(&alg, static_cast<uint32_t>(entries.size()));
  for (uint32_t i = 0; i < entries.size(); ++i) {
    out.at(i, i) = csa::AlgElem::scalar(&alg, alg.constant(entries[i]));
  }
  return out;
}

MatA scalar_matrix(const Frame& frame, const ff::FFElem& x_in_kr) {
  const auto& alg = frame.algebra();
  return MatA::scalar(&alg, frame.m(), csa::AlgElem::scalar(&alg, alg.constant(x_in_kr)));
}

// x with a x = 1 mod modulus, gcd(a, modulus) = 1.
uint64_t inverse_mod(uint64_t a, uint64_t modulus) {
  if (modulus == 1) return 0;
  int64_t t = 0, new_t = 1;
  int64_t r = static_cast<int64_t>(modulus), new_r = static_cast<int64_t>(a % modulus);
  while (new_r != 0) {
    const int64_t quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  if (r != 1) throw InternalError("no modular inverse");
  return static_cast<uint64_t>(t < 0 ? t + static_cast<int64_t>(modulus) : t);
}

uint64_t pow_u64(uint64_t base, uint32_t e) {
  uint64_t out = 1;
  for (uint32_t i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

std::string Side::to_string() const {
  return "m=" + str(m) + " r=" + str(r) + " s=" + str(s);
}

void validate(const Side& side) {
  if (side.m == 0 || side.r == 0) throw DomainError("m and r must be positive");
  if (side.r == 1) {
    if (side.s != 0) throw DomainError("s must be absent when r = 1");
    return;
  }
  if (side.s == 0 || side.s >= side.r || std::gcd(side.s, side.r) != 1) {
    throw DomainError("s must satisfy 1 <= s < r and gcd(s, r) = 1");
  }
}

std::vector<Side> sides_up_to(uint32_t max_n) {
  std::vector<Side> out;
  for (uint32_t n = 1; n <= max_n; ++n) {
    for (uint32_t r = 1; r <= n; ++r) {
      if (n % r != 0) continue;
      if (r == 1) {
        out.push_back({n, 1, 0});
        continue;
      }
      for (uint32_t s = 1; s < r; ++s) {
        if (std::gcd(s, r) == 1) out.push_back({n / r, r, s});
      }
    }
  }
  return out;
}

SscParam make_param(const ff::FFElem& zeta, const chars::MultChar& chi, uint32_t c_order,
                    uint32_t c_power, const Side& side) {
  validate(side);
  if (zeta.field_ptr() != chi.field().get() || zeta.is_zero()) {
    throw DomainError("zeta must be a unit of chi's field");
  }
  if (c_order == 0 || chi.ring()->modulus() % c_order != 0) {
    throw DomainError("the order of c must divide the ring modulus " + str(chi.ring()->modulus()));
  }
  return SscParam{zeta, chi, cyc::root_of_unity(chi.ring(), c_order, c_power), c_order,
                  c_power % c_order, side, std::nullopt};
}

TameChar make_tame(const chars::MultChar& unit_part, uint32_t varpi_order, uint32_t varpi_power) {
  if (varpi_order == 0 || unit_part.ring()->modulus() % varpi_order != 0) {
    throw DomainError("the order of xi(w) must divide the ring modulus " +
                      str(unit_part.ring()->modulus()));
  }
  return TameChar{unit_part, cyc::root_of_unity(unit_part.ring(), varpi_order, varpi_power),
                  varpi_order, varpi_power % varpi_order};
}

cyc::CycValue TameChar::eval(const LaurentTrunc& y) const {
  if (y.field_ptr() != unit_part.field().get()) throw DomainError("tame character argument over the wrong field");
  if (y.is_zero()) throw DomainError("tame character needs a nonzero argument");
  const int64_t v = y.val();
  const ff::FFElem unit = locfield::residue(y.shift(-v));
  return unit_part.eval(unit) * unit_pow(varpi_value, v);
}

TameChar TameChar::operator*(const TameChar& o) const {
  if (unit_part.field() != o.unit_part.field() || unit_part.ring() != o.unit_part.ring()) {
    throw DomainError("tame characters on different fields");
  }
  const uint32_t order = static_cast<uint32_t>(cyc::lcm(varpi_order, o.varpi_order));
  const uint64_t power = uint64_t{varpi_power} * (order / varpi_order) +
                         uint64_t{o.varpi_power} * (order / o.varpi_order);
  const chars::MultChar product(unit_part.field(), int64_t{unit_part.exponent()} + o.unit_part.exponent(),
                                unit_part.ring());
  return make_tame(product, order, static_cast<uint32_t>(power % order));
}

// ---------------------------------------------------------------- theta

Frame Frame::make(const ff::FieldPtr& k, const Side& side, const ff::FFElem& zeta, int64_t precision) {
  validate(side);
  if (zeta.field_ptr() != k.get() || zeta.is_zero()) throw DomainError("zeta must be a unit of k");
  Frame f;
  f.alg_ = csa::DivAlgebra::make(k, side.r, side.s, precision);
  f.side_ = side;
  f.zeta_ = zeta;
  f.phi_D_ = csa::make_phi_D(*f.alg_, zeta);
  f.phi_ = csa::phi_zeta_from(side.m, f.phi_D_);
  f.phi_inv_ = csa::phi_zeta_inverse(f.phi_, zeta);
  return f;
}

ThetaArgs decompose(const Frame& frame, const MatA& g) {
  if (g.algebra_ptr() != frame.algebra_ptr() || g.m() != frame.m()) {
    throw DomainError("element does not belong to the frame's algebra");
  }
  const auto& alg = frame.algebra();
  // phi^v x u lies in P^v and not in P^{v+1}.
  const int64_t v = csa::order_valuation(g);
  if (v >= locfield::kExact / 2) throw DomainError("zero is not in L^x U^1");
  const MatA y = (v >= 0 ? frame.phi_inv().pow(static_cast<uint32_t>(v))
                         : frame.phi().pow(static_cast<uint32_t>(-v))) *
                 g;
  const ff::FFElem head = locfield::residue(y.at(0, 0).coeff(0));
  const auto unit = alg.kr()->restrict_to(head, *alg.k());
  if (!unit || unit->is_zero()) throw DomainError("residue of the unit part is not a unit of k");
  const ff::FFElem unit_r = alg.kr()->embed(*unit);
  if (csa::order_valuation(y - scalar_matrix(frame, unit_r)) < 1) {
    throw DomainError("element is not in L^x U^1");
  }
  const MatA u_minus_one = scalar_matrix(frame, unit_r.inverse()) * y - MatA::identity(&alg, frame.m());
  const LaurentTrunc t = csa::rtrace(frame.phi_inv() * u_minus_one);
  return ThetaArgs{v, *unit, locfield::residue(t)};
}

cyc::CycValue theta_value(const SscParam& eta, const chars::AddChar& psi, const ThetaArgs& a) {
  check_rings(eta, psi);
  const cyc::CycValue signed_c = eta.c.scaled(sign_of(eta.side.m - 1));
  return unit_pow(signed_c, a.v) * eta.chi.eval(a.unit) * psi.eval(a.trace_residue);
}

std::complex<double> theta_value_complex(const SscParam& eta, const chars::AddChar& psi,
                                         const ThetaArgs& a) {
  check_rings(eta, psi);
  const std::complex<double> c = eta.c_complex ? *eta.c_complex : cyc::complex_embed(eta.c);
  const std::complex<double> signed_c = c * static_cast<double>(sign_of(eta.side.m - 1));
  return std::pow(signed_c, static_cast<int>(a.v)) *
         cyc::complex_embed(eta.chi.eval(a.unit) * psi.eval(a.trace_residue));
}

cyc::CycValue theta_eval(const Frame& frame, const SscParam& eta, const chars::AddChar& psi,
                         const MatA& g) {
  check_frame(frame, eta);
  return theta_value(eta, psi, decompose(frame, g));
}

// ---------------------------------------------------------------- g_u

cyc::CycValue char_at_gu_closed(const Frame& frame, const SscParam& eta, const chars::AddChar& psi,
                                const MatA& u) {
  check_frame(frame, eta);
  check_rings(eta, psi);
  if (!csa::in_order(u)) throw DomainError("u does not lie in the order");
  const ff::FFElem a = locfield::residue(csa::rtrace(u));
  return eta.c.scaled(sign_of(eta.side.m - 1)) * expsum::restricted_gauss(frame.n(), eta.chi, psi, a);
}

std::vector<GuCoset> gu_cosets(const Frame& frame) {
  const auto& alg = frame.algebra();
  const ff::FieldDesc& k = *alg.k();
  const ff::FieldDesc& kr = *alg.kr();
  const uint64_t units_r = kr.unit_order();
  const uint64_t e = (pow_u64(k.size(), frame.side().s) - 1) % units_r;  // d -> d^{q^s - 1}
  const uint64_t g = std::gcd(e, units_r);  // q - 1
  const uint64_t reduced = units_r / g;
  std::vector<GuCoset> out;
  for (uint32_t j = 0; j < k.unit_order(); ++j) {
    const ff::FFElem lambda = k.gen_pow(j);
    const uint64_t target = kr.log_idx(kr.embed(lambda.pow(frame.m())).index());
    if (target % g != 0) continue;
    const uint64_t base = (target / g) * inverse_mod((e / g) % reduced, reduced) % reduced;
    GuCoset coset{lambda, {}};
    std::vector<uint64_t> logs;
    for (uint64_t t = 0; t < g; ++t) logs.push_back(base + t * reduced);
    std::sort(logs.begin(), logs.end());
    for (uint64_t l : logs) {
      const ff::FFElem d = kr.gen_pow(static_cast<int64_t>(l));
      if (!(d.pow(static_cast<int64_t>(e)) == kr.embed(lambda.pow(frame.m())))) {
        throw InternalError("coset scalar fails d^{q^s - 1} = lambda^m");
      }
      coset.d_choices.push_back(d);
    }
    out.push_back(std::move(coset));
  }
  const auto mu = ff::enumerate_mu(k, expsum::n_q(frame.n(), k));
  if (out.size() != mu.size() ||
      !std::all_of(out.begin(), out.end(), [&](const GuCoset& c) { return c.lambda.pow(frame.n()).is_one(); })) {
    throw InternalError("the lambdas admitting a coset scalar are not mu_{n_q}");
  }
  return out;
}

MatA gu_coset_rep(const Frame& frame, const ff::FFElem& lambda, const ff::FFElem& d) {
  const auto& kr = *frame.algebra().kr();
  std::vector<ff::FFElem> entries;
  ff::FFElem x = d;
  for (uint32_t i = 0; i < frame.m(); ++i, x = x * kr.embed(lambda)) entries.push_back(x);
  return teich_diag(frame.algebra(), entries);
}

MatA gu_coset_rep_inverse(const Frame& frame, const ff::FFElem& lambda, const ff::FFElem& d) {
  return gu_coset_rep(frame, lambda.inverse(), d.inverse());
}

std::vector<ThetaArgs> gu_direct_terms(const Frame& frame, const MatA& u, size_t d_choice) {
  const MatA g = csa::make_g_u(frame.phi(), u);
  std::vector<ThetaArgs> out;
  for (const GuCoset& coset : gu_cosets(frame)) {
    const ff::FFElem& d = coset.d_choices[d_choice % coset.d_choices.size()];
    const MatA h = gu_coset_rep(frame, coset.lambda, d);
    const MatA h_inv = gu_coset_rep_inverse(frame, coset.lambda, d);
    out.push_back(decompose(frame, h_inv * g * h));
  }
  return out;
}

cyc::CycValue sum_terms(const SscParam& eta, const chars::AddChar& psi,
                        const std::vector<ThetaArgs>& terms) {
  cyc::CycValue acc(psi.ring());
  for (const ThetaArgs& t : terms) acc += theta_value(eta, psi, t);
  return acc;
}

std::complex<double> sum_terms_complex(const SscParam& eta, const chars::AddChar& psi,
                                       const std::vector<ThetaArgs>& terms) {
  std::complex<double> acc = 0;
  for (const ThetaArgs& t : terms) acc += theta_value_complex(eta, psi, t);
  return acc;
}

cyc::CycValue char_at_gu_direct(const Frame& frame, const SscParam& eta, const chars::AddChar& psi,
                                const MatA& u) {
  check_frame(frame, eta);
  return sum_terms(eta, psi, gu_direct_terms(frame, u));
}

// ---------------------------------------------------------------- unipotent

cyc::CycValue char_at_unipotent_closed(const Side& side, const chars::AddChar& psi,
                                       const ff::FFElem& lambda, const expsum::Budget& budget) {
  validate(side);
  return expsum::kloosterman(side.n(), lambda, psi, budget).scaled(sign_of(side.n() - side.m));
}

std::vector<cyc::CycValue> unipotent_tuple_sums(const Frame& frame, const chars::AddChar& psi,
                                                const expsum::Budget& budget) {
  const ff::FieldDesc& k = *frame.algebra().k();
  const ff::FieldPtr& kr = frame.algebra().kr();
  if (psi.field().get() != &k) throw DomainError("psi is not a character of the frame's k");
  const uint32_t units_r = kr->unit_order(), units = k.unit_order(), p = k.p(), m = frame.m();
  const uint64_t tuples = parallel::tuple_count(units_r, m, budget.max_tuples);
  expsum::charge(budget, tuples, "unipotent tuple sum");
  const chars::AddChar inflated = chars::inflate_add(psi, kr);
  const uint64_t nu = ff::dlog(ff::rel_norm(kr->generator(), k)) % units;
  std::vector<uint32_t> expo(units_r), norm_log(units_r);
  for (uint32_t d = 0; d < units_r; ++d) {
    expo[d] = inflated.exponent_idx(kr->exp_idx(d));
    norm_log[d] = static_cast<uint32_t>(d % units * nu % units);
  }
  auto hist = parallel::reduce_range<std::vector<int64_t>>(
      tuples, [&] { return std::vector<int64_t>(size_t{units} * p, 0); },
      [&](uint64_t begin, uint64_t end, std::vector<int64_t>& acc) {
        parallel::TupleCursor cur(units_r, m, begin);
        for (uint64_t t = begin; t < end; ++t, cur.next()) {
          uint64_t log_sum = 0, e_sum = 0;
          for (uint32_t d : cur.digits()) {
            log_sum += norm_log[d];
            e_sum += expo[d];
          }
          ++acc[(log_sum % units) * p + e_sum % p];
        }
      },
      [](std::vector<int64_t>& into, const std::vector<int64_t>& from) {
        for (size_t i = 0; i < into.size(); ++i) into[i] += from[i];
      });
  std::vector<cyc::CycValue> out;
  const int64_t step = psi.ring()->modulus() / p;
  for (uint32_t j = 0; j < units; ++j) {
    cyc::ExpAccumulator acc(psi.ring());
    int64_t fiber = 0;
    for (uint32_t e = 0; e < p; ++e) {
      const int64_t count = hist[size_t{j} * p + e];
      fiber += count;
      if (count != 0) acc.add(step * e, count);
    }
    if (static_cast<uint64_t>(fiber) != tuples / units) throw InternalError("norm fiber has the wrong size");
    out.push_back(acc.value());
  }
  return out;
}

cyc::CycValue char_at_unipotent_direct(const Frame& frame, const chars::AddChar& psi,
                                       const ff::FFElem& lambda, const expsum::Budget& budget) {
  if (lambda.field_ptr() != psi.field().get() || lambda.is_zero()) {
    throw DomainError("lambda must be a unit of k");
  }
  return unipotent_tuple_sums(frame, psi, budget)[ff::dlog(lambda)];
}

MatA one_plus_phi(const Frame& frame, const ff::FFElem& c0) {
  const auto& alg = frame.algebra();
  if (c0.field_ptr() != alg.kr().get() || c0.is_zero()) throw DomainError("c0 must be a unit of k_r");
  const csa::AlgElem phi_D = csa::AlgElem::scalar(&alg, alg.constant(c0)) * frame.phi_D();
  return MatA::identity(&alg, frame.m()) + csa::phi_zeta_from(frame.m(), phi_D);
}

cyc::CycValue char_at_unipotent_deep(const Frame& frame, const chars::AddChar& psi,
                                     const ff::FFElem& c0, const expsum::Budget& budget) {
  const auto& alg = frame.algebra();
  const ff::FieldDesc& kr = *alg.kr();
  const uint32_t m = frame.m();
  const uint64_t units_r = kr.unit_order();
  const uint64_t classes = units_r / alg.k()->unit_order();  // k_r^x / k^x
  const uint64_t count = classes * parallel::tuple_count(units_r, m - 1, budget.max_tuples);
  expsum::charge(budget, count, "unipotent matrix-level sum");
  const MatA x = one_plus_phi(frame, c0);
  auto acc = parallel::reduce_range<cyc::ExpAccumulator>(
      count, [&] { return cyc::ExpAccumulator(psi.ring()); },
      [&](uint64_t begin, uint64_t end, cyc::ExpAccumulator& out) {
        std::vector<ff::FFElem> diag(m), diag_inv(m);
        for (uint64_t t = begin; t < end; ++t) {
          uint64_t rest = t / classes;
          diag[0] = kr.gen_pow(static_cast<int64_t>(t % classes));
          for (uint32_t i = 1; i < m; ++i, rest /= units_r) {
            diag[i] = kr.gen_pow(static_cast<int64_t>(rest % units_r));
          }
          for (uint32_t i = 0; i < m; ++i) diag_inv[i] = diag[i].inverse();
          const ThetaArgs a = decompose(frame, teich_diag(alg, diag_inv) * x * teich_diag(alg, diag));
          if (a.v != 0 || !a.unit.is_one()) throw InternalError("unipotent conjugate left U^1");
          out.add(static_cast<int64_t>(psi.ring_exponent_idx(a.trace_residue.index())));
        }
      },
      [](cyc::ExpAccumulator& into, const cyc::ExpAccumulator& from) { into.merge(from); }, 64);
  return acc.value();
}

// ---------------------------------------------------------------- correspondence

std::vector<CharTableRow> char_table(const Frame& frame, const SscParam& eta,
                                     const chars::AddChar& psi,
                                     const std::vector<ff::FFElem>& lambdas,
                                     const std::vector<MatA>& us, const expsum::Budget& budget) {
  check_frame(frame, eta);
  check_rings(eta, psi);
  std::vector<CharTableRow> rows;
  if (!lambdas.empty()) {
    const auto direct = unipotent_tuple_sums(frame, psi, budget);
    for (const ff::FFElem& lambda : lambdas) {
      CharTableRow row;
      row.kind = "one_plus_phi";
      row.parameters = {{"lambda_dlog", str(ff::dlog(lambda))}};
      row.closed_form = char_at_unipotent_closed(eta.side, psi, lambda, budget);
      row.direct_sum = direct[ff::dlog(lambda)];
      row.match = row.closed_form == row.direct_sum;
      rows.push_back(std::move(row));
    }
  }
  for (size_t i = 0; i < us.size(); ++i) {
    CharTableRow row;
    row.kind = "g_u";
    row.parameters = {{"u_index", str(i)},
                      {"trace_residue", str(locfield::residue(csa::rtrace(us[i])).index())}};
    row.closed_form = char_at_gu_closed(frame, eta, psi, us[i]);
    row.direct_sum = char_at_gu_direct(frame, eta, psi, us[i]);
    row.match = row.closed_form == row.direct_sum;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<CharTableRow> character_relation_check(const Frame& d_frame, const Frame& split_frame,
                                                   const SscParam& eta, const chars::AddChar& psi,
                                                   const std::vector<ff::FFElem>& lambdas,
                                                   const std::vector<MatA>& us,
                                                   const expsum::Budget& budget) {
  const JlImage image = jl_transfer(eta);
  check_frame(d_frame, eta);
  check_frame(split_frame, image.eta);
  check_rings(eta, psi);
  std::vector<CharTableRow> rows;
  if (!lambdas.empty()) {
    const auto d_side = unipotent_tuple_sums(d_frame, psi, budget);
    const auto split_side = unipotent_tuple_sums(split_frame, psi, budget);
    for (const ff::FFElem& lambda : lambdas) {
      const uint32_t j = ff::dlog(lambda);
      CharTableRow row;
      row.kind = "one_plus_phi";
      row.parameters = {{"lambda_dlog", str(j)}};
      row.closed_form = char_at_unipotent_closed(eta.side, psi, lambda, budget);
      row.direct_sum = d_side[j];
      row.split_direct = split_side[j];
      row.sign = image.sign;
      row.match = row.direct_sum == row.closed_form && row.direct_sum == row.split_direct->scaled(row.sign);
      rows.push_back(std::move(row));
    }
  }
  for (size_t i = 0; i < us.size(); ++i) {
    const MatA g = csa::make_g_u(d_frame.phi(), us[i]);
    const LaurentTrunc trace = csa::rtrace(us[i]);
    const csa::MatchedElement matched =
        csa::matching_element(csa::red_charpoly(g), eta.zeta, split_frame.algebra(), trace);
    CharTableRow row;
    row.kind = "g_u";
    row.parameters = {{"u_index", str(i)},
                      {"trace_residue", str(locfield::residue(trace).index())},
                      {"trace_match", matched.residue_trace_match.value_or(false) ? "true" : "false"}};
    row.closed_form = char_at_gu_closed(d_frame, eta, psi, us[i]);
    row.direct_sum = char_at_gu_direct(d_frame, eta, psi, us[i]);
    row.split_direct = char_at_gu_direct(split_frame, image.eta, psi, matched.u_alpha);
    row.sign = image.sign;
    row.charpoly_match = matched.charpoly_match;
    row.match = matched.charpoly_match && row.direct_sum == row.closed_form &&
                row.direct_sum == row.split_direct->scaled(row.sign);
    rows.push_back(std::move(row));
  }
  return rows;
}

JlImage jl_transfer(const SscParam& eta) {
  validate(eta.side);
  JlImage out{eta, sign_of(eta.n() - eta.side.m), eta.n() + 1};
  out.eta.side = Side{eta.n(), 1, 0};
  return out;
}

uint32_t conductor(const SscParam& eta) { return eta.n() + 1; }

// ---------------------------------------------------------------- epsilon

cyc::CycValue epsilon(const SscParam& eta) { return eta.c.scaled(sign_of(eta.n() - 1)); }

cyc::CycValue epsilon_twisted(const SscParam& eta, const TameChar& xi) {
  if (xi.unit_part.field().get() != eta.zeta.field_ptr()) throw DomainError("xi is not a character of K");
  const ff::FFElem lead = eta.n() % 2 == 1 ? eta.zeta : -eta.zeta;  // (-1)^{n-1} zeta
  return xi.eval(LaurentTrunc::monomial(lead, 1)) * epsilon(eta);
}

cyc::CycValue psi_K_constant_term(const chars::AddChar& psi, const LaurentTrunc& x) {
  if (x.field_ptr() != psi.field().get()) throw DomainError("psi_K argument over the wrong field");
  if (x.prec() <= 0) throw PrecisionError("w^0 coefficient is beyond the tracked precision");
  return psi.eval(x.coeff(0));
}

cyc::CycValue normalized_tau(const Frame& frame, const SscParam& eta, const chars::AddChar& psi,
                             const TameChar& xi) {
  check_frame(frame, eta);
  const MatA& g = frame.phi_inv();
  // A character's contragredient at g is its value at g^{-1}; every value
  // here is a root of unity, so inversion is conjugation.
  const cyc::CycValue theta_xi = theta_eval(frame, eta, psi, g) * xi.eval(csa::rnorm(g));
  return theta_xi.conj() * psi_K_constant_term(psi, csa::rtrace(g));
}

CentralChar::CentralChar(const SscParam& eta)
    : chi_(eta.chi),
      at_varpi_(eta.chi.eval(eta.zeta.inverse()) * eta.c.scaled(sign_of(eta.side.m - 1)).pow(eta.n())) {}

cyc::CycValue CentralChar::eval(const LaurentTrunc& x) const {
  if (x.field_ptr() != chi_.field().get()) throw DomainError("central character argument over the wrong field");
  if (x.is_zero()) throw DomainError("central character needs a nonzero argument");
  const int64_t v = x.val();
  return chi_.eval(locfield::residue(x.shift(-v))) * unit_pow(at_varpi_, v);
}

CentralChar central_char(const SscParam& eta) { return CentralChar(eta); }

std::string EndoLabel::to_string() const {
  return "p=" + str(p) + " f=" + str(f) + " n=" + str(n) + " zeta=" + str(zeta_index) +
         " psi=" + str(psi_twist_index);
}

EndoLabel endoclass_label(const SscParam& eta, const chars::AddChar& psi) {
  const ff::FieldDesc& k = *psi.field();
  return EndoLabel{k.p(), k.f(), eta.n(), eta.zeta.index(), psi.twist().index()};
}

}  // namespace jlcs::ssc
