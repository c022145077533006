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

#include "jlcs/csa.h"

#include <numeric>
#include <sstream>

#include "jlcs/berkowitz.h"
#include "jlcs/error.h"

namespace jlcs::csa {
namespace {

int64_t mod(int64_t a, int64_t b) {
  int64_t r = a % b;
  return r < 0 ? r + b : r;
}

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::vector<LaurentTrunc> charpoly_over_k(const DivAlgebra& alg, const KMatrix& mat) {
  auto full = berkowitz_charpoly(mat, alg.zero(), alg.one());
  std::vector<LaurentTrunc> out;
  out.reserve(full.size() - 1);
  for (size_t i = 0; i + 1 < full.size(); ++i) out.push_back(alg.restrict_to_k(full[i]));
  return out;
}

LaurentTrunc random_series(const ff::FieldDesc& field, int64_t low, int64_t prec, std::mt19937_64& rng) {
  std::vector<uint32_t> c;
  for (int64_t v = low; v < prec; ++v) c.push_back(static_cast<uint32_t>(rng() % field.size()));
  return LaurentTrunc::from_indices(field, low, std::move(c), prec);
}

MatA nilpotent_inverse(const MatA& nil) {
  // (1 + N)^{-1} = sum_k (-N)^k for nilpotent N of index <= m.
  const MatA one = MatA::identity(nil.algebra_ptr(), nil.m());
  MatA term = one, acc = one;
  for (uint32_t k = 1; k < nil.m(); ++k) {
    term = term * (-nil);
    acc = acc + term;
  }
  return acc;
}

// f(x + a) for monic f given by low coefficients, a over the same field.
std::vector<LaurentTrunc> taylor_shift(const std::vector<LaurentTrunc>& low, const LaurentTrunc& a) {
  const size_t n = low.size();
  const auto& field = a.field();
  std::vector<LaurentTrunc> c = low;
  c.push_back(LaurentTrunc::one(field));
  // Repeated synthetic division by (x - a) in reverse Horner form.
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = n; j-- > i;) c[j] = c[j] + a * c[j + 1];
  }
  c.pop_back();
  return c;
}

bool generalized_eisenstein(const std::vector<LaurentTrunc>& low) {
  for (size_t i = 1; i < low.size(); ++i) {
    if (low[i].val() < 1) return false;
  }
  return !low[0].is_zero() && low[0].val() == 1;
}

}  // namespace

// ---------------------------------------------------------------- algebra

AlgebraPtr DivAlgebra::make(ff::FieldPtr k, uint32_t r, uint32_t s, int64_t precision) {
  if (!k) throw DomainError("null base field");
  if (r == 0) throw DomainError("r must be positive");
  if (precision < 1) throw DomainError("precision must be positive");
  if (r > 1 && (s == 0 || s >= r || std::gcd(s, r) != 1)) {
    throw DomainError("s must satisfy 1 <= s < r and gcd(s, r) = 1");
  }
  std::shared_ptr<DivAlgebra> alg(new DivAlgebra());
  alg->k_ = k;
  alg->kr_ = r == 1 ? k : ff::FieldDesc::make_extension(k, r);
  alg->r_ = r;
  alg->s_ = r == 1 ? 0 : s;
  alg->precision_ = precision;
  return alg;
}

uint32_t DivAlgebra::frob_idx(uint32_t idx, int64_t j) const {
  const int64_t jj = mod(j, r_);
  if (idx == 0 || jj == 0) return idx;
  const uint64_t units = kr_->unit_order();
  uint64_t qj = 1;
  for (int64_t t = 0; t < jj; ++t) qj = mulmod_u64(qj, k_->size(), units);
  return kr_->exp_idx(static_cast<int64_t>(mulmod_u64(kr_->log_idx(idx), qj, units)));
}

LaurentTrunc DivAlgebra::sigma(const LaurentTrunc& a, int64_t j) const {
  if (mod(j, r_) == 0) return a;
  return a.map_coeffs([this, j](uint32_t idx) { return frob_idx(idx, j); });
}

LaurentTrunc DivAlgebra::constant(const ff::FFElem& c) const {
  if (c.field_ptr() == kr_.get()) return locfield::teichmuller(c);
  return locfield::teichmuller(kr_->embed(c));
}

LaurentTrunc DivAlgebra::varpi() const { return LaurentTrunc::monomial(kr_->one(), 1); }

LaurentTrunc DivAlgebra::restrict_to_k(const LaurentTrunc& a) const {
  auto out = a.restrict_to(*k_);
  if (!out) throw InternalError("reduced invariant is not K-rational: " + a.to_string());
  return *out;
}

LaurentTrunc DivAlgebra::trace_to_k(const LaurentTrunc& a) const {
  LaurentTrunc acc = LaurentTrunc::zero(*kr_, a.prec());
  for (uint32_t j = 0; j < r_; ++j) acc = acc + sigma(a, j);
  return restrict_to_k(acc);
}

// ---------------------------------------------------------------- AlgElem

AlgElem::AlgElem(const DivAlgebra* alg) : alg_(alg), coeffs_(alg->r(), alg->zero()) {}

AlgElem AlgElem::scalar(const DivAlgebra* alg, const LaurentTrunc& a) {
  return monomial(alg, a, 0);
}

AlgElem AlgElem::monomial(const DivAlgebra* alg, const LaurentTrunc& a, uint32_t i) {
  if (a.field_ptr() != alg->kr().get()) throw DomainError("coefficient not over K_r");
  AlgElem out(alg);
  out.coeffs_[i % alg->r()] = a.shift(i / alg->r());
  return out;
}

AlgElem AlgElem::pi(const DivAlgebra* alg) { return monomial(alg, alg->one(), 1); }

bool AlgElem::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

AlgElem AlgElem::operator+(const AlgElem& o) const {
  if (alg_ != o.alg_) throw DomainError("elements of different algebras");
  AlgElem out = *this;
  for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += o.coeffs_[i];
  return out;
}

AlgElem AlgElem::operator-() const {
  AlgElem out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

AlgElem AlgElem::operator-(const AlgElem& o) const { return *this + (-o); }

AlgElem AlgElem::operator*(const AlgElem& o) const {
  if (alg_ != o.alg_) throw DomainError("elements of different algebras");
  const uint32_t r = alg_->r();
  const int64_t s = alg_->s();
  AlgElem out(alg_);
  for (uint32_t i = 0; i < r; ++i) {
    if (coeffs_[i].is_zero() && coeffs_[i].exact()) continue;
    for (uint32_t j = 0; j < r; ++j) {
      if (o.coeffs_[j].is_zero() && o.coeffs_[j].exact()) continue;
      LaurentTrunc term = coeffs_[i] * alg_->sigma(o.coeffs_[j], s * i);
      if (i + j >= r) term = term.shift(1);
      out.coeffs_[(i + j) % r] += term;
    }
  }
  return out;
}

int64_t AlgElem::w() const {
  const int64_t r = alg_->r();
  int64_t best = locfield::kExact;
  for (int64_t i = 0; i < r; ++i) best = std::min(best, r * coeffs_[i].val() + i);
  return best;
}

AlgElem AlgElem::inverse() const {
  const RedCharPoly f = red_charpoly(*this);
  const uint32_t r = alg_->r();
  // Cayley-Hamilton: d^{-1} = -a_0^{-1} (a_1 + a_2 d + ... + d^{r-1}).
  AlgElem acc = one(alg_);
  for (uint32_t i = r - 1; i >= 1; --i) acc = acc * *this + scalar(alg_, alg_->lift_from_k(f.coeffs[i]));
  const LaurentTrunc inv0 = alg_->lift_from_k(-f.coeffs[0]).inverse(alg_->precision());
  return scalar(alg_, inv0) * acc;
}

bool AlgElem::agrees_with(const AlgElem& o) const {
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].agrees_with(o.coeffs_[i])) return false;
  }
  return true;
}

std::string AlgElem::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << " + ";
    os << "(" << coeffs_[i].to_string() << ")";
    if (i) os << "P^" << i;
  }
  return os.str();
}

// ---------------------------------------------------------------- MatA

MatA::MatA(const DivAlgebra* alg, uint32_t m) : alg_(alg), m_(m), entries_(size_t{m} * m, AlgElem(alg)) {
  if (m == 0) throw DomainError("m must be positive");
}

MatA MatA::identity(const DivAlgebra* alg, uint32_t m) { return scalar(alg, m, AlgElem::one(alg)); }

MatA MatA::scalar(const DivAlgebra* alg, uint32_t m, const AlgElem& d) {
  MatA out(alg, m);
  for (uint32_t i = 0; i < m; ++i) out.at(i, i) = d;
  return out;
}

void MatA::check_shape(const MatA& o) const {
  if (alg_ != o.alg_ || m_ != o.m_) throw DomainError("matrices of different shapes or algebras");
}

MatA MatA::operator+(const MatA& o) const {
  check_shape(o);
  MatA out = *this;
  for (size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] + o.entries_[i];
  return out;
}

MatA MatA::operator-() const {
  MatA out = *this;
  for (auto& e : out.entries_) e = -e;
  return out;
}

MatA MatA::operator-(const MatA& o) const { return *this + (-o); }

MatA MatA::operator*(const MatA& o) const {
  check_shape(o);
  MatA out(alg_, m_);
  for (uint32_t i = 0; i < m_; ++i) {
    for (uint32_t j = 0; j < m_; ++j) {
      AlgElem acc(alg_);
      for (uint32_t t = 0; t < m_; ++t) {
        const AlgElem& a = at(i, t);
        const AlgElem& b = o.at(t, j);
        if ((a.is_zero() && a.w() >= locfield::kExact / 2) || (b.is_zero() && b.w() >= locfield::kExact / 2)) {
          continue;
        }
        acc = acc + a * b;
      }
      out.at(i, j) = acc;
    }
  }
  return out;
}

MatA MatA::pow(uint32_t e) const {
  MatA result = identity(alg_, m_);
  for (uint32_t i = 0; i < e; ++i) result = result * *this;
  return result;
}

MatA MatA::inverse() const {
  const RedCharPoly f = red_charpoly(*this);
  const uint32_t n = this->n();
  auto lifted = [&](const LaurentTrunc& c) {
    return scalar(alg_, m_, AlgElem::scalar(alg_, alg_->lift_from_k(c)));
  };
  MatA acc = identity(alg_, m_);
  for (uint32_t i = n - 1; i >= 1; --i) acc = acc * *this + lifted(f.coeffs[i]);
  const LaurentTrunc inv0 = alg_->lift_from_k(-f.coeffs[0]).inverse(alg_->precision());
  return scalar(alg_, m_, AlgElem::scalar(alg_, inv0)) * acc;
}

bool MatA::agrees_with(const MatA& o) const {
  check_shape(o);
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (!entries_[i].agrees_with(o.entries_[i])) return false;
  }
  return true;
}

std::string MatA::to_string() const {
  std::ostringstream os;
  for (uint32_t i = 0; i < m_; ++i) {
    os << "[";
    for (uint32_t j = 0; j < m_; ++j) os << (j ? ", " : "") << at(i, j).to_string();
    os << "]\n";
  }
  return os.str();
}

// ---------------------------------------------------------------- reduced invariants

KMatrix regular_rep(const AlgElem& d) {
  const DivAlgebra& alg = d.algebra();
  const uint32_t r = alg.r();
  const int64_t s = alg.s();
  KMatrix out(r, std::vector<LaurentTrunc>(r, alg.zero()));
  for (uint32_t i = 0; i < r; ++i) {
    for (uint32_t j = 0; j < r; ++j) {
      LaurentTrunc entry = alg.sigma(d.coeff(i), -s * (i + j));
      if (i + j >= r) entry = entry.shift(1);
      out[(i + j) % r][j] = entry;
    }
  }
  return out;
}

KMatrix embed_A(const MatA& g) {
  const DivAlgebra& alg = g.algebra();
  const uint32_t r = alg.r(), m = g.m(), n = g.n();
  KMatrix out(n, std::vector<LaurentTrunc>(n, alg.zero()));
  for (uint32_t bi = 0; bi < m; ++bi) {
    for (uint32_t bj = 0; bj < m; ++bj) {
      KMatrix block = regular_rep(g.at(bi, bj));
      for (uint32_t i = 0; i < r; ++i) {
        for (uint32_t j = 0; j < r; ++j) out[bi * r + i][bj * r + j] = std::move(block[i][j]);
      }
    }
  }
  return out;
}

bool RedCharPoly::agrees_with(const RedCharPoly& o) const {
  if (coeffs.size() != o.coeffs.size()) return false;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].agrees_with(o.coeffs[i])) return false;
  }
  return true;
}

std::string RedCharPoly::to_string() const {
  std::ostringstream os;
  os << "x^" << coeffs.size();
  for (size_t i = coeffs.size(); i-- > 0;) os << " + (" << coeffs[i].to_string() << ")x^" << i;
  return os.str();
}

RedCharPoly red_charpoly(const MatA& g) { return {charpoly_over_k(g.algebra(), embed_A(g))}; }

RedCharPoly red_charpoly(const AlgElem& d) { return {charpoly_over_k(d.algebra(), regular_rep(d))}; }

LaurentTrunc rtrace(const AlgElem& d) { return d.algebra().trace_to_k(d.coeff(0)); }

LaurentTrunc rtrace(const MatA& g) {
  LaurentTrunc acc = LaurentTrunc::zero(*g.algebra().k());
  for (uint32_t i = 0; i < g.m(); ++i) acc = acc + rtrace(g.at(i, i));
  return acc;
}

LaurentTrunc rnorm(const MatA& g) {
  const RedCharPoly f = red_charpoly(g);
  return g.n() % 2 == 0 ? f.coeffs[0] : -f.coeffs[0];
}

// ---------------------------------------------------------------- phi

std::vector<ff::FFElem> norm_preimages(const DivAlgebra& alg, const ff::FFElem& zeta) {
  const ff::FieldDesc& k = *alg.k();
  const ff::FieldDesc& kr = *alg.kr();
  if (zeta.field_ptr() != &k || zeta.is_zero()) throw DomainError("zeta must be a unit of k");
  const uint64_t nu = ff::dlog(ff::rel_norm(kr.generator(), k)), units = k.unit_order();
  const uint64_t target = k.log_idx(zeta.index());
  std::vector<ff::FFElem> out;
  for (uint64_t d = 0; d < kr.unit_order(); ++d) {
    if (d * nu % units == target) out.push_back(kr.gen_pow(static_cast<int64_t>(d)));
  }
  if (out.empty()) throw InternalError("norm map k_r -> k is not surjective");
  return out;
}

AlgElem phi_D_from_constant(const DivAlgebra& alg, const ff::FFElem& c) {
  return AlgElem::scalar(&alg, alg.constant(c)) * AlgElem::pi(&alg);
}

AlgElem make_phi_D(const DivAlgebra& alg, const ff::FFElem& zeta) {
  const ff::FieldDesc& k = *alg.k();
  const ff::FieldDesc& kr = *alg.kr();
  if (zeta.field_ptr() != &k || zeta.is_zero()) throw DomainError("zeta must be a unit of k");
  const uint64_t nu = ff::dlog(ff::rel_norm(kr.generator(), k)), units = k.unit_order();
  const uint64_t target = k.log_idx(zeta.index());
  uint64_t d = 0;
  while (d < kr.unit_order() && d * nu % units != target) ++d;
  if (d == kr.unit_order()) throw InternalError("norm map k_r -> k is not surjective");
  AlgElem phi = phi_D_from_constant(alg, kr.gen_pow(static_cast<int64_t>(d)));
  AlgElem power = AlgElem::one(&alg);
  for (uint32_t i = 0; i < alg.r(); ++i) power = power * phi;
  if (!(power.agrees_with(AlgElem::scalar(&alg, alg.constant(zeta) * alg.varpi())))) {
    throw InternalError("phi_D^r != zeta w");
  }
  return phi;
}

MatA phi_zeta_from(uint32_t m, const AlgElem& phi_D) {
  const DivAlgebra* alg = phi_D.algebra_ptr();
  MatA out(alg, m);
  for (uint32_t i = 0; i + 1 < m; ++i) out.at(i, i + 1) = AlgElem::one(alg);
  out.at(m - 1, 0) = phi_D;
  return out;
}

MatA make_phi_zeta(uint32_t m, const DivAlgebra& alg, const ff::FFElem& zeta) {
  return phi_zeta_from(m, make_phi_D(alg, zeta));
}

MatA phi_zeta_inverse(const MatA& phi, const ff::FFElem& zeta) {
  const DivAlgebra& alg = phi.algebra();
  const LaurentTrunc scale = LaurentTrunc::monomial(alg.kr()->embed(zeta).inverse(), -1);
  return MatA::scalar(&alg, phi.m(), AlgElem::scalar(&alg, scale)) * phi.pow(phi.n() - 1);
}

int64_t order_valuation(const MatA& x) {
  const int64_t m = x.m();
  int64_t best = locfield::kExact;
  for (int64_t i = 0; i < m; ++i) {
    for (int64_t j = 0; j < m; ++j) {
      const int64_t w = x.at(static_cast<uint32_t>(i), static_cast<uint32_t>(j)).w();
      if (w >= locfield::kExact / 2) continue;
      best = std::min(best, m * w + j - i);
    }
  }
  return best;
}

bool in_order(const MatA& x) { return order_valuation(x) >= 0; }

MatA make_g_u(const MatA& phi, const MatA& u) {
  if (!in_order(u)) throw DomainError("u does not lie in the order");
  return phi * (MatA::identity(phi.algebra_ptr(), phi.m()) + phi * u);
}

// ---------------------------------------------------------------- regularity

EisensteinReport eisenstein_check(const RedCharPoly& f, const ff::FFElem& zeta) {
  if (f.coeffs.empty()) throw DomainError("empty characteristic polynomial");
  const ff::FieldDesc& k = f.coeffs[0].field();
  if (zeta.field_ptr() != &k || zeta.is_zero()) throw DomainError("zeta must be a unit of k");
  EisensteinReport rep;
  rep.middle_in_p = true;
  for (size_t i = 1; i < f.coeffs.size(); ++i) {
    const auto& a = f.coeffs[i];
    if (a.is_zero() && a.prec() < 1) throw PrecisionError("a_i not known modulo p_K");
    if (a.val() < 1) rep.middle_in_p = false;
  }
  const LaurentTrunc scaled = -(f.coeffs[0] * LaurentTrunc::monomial(zeta.inverse(), -1));
  rep.constant_unit = locfield::in_principal_units(scaled);
  rep.eisenstein = rep.middle_in_p && rep.constant_unit;
  rep.elliptic_quasi_regular = rep.eisenstein;
  return rep;
}

std::string to_string(QrClass c) {
  switch (c) {
    case QrClass::kRegular:
      return "regular";
    case QrClass::kEllipticQuasiRegular:
      return "elliptic_quasi_regular";
    case QrClass::kQuasiRegular:
      return "quasi_regular";
    case QrClass::kUnknown:
      break;
  }
  return "unknown";
}

LaurentTrunc resultant_with_derivative(const RedCharPoly& f) {
  const size_t n = f.coeffs.size();
  const ff::FieldDesc& k = f.coeffs[0].field();
  if (n == 0) throw DomainError("empty characteristic polynomial");
  std::vector<LaurentTrunc> full = f.coeffs;  // low to high, monic
  full.push_back(LaurentTrunc::one(k));
  std::vector<LaurentTrunc> deriv;  // formal degree n - 1
  for (size_t i = 1; i <= n; ++i) {
    deriv.push_back(full[i].scaled(k.from_int(static_cast<int64_t>(i))));
  }
  const size_t size = 2 * n - 1;
  const LaurentTrunc zero = LaurentTrunc::zero(k);
  KMatrix syl(size, std::vector<LaurentTrunc>(size, zero));
  // Rows hold coefficients from highest degree down.
  for (size_t row = 0; row + 1 < n; ++row) {
    for (size_t i = 0; i <= n; ++i) syl[row][row + i] = full[n - i];
  }
  for (size_t row = 0; row < n; ++row) {
    for (size_t i = 0; i < n; ++i) syl[n - 1 + row][row + i] = deriv[n - 1 - i];
  }
  auto cp = berkowitz_charpoly(syl, zero, LaurentTrunc::one(k));
  return size % 2 == 0 ? cp[0] : -cp[0];
}

QrClass classify_qr(const MatA& g) {
  const RedCharPoly f = red_charpoly(g);
  const LaurentTrunc res = resultant_with_derivative(f);
  if (!res.is_zero() && res.val() == 0) return QrClass::kRegular;
  const ff::FieldDesc& k = *g.algebra().k();
  for (const auto& c : f.coeffs) {
    if (!c.is_zero() && c.val() < 0) return QrClass::kUnknown;
    if (c.prec() < 2) throw PrecisionError("characteristic polynomial known only modulo p_K");
  }
  // Roots of the reduction, each tried as the centre of an Eisenstein shift.
  for (uint32_t a = 0; a < k.size(); ++a) {
    uint32_t acc = 1;  // Horner, leading coefficient one
    for (size_t i = f.coeffs.size(); i-- > 0;) acc = k.add(k.mul(acc, a), locfield::residue(f.coeffs[i]).index());
    if (acc != 0) continue;
    if (generalized_eisenstein(taylor_shift(f.coeffs, locfield::teichmuller(k.element(a))))) {
      return QrClass::kEllipticQuasiRegular;
    }
  }
  return QrClass::kUnknown;
}

MatchedElement matching_element(const RedCharPoly& f, const ff::FFElem& zeta, const DivAlgebra& split,
                                const std::optional<LaurentTrunc>& trd_u_xi) {
  if (split.r() != 1) throw DomainError("matching element lives in the split algebra");
  if (f.coeffs.empty() || f.coeffs[0].field_ptr() != split.k().get()) {
    throw DomainError("polynomial is not over the split algebra's base field");
  }
  if (!eisenstein_check(f, zeta).eisenstein) throw DomainError("polynomial fails the Eisenstein test");
  const uint32_t n = f.degree();
  const ff::FieldDesc& k = *split.k();
  const LaurentTrunc inv = LaurentTrunc::monomial(zeta.inverse(), -1);  // (zeta w)^{-1}
  MatchedElement out;
  for (uint32_t i = 1; i < n; ++i) out.alpha.push_back(-(f.coeffs[i] * inv));
  out.alpha.push_back(-((f.coeffs[0] * inv + LaurentTrunc::one(k)) * inv));
  const MatA phi = make_phi_zeta(n, split, zeta);
  out.u_alpha = MatA(&split, n);
  MatA power = MatA::identity(&split, n);
  for (uint32_t i = 0; i < n; ++i) {
    MatA e(&split, n);
    e.at(0, 0) = AlgElem::scalar(&split, out.alpha[i]);
    out.u_alpha = out.u_alpha + power * e;
    power = power * phi;
  }
  out.g_alpha = make_g_u(phi, out.u_alpha);
  out.charpoly_match = red_charpoly(out.g_alpha).agrees_with(f);
  if (trd_u_xi) {
    out.residue_trace_match = locfield::residue(rtrace(out.u_alpha)) == locfield::residue(*trd_u_xi);
  }
  return out;
}

// ---------------------------------------------------------------- sampling

MatA random_order_element(const DivAlgebra& alg, uint32_t m, std::mt19937_64& rng) {
  MatA out(&alg, m);
  const int64_t prec = alg.precision();
  for (uint32_t i = 0; i < m; ++i) {
    for (uint32_t j = 0; j < m; ++j) {
      AlgElem& e = out.at(i, j);
      for (uint32_t t = 0; t < alg.r(); ++t) {
        e.coeff(t) = random_series(*alg.kr(), (i > j && t == 0) ? 1 : 0, prec, rng);
      }
    }
  }
  return out;
}

UnitSample random_order_unit(const DivAlgebra& alg, uint32_t m, std::mt19937_64& rng) {
  const ff::FieldDesc& kr = *alg.kr();
  MatA diag(&alg, m), diag_inv(&alg, m);
  for (uint32_t i = 0; i < m; ++i) {
    ff::FFElem c = kr.element(1 + static_cast<uint32_t>(rng() % (kr.size() - 1)));
    diag.at(i, i) = AlgElem::scalar(&alg, alg.constant(c));
    diag_inv.at(i, i) = AlgElem::scalar(&alg, alg.constant(c.inverse()));
  }
  MatA sample = random_order_element(alg, m, rng);
  MatA upper(&alg, m), lower(&alg, m);
  for (uint32_t i = 0; i < m; ++i) {
    for (uint32_t j = 0; j < m; ++j) {
      if (i < j) upper.at(i, j) = sample.at(i, j);
      if (i > j) lower.at(i, j) = sample.at(i, j);
    }
  }
  const MatA one = MatA::identity(&alg, m);
  UnitSample out;
  out.h = diag * (one + upper) * (one + lower);
  out.h_inv = nilpotent_inverse(lower) * nilpotent_inverse(upper) * diag_inv;
  return out;
}

}  // namespace jlcs::csa
