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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "jlcs/berkowitz.h"
#include "jlcs/error.h"

namespace jlcs::csa {
namespace {

using ff::FieldDesc;
using ff::FFElem;

struct Side {
  uint32_t p, f, m, r, s;
};

std::string name(const Side& c) {
  return std::to_string(c.p) + "^" + std::to_string(c.f) + " m=" + std::to_string(c.m) +
         " r=" + std::to_string(c.r) + " s=" + std::to_string(c.s);
}

void PrintTo(const Side& c, std::ostream* os) { *os << name(c); }

// Leibniz expansion of det(M) for a small square matrix.
LaurentTrunc leibniz_det(const KMatrix& a, const ff::FieldDesc& field) {
  const size_t n = a.size();
  std::vector<size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  LaurentTrunc acc = LaurentTrunc::zero(field);
  do {
    size_t inversions = 0;
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    LaurentTrunc term = LaurentTrunc::one(field);
    for (size_t i = 0; i < n; ++i) term = term * a[i][perm[i]];
    acc = inversions % 2 ? acc - term : acc + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

TEST(Berkowitz, IntegerMatricesAgainstLeibniz) {
  std::mt19937_64 rng(4);
  for (size_t n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::vector<int64_t>> a(n, std::vector<int64_t>(n));
      for (auto& row : a) {
        for (auto& x : row) x = static_cast<int64_t>(rng() % 11) - 5;
      }
      auto cp = berkowitz_charpoly(a, int64_t{0}, int64_t{1});
      ASSERT_EQ(cp.size(), n + 1);
      EXPECT_EQ(cp[n], 1);
      for (int64_t t = -3; t <= 3; ++t) {
        // det(tI - A) by Leibniz.
        std::vector<size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        int64_t det = 0;
        do {
          size_t inv = 0;
          for (size_t i = 0; i < n; ++i) {
            for (size_t j = i + 1; j < n; ++j) inv += perm[i] > perm[j];
          }
          int64_t term = 1;
          for (size_t i = 0; i < n; ++i) term *= (i == perm[i] ? t : 0) - a[i][perm[i]];
          det += inv % 2 ? -term : term;
        } while (std::next_permutation(perm.begin(), perm.end()));
        int64_t val = 0;
        for (size_t i = n + 1; i-- > 0;) val = val * t + cp[i];
        EXPECT_EQ(val, det);
      }
    }
  }
}

class Algebras : public ::testing::TestWithParam<Side> {
 protected:
  void SetUp() override {
    const Side& c = GetParam();
    k = FieldDesc::make_field(c.p, c.f);
    alg = DivAlgebra::make(k, c.r, c.s, 8);
  }
  ff::FieldPtr k;
  AlgebraPtr alg;
};

TEST_P(Algebras, PiRelations) {
  const DivAlgebra* a = alg.get();
  const uint32_t r = a->r();
  AlgElem pi = AlgElem::pi(a);
  AlgElem pw = AlgElem::one(a);
  for (uint32_t i = 0; i < r; ++i) pw = pw * pi;
  EXPECT_TRUE(pw.agrees_with(AlgElem::scalar(a, a->varpi())));
  const auto& kr = *a->kr();
  for (uint32_t idx = 1; idx < std::min<uint32_t>(kr.size(), 50); ++idx) {
    auto c = a->constant(kr.element(idx));
    auto lhs = pi * AlgElem::scalar(a, c);
    auto rhs = AlgElem::scalar(a, c.map_coeffs([&](uint32_t x) {
                 return kr.pow_idx(x, static_cast<int64_t>(std::pow(k->size(), a->s())));
               })) * pi;
    EXPECT_TRUE(lhs.agrees_with(rhs));
  }
  // det of the regular representation of Pi is (-1)^{r-1} w.
  auto det = leibniz_det(regular_rep(pi), kr);
  auto expect = a->varpi();
  EXPECT_TRUE(det.agrees_with(r % 2 ? expect : -expect));
}

TEST_P(Algebras, RegularRepresentationIsHomomorphism) {
  std::mt19937_64 rng(13);
  const DivAlgebra* a = alg.get();
  for (int trial = 0; trial < 10; ++trial) {
    MatA x = random_order_element(*a, 1, rng), y = random_order_element(*a, 1, rng);
    const AlgElem& d = x.at(0, 0);
    const AlgElem& e = y.at(0, 0);
    KMatrix rd = regular_rep(d), re = regular_rep(e), rde = regular_rep(d * e);
    const uint32_t r = a->r();
    for (uint32_t i = 0; i < r; ++i) {
      for (uint32_t j = 0; j < r; ++j) {
        LaurentTrunc acc = a->zero();
        for (uint32_t t = 0; t < r; ++t) acc = acc + rd[i][t] * re[t][j];
        EXPECT_TRUE(acc.agrees_with(rde[i][j]));
      }
    }
    // Reduced trace via the regular representation is Tr_{K_r/K}(a_0).
    LaurentTrunc tr = a->zero();
    for (uint32_t i = 0; i < r; ++i) tr = tr + rd[i][i];
    EXPECT_TRUE(a->restrict_to_k(tr).agrees_with(rtrace(d)));
    // Multiplication is associative and w is additive on products with units times powers.
    MatA z = random_order_element(*a, 1, rng);
    EXPECT_TRUE(((d * e) * z.at(0, 0)).agrees_with(d * (e * z.at(0, 0))));
  }
}

TEST_P(Algebras, CenterIsK) {
  const DivAlgebra* a = alg.get();
  const auto& kr = *a->kr();
  const uint32_t r = a->r();
  AlgElem pi = AlgElem::pi(a);
  AlgElem gen = AlgElem::scalar(a, a->constant(kr.generator()));
  for (uint32_t idx = 1; idx < std::min<uint32_t>(kr.size(), 200); ++idx) {
    for (uint32_t i = 0; i < r; ++i) {
      AlgElem d = AlgElem::monomial(a, a->constant(kr.element(idx)), i);
      bool central = (d * pi).agrees_with(pi * d) && (d * gen).agrees_with(gen * d);
      bool expected = i == 0 && kr.restrict_to(kr.element(idx), *k).has_value();
      EXPECT_EQ(central, expected) << idx << " " << i;
    }
  }
}

TEST_P(Algebras, PhiDAndConjugationAction) {
  const DivAlgebra* a = alg.get();
  const auto& kr = *a->kr();
  for (uint32_t z = 1; z < k->size(); ++z) {
    FFElem zeta = k->element(z);
    AlgElem phi = make_phi_D(*a, zeta);
    auto pre = norm_preimages(*a, zeta);
    EXPECT_EQ(pre.size(), kr.unit_order() / k->unit_order());
    EXPECT_EQ(ff::rel_norm(pre[0], *k), zeta);
    AlgElem inv = phi.inverse();
    EXPECT_TRUE((phi * inv).agrees_with(AlgElem::one(a)));
    for (uint32_t idx = 1; idx < std::min<uint32_t>(kr.size(), 64); ++idx) {
      AlgElem d = AlgElem::scalar(a, a->constant(kr.element(idx)));
      uint64_t qs = 1;
      for (uint32_t t = 0; t < a->s(); ++t) qs *= k->size();
      AlgElem expect = AlgElem::scalar(a, a->constant(kr.element(idx).pow(static_cast<int64_t>(qs))));
      EXPECT_TRUE((phi * d * inv).agrees_with(expect));
    }
  }
}

TEST_P(Algebras, PhiZetaPowersNormAndTrace) {
  const Side& c = GetParam();
  const DivAlgebra* a = alg.get();
  const uint32_t n = c.m * c.r;
  for (uint32_t z = 1; z < k->size(); ++z) {
    FFElem zeta = k->element(z);
    MatA phi = make_phi_zeta(c.m, *a, zeta);
    LaurentTrunc zw = LaurentTrunc::monomial(zeta, 1);
    MatA expect = MatA::scalar(a, c.m, AlgElem::scalar(a, a->lift_from_k(zw)));
    EXPECT_TRUE(phi.pow(n).agrees_with(expect));
    EXPECT_TRUE(rnorm(phi).agrees_with(n % 2 ? zw : -zw)) << rnorm(phi).to_string();
    MatA inv = phi_zeta_inverse(phi, zeta);
    EXPECT_TRUE((phi * inv).agrees_with(MatA::identity(a, c.m)));
    // The trace identity needs n >= 2; for n = 1, phi^{-1} is the scalar (zeta w)^{-1}.
    if (n >= 2) {
      EXPECT_TRUE(rtrace(inv).is_zero());
    } else {
      EXPECT_EQ(rtrace(inv).val(), -1);
    }
    EXPECT_EQ(order_valuation(phi), 1);
    EXPECT_EQ(order_valuation(inv), -1);
  }
  auto id = MatA::identity(a, c.m);
  EXPECT_TRUE(rtrace(id).agrees_with(LaurentTrunc::monomial(k->from_int(n), 0)));
  // (x - 1)^n.
  auto f = red_charpoly(id);
  ASSERT_EQ(f.degree(), n);
  for (uint32_t i = 0; i < n; ++i) {
    uint64_t binom = 1;
    for (uint32_t t = 0; t < i; ++t) binom = binom * (n - t) / (t + 1);
    int64_t sign = (n - i) % 2 ? -1 : 1;
    EXPECT_TRUE(f.coeffs[i].agrees_with(LaurentTrunc::monomial(k->from_int(sign * int64_t(binom)), 0)));
  }
  EXPECT_EQ(classify_qr(id), n == 1 ? QrClass::kRegular : QrClass::kUnknown);
}

TEST_P(Algebras, CharpolyAgainstLeibnizAndInvariants) {
  const Side& c = GetParam();
  const DivAlgebra* a = alg.get();
  const uint32_t n = c.m * c.r;
  std::mt19937_64 rng(21);
  const auto& kr = *a->kr();
  for (int trial = 0; trial < (n <= 4 ? 4 : 2); ++trial) {
    MatA x = random_order_element(*a, c.m, rng);
    MatA y = random_order_element(*a, c.m, rng);
    RedCharPoly f = red_charpoly(x);
    EXPECT_TRUE(f.coeffs[n - 1].agrees_with(-rtrace(x)));
    if (n <= 4) {
      KMatrix ex = embed_A(x);
      for (uint32_t idx = 0; idx < std::min<uint32_t>(kr.size(), 12); ++idx) {
        LaurentTrunc t = locfield::teichmuller(kr.element(idx));
        KMatrix shifted = ex;
        for (uint32_t i = 0; i < n; ++i) {
          for (uint32_t j = 0; j < n; ++j) shifted[i][j] = (i == j ? t : a->zero()) - ex[i][j];
        }
        LaurentTrunc val = LaurentTrunc::one(kr);
        for (uint32_t i = n; i-- > 0;) val = val * t + a->lift_from_k(f.coeffs[i]);
        EXPECT_TRUE(val.agrees_with(leibniz_det(shifted, kr)));
      }
    }
    EXPECT_TRUE(rnorm(x * y).agrees_with(rnorm(x) * rnorm(y)));
    EXPECT_TRUE(rtrace(x + y).agrees_with(rtrace(x) + rtrace(y)));
    EXPECT_TRUE(in_order(x * y));
    // Conjugation invariance under sampled units of the order.
    UnitSample h = random_order_unit(*a, c.m, rng);
    EXPECT_TRUE((h.h * h.h_inv).agrees_with(MatA::identity(a, c.m)));
    EXPECT_TRUE(red_charpoly(h.h_inv * x * h.h).agrees_with(f));
  }
}

TEST_P(Algebras, RadicalIsPhiTimesOrder) {
  const Side& c = GetParam();
  const DivAlgebra* a = alg.get();
  std::mt19937_64 rng(33);
  FFElem zeta = k->generator();
  MatA phi = make_phi_zeta(c.m, *a, zeta), inv = phi_zeta_inverse(phi, zeta);
  for (int trial = 0; trial < 5; ++trial) {
    MatA x = random_order_element(*a, c.m, rng);
    MatA px = phi * x;
    EXPECT_GE(order_valuation(px), 1);
    EXPECT_TRUE(in_order(inv * px));
    EXPECT_TRUE(in_order(x * phi));
    EXPECT_TRUE(in_order(phi * x * inv));
    EXPECT_TRUE(in_order(inv * x * phi));
    UnitSample h = random_order_unit(*a, c.m, rng);
    EXPECT_TRUE(in_order(phi * h.h * inv));
    EXPECT_TRUE(in_order(h.h_inv));
    EXPECT_EQ(order_valuation(h.h), 0);
  }
}

TEST_P(Algebras, GuIsEisensteinAndMatches) {
  const Side& c = GetParam();
  const DivAlgebra* a = alg.get();
  const uint32_t n = c.m * c.r;
  auto split = DivAlgebra::make(k, 1, 0, 8);
  std::mt19937_64 rng(55);
  for (uint32_t z = 1; z < k->size(); ++z) {
    FFElem zeta = k->element(z);
    MatA phi = make_phi_zeta(c.m, *a, zeta);
    for (int trial = 0; trial < 3; ++trial) {
      MatA u = trial == 0 ? MatA(a, c.m) : random_order_element(*a, c.m, rng);
      MatA g = make_g_u(phi, u);
      RedCharPoly f = red_charpoly(g);
      auto rep = eisenstein_check(f, zeta);
      EXPECT_TRUE(rep.middle_in_p && rep.constant_unit && rep.eisenstein) << name(c);
      EXPECT_EQ(classify_qr(g), n == 1 ? QrClass::kRegular : QrClass::kEllipticQuasiRegular);
      auto matched = matching_element(f, zeta, *split, rtrace(u));
      EXPECT_TRUE(matched.charpoly_match) << name(c);
      ASSERT_TRUE(matched.residue_trace_match.has_value());
      EXPECT_TRUE(*matched.residue_trace_match) << name(c);
      if (trial == 0) {
        for (const auto& al : matched.alpha) EXPECT_TRUE(al.is_zero());
        EXPECT_TRUE(matched.g_alpha.agrees_with(make_phi_zeta(n, *split, zeta)));
      }
    }
    if (n > 1) {
      MatA one_plus = MatA::identity(a, c.m) + phi;
      EXPECT_EQ(classify_qr(one_plus), QrClass::kEllipticQuasiRegular);
    }
  }
}

TEST_P(Algebras, NormPreimageChangeIsConjugation) {
  // Two constants of norm zeta differ by b of norm one, and b = sigma^s(y) / y
  // for some y. Then phi' = Y^{-1} phi Y with Y = diag(y), so f_{g_u} computed
  // with phi' equals f_{g_{Y u Y^{-1}}} computed with phi.
  const Side& c = GetParam();
  const DivAlgebra* a = alg.get();
  const auto& kr = *a->kr();
  // Exhaustive on small k_r, a strided subset of the preimages otherwise.
  const size_t stride = kr.size() > 81 ? 37 : 1;
  std::mt19937_64 rng(77);
  MatA u = random_order_element(*a, c.m, rng);
  uint64_t qs = 1;
  for (uint32_t t = 0; t < a->s(); ++t) qs *= k->size();
  for (uint32_t z = 1; z < k->size(); ++z) {
    FFElem zeta = k->element(z);
    auto pre = norm_preimages(*a, zeta);
    MatA phi = phi_zeta_from(c.m, phi_D_from_constant(*a, pre[0]));
    RedCharPoly base = red_charpoly(make_g_u(phi, u));
    EXPECT_TRUE(eisenstein_check(base, zeta).eisenstein);
    for (size_t idx = 0; idx < pre.size(); idx += stride) {
      const FFElem& other = pre[idx];
      FFElem b = other / pre[0];
      std::optional<FFElem> y;
      for (uint32_t j = 1; j < kr.size() && !y; ++j) {
        FFElem cand = kr.element(j);
        if (cand.pow(static_cast<int64_t>(qs)) / cand == b) y = cand;
      }
      ASSERT_TRUE(y.has_value());
      MatA yy = MatA::scalar(a, c.m, AlgElem::scalar(a, a->constant(*y)));
      MatA yinv = MatA::scalar(a, c.m, AlgElem::scalar(a, a->constant(y->inverse())));
      MatA phi2 = phi_zeta_from(c.m, phi_D_from_constant(*a, other));
      EXPECT_TRUE(phi2.agrees_with(yinv * phi * yy));
      RedCharPoly moved = red_charpoly(make_g_u(phi2, u));
      EXPECT_TRUE(moved.agrees_with(red_charpoly(make_g_u(phi, yy * u * yinv))));
      EXPECT_TRUE(eisenstein_check(moved, zeta).eisenstein);
      EXPECT_TRUE(locfield::residue(rtrace(yy * u * yinv)) == locfield::residue(rtrace(u)));
    }
  }
}

TEST_P(Algebras, MatrixInverse) {
  const Side& c = GetParam();
  const DivAlgebra* a = alg.get();
  std::mt19937_64 rng(91);
  UnitSample h = random_order_unit(*a, c.m, rng);
  MatA inv = h.h.inverse();
  EXPECT_TRUE((h.h * inv).agrees_with(MatA::identity(a, c.m)));
  EXPECT_TRUE(inv.agrees_with(h.h_inv));
}

INSTANTIATE_TEST_SUITE_P(
    Sides, Algebras,
    ::testing::Values(Side{3, 1, 1, 1, 0}, Side{3, 1, 2, 1, 0}, Side{3, 1, 1, 2, 1}, Side{3, 1, 2, 2, 1},
                      Side{2, 1, 1, 3, 1}, Side{2, 1, 1, 3, 2}, Side{2, 2, 3, 1, 0}, Side{5, 1, 1, 2, 1},
                      Side{2, 1, 2, 3, 2}, Side{3, 1, 1, 4, 3}, Side{2, 2, 2, 2, 1}, Side{7, 1, 1, 3, 1},
                      Side{2, 1, 6, 1, 0}, Side{3, 1, 1, 6, 5}),
    [](const ::testing::TestParamInfo<Side>& info) {
      const Side& c = info.param;
      return "p" + std::to_string(c.p) + "f" + std::to_string(c.f) + "m" + std::to_string(c.m) + "r" +
             std::to_string(c.r) + "s" + std::to_string(c.s);
    });

TEST(Examples, SplitTwoByTwo) {
  auto k = FieldDesc::make_field(3, 1);
  auto alg = DivAlgebra::make(k, 1, 0);
  for (uint32_t z = 1; z < 3; ++z) {
    FFElem zeta = k->element(z);
    MatA phi = make_phi_zeta(2, *alg, zeta);
    EXPECT_TRUE(phi.at(0, 1).agrees_with(AlgElem::one(alg.get())));
    EXPECT_TRUE(phi.at(1, 0).coeff(0).agrees_with(LaurentTrunc::monomial(zeta, 1)));
    auto f = red_charpoly(phi);
    EXPECT_TRUE(f.coeffs[1].is_zero());
    EXPECT_TRUE(f.coeffs[0].agrees_with(-LaurentTrunc::monomial(zeta, 1)));
  }
}

TEST(Examples, QuaternionPhiD) {
  auto k = FieldDesc::make_field(3, 1);
  auto alg = DivAlgebra::make(k, 2, 1);
  AlgElem phi1 = make_phi_D(*alg, k->one());
  EXPECT_TRUE(phi1.agrees_with(AlgElem::pi(alg.get())));
  AlgElem phi2 = make_phi_D(*alg, k->from_int(2));
  EXPECT_TRUE((phi2 * phi2).agrees_with(AlgElem::scalar(alg.get(), alg->constant(k->from_int(2)) * alg->varpi())));
  // The least-dlog norm-2 constant is the generator of F_9.
  EXPECT_EQ(norm_preimages(*alg, k->from_int(2))[0], alg->kr()->generator());
}

TEST(Examples, Rejections) {
  auto k = FieldDesc::make_field(3, 1);
  EXPECT_THROW(DivAlgebra::make(k, 4, 2), DomainError);
  EXPECT_THROW(DivAlgebra::make(k, 3, 0), DomainError);
  auto alg = DivAlgebra::make(k, 1, 0);
  MatA bad(alg.get(), 2);
  bad.at(1, 0) = AlgElem::one(alg.get());
  EXPECT_FALSE(in_order(bad));
  EXPECT_THROW(make_g_u(make_phi_zeta(2, *alg, k->one()), bad), DomainError);
}

}  // namespace
}  // namespace jlcs::csa
