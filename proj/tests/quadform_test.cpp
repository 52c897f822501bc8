/*
   Copyright 2026 The quadalg Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include "quadalg/quadform.hpp"

namespace quadalg {
namespace {

using QF = QuadraticForm<Rational>;
using Vq = Vec<Rational>;

Vq vq(std::initializer_list<long> xs) {
  Vq v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

TEST(QuadForm, EvalAndPolarize) {
  QF q(vq({1, 1}));
  EXPECT_EQ(q.eval(vq({3, 4})), Rational(25));
  EXPECT_EQ(QF(vq({1, -1})).eval(vq({1, 1})), Rational(0));
  Rng rng(3);
  QF r(vq({2, -5, 7}));
  for (int i = 0; i < 100; ++i) {
    Vq v{random_rational(rng, 9), random_rational(rng, 9), random_rational(rng, 9)};
    EXPECT_EQ(r.polarize(v, v), Rational(2) * r.eval(v));
  }
  try {
    q.eval(vq({1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
}

TEST(QuadForm, Pfister) {
  EXPECT_EQ(pfister<Rational>({Rational(1)}).diag(), vq({1, 1}));
  EXPECT_EQ(pfister<Rational>({Rational(1), Rational(1), Rational(1)}).diag(), vq({1, 1, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(pfister<Rational>({Rational(-3)}).diag(), vq({1, -3}));
  // Entry for subset S is the product over S.
  std::vector<Rational> a{Rational(2), Rational(3), Rational(5)};
  QF p = pfister(a);
  for (std::size_t mask = 0; mask < 8; ++mask) {
    Rational prod(1);
    for (std::size_t i = 0; i < 3; ++i) {
      if (mask >> i & 1) prod *= a[i];
    }
    EXPECT_EQ(p.eval(unit_vec<Rational>(8, mask)), prod);
  }
  try {
    pfister<Rational>({Rational(1), Rational(0)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroSlot);
  }
}

TEST(QuadForm, SigmaAndInverse) {
  PointedQuadSpace<Rational> V(QF(vq({1, 2, 3})), vq({1, 0, 0}));
  EXPECT_EQ(V.sigma(V.base), V.base);
  Rng rng(5);
  for (int i = 0; i < 500; ++i) {
    Vq v{random_rational(rng, 9), random_rational(rng, 9), random_rational(rng, 9)};
    EXPECT_EQ(V.sigma(V.sigma(v)), v);
    EXPECT_EQ(V.q(V.sigma(v)), V.q(v));
    if (is_zero_vec(v)) continue;
    Vq w = V.inverse(v);
    // Direct oracle: sigma(v) = (v0, -v1, -v2) for base e0.
    Rational n = v[0] * v[0] + Rational(2) * v[1] * v[1] + Rational(3) * v[2] * v[2];
    EXPECT_EQ(w, (Vq{v[0] / n, -v[1] / n, -v[2] / n}));
    EXPECT_EQ(V.q(w), V.q(v).inv());
  }
  PointedQuadSpace<Rational> H(QF(vq({1, -1})), vq({1, 0}));
  try {
    H.inverse(vq({1, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IsotropicVector);
  }
}

TEST(QuadForm, OrthogonalComplement) {
  QF q(vq({1, 1, 1, 1}));
  std::vector<Vq> all;
  for (std::size_t i = 0; i < 4; ++i) all.push_back(unit_vec<Rational>(4, i));
  EXPECT_TRUE(orthogonal_complement(q, all).empty());
  std::vector<Vq> span{vq({1, 1, 0, 0}), vq({0, 0, 1, 2})};
  auto c = orthogonal_complement(q, span);
  ASSERT_EQ(c.size(), 2u);
  for (const auto& w : c) {
    for (const auto& s : span) EXPECT_TRUE(is_zero(q.polarize(w, s)));
  }
}

TEST(Anisotropy, OverRationals) {
  auto v = anisotropy(QF(vq({1, 1, 1, 1, 1, 1})));
  EXPECT_EQ(v.kind, VerdictKind::Anisotropic);
  auto h = anisotropy(QF(vq({1, -1})));
  ASSERT_EQ(h.kind, VerdictKind::Isotropic);
  EXPECT_TRUE(is_zero(QF(vq({1, -1})).eval(h.witness)));
  // <1,1,-3>: 3 is not a sum of two rational squares, so no zero exists.
  auto u = anisotropy(QF(vq({1, 1, -3})));
  EXPECT_EQ(u.kind, VerdictKind::Unknown);
  EXPECT_GT(u.searched, 0u);
}

TEST(Anisotropy, SpringerOnE8Form) {
  FieldCtx f = FieldCtx::function_field({"s2", "s3", "s4", "s5"});
  std::vector<RatFunc> tail{RatFunc(1)};
  for (std::size_t i = 0; i < 4; ++i) tail.push_back(f.var(i));
  tail.push_back(parse_scalar<RatFunc>("-1/(s2*s3*s4*s5)", f));
  QuadraticForm<RatFunc> q = tensor(pfister<RatFunc>({RatFunc(1)}), QuadraticForm<RatFunc>(tail));
  auto v = anisotropy(q);
  ASSERT_EQ(v.kind, VerdictKind::Anisotropic);
  ASSERT_TRUE(v.tree.has_value());
  EXPECT_TRUE(v.tree->leaves_definite());
  EXPECT_EQ(v.tree->variable, "s5");
}

TEST(Anisotropy, SpringerFindsLiftedWitness) {
  FieldCtx f = FieldCtx::function_field({"t"});
  RatFunc t = f.var(0);
  QuadraticForm<RatFunc> q({RatFunc(1), t, -t * t * t, RatFunc(5)});
  auto v = anisotropy(q);
  ASSERT_EQ(v.kind, VerdictKind::Isotropic);
  EXPECT_TRUE(is_zero(q.eval(v.witness)));
}

// Soundness cross-check on random monomial forms <c_i t^{k_i}>.
TEST(Anisotropy, SpringerSoundnessRandomMonomialForms) {
  FieldCtx f = FieldCtx::function_field({"t"});
  RatFunc t = f.var(0);
  Rng rng(99);
  int iso = 0, aniso = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<RatFunc> d;
    for (int i = 0; i < 4; ++i) {
      long c = rng.uniform(1, 3) * (rng.uniform(0, 1) ? 1 : -1);
      long k = rng.uniform(-2, 2);
      RatFunc e(c);
      for (long j = 0; j < std::abs(k); ++j) e = k > 0 ? e * t : e / t;
      d.push_back(e);
    }
    QuadraticForm<RatFunc> q(d);
    auto v = anisotropy(q);
    if (v.kind == VerdictKind::Isotropic) {
      ++iso;
      EXPECT_TRUE(is_zero(q.eval(v.witness)));
      EXPECT_FALSE(is_zero_vec(v.witness));
    } else if (v.kind == VerdictKind::Anisotropic) {
      ++aniso;
      Rng r2(static_cast<std::uint64_t>(trial));
      for (int s = 0; s < 10000; ++s) {
        Vec<RatFunc> w;
        for (int i = 0; i < 4; ++i) w.push_back(random_element<RatFunc>(f, r2, 3, 1));
        if (is_zero_vec(w)) continue;
        ASSERT_FALSE(is_zero(q.eval(w))) << "zero found for an Anisotropic verdict";
      }
    }
  }
  EXPECT_GT(iso, 0);
  EXPECT_GT(aniso, 0);
}

TEST(ETypeData, E6) {
  auto d = build_e6e7e8_data<Rational>(EType::E6, Rational(-1), {Rational(1), Rational(1)});
  EXPECT_EQ(d.c1, vq({-1, -1, -1}));
  EXPECT_EQ(d.c2, vq({-1}));
  EXPECT_EQ(d.q.diag(), vq({1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(d.q_verdict.kind, VerdictKind::Anisotropic);
  EXPECT_EQ(d.dim_q_plus_2h, 10u);
  EXPECT_EQ(d.dim_qa_plus_h, 10u);
  EXPECT_EQ(d.dim_q1_minus_q2, 10u);
  EXPECT_TRUE(d.discriminants_agree);
}

TEST(ETypeData, E7) {
  auto d = build_e6e7e8_data<Rational>(EType::E7, Rational(-1), {Rational(1), Rational(1), Rational(3)});
  EXPECT_EQ(d.c2, vq({-1, 3}));
  // <1,1,-3,-3>: a zero would write 3 as a sum of two squares.
  EXPECT_EQ(d.c2_verdict.kind, VerdictKind::Unknown);
  EXPECT_EQ(d.q_verdict.kind, VerdictKind::Anisotropic);
  EXPECT_TRUE(d.discriminants_agree);
  EXPECT_EQ(d.dim_q_plus_2h, 12u);
}

TEST(ETypeData, Errors) {
  try {
    build_e6e7e8_data<Rational>(EType::E6, Rational(4), {Rational(1), Rational(1)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SquareA);
  }
  try {
    build_e6e7e8_data<Rational>(EType::E8, Rational(-1),
                                {Rational(1), Rational(1), Rational(1), Rational(1), Rational(1)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ProductConstraintViolated);
  }
}

TEST(ETypeData, E8OverFunctionField) {
  FieldCtx f = FieldCtx::function_field({"s2", "s3", "s4", "s5"});
  std::vector<RatFunc> s;
  for (std::size_t i = 0; i < 4; ++i) s.push_back(f.var(i));
  auto d = build_e6e7e8_data<RatFunc>(EType::E8, RatFunc(-1), s);
  EXPECT_EQ(d.q.dim(), 12u);
  EXPECT_EQ(d.q_verdict.kind, VerdictKind::Anisotropic);
  EXPECT_TRUE(d.q_verdict.tree->leaves_definite());
  EXPECT_TRUE(d.discriminants_agree);
  EXPECT_EQ(d.dim_q1_minus_q2, 16u);
}

}  // namespace
}  // namespace quadalg
