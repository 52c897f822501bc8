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

#include "quadalg/tensoralg.hpp"

namespace quadalg {
namespace {

using Vq = Vec<Rational>;
using CA = CompositionAlgebra<Rational>;
using TA = TensorAlgebra<Rational>;

TA e6_tensor() { return TA(CA({Rational(-1), Rational(-1), Rational(-1)}), CA({Rational(-1)})); }
TA e7_tensor() { return TA(CA({Rational(-1), Rational(-1), Rational(-1)}), CA({Rational(-1), Rational(3)})); }

TEST(Tensor, UnitAndInvolution) {
  TA T = e6_tensor();
  Rng rng(1);
  CheckSpec spec;
  Vq x = random_vec<Rational>(FieldCtx::rationals(), rng, T.dim(), spec);
  EXPECT_EQ(T.multiply(T.unit(), x), x);
  EXPECT_EQ(T.multiply(x, T.unit()), x);
  EXPECT_EQ(T.involution(T.basis(1, 0)), -T.basis(1, 0));
  EXPECT_EQ(T.involution(T.involution(x)), x);
  EXPECT_EQ(T.skew_dim(), 8u);
  EXPECT_EQ(e7_tensor().skew_dim(), 10u);
}

TEST(Tensor, AlbertForm) {
  TA T = e6_tensor();
  Rational a(-1);
  SkewElem<Rational> i1{T.c1().basis(1), Vq(2, Rational(0))};
  SkewElem<Rational> i2{Vq(8, Rational(0)), T.c2().basis(1)};
  SkewElem<Rational> e0{i1.s1, i2.s2};
  EXPECT_EQ(T.albert(e0), Rational(0));
  EXPECT_EQ(T.albert(i1), -a);
  EXPECT_EQ(T.sharp(e0), (SkewElem<Rational>{i1.s1, -i2.s2}));
  EXPECT_EQ(T.sharp(T.sharp(e0)), e0);
}

TEST(Tensor, LmulMatrix) {
  TA T = e7_tensor();
  EXPECT_EQ(T.lmul_matrix(T.unit()), Matrix<Rational>::identity(T.dim()));
  Rng rng(2);
  CheckSpec spec;
  for (int t = 0; t < 20; ++t) {
    Vq s = random_vec<Rational>(FieldCtx::rationals(), rng, T.dim(), spec);
    Vq x = random_vec<Rational>(FieldCtx::rationals(), rng, T.dim(), spec);
    EXPECT_EQ(T.lmul_matrix(s).apply(x), T.multiply(s, x));
  }
  for (int t = 0; t < 10; ++t) {
    Vq s1 = T.embed(T.from_skew_coords(random_vec<Rational>(FieldCtx::rationals(), rng, T.skew_dim(), spec)));
    Vq s2 = T.embed(T.from_skew_coords(random_vec<Rational>(FieldCtx::rationals(), rng, T.skew_dim(), spec)));
    Vq sss = T.multiply(s1, T.multiply(s2, s1));
    EXPECT_EQ(T.lmul_matrix(sss), T.lmul_matrix(s1) * T.lmul_matrix(s2) * T.lmul_matrix(s1));
  }
}

TEST(Tensor, SkewPair) {
  TA T = e6_tensor();
  Vq one = T.unit(), i1 = T.basis(1, 0);
  // 1 conj(i1) - i1 conj(1) = -i1 - i1.
  EXPECT_EQ(T.embed(T.skew_pair(one, i1)), scale(Rational(-2), i1));
  EXPECT_EQ(T.embed(T.skew_pair(i1, one)), scale(Rational(2), i1));
  Rng rng(3);
  CheckSpec spec;
  Vq x = random_vec<Rational>(FieldCtx::rationals(), rng, T.dim(), spec);
  EXPECT_TRUE(is_zero_vec(T.skew_coords(T.skew_pair(x, x))));
}

TEST(Tensor, SkewPairOnPureTensorsSymbolic) {
  TA T = e7_tensor();
  auto Ts = to_symbolic(T);
  SymbolicVars sv(FieldCtx::rationals(), {{"x", 8}, {"y", 8}, {"u", 4}, {"w", 4}});
  auto x1 = sv.vec(0), y1 = sv.vec(1), x2 = sv.vec(2), y2 = sv.vec(3);
  auto lhs = Ts.skew_pair(Ts.pure(x1, x2), Ts.pure(y1, y2));
  const auto &C1 = Ts.c1(), &C2 = Ts.c2();
  SkewElem<RatFunc> rhs{scale(C2.bil(x2, y2), psi(C1, x1, y1)), scale(C1.bil(x1, y1), psi(C2, x2, y2))};
  // With f(x,x) = 2q(x) the expansion x conj(y) = (f(x,y) + psi(x,y))/2
  // gives half of the printed right-hand side.
  SkewElem<RatFunc> half{scale(RatFunc(Rational(1, 2)), rhs.s1), scale(RatFunc(Rational(1, 2)), rhs.s2)};
  EXPECT_EQ(lhs, half);
  EXPECT_NE(lhs, rhs);
}

TEST(Tensor, PeirceProjection) {
  TA T = e6_tensor();
  Rational a(-1);
  auto [x0, x1] = T.peirce_project(a, T.unit());
  Vq expect = scale(Rational(1, 2), T.unit() + scale(a.inv(), T.basis(1, 1)));
  EXPECT_EQ(x0, expect);
  Rng rng(4);
  CheckSpec spec;
  Vq x = random_vec<Rational>(FieldCtx::rationals(), rng, T.dim(), spec);
  auto [y0, y1] = T.peirce_project(a, x);
  EXPECT_EQ(y0 + y1, x);
  std::vector<Vq> images;
  for (std::size_t i = 0; i < T.dim(); ++i) images.push_back(T.peirce_project(a, unit_vec<Rational>(T.dim(), i)).first);
  EXPECT_EQ(rank(Matrix<Rational>::from_columns(images, T.dim())), 8u);
}

TEST(Tensor, SkewIdentitiesE6Symbolic) {
  CheckSpec spec;
  spec.mode = Mode::Symbolic;
  spec.trials = 200;
  auto rs = skew_identities(e6_tensor(), spec, FieldCtx::rationals());
  for (const auto& r : rs) EXPECT_TRUE(r.pass) << r.name << " " << r.witness;
  EXPECT_EQ(rs[0].mode, "symbolic");
}

TEST(Tensor, SkewIdentitiesE7Random) {
  CheckSpec spec;
  spec.trials = 1000;
  auto rs = skew_identities(e7_tensor(), spec, FieldCtx::rationals());
  for (const auto& r : rs) EXPECT_TRUE(r.pass) << r.name << " " << r.witness;
}

TEST(Tensor, DecomposeRejectsNonSkew) {
  TA T = e6_tensor();
  try {
    T.decompose(T.basis(1, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ResultNotSkew);
  }
}

}  // namespace
}  // namespace quadalg
