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

#include "quadalg/jordan.hpp"

namespace quadalg {
namespace {

using Vq = Vec<Rational>;
using JA = JordanAlgebra<Rational>;
using CA = CompositionAlgebra<Rational>;

Rational R(long n, long d = 1) { return Rational(n) / Rational(d); }

JA spin3() {
  return JA::reduced_spin(PointedQuadSpace<Rational>(QuadraticForm<Rational>({R(1), R(2), R(5)}), Vq{R(1), R(0), R(0)}));
}

void expect_all_pass(const std::vector<CheckRecord>& rs) {
  for (const auto& r : rs) EXPECT_TRUE(r.pass) << r.name << ": " << r.witness;
}

TEST(Jordan, ReducedSpinProducts) {
  JA J = spin3();
  EXPECT_EQ(J.dim(), 5u);
  EXPECT_TRUE(is_zero_vec(J.jprod(J.e0(), J.e1())));
  EXPECT_EQ(J.square(J.e0()), J.e0());
  Vq v{R(1), R(2), R(-1)}, w{R(3), R(0), R(4)};
  // f(v,w) = 2(3 + 0 - 20) = -34
  Rational fvw = J.space().f(v, w);
  EXPECT_EQ(fvw, R(-34));
  EXPECT_EQ(J.jprod(J.half(v), J.half(w)), scale(fvw / R(2), J.unit()));
  EXPECT_EQ(J.jprod(scale(R(3), J.e0()), J.half(v)), J.half(scale(R(3, 2), v)));
}

TEST(Jordan, UOperatorBasics) {
  JA J = spin3();
  Rng rng(5);
  CheckSpec spec;
  for (int t = 0; t < 50; ++t) {
    Vq y = random_vec<Rational>(FieldCtx::rationals(), rng, J.dim(), spec);
    Vq v = random_vec<Rational>(FieldCtx::rationals(), rng, 3, spec);
    EXPECT_EQ(J.U(J.unit(), y), y);
    EXPECT_EQ(J.U(J.half(v), J.e0()), scale(J.space().q(v), J.e1()));
    EXPECT_EQ(J.U(J.half(v), J.e1()), scale(J.space().q(v), J.e0()));
  }
}

TEST(Jordan, HermMat2UOperators) {
  CA L({R(-1), R(-3)});
  JA H = JA::herm_mat2(L);
  Rng rng(7);
  CheckSpec spec;
  for (int t = 0; t < 50; ++t) {
    Vq l = random_vec<Rational>(FieldCtx::rationals(), rng, 4, spec);
    Vq l2 = random_vec<Rational>(FieldCtx::rationals(), rng, 4, spec);
    Rational alpha = random_element<Rational>(FieldCtx::rationals(), rng, 10, 1);
    // l alpha l^sigma computed in L
    Vq lal = L.multiply(L.multiply(l, scale(alpha, L.unit())), L.conjugate(l));
    for (std::size_t i = 1; i < 4; ++i) EXPECT_TRUE(is_zero(lal[i]));
    EXPECT_EQ(H.U(H.half(l), scale(alpha, H.e0())), scale(lal[0], H.e1()));
    // U_{v1} v2 has lower-left entry l1 l2^sigma l1
    Vq lower = L.multiply(L.multiply(l, L.conjugate(l2)), l);
    EXPECT_EQ(H.U(H.half(l), H.half(l2)), H.half(lower));
  }
}

TEST(Jordan, PeirceDecomposition) {
  JA J = spin3();
  auto P = peirce_decompose(J, J.e1());
  EXPECT_EQ(P.J0.dim(), 1u);
  EXPECT_EQ(P.Jhalf.dim(), 3u);
  EXPECT_EQ(P.J1.dim(), 1u);
  EXPECT_TRUE(P.J0.contains(J.e0()));
  expect_all_pass(peirce_checks(J, P));
  JA H = JA::herm_mat2(CA({R(-1)}));
  auto Q = peirce_decompose(H, H.e1());
  EXPECT_TRUE(Q.J1.contains(H.e1()));
  EXPECT_EQ(Q.Jhalf.dim(), 2u);
  // a non-diagonal idempotent: (e0 + e1 + u)/2 with u^2 = 1
  Vq e = scale(R(1, 2), J.unit() + J.base());
  auto P2 = peirce_decompose(J, e);
  EXPECT_EQ(P2.J0.dim() + P2.Jhalf.dim() + P2.J1.dim(), 5u);
  expect_all_pass(peirce_checks(J, P2));
}

TEST(Jordan, PeirceErrors) {
  JA J = spin3();
  try {
    peirce_decompose(J, J.base());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotIdempotent);
  }
  EXPECT_THROW(peirce_decompose(J, J.unit()), Error);
  try {
    J.jprod(J.e0(), Vq{R(1)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CtxMismatch);
  }
}

TEST(Jordan, ChecksSymbolicSpin) {
  CheckSpec spec;
  spec.mode = Mode::Symbolic;
  auto rs = jordan_checks(spin3(), spec, FieldCtx::rationals());
  expect_all_pass(rs);
  EXPECT_EQ(find_record(rs, "jordan_identity")->mode, "symbolic");
}

TEST(Jordan, ChecksSymbolicSpin6) {
  CheckSpec spec;
  spec.mode = Mode::Symbolic;
  JA J = JA::reduced_spin(PointedQuadSpace<Rational>(
      QuadraticForm<Rational>({R(1), R(1), R(2), R(3), R(7), R(11)}), Vq{R(1), R(0), R(0), R(0), R(0), R(0)}));
  auto rs = jordan_checks(J, spec, FieldCtx::rationals());
  expect_all_pass(rs);
  EXPECT_EQ(find_record(rs, "jordan_identity")->mode, "symbolic");
}

TEST(Jordan, ChecksHermMat2) {
  CheckSpec spec;
  spec.mode = Mode::Symbolic;
  expect_all_pass(jordan_checks(JA::herm_mat2(CA({R(-2)})), spec, FieldCtx::rationals()));
  spec.mode = Mode::Random;
  spec.trials = 200;
  expect_all_pass(jordan_checks(JA::herm_mat2(CA({R(-1), R(-5)})), spec, FieldCtx::rationals()));
}

TEST(Jordan, ChecksFunctionField) {
  FieldCtx f = FieldCtx::function_field({"a", "b"});
  using JF = JordanAlgebra<RatFunc>;
  JF J = JF::reduced_spin(PointedQuadSpace<RatFunc>(
      QuadraticForm<RatFunc>({RatFunc(1), -f.var(0), -f.var(1), f.var(0) * f.var(1)}),
      Vec<RatFunc>{RatFunc(1), RatFunc(0), RatFunc(0), RatFunc(0)}));
  CheckSpec spec;
  spec.trials = 30;
  expect_all_pass(jordan_checks(J, spec, f));
}

TEST(Jordan, LargeSpinFallsBackToRandom) {
  std::vector<Rational> d(8, R(1));
  Vq b(8, R(0));
  b[0] = R(1);
  JA J = JA::reduced_spin(PointedQuadSpace<Rational>(QuadraticForm<Rational>(d), b));
  CheckSpec spec;
  spec.mode = Mode::Symbolic;
  spec.trials = 10;
  auto rs = jordan_checks(J, spec, FieldCtx::rationals());
  expect_all_pass(rs);
  const auto* r = find_record(rs, "jordan_identity");
  EXPECT_EQ(r->mode, "random");
  EXPECT_EQ(r->trials, 1000u);
}

TEST(Jordan, QuadraticPairIdentification) {
  for (auto L : {CA({R(-1)}), CA({R(3)}), CA({R(-1), R(-1)}), CA({R(-2), R(5)})}) {
    auto r = quadratic_pair_identification(JA::herm_mat2(L));
    EXPECT_TRUE(r.pass) << r.witness;
  }
  EXPECT_FALSE(quadratic_pair_identification(spin3()).pass);
}

TEST(Jordan, HalfspaceInvertibility) {
  CheckSpec spec;
  spec.trials = 200;
  EXPECT_TRUE(halfspace_invertibility_sample(spin3(), FieldCtx::rationals(), spec).pass);
  JA hyp = JA::reduced_spin(PointedQuadSpace<Rational>(QuadraticForm<Rational>({R(1), R(-1)}), Vq{R(1), R(0)}));
  auto r = halfspace_invertibility_sample(hyp, FieldCtx::rationals(), spec);
  EXPECT_FALSE(r.pass);
  EXPECT_NE(r.witness.find("q(v) = 0"), std::string::npos) << r.witness;
  EXPECT_TRUE(halfspace_invertibility_sample(JA::herm_mat2(CA({R(-1)})), FieldCtx::rationals(), spec).pass);
}

TEST(Jordan, CorruptedTableIsCaught) {
  JA bad = spin3().corrupted(2, 2, R(2));
  CheckSpec spec;
  spec.trials = 20;
  auto rs = jordan_checks(bad, spec, FieldCtx::rationals());
  EXPECT_FALSE(find_record(rs, "product_routes_agree")->pass);
  EXPECT_FALSE(all_pass(rs));
}

TEST(Jordan, SymbolicMatchesRandomRoutes) {
  JA J = spin3();
  auto Js = to_symbolic(J);
  EXPECT_EQ(Js.dim(), J.dim());
  Vec<RatFunc> x = Js.half(Vec<RatFunc>{RatFunc(1), RatFunc(2), RatFunc(0)});
  EXPECT_EQ(Js.square(x), scale(RatFunc(R(9)), Js.unit()));
}

}  // namespace
}  // namespace quadalg
