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

#include "quadalg/moufang.hpp"

namespace quadalg {
namespace {

using Vq = Vec<Rational>;
using CA = CompositionAlgebra<Rational>;
using RS = RootSystem<Rational>;
using W = WElem<Rational>;

Rational R(long n, long d = 1) { return Rational(n) / Rational(d); }

FieldCtx Q() { return FieldCtx::rationals(); }

CheckSpec rnd(std::size_t trials, std::uint64_t seed = 5) {
  CheckSpec s;
  s.trials = trials;
  s.seed = seed;
  s.coeff_bound = 5;
  return s;
}

void expect_all_pass(const std::vector<CheckRecord>& rs) {
  for (const auto& r : rs) EXPECT_TRUE(r.pass) << r.name << ": " << r.witness;
}

bool any_failure(const std::vector<CheckRecord>& rs) {
  for (const auto& r : rs) {
    if (!r.pass) return true;
  }
  return false;
}

RS quadratic_form_system() {
  auto J = JordanAlgebra<Rational>::reduced_spin(PointedQuadSpace<Rational>(QuadraticForm<Rational>({R(1), R(2), R(5)}),
                                                                          Vq{R(1), R(0), R(0)}));
  return RS::zero_module(J, J.base());
}

RS involutory_system() {
  auto J = JordanAlgebra<Rational>::herm_mat2(CA({R(-1), R(-3)}));
  return RS::zero_module(J, J.base());
}

PseudoQuadraticSpace<Rational> pq_space() {
  CA L({R(-1)});
  return PseudoQuadraticSpace<Rational>{L, {L.basis(1), scale(R(2), L.basis(1))}};
}

TEST(RootGroups, QuadraticFormRelations) {
  auto S = quadratic_form_system();
  // f(v1, v2) for the form <1,2,5>: 2(1*1*3 + 2*2*(-1) + 5*1*1) = 8.
  EXPECT_EQ(S.comm24(Vq{R(1), R(2), R(1)}, Vq{R(3), R(-1), R(1)}).t, R(8));
  // [x1(t), x4(v)^-1] = x2(t v) x3(q(v) t), q(1,1,1) = 8.
  auto [p, q] = S.comm14(W{{}, R(3)}, Vq{R(1), R(1), R(1)});
  EXPECT_EQ(p, (Vq{R(3), R(3), R(3)}));
  EXPECT_EQ(q.t, R(24));
  EXPECT_EQ(S.comm13(W{{}, R(2)}, W{{}, R(7)}), (Vq{R(0), R(0), R(0)}));
  expect_all_pass(compare_relations(S, RootTarget::QuadraticForm, quadratic_form_formulas(S), rnd(30), Q()));
  expect_all_pass(group_checks(S, rnd(100), Q()));
}

TEST(RootGroups, InvolutoryRelations) {
  auto S = involutory_system();
  // l = 1 + j in (-1,-3): conj(l) l = N(l) = 1 + 3 = 4, so conj(l) al l = 4 al.
  auto [p, q] = S.comm14(W{{}, R(2)}, Vq{R(1), R(0), R(1), R(0)});
  EXPECT_EQ(p, (Vq{R(2), R(0), R(2), R(0)}));
  EXPECT_EQ(q.t, R(8));
  expect_all_pass(compare_relations(S, RootTarget::Involutory, involutory_formulas(S), rnd(30), Q()));
  expect_all_pass(group_checks(S, rnd(100), Q()));
}

TEST(RootGroups, PseudoQuadraticRelations) {
  auto P = pq_space();
  auto out = from_pseudoquadratic(P, Q(), rnd(50));
  auto S = root_system_from(out.built);
  expect_all_pass(compare_relations(S, RootTarget::PseudoQuadratic, pseudo_quadratic_formulas(P), rnd(30), Q()));
  expect_all_pass(group_checks(S, rnd(100), Q()));
}

TEST(RootGroups, ETypeRelations) {
  auto E = construct_etype<Rational>(EType::E6, R(-1), {R(1), R(1)});
  auto S = root_system_from(E.built);
  expect_all_pass(compare_relations(S, RootTarget::EType, etype_formulas(E.built.Q), rnd(10), Q()));
  expect_all_pass(group_checks(S, rnd(40), Q()));
}

TEST(RootGroups, WGroupLaw) {
  auto out = from_pseudoquadratic(pq_space(), Q(), rnd(50));
  auto S = root_system_from(out.built);
  W z{Vq{R(0), R(0), R(0), R(0)}, R(0)};
  W a{Vq{R(1), R(0), R(2), R(1)}, R(3)};
  EXPECT_EQ(S.wadd(a, S.wneg(a)), z);
  EXPECT_EQ(S.wadd(W{z.a, R(1)}, W{z.a, R(4)}), (W{z.a, R(5)}));
}

// x4(v) x1(w) collected by hand through the third relation once.
TEST(RootGroups, TranspositionOfFourAndOne) {
  auto S = quadratic_form_system();
  Vq v{R(0), R(1), R(0)};
  W w{{}, R(2)};
  auto g = S.word_mul(S.x4(v), S.x1(w));
  EXPECT_EQ(g.w1, w);
  EXPECT_EQ(g.v2, (Vq{R(0), R(2), R(0)}));  // t v
  EXPECT_EQ(g.w3.t, R(4));                  // q(v) t = 2 * 2
  EXPECT_EQ(g.v4, v);
}

TEST(RootGroups, IdentityAndInverse) {
  auto S = involutory_system();
  Rng rng(3);
  auto g = random_word(S, Q(), rng, rnd(1));
  EXPECT_EQ(S.word_mul(S.identity(), g), g);
  EXPECT_EQ(S.word_mul(g, S.inverse(g)), S.identity());
}

TEST(RootGroups, ScaledCommutatorIsCaught) {
  auto S = quadratic_form_system();
  S.c24_scale = R(3);
  EXPECT_TRUE(any_failure(compare_relations(S, RootTarget::QuadraticForm, quadratic_form_formulas(S), rnd(10), Q())));
}

TEST(RootGroups, ScaledMixedCommutatorBreaksAssociativity) {
  auto E = construct_etype<Rational>(EType::E6, R(-1), {R(1), R(1)});
  auto S = root_system_from(E.built);
  S.c14_scale = R(2);
  auto rs = group_checks(S, rnd(10), Q());
  EXPECT_FALSE(find_record(rs, "word_mul_associative")->pass);
}

}  // namespace
}  // namespace quadalg
