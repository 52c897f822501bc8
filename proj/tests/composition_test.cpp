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

#include "quadalg/composition.hpp"

namespace quadalg {
namespace {

using Vq = Vec<Rational>;
using CA = CompositionAlgebra<Rational>;

CA octonions() { return CA({Rational(-1), Rational(-1), Rational(-1)}); }

TEST(Composition, QuaternionRules) {
  Rational a(2), b(-5);
  CA H({a, b});
  Vq i = H.basis(1), j = H.basis(2), ij = H.basis(3);
  EXPECT_EQ(H.multiply(i, j), ij);
  EXPECT_EQ(H.multiply(j, i), -ij);
  EXPECT_EQ(H.multiply(i, i), scale(a, H.unit()));
  EXPECT_EQ(H.multiply(j, j), scale(b, H.unit()));
}

TEST(Composition, OctonionTopBasisSquare) {
  CA O = octonions();
  Vq e = O.basis(7);
  // Hand expansion: ((ij)k)^2 = -c (ij)^2 = -c(-ab) = abc = -1.
  EXPECT_EQ(O.multiply(e, e), scale(Rational(-1), O.unit()));
  CA G({Rational(2), Rational(3), Rational(5)});
  EXPECT_EQ(G.multiply(G.basis(7), G.basis(7)), scale(Rational(30), G.unit()));
}

TEST(Composition, NormAndConjugation) {
  CA E({Rational(-3)});
  EXPECT_EQ(E.conjugate(E.unit()), E.unit());
  EXPECT_EQ(E.norm(E.basis(1)), Rational(3));
  CA O = octonions();
  EXPECT_EQ(O.norm_form().diag(), Vq(8, Rational(1)));
  Rng rng(4);
  CheckSpec spec;
  for (int t = 0; t < 200; ++t) {
    Vq x = random_vec<Rational>(FieldCtx::rationals(), rng, 8, spec);
    // x conj(x) = q(x) 1 ties the multiplication to the stated norm.
    EXPECT_EQ(O.multiply(x, O.conjugate(x)), scale(O.norm(x), O.unit()));
  }
}

TEST(Composition, Inverse) {
  CA O = octonions();
  EXPECT_EQ(O.inverse(O.unit()), O.unit());
  CA H({Rational(-1), Rational(-1)});
  EXPECT_EQ(H.inverse(H.basis(1)), -H.basis(1));
  Rng rng(8);
  CheckSpec spec;
  for (int t = 0; t < 500; ++t) {
    Vq x = random_nonzero_vec<Rational>(FieldCtx::rationals(), rng, 8, spec);
    EXPECT_EQ(O.multiply(x, O.inverse(x)), O.unit());
    EXPECT_EQ(O.multiply(O.inverse(x), x), O.unit());
  }
  CA S({Rational(1), Rational(1)});
  try {
    S.inverse(Vq{Rational(1), Rational(1), Rational(0), Rational(0)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NormZero);
  }
}

TEST(Composition, SkewBasisAndDivision) {
  EXPECT_EQ(octonions().skew_basis().size(), 7u);
  EXPECT_EQ(octonions().is_division().kind, VerdictKind::Anisotropic);
  EXPECT_EQ(CA({Rational(1), Rational(1)}).is_division().kind, VerdictKind::Isotropic);
}

TEST(Composition, SymbolicSuiteQuaternions) {
  CheckSpec spec;
  spec.mode = Mode::Symbolic;
  auto rs = identity_suite(CA({Rational(-1), Rational(3)}), spec, FieldCtx::rationals());
  for (const auto& r : rs) EXPECT_TRUE(r.pass) << r.name << " " << r.witness;
  // Quaternions are associative: the full associator vanishes.
  CheckSpec rnd;
  rnd.trials = 200;
  CA H({Rational(-1), Rational(3)});
  auto assoc = identity_check<Rational>("associator", "(xy)z = x(yz)", rnd, FieldCtx::rationals(), H,
                                        to_symbolic(H), {{"x", 4}, {"y", 4}, {"z", 4}},
                                        [](const auto& A, const auto& a) {
                                          return A.multiply(A.multiply(a[0], a[1]), a[2]) -
                                                 A.multiply(a[0], A.multiply(a[1], a[2]));
                                        });
  EXPECT_TRUE(assoc.pass);
}

TEST(Composition, OctonionsAreNotAssociative) {
  CA O = octonions();
  Vq l = O.multiply(O.multiply(O.basis(1), O.basis(2)), O.basis(4));
  Vq r = O.multiply(O.basis(1), O.multiply(O.basis(2), O.basis(4)));
  EXPECT_EQ(l, -r);
}

TEST(Composition, SymbolicSuiteOctonions) {
  CheckSpec spec;
  spec.mode = Mode::Symbolic;
  auto rs = identity_suite(octonions(), spec, FieldCtx::rationals());
  EXPECT_EQ(rs.size(), 13u);
  for (const auto& r : rs) EXPECT_TRUE(r.pass) << r.name << " " << r.witness;
  CheckSpec rnd;
  rnd.trials = 50;
  EXPECT_TRUE(two_generator_associativity(octonions(), rnd, FieldCtx::rationals()).pass);
}

TEST(Composition, PrintedMiddleShiftIsFalse) {
  // f(xy,z) = f(z, y conj(x)) fails at x = i, y = 1, z = i.
  CA E({Rational(-1)});
  Vq i = E.basis(1), one = E.unit();
  EXPECT_NE(E.bil(E.multiply(i, one), i), E.bil(i, E.multiply(one, E.conjugate(i))));
}

TEST(Composition, CorruptedTableFailsWithWitness) {
  CheckSpec spec;
  spec.mode = Mode::Random;
  spec.trials = 20;
  auto rs = identity_suite(octonions().corrupted(3, 4), spec, FieldCtx::rationals());
  bool failed = false;
  for (const auto& r : rs) {
    if (!r.pass) {
      failed = true;
      EXPECT_FALSE(r.witness.empty());
    }
  }
  EXPECT_TRUE(failed);
}

TEST(Composition, FunctionFieldParameters) {
  FieldCtx f = FieldCtx::function_field({"a", "b"});
  CompositionAlgebra<RatFunc> H({f.var(0), f.var(1)});
  CheckSpec spec;
  spec.mode = Mode::Symbolic;
  auto rs = identity_suite(H, spec, f);
  for (const auto& r : rs) EXPECT_TRUE(r.pass) << r.name;
}

}  // namespace
}  // namespace quadalg
