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

#include "quadalg/linalg.hpp"

namespace quadalg {
namespace {

using Vq = Vec<Rational>;
using Mq = Matrix<Rational>;

Rational R(long n, long d = 1) { return Rational(n) / Rational(d); }

Mq rows(const std::vector<Vq>& r) { return Mq::from_rows(r, r.front().size()); }

TEST(Linalg, InverseOfTwoByTwo) {
  // [[1,2],[3,4]]^-1 = [[-2,1],[3/2,-1/2]], by the adjugate formula.
  Mq m = rows({{R(1), R(2)}, {R(3), R(4)}});
  EXPECT_EQ(inverse(m), rows({{R(-2), R(1)}, {R(3, 2), R(-1, 2)}}));
  EXPECT_EQ(m * inverse(m), Mq::identity(2));
}

TEST(Linalg, SingularMatrixThrows) {
  Mq m = rows({{R(1), R(2)}, {R(2), R(4)}});
  try {
    inverse(m);
    FAIL() << "expected DegenerateForm";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateForm);
  }
}

TEST(Linalg, RankAndNullspace) {
  Mq m = rows({{R(1), R(2), R(3)}, {R(2), R(4), R(6)}});
  EXPECT_EQ(rank(m), 1u);
  auto ns = nullspace(m);
  ASSERT_EQ(ns.size(), 2u);
  for (const auto& v : ns) EXPECT_TRUE(is_zero_vec(m.apply(v)));
  // Free columns 1 and 2: (-2,1,0) and (-3,0,1).
  EXPECT_EQ(ns[0], (Vq{R(-2), R(1), R(0)}));
  EXPECT_EQ(ns[1], (Vq{R(-3), R(0), R(1)}));
}

TEST(Linalg, ApplyAndTranspose) {
  Mq m = rows({{R(1), R(0), R(2)}, {R(0), R(3), R(-1)}});
  EXPECT_EQ(m.apply(Vq{R(1), R(1), R(1)}), (Vq{R(3), R(2)}));
  EXPECT_EQ(m.transpose().rows(), 3u);
  EXPECT_EQ(m.transpose()(2, 1), R(-1));
}

TEST(Linalg, DimensionMismatch) {
  Mq m = rows({{R(1), R(2)}});
  EXPECT_THROW(m.apply(Vq{R(1)}), Error);
  EXPECT_THROW((void)(Vq{R(1)} + Vq{R(1), R(2)}), Error);
}

TEST(Linalg, SubspaceCoordinates) {
  Subspace<Rational> S({{R(1), R(1), R(0)}, {R(0), R(1), R(1)}}, 3);
  EXPECT_EQ(S.coords(Vq{R(2), R(5), R(3)}), (Vq{R(2), R(3)}));
  EXPECT_TRUE(S.contains(Vq{R(1), R(0), R(-1)}));
  EXPECT_FALSE(S.contains(Vq{R(1), R(0), R(0)}));
  EXPECT_THROW(S.coords(Vq{R(1), R(0), R(0)}), Error);
  EXPECT_THROW(Subspace<Rational>({{R(1), R(2)}, {R(2), R(4)}}, 2), Error);
}

TEST(Linalg, ColumnBasisAndSpanBuilder) {
  Mq m = Mq::from_columns({{R(1), R(0)}, {R(2), R(0)}, {R(0), R(1)}}, 2);
  auto cb = column_basis(m);
  ASSERT_EQ(cb.size(), 2u);
  EXPECT_EQ(cb[1], (Vq{R(0), R(1)}));
  SpanBuilder<Rational> sb(3);
  EXPECT_TRUE(sb.add(Vq{R(1), R(2), R(3)}));
  EXPECT_FALSE(sb.add(Vq{R(-2), R(-4), R(-6)}));
  EXPECT_TRUE(sb.add(Vq{R(0), R(0), R(1)}));
  EXPECT_EQ(sb.dim(), 2u);
}

TEST(Linalg, FunctionFieldInverse) {
  FieldCtx f = FieldCtx::function_field({"t"});
  RatFunc t = parse_scalar<RatFunc>("t", f), one(1);
  Matrix<RatFunc> m = Matrix<RatFunc>::from_rows({{t, one}, {one, t}}, 2);
  // [[t,1],[1,t]]^-1 = (1/(t^2-1)) [[t,-1],[-1,t]].
  RatFunc d = one / (t * t - one);
  Matrix<RatFunc> want = Matrix<RatFunc>::from_rows({{t * d, -d}, {-d, t * d}}, 2);
  EXPECT_EQ(inverse(m), want);
}

}  // namespace
}  // namespace quadalg
