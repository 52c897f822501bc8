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


// The E6 quadrangular algebra over Q with a = -1, s2 = s3 = 1: its data,
// a few structure values, and the axioms by symbolic expansion.

#include <iostream>

#include "quadalg/quadrangular.hpp"

using namespace quadalg;

int main() {
  using Q = Rational;
  auto E = construct_etype<Q>(EType::E6, Q(-1), {Q(1), Q(1)});
  const auto& A = E.built.Q;
  std::cout << "q   = " << vec_str(E.data.q.diag()) << " (" << verdict_name(E.data.q_verdict.kind) << ")\n";
  std::cout << "C1  = " << vec_str(E.data.c1) << ", C2 = " << vec_str(E.data.c2) << "\n";
  std::cout << "dim V = " << A.vdim() << ", dim X0 = " << A.xdim() << "\n";
  std::cout << "V form = " << vec_str(A.space().form.diag()) << ", base = " << vec_str(A.base()) << "\n\n";

  Vec<Q> x = A.xbasis(0) + A.xbasis(3), y = A.xbasis(1), v = A.vbasis(2);
  std::cout << "x = " << vec_str(x) << ", y = " << vec_str(y) << ", v = " << vec_str(v) << "\n";
  std::cout << "x.v    = " << vec_str(A.dot(x, v)) << "\n";
  std::cout << "h(x,y) = " << vec_str(A.h(x, y)) << "\n";
  std::cout << "pi(x)  = " << vec_str(A.pi(x)) << ", q(pi(x)) = " << to_string(A.q(A.pi(x))) << "\n\n";

  CheckSpec spec;
  spec.mode = Mode::Symbolic;
  spec.trials = 500;
  auto f = FieldCtx::rationals();
  auto rs = verify_axioms(A, spec, f);
  for (auto& r : jmodule_hypotheses(E.built, spec, f)) rs.push_back(r);
  for (const auto& r : rs) std::cout << (r.pass ? "pass  " : "FAIL  ") << r.name << "  [" << r.mode << "]\n";
  return all_pass(rs) ? 0 : 1;
}
