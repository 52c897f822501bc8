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


// Octonions (-1,-1,-1) over Q: a non-associative triple, the Moufang
// identities on that triple, and the full identity suite by symbolic
// expansion.

#include <iostream>

#include "quadalg/composition.hpp"

using namespace quadalg;

int main() {
  CompositionAlgebra<Rational> O({Rational(-1), Rational(-1), Rational(-1)});
  const auto& lbl = composition_labels();
  auto show = [&](const Vec<Rational>& x) {
    std::string s;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (is_zero(x[i])) continue;
      std::string c = to_string(x[i]);
      if (!s.empty() && c[0] != '-') s += "+";
      s += (c == "1" ? "" : c == "-1" ? "-" : c + "*") + lbl[i];
    }
    return s.empty() ? std::string("0") : s;
  };

  std::cout << "norm form: " << vec_str(O.norm_form().diag()) << "\n\nmultiplication table\n";
  for (std::size_t p = 0; p < O.dim(); ++p) {
    for (std::size_t q = 0; q < O.dim(); ++q) std::cout << "  " << show(O.multiply(O.basis(p), O.basis(q)));
    std::cout << "\n";
  }

  auto x = O.basis(1), y = O.basis(2), z = O.basis(4);
  auto assoc = O.multiply(O.multiply(x, y), z) - O.multiply(x, O.multiply(y, z));
  std::cout << "\n(i j) k - i (j k) = " << show(assoc) << "\n";

  // Moufang: (x y x) z = x (y (x z)) and its mirror.
  auto xyx = O.multiply(O.multiply(x, y), x);
  auto lhs = O.multiply(xyx, z), rhs = O.multiply(x, O.multiply(y, O.multiply(x, z)));
  std::cout << "(x y x) z = " << show(lhs) << ",  x (y (x z)) = " << show(rhs) << "\n";
  auto zxyx = O.multiply(z, xyx), mirror = O.multiply(O.multiply(O.multiply(z, x), y), x);
  std::cout << "z (x y x) = " << show(zxyx) << ",  ((z x) y) x = " << show(mirror) << "\n\n";

  CheckSpec spec;
  spec.mode = Mode::Symbolic;
  bool ok = true;
  for (const auto& r : identity_suite(O, spec, FieldCtx::rationals())) {
    std::cout << (r.pass ? "pass  " : "FAIL  ") << r.name << "  " << r.statement << "\n";
    ok = ok && r.pass;
  }
  return ok && lhs == rhs && zxyx == mirror ? 0 : 1;
}
