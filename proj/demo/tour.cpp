/*
   Copyright 2026 The flatflag Authors

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

// Library tour: a connection on P^1 with nonzero nilpotent p-curvature, its
// flag, and a chart connection whose p-curvature has no eigenline.

#include <iostream>

#include "flatflag/hitchin.hpp"
#include "flatflag/io/codec.hpp"
#include "flatflag/pone.hpp"

using namespace flatflag;

int main() {
  auto f2 = Field::make(2);
  // d + A dx on O(4) + O(0) with A = [[0, 1 + x + x^2], [0, 0]].
  MatPoly a(2, 2, Poly(f2));
  a(0, 1) = Poly::from_ints(f2, {1, 1, 1});
  pone::Conn0 c(f2, {4, 0}, a);

  std::cout << "violations: " << pone::validate(c).size() << "\n";
  std::cout << "p-curvature: " << io::to_json(pone::p_curvature(c)).dump() << "\n";
  std::cout << "flag: " << io::to_json(pone::complete_flag(c)).dump() << "\n";

  auto f3 = Field::make(3);
  MatRF b = zero_matrix(f3, 2);
  b(0, 1) = RatFunc::constant(f3, f3->one());
  b(1, 0) = RatFunc::x(f3);
  const auto cert = hitchin::no_flag_certificate_rank2(hitchin::ChartConn(f3, b));
  std::cout << "certificate: " << io::to_json(cert).dump() << "\n";
  return 0;
}
