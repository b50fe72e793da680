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

#ifndef FLATFLAG_PONE_TENSOR_HPP
#define FLATFLAG_PONE_TENSOR_HPP

#include <algorithm>
#include <numeric>

#include "flatflag/pone/connection.hpp"

namespace flatflag::pone {

/// A connection whose frame was re-sorted; perm[new_index] = old_index.
struct Resorted {
  Conn0 conn;
  std::vector<std::size_t> perm;
};

namespace detail {

inline Resorted sort_frame(const FieldPtr& f, const std::vector<std::int64_t>& degrees, const MatPoly& a) {
  std::vector<std::size_t> perm(degrees.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t x, std::size_t y) { return degrees[x] > degrees[y]; });
  std::vector<std::int64_t> sorted;
  for (auto i : perm) sorted.push_back(degrees[i]);
  return Resorted{Conn0(f, std::move(sorted), a.permuted(perm)), std::move(perm)};
}

}  // namespace detail

/// nabla (x) nabla' acting by nabla(a) (x) b + a (x) nabla'(b). The
/// unsorted frame is e_i (x) f_j at index i * rank(b) + j.
inline Resorted tensor(const Conn0& a, const Conn0& b) {
  require_same_field(a.field(), b.field());
  const FieldPtr& f = a.field();
  std::vector<std::int64_t> degrees;
  for (auto da : a.degrees())
    for (auto db : b.degrees()) degrees.push_back(da + db);
  const Poly zero(f);
  const Poly one = Poly::constant(f, f->one());
  const MatPoly ia = MatPoly::identity(a.rank(), zero, one);
  const MatPoly ib = MatPoly::identity(b.rank(), zero, one);
  return detail::sort_frame(f, degrees, kron(a.matrix(), ib) + kron(ia, b.matrix()));
}

/// Dual connection on the dual frame: degrees negated, matrix -A^T.
inline Resorted dual(const Conn0& a) {
  std::vector<std::int64_t> degrees;
  for (auto d : a.degrees()) degrees.push_back(-d);
  return detail::sort_frame(a.field(), degrees, -a.matrix().transposed());
}

}  // namespace flatflag::pone

#endif  // FLATFLAG_PONE_TENSOR_HPP
