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

#ifndef FLATFLAG_IO_CODEC_HPP
#define FLATFLAG_IO_CODEC_HPP

#include <string>
#include <vector>

#include "flatflag/elliptic.hpp"
#include "flatflag/hitchin.hpp"
#include "flatflag/pone.hpp"
#include "json.hpp"

/// JSON encodings shared by the CLI and the fixture corpus. The schemas are
/// described in docs/formats.md. Every reader throws ParseError on malformed
/// input; frame indices are 1-based on the wire.
namespace flatflag::io {

using json = nlohmann::json;

namespace detail {

inline const json& at(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object with key \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing key \"") + key + "\"");
  return *it;
}

inline std::int64_t to_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

inline std::int64_t int_at(const json& j, const char* key) { return to_int(at(j, key), key); }

inline const json& array(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  return j;
}

inline std::vector<std::int64_t> ints(const json& j, const char* what) {
  std::vector<std::int64_t> out;
  for (const auto& e : array(j, what)) out.push_back(to_int(e, what));
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Algebra

inline json to_json(const Field& f) {
  json j{{"p", f.characteristic()}, {"k", f.degree()}};
  if (f.degree() > 1) j["modulus"] = f.modulus();
  return j;
}

inline FieldPtr field_from_json(const json& j) {
  const std::int64_t p = detail::int_at(j, "p");
  const std::int64_t k = j.contains("k") ? detail::int_at(j, "k") : 1;
  if (p < 2 || p > (1 << 20)) throw InvalidFieldError("characteristic " + std::to_string(p) + " out of range");
  if (k < 1 || k > 20) throw InvalidFieldError("extension degree " + std::to_string(k) + " out of range");
  if (j.contains("modulus")) {
    std::vector<std::uint32_t> m;
    for (auto c : detail::ints(j["modulus"], "modulus")) {
      if (c < 0) throw ParseError("modulus coefficients must be non-negative");
      m.push_back(static_cast<std::uint32_t>(c));
    }
    if (m.size() != static_cast<std::size_t>(k) + 1) throw ParseError("modulus degree does not match k");
    return Field::with_modulus(static_cast<std::uint32_t>(p), std::move(m));
  }
  return Field::make(static_cast<std::uint32_t>(p), static_cast<unsigned>(k));
}

inline json to_json(const Field& f, Elem a) {
  if (f.degree() == 1) return a.code;
  return f.residues(a);
}

/// Integers are read as elements of the prime field; arrays as residues.
inline Elem elem_from_json(const Field& f, const json& j) {
  if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
  std::vector<std::uint32_t> res;
  for (auto r : detail::ints(j, "field element")) {
    if (r < 0) throw ParseError("residues must be non-negative");
    res.push_back(static_cast<std::uint32_t>(r));
  }
  return f.from_residues(res);
}

inline json to_json(const Poly& p) {
  json out = json::array();
  for (auto c : p.coeffs()) out.push_back(to_json(*p.field(), c));
  return out;
}

inline Poly poly_from_json(const FieldPtr& f, const json& j) {
  std::vector<Elem> c;
  for (const auto& e : detail::array(j, "polynomial")) c.push_back(elem_from_json(*f, e));
  return Poly(f, std::move(c));
}

inline json to_json(const RatFunc& r) { return json{{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

/// Accepts {"num", "den"} or a bare polynomial array.
inline RatFunc ratfunc_from_json(const FieldPtr& f, const json& j) {
  if (j.is_array()) return RatFunc(poly_from_json(f, j));
  Poly den = poly_from_json(f, detail::at(j, "den"));
  if (den.is_zero()) throw ParseError("denominator is zero");
  return RatFunc(poly_from_json(f, detail::at(j, "num")), std::move(den));
}

template <class T>
json to_json(const Matrix<T>& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    out.push_back(std::move(row));
  }
  return out;
}

namespace detail {

template <class T, class Read>
Matrix<T> square_from_json(const json& j, const T& fill, Read read) {
  const std::size_t n = array(j, "matrix").size();
  if (n == 0) throw ParseError("matrix must be nonempty");
  Matrix<T> m(n, n, fill);
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = array(j[i], "matrix row");
    if (row.size() != n) throw ParseError("matrix must be square");
    for (std::size_t k = 0; k < n; ++k) m(i, k) = read(row[k]);
  }
  return m;
}

}  // namespace detail

inline MatPoly matpoly_from_json(const FieldPtr& f, const json& j) {
  return detail::square_from_json<Poly>(j, Poly(f), [&](const json& e) { return poly_from_json(f, e); });
}

inline MatRF matrf_from_json(const FieldPtr& f, const json& j) {
  return detail::square_from_json<RatFunc>(j, RatFunc(f), [&](const json& e) { return ratfunc_from_json(f, e); });
}

// ---------------------------------------------------------------------------
// Projective line

inline json to_json(const pone::DmBundle& d) {
  return json{{"field", to_json(*d.base.field())},
              {"level", d.level},
              {"twist_degrees", d.base.degrees()},
              {"A", to_json(d.base.matrix())}};
}

inline json to_json(const pone::Conn0& c) { return to_json(pone::DmBundle{0, c}); }

inline pone::DmBundle connection_from_json(const json& j) {
  FieldPtr f = field_from_json(detail::at(j, "field"));
  const std::int64_t level = j.contains("level") ? detail::int_at(j, "level") : 0;
  if (level < 0 || level > 16) throw ParseError("level must be in [0, 16]");
  auto degrees = detail::ints(detail::at(j, "twist_degrees"), "twist_degrees");
  if (degrees.empty()) throw ParseError("twist_degrees must be nonempty");
  if (!std::is_sorted(degrees.begin(), degrees.end(), std::greater<>()))
    throw ParseError("twist_degrees must be sorted descending");
  MatPoly a = matpoly_from_json(f, detail::at(j, "A"));
  if (a.rows() != degrees.size()) throw ParseError("A has the wrong size for twist_degrees");
  return pone::DmBundle{static_cast<unsigned>(level), pone::Conn0(f, std::move(degrees), std::move(a))};
}

inline json to_json(const pone::FlagP1& f) {
  json perm = json::array();
  for (auto i : f.perm) perm.push_back(i + 1);
  return json{{"perm", perm}, {"graded_degrees", f.graded_degrees}};
}

inline pone::FlagP1 flag_from_json(const json& j) {
  pone::FlagP1 out;
  for (auto i : detail::ints(detail::at(j, "perm"), "perm")) {
    if (i < 1) throw ParseError("perm entries are 1-based");
    out.perm.push_back(static_cast<std::size_t>(i - 1));
  }
  if (j.contains("graded_degrees")) out.graded_degrees = detail::ints(j["graded_degrees"], "graded_degrees");
  return out;
}

inline json to_json(const pone::Violation& v) {
  return json{{"row", v.row + 1}, {"col", v.col + 1}, {"pole_order", v.pole_order}};
}

// ---------------------------------------------------------------------------
// Elliptic curves

inline json to_json(const elliptic::AtiyahAtom& a) { return json{{"r", a.r}, {"d", a.d}, {"lam", a.lam}}; }

inline elliptic::AtiyahAtom atom_from_json(const json& j) {
  elliptic::AtiyahAtom a{detail::int_at(j, "r"), detail::int_at(j, "d"), {}};
  if (j.contains("lam")) a.lam = detail::ints(j["lam"], "lam");
  return a;
}

inline json to_json(const elliptic::Pic0Group& g) { return json{{"factors", g.factors()}}; }

inline elliptic::Pic0Group group_from_json(const json& j) {
  return elliptic::Pic0Group(detail::ints(detail::at(j, "factors"), "factors"));
}

inline json to_json(const elliptic::PicClass& c) { return json{{"degree", c.degree}, {"tor", c.tor}}; }

inline elliptic::PicClass class_from_json(const json& j) {
  return elliptic::PicClass{detail::int_at(j, "degree"), detail::ints(detail::at(j, "tor"), "tor")};
}

inline json to_json(const elliptic::FlagSkeleton& s) {
  json out = json::array();
  for (const auto& e : s) out.push_back(json{{"degree", e.cls.degree}, {"tor", e.cls.tor}, {"mult", e.mult}});
  return out;
}

inline elliptic::FlagSkeleton skeleton_from_json(const json& j) {
  elliptic::FlagSkeleton out;
  for (const auto& e : detail::array(j, "skeleton")) out.push_back({class_from_json(e), detail::int_at(e, "mult")});
  return out;
}

inline json to_json(const elliptic::AtiyahProfile& p) {
  json pairs = json::array();
  for (auto [r, d] : p.pairs) pairs.push_back(json::array({r, d}));
  return json{{"pairs", pairs}, {"degL", p.deg_l}, {"m", p.m}, {"l", p.l}, {"h", p.h}, {"grRanks", p.gr_ranks}};
}

// ---------------------------------------------------------------------------
// Hyperbolic charts

inline json to_json(const hitchin::ChartConn& c) {
  return json{{"field", to_json(*c.field())}, {"r", c.rank()}, {"A", to_json(c.matrix())}};
}

inline hitchin::ChartConn chart_from_json(const json& j) {
  FieldPtr f = field_from_json(detail::at(j, "field"));
  MatRF a = matrf_from_json(f, detail::at(j, "A"));
  if (j.contains("r") && detail::int_at(j, "r") != static_cast<std::int64_t>(a.rows()))
    throw ParseError("r does not match the size of A");
  return hitchin::ChartConn(f, std::move(a));
}

inline json to_json(const hitchin::CharPolyP& c) {
  json coeffs = json::array();
  for (const auto& a : c.full()) coeffs.push_back(to_json(a));
  return coeffs;
}

inline json to_json(const hitchin::Certificate& c) {
  json witness = json::object();
  if (c.tested) witness["tested"] = to_json(*c.tested);
  witness["root"] = c.root ? to_json(*c.root) : json(nullptr);
  return json{{"charpoly", to_json(c.charpoly)},
              {"descent_ok", c.charpoly.descent_ok},
              {"verdict", hitchin::to_string(c.verdict)},
              {"witness", witness}};
}

inline json to_json(const hitchin::HitchinDims& d) {
  return json{{"dimB", d.dim_b}, {"dimD", d.dim_d}, {"gamma_nondominant", d.gamma_nondominant}};
}

}  // namespace flatflag::io

#endif  // FLATFLAG_IO_CODEC_HPP
