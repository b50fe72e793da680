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

#ifndef FLATFLAG_CLI_COMMANDS_HPP
#define FLATFLAG_CLI_COMMANDS_HPP

#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "flatflag/algebra.hpp"
#include "flatflag/io/codec.hpp"

namespace flatflag::cli {

using json = nlohmann::json;

/// Invariants a command re-checked on its own output, in order.
class Checks {
 public:
  void add(std::string name, bool ok) { items_.emplace_back(std::move(name), ok); }
  const std::vector<std::pair<std::string, bool>>& items() const { return items_; }
  bool all_ok() const {
    return std::all_of(items_.begin(), items_.end(), [](const auto& i) { return i.second; });
  }

 private:
  std::vector<std::pair<std::string, bool>> items_;
};

struct Command {
  std::string module;
  std::string summary;
  std::function<json(const json&, Checks&)> handler;
};

namespace detail {

using io::detail::int_at;

inline std::int64_t int_or(const json& in, const char* key, std::int64_t fallback) {
  return in.contains(key) ? int_at(in, key) : fallback;
}

inline pone::DmBundle valid_connection(const json& in) {
  pone::DmBundle d = io::connection_from_json(in);
  const auto v = pone::validate(d.base);
  if (!v.empty())
    throw PreconditionError("connection is not regular at infinity (" + std::to_string(v.size()) +
                            " violating entries; run pone-check)");
  return d;
}

inline bool strictly_upper(const MatRF& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

inline bool upper(const MatRF& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

inline MatRF substitute(const MatRF& m, std::size_t q) {
  return m.map([q](const RatFunc& e) { return e.compose_pow(q); });
}

inline std::size_t ipow(std::size_t p, unsigned e) {
  std::size_t out = 1;
  for (unsigned i = 0; i < e; ++i) out *= p;
  return out;
}

/// Atoms of an elliptic input, reduced in "group" when one is given.
inline elliptic::Bundle atoms(const json& in) {
  elliptic::Bundle b;
  if (in.contains("atoms")) {
    for (const auto& a : io::detail::array(in["atoms"], "atoms")) b.push_back(io::atom_from_json(a));
  } else {
    b.push_back(io::atom_from_json(in));
  }
  if (in.contains("group")) {
    const auto g = io::group_from_json(in["group"]);
    for (auto& a : b) a = elliptic::reduced(a, g);
  }
  return b;
}

inline elliptic::AtiyahAtom atom_in(const json& in, const char* key) {
  elliptic::AtiyahAtom a = io::atom_from_json(io::detail::at(in, key));
  if (in.contains("group")) a = elliptic::reduced(a, io::group_from_json(in["group"]));
  return a;
}

inline json classes_json(const std::vector<elliptic::PicClass>& cs) {
  json out = json::array();
  for (const auto& c : cs) out.push_back(io::to_json(c));
  return out;
}

// ---------------------------------------------------------------------------
// Algebra

inline json alg_irreducible(const json& in, Checks& checks) {
  const std::int64_t p = int_at(in, "p");
  const std::int64_t k = int_at(in, "k");
  if (p < 2 || k < 1 || k > 20) throw InvalidFieldError("need p >= 2 and 1 <= k <= 20");
  Poly f = find_irreducible(static_cast<std::uint32_t>(p), static_cast<unsigned>(k));
  checks.add("monic of degree k", f.degree() == k && f.lead() == f.field()->one());
  return json{{"modulus", io::to_json(f)}};
}

inline json alg_charpoly(const json& in, Checks& checks) {
  FieldPtr f = io::field_from_json(io::detail::at(in, "field"));
  MatRF m = io::matrf_from_json(f, io::detail::at(in, "M"));
  auto cp = charpoly_berkowitz(m);
  checks.add("monic of degree r", cp.size() == m.rows() + 1 && cp.back() == one_like(cp.back()));
  json coeffs = json::array();
  for (const auto& c : cp) coeffs.push_back(io::to_json(c));
  return json{{"charpoly", coeffs}};
}

inline json alg_sqrt(const json& in, Checks& checks) {
  FieldPtr f = io::field_from_json(io::detail::at(in, "field"));
  RatFunc g = io::ratfunc_from_json(f, io::detail::at(in, "f"));
  auto root = sqrt_ratfunc(g);
  if (root) checks.add("root squares to the input", (*root) * (*root) == g);
  return json{{"sqrt", root ? io::to_json(*root) : json(nullptr)}};
}

inline json alg_frobsub(const json& in, Checks&) {
  FieldPtr f = io::field_from_json(io::detail::at(in, "field"));
  RatFunc g = io::ratfunc_from_json(f, io::detail::at(in, "f"));
  const std::int64_t s = int_or(in, "s", 1);
  if (s < 1) throw PreconditionError("s must be >= 1");
  return json{{"member", in_frobenius_subfield(g, static_cast<unsigned>(s))}};
}

inline json alg_roots(const json& in, Checks& checks) {
  FieldPtr f = io::field_from_json(io::detail::at(in, "field"));
  Poly g = io::poly_from_json(f, io::detail::at(in, "f"));
  auto roots = roots_in_field(g);
  json out = json::array();
  bool ok = true;
  for (auto r : roots) {
    ok = ok && f->is_zero(g.eval(r));
    out.push_back(io::to_json(*f, r));
  }
  checks.add("every root evaluates to zero", ok);
  return json{{"roots", out}};
}

// ---------------------------------------------------------------------------
// Projective line

inline json pone_check(const json& in, Checks& checks) {
  const pone::DmBundle d = io::connection_from_json(in);
  const auto v = pone::validate(d.base);
  json vs = json::array();
  for (const auto& x : v) vs.push_back(io::to_json(x));
  // Entry-bound reading of the same condition.
  const auto& deg = d.base.degrees();
  const std::int64_t p = d.base.characteristic();
  bool bounds = true;
  for (std::size_t j = 0; j < deg.size(); ++j) {
    bounds = bounds && deg[j] % p == 0;
    for (std::size_t i = 0; i < deg.size(); ++i) {
      const Poly& a = d.base.matrix()(j, i);
      if (!a.is_zero() && (i == j || a.degree() > deg[j] - deg[i] - 2)) bounds = false;
    }
  }
  checks.add("pole computation agrees with entry bounds", v.empty() == bounds);
  checks.add("regular at infinity", v.empty());
  return json{{"valid", v.empty()}, {"violations", vs}, {"degrees", d.degrees()}};
}

inline json pone_admits(const json& in, Checks&) {
  const std::int64_t p = int_at(in, "p");
  const std::int64_t m = int_or(in, "m", 0);
  if (p < 2 || m < 0) throw PreconditionError("need p >= 2 and m >= 0");
  const pone::BundleP1 b(io::detail::ints(io::detail::at(in, "degrees"), "degrees"));
  return json{{"admits", pone::admits_level(b, static_cast<std::uint32_t>(p), static_cast<unsigned>(m))}};
}

inline json pone_canonical(const json& in, Checks& checks) {
  FieldPtr f = io::field_from_json(io::detail::at(in, "field"));
  const std::int64_t m = int_or(in, "m", 0);
  if (m < 0 || m > 16) throw PreconditionError("m must be in [0, 16]");
  const pone::BundleP1 b(io::detail::ints(io::detail::at(in, "degrees"), "degrees"));
  const pone::DmBundle d = pone::canonical_connection(b, f, static_cast<unsigned>(m));
  checks.add("regular at infinity", pone::validate(d.base).empty());
  checks.add("curvature vanishes", pone::pm1_curvature(d).is_zero());
  return json{{"connection", io::to_json(d)}, {"degrees", d.degrees()}};
}

inline json resorted_json(const pone::Resorted& r, Checks& checks) {
  checks.add("regular at infinity", pone::validate(r.conn).empty());
  json perm = json::array();
  for (auto i : r.perm) perm.push_back(i + 1);
  return json{{"connection", io::to_json(r.conn)}, {"perm", perm}};
}

inline json pone_tensor(const json& in, Checks& checks) {
  const pone::DmBundle a = valid_connection(io::detail::at(in, "a"));
  const pone::DmBundle b = valid_connection(io::detail::at(in, "b"));
  if (a.level != 0 || b.level != 0) throw PreconditionError("tensor products are formed at level 0");
  return resorted_json(pone::tensor(a.base, b.base), checks);
}

inline json pone_dual(const json& in, Checks& checks) {
  const pone::DmBundle a = valid_connection(in);
  if (a.level != 0) throw PreconditionError("duals are formed at level 0");
  return resorted_json(pone::dual(a.base), checks);
}

inline json pone_pcurv(const json& in, Checks& checks) {
  const pone::DmBundle d = valid_connection(in);
  const MatRF psi = pone::pm1_curvature(d);
  checks.add("strictly upper triangular", strictly_upper(psi));
  checks.add("nilpotent", pone::is_nilpotent(psi));
  return json{{"level", d.level}, {"psi", io::to_json(psi)}, {"zero", psi.is_zero()}};
}

inline json pone_flag(const json& in, Checks& checks) {
  const pone::DmBundle d = valid_connection(in);
  const pone::FlagP1 flag = pone::complete_flag(d);
  checks.add("every step is preserved", pone::verify_flag(d.base, flag));
  return io::to_json(flag);
}

inline json pone_descend(const json& in, Checks& checks) {
  const pone::DmBundle d = valid_connection(in);
  const pone::Descent out = pone::cartier_descent(d.base);
  const MatRF a = d.base.matrix_rf();
  bool horizontal = true;
  for (std::size_t i = 0; i < out.frame.cols(); ++i)
    for (const auto& e : apply_nabla(a, out.frame.column(i))) horizontal = horizontal && e.is_zero();
  checks.add("frame columns are horizontal", horizontal);
  const MatRF zero = zero_matrix(d.base.field(), d.base.rank());
  checks.add("pullback gauged by the frame reproduces A", gauge_transform(zero, *inverse(out.frame)) == a);
  return json{{"level", d.level}, {"descended_degrees", out.bundle.degrees()}, {"frame", io::to_json(out.frame)}};
}

inline json pone_pullback(const json& in, Checks& checks) {
  const pone::DmBundle d = valid_connection(in);
  const std::int64_t s = int_or(in, "s", 1);
  if (s < 1 || s > 8) throw PreconditionError("s must be in [1, 8]");
  const pone::DmBundle up = pone::frobenius_pullback(d, static_cast<unsigned>(s));
  const MatRF psi = pone::pm1_curvature(up);
  const std::size_t q = ipow(d.base.characteristic(), static_cast<unsigned>(s));
  checks.add("curvature equals the substituted curvature of the input", psi == substitute(pone::pm1_curvature(d), q));
  return json{{"connection", io::to_json(up)}, {"degrees", up.degrees()}, {"psi", io::to_json(psi)}};
}

// ---------------------------------------------------------------------------
// Elliptic curves

inline json ell_profile(const json& in, Checks& checks) {
  const std::int64_t r = int_at(in, "r");
  const std::int64_t d = int_at(in, "d");
  const auto prof = elliptic::atiyah_profile(r, d);
  bool gcd_ok = true;
  for (auto [rj, dj] : prof.pairs) gcd_ok = gcd_ok && std::gcd(rj, dj) == prof.h;
  std::int64_t rank = 0;
  std::int64_t deg = 0;
  for (std::size_t j = 0; j < prof.l; ++j) {
    rank += prof.gr_ranks[j];
    deg += prof.gr_ranks[j] * prof.deg_l[j];
  }
  checks.add("gcd is constant along the recursion", gcd_ok);
  checks.add("graded ranks sum to r", rank == r);
  checks.add("graded degrees sum to d", deg == d);
  return io::to_json(prof);
}

inline json ell_classes(const json& in, Checks& checks) {
  const auto b = atoms(in);
  if (b.size() != 1) throw ParseError("ell-classes takes a single atom");
  const auto cs = elliptic::line_classes(b.front());
  checks.add("one class per filtration step", cs.size() == elliptic::atiyah_profile(b[0].r, b[0].d).l);
  return classes_json(cs);
}

inline json ell_admits(const json& in, Checks&) {
  const auto b = atoms(in);
  const std::int64_t p = int_at(in, "p");
  json each = json::array();
  for (const auto& a : b) each.push_back(elliptic::admits_connection(a, p));
  return json{{"admits", elliptic::admits_connection(b, p)}, {"atoms", each}};
}

inline json ell_skeleton(const json& in, Checks& checks) {
  const auto b = atoms(in);
  const std::int64_t p = int_at(in, "p");
  const auto sk = elliptic::flag_skeleton(b, p);
  std::int64_t rank = 0, deg = 0, mult = 0, weighted = 0;
  for (const auto& a : b) {
    rank += a.r;
    deg += a.d;
  }
  for (const auto& e : sk) {
    mult += e.mult;
    weighted += e.mult * e.cls.degree;
  }
  checks.add("total multiplicity equals rank", mult == rank);
  checks.add("degree-weighted sum equals degree", weighted == deg);
  return io::to_json(sk);
}

inline json ell_peel(const json& in, Checks&) { return classes_json(elliptic::peel_order(atoms(in))); }

inline json ell_hom(const json& in, Checks&) {
  return json{{"constraint", elliptic::to_string(elliptic::hom_constraint(atom_in(in, "src"), atom_in(in, "dst")))}};
}

// ---------------------------------------------------------------------------
// Hyperbolic charts

inline json hit_charpoly(const json& in, Checks& checks) {
  const hitchin::ChartConn c = io::chart_from_json(in);
  const auto cp = hitchin::char_poly_psi(c);
  checks.add("coefficients lie in F_q(x^p)", cp.descent_ok);
  return json{{"psi", io::to_json(hitchin::p_curvature_chart(c))},
              {"charpoly", io::to_json(cp)},
              {"descent_ok", cp.descent_ok}};
}

inline json hit_dims(const json& in, Checks& checks) {
  const std::int64_t g = int_at(in, "g");
  const std::int64_t r = int_at(in, "r");
  const auto d = hitchin::hitchin_dims(g, r);
  std::int64_t sum = g;
  for (std::int64_t i = 2; i <= r; ++i) sum += (2 * i - 1) * (g - 1);
  checks.add("base dimension equals the sum of differential counts", sum == d.dim_b);
  return io::to_json(d);
}

inline json hit_cert(const json& in, Checks& checks) {
  const hitchin::ChartConn c = io::chart_from_json(in);
  const auto cert = hitchin::no_flag_certificate_rank2(c);
  checks.add("coefficients lie in F_q(x^p)", cert.charpoly.descent_ok);
  if (cert.root) checks.add("witness root squares to the tested function", (*cert.root) * (*cert.root) == *cert.tested);
  return io::to_json(cert);
}

inline json hit_nilflag(const json& in, Checks& checks) {
  const hitchin::ChartConn c = io::chart_from_json(in);
  const auto out = hitchin::nilpotent_flag_chart(c);
  checks.add("transformed matrix is upper triangular", upper(out.transformed));
  checks.add("gauge reproduces the transformed matrix", gauge_transform(c.matrix(), out.gauge) == out.transformed);
  json perm = json::array();
  for (auto i : out.perm) perm.push_back(i + 1);
  return json{{"gauge", io::to_json(out.gauge)}, {"transformed", io::to_json(out.transformed)}, {"perm", perm}};
}

}  // namespace detail

/// Every subcommand except selftest, by name.
inline const std::map<std::string, Command>& commands() {
  static const std::map<std::string, Command> table = {
      {"alg-irreducible", {"algebra", "smallest monic irreducible of degree k over F_p", detail::alg_irreducible}},
      {"alg-charpoly", {"algebra", "division-free characteristic polynomial", detail::alg_charpoly}},
      {"alg-sqrt", {"algebra", "square root in F_q(x)", detail::alg_sqrt}},
      {"alg-frobsub", {"algebra", "membership in F_q(x^{p^s})", detail::alg_frobsub}},
      {"alg-roots", {"algebra", "roots in the coefficient field", detail::alg_roots}},
      {"pone-admits", {"pone", "whether a bundle carries a level-m structure", detail::pone_admits}},
      {"pone-canonical", {"pone", "canonical level-m structure", detail::pone_canonical}},
      {"pone-check", {"pone", "regularity at infinity", detail::pone_check}},
      {"pone-tensor", {"pone", "tensor product", detail::pone_tensor}},
      {"pone-dual", {"pone", "dual connection", detail::pone_dual}},
      {"pone-pcurv", {"pone", "p^{m+1}-curvature", detail::pone_pcurv}},
      {"pone-flag", {"pone", "complete flag", detail::pone_flag}},
      {"pone-descend", {"pone", "Cartier descent", detail::pone_descend}},
      {"pone-pullback", {"pone", "Frobenius pullback", detail::pone_pullback}},
      {"ell-profile", {"elliptic", "Atiyah profile of (r, d)", detail::ell_profile}},
      {"ell-classes", {"elliptic", "line classes of an atom", detail::ell_classes}},
      {"ell-admits", {"elliptic", "connection existence", detail::ell_admits}},
      {"ell-skeleton", {"elliptic", "flag skeleton", detail::ell_skeleton}},
      {"ell-peel", {"elliptic", "peeling order", detail::ell_peel}},
      {"ell-hom", {"elliptic", "constraint on morphisms", detail::ell_hom}},
      {"hit-charpoly", {"hitchin", "characteristic polynomial of p-curvature", detail::hit_charpoly}},
      {"hit-dims", {"hitchin", "Hitchin base dimension count", detail::hit_dims}},
      {"hit-cert", {"hitchin", "rank-2 no-flag certificate", detail::hit_cert}},
      {"hit-nilflag", {"hitchin", "flag for nilpotent p-curvature", detail::hit_nilflag}},
  };
  return table;
}

}  // namespace flatflag::cli

#endif  // FLATFLAG_CLI_COMMANDS_HPP
