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

#ifndef FLATFLAG_CLI_RUN_HPP
#define FLATFLAG_CLI_RUN_HPP

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "flatflag/cli/commands.hpp"
#include "flatflag/hitchin/sample.hpp"
#include "flatflag/pone/sample.hpp"

namespace flatflag::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kPrecondition = 2, kParse = 3 };

struct Report {
  std::string command;
  std::string inputs_digest;
  json result;
  std::vector<std::pair<std::string, bool>> invariants;
  std::string status = "ok";
  std::string error;
  int exit_code = kOk;

  json to_json() const {
    json inv = json::array();
    for (const auto& [name, ok] : invariants) inv.push_back(json{{"name", name}, {"ok", ok}});
    json out{{"command", command},
             {"inputs_digest", inputs_digest},
             {"result", result},
             {"invariants", inv},
             {"status", status},
             {"exit_code", exit_code}};
    if (!error.empty()) out["error"] = error;
    return out;
  }

  std::string to_text() const {
    std::ostringstream os;
    os << command << ": " << status << " (exit " << exit_code << ")\n";
    for (const auto& [name, ok] : invariants) os << "  " << (ok ? "[ok]     " : "[FAILED] ") << name << "\n";
    if (!error.empty()) os << "  error: " << error << "\n";
    if (result.is_object() && result.contains("items")) {
      for (const auto& i : result["items"]) {
        os << (i["ok"].get<bool>() ? "  PASS " : "  FAIL ") << i["name"].get<std::string>();
        if (i.contains("detail")) os << ": " << i["detail"].get<std::string>();
        os << "\n";
      }
      os << "  " << result["passed"] << " passed, " << result["failed"] << " failed\n";
    } else if (!result.is_null()) {
      os << result.dump(2) << "\n";
    }
    return os.str();
  }
};

/// FNV-1a over the canonical (sorted-key, compact) serialization.
inline std::string digest(const json& input) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : input.dump()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline Report failure(Report rep, int code, std::string status, std::string message) {
  rep.exit_code = code;
  rep.status = std::move(status);
  rep.error = std::move(message);
  return rep;
}

/// Runs one subcommand on a parsed input object. Never throws.
inline Report run(const std::string& name, const json& input) {
  Report rep;
  rep.command = name;
  rep.inputs_digest = digest(input);
  const auto it = commands().find(name);
  if (it == commands().end()) return failure(rep, kParse, "usage", "unknown subcommand \"" + name + "\"");
  Checks checks;
  try {
    rep.result = it->second.handler(input, checks);
  } catch (const ParseError& e) {
    return failure(rep, kParse, "parse_error", e.what());
  } catch (const json::exception& e) {
    return failure(rep, kParse, "parse_error", e.what());
  } catch (const InvalidFieldError& e) {
    return failure(rep, kPrecondition, "precondition", e.what());
  } catch (const PreconditionError& e) {
    return failure(rep, kPrecondition, "precondition", e.what());
  } catch (const NeedsExtensionError& e) {
    return failure(rep, kPrecondition, "needs_extension", e.what());
  } catch (const std::exception& e) {
    rep.invariants = checks.items();
    return failure(rep, kViolation, "internal_error", e.what());
  }
  rep.invariants = checks.items();
  if (!checks.all_ok()) {
    rep.exit_code = kViolation;
    rep.status = "violation";
  }
  return rep;
}

/// True iff every key of an expected object occurs in actual with a matching
/// value; non-object values must be equal.
inline bool json_subset(const json& expect, const json& actual) {
  if (!expect.is_object()) return expect == actual;
  if (!actual.is_object()) return false;
  for (auto it = expect.begin(); it != expect.end(); ++it) {
    auto found = actual.find(it.key());
    if (found == actual.end() || !json_subset(it.value(), *found)) return false;
  }
  return true;
}

struct SelftestItem {
  std::string name;
  std::string module;
  bool ok = false;
  std::string detail;
};

/// A fixture runs one subcommand and compares exit code and a subset of the
/// result against what the file records.
inline SelftestItem run_fixture(const std::filesystem::path& path) {
  SelftestItem item{path.filename().string(), "?", false, ""};
  json fx;
  try {
    std::ifstream in(path);
    fx = json::parse(in);
    item.name = fx.at("name").get<std::string>();
    item.module = fx.at("module").get<std::string>();
  } catch (const std::exception& e) {
    item.detail = std::string("unreadable fixture: ") + e.what();
    return item;
  }
  const Report rep = run(fx.value("command", std::string()), fx.value("input", json::object()));
  const int want_exit = fx.value("expect_exit", 0);
  if (rep.exit_code != want_exit) {
    item.detail = "exit " + std::to_string(rep.exit_code) + ", expected " + std::to_string(want_exit) +
                  (rep.error.empty() ? "" : " (" + rep.error + ")");
    return item;
  }
  if (fx.contains("expect") && !json_subset(fx["expect"], rep.result)) {
    item.detail = "result mismatch: got " + rep.result.dump();
    return item;
  }
  if (fx.contains("expect_error") && rep.error.find(fx["expect_error"].get<std::string>()) == std::string::npos) {
    item.detail = "error message \"" + rep.error + "\" lacks the expected text";
    return item;
  }
  item.ok = true;
  return item;
}

namespace detail {

struct Property {
  const char* name;
  const char* module;
  std::function<std::string(Sampler&)> body;  // empty string on success
};

inline const std::vector<Property>& properties() {
  static const std::vector<Property> list = {
      {"property/algebra/sqrt-of-square", "algebra",
       [](Sampler& s) -> std::string {
         for (std::uint32_t p : {2u, 3u, 5u}) {
           auto f = Field::make(p);
           for (int i = 0; i < 20; ++i) {
             const RatFunc g = s.ratfunc(f, 3);
             auto r = sqrt_ratfunc(g * g);
             if (!r || (*r != g && *r != -g)) return "sqrt(g^2) != +-g for p = " + std::to_string(p);
           }
         }
         return "";
       }},
      {"property/algebra/frobenius-subfield", "algebra",
       [](Sampler& s) -> std::string {
         for (std::uint32_t p : {2u, 3u, 5u}) {
           auto f = Field::make(p);
           for (int i = 0; i < 20; ++i) {
             const RatFunc g = s.ratfunc(f, 3).compose_pow(p);
             if (!in_frobenius_subfield(g, 1)) return "f(x^p) rejected";
           }
         }
         return "";
       }},
      {"property/pone/flags-and-nilpotence", "pone",
       [](Sampler& s) -> std::string {
         for (int i = 0; i < 60; ++i) {
           const std::uint32_t p = std::array<std::uint32_t, 3>{2, 3, 5}[i % 3];
           auto f = Field::make(p);
           auto c = pone::sample_connection(s, f, pone::sample_degrees(s, static_cast<std::size_t>(s.uniform(1, 4)), p, 3 * p));
           if (!pone::validate(c).empty()) return "sampled connection failed validation";
           if (!pone::verify_flag(c, pone::complete_flag(c))) return "flag not preserved";
           if (!pone::is_nilpotent(pone::p_curvature(c))) return "p-curvature not nilpotent";
         }
         return "";
       }},
      {"property/pone/descent-round-trip", "pone",
       [](Sampler& s) -> std::string {
         for (int i = 0; i < 15; ++i) {
           const std::uint32_t p = i % 2 ? 2 : 3;
           auto f = Field::make(p);
           auto c = pone::sample_flat_connection(s, f, pone::sample_degrees(s, 3, p, 2 * p));
           auto d = pone::cartier_descent(c);
           if (gauge_transform(zero_matrix(f, 3), *inverse(d.frame)) != c.matrix_rf()) return "round trip failed";
         }
         return "";
       }},
      {"property/elliptic/profile-invariants", "elliptic",
       [](Sampler&) -> std::string {
         for (std::int64_t r = 1; r <= 20; ++r)
           for (std::int64_t d = -30; d <= 30; ++d) {
             auto prof = elliptic::atiyah_profile(r, d);
             std::int64_t rank = 0, deg = 0;
             for (std::size_t j = 0; j < prof.l; ++j) {
               rank += prof.gr_ranks[j];
               deg += prof.gr_ranks[j] * prof.deg_l[j];
             }
             if (rank != r || deg != d) return "conservation fails at (" + std::to_string(r) + ", " + std::to_string(d) + ")";
           }
         return "";
       }},
      {"property/hitchin/coefficient-descent", "hitchin",
       [](Sampler& s) -> std::string {
         for (int i = 0; i < 30; ++i) {
           auto f = Field::make(std::array<std::uint32_t, 3>{2, 3, 5}[i % 3]);
           auto c = hitchin::sample_chart(s, f, static_cast<std::size_t>(s.uniform(1, 3)), 2);
           if (!hitchin::char_poly_psi(c).descent_ok) return "coefficient outside F_q(x^p)";
         }
         return "";
       }},
      {"property/hitchin/nilpotent-flags", "hitchin",
       [](Sampler& s) -> std::string {
         for (int i = 0; i < 15; ++i) {
           auto f = Field::make(std::array<std::uint32_t, 3>{2, 3, 5}[i % 3]);
           auto c = hitchin::sample_nilpotent_chart(s, f, static_cast<std::size_t>(s.uniform(1, 3)), 1);
           auto out = hitchin::nilpotent_flag_chart(c);
           if (!upper(out.transformed)) return "not triangular";
         }
         return "";
       }},
  };
  return list;
}

inline bool selected(const std::string& filter, const std::string& name, const std::string& module) {
  return filter.empty() || filter == module || name.find(filter) != std::string::npos;
}

}  // namespace detail

/// Runs the fixture corpus in `dir` and the fast property suites. `filter`
/// keeps items whose module equals it or whose name contains it.
inline Report selftest(const std::string& dir, const std::string& filter, std::uint64_t seed) {
  Report rep;
  rep.command = "selftest";
  rep.inputs_digest = digest(json{{"filter", filter}, {"seed", seed}});
  std::vector<SelftestItem> items;

  std::vector<std::filesystem::path> files;
  std::error_code ec;
  for (const auto& e : std::filesystem::directory_iterator(dir, ec))
    if (e.path().extension() == ".json") files.push_back(e.path());
  if (ec) return failure(rep, kParse, "usage", "cannot read fixture directory " + dir + ": " + ec.message());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    SelftestItem item = run_fixture(f);
    if (detail::selected(filter, item.name, item.module)) items.push_back(std::move(item));
  }

  for (const auto& prop : detail::properties()) {
    if (!detail::selected(filter, prop.name, prop.module)) continue;
    Sampler s(seed);
    SelftestItem item{prop.name, prop.module, false, ""};
    try {
      item.detail = prop.body(s);
      item.ok = item.detail.empty();
    } catch (const std::exception& e) {
      item.detail = e.what();
    }
    items.push_back(std::move(item));
  }

  if (items.empty()) return failure(rep, kParse, "usage", "no selftest item matches \"" + filter + "\"");
  json list = json::array();
  std::vector<std::string> failed;
  for (const auto& i : items) {
    json j{{"name", i.name}, {"module", i.module}, {"ok", i.ok}};
    if (!i.ok) {
      j["detail"] = i.detail;
      failed.push_back(i.name);
    }
    list.push_back(std::move(j));
  }
  rep.result = json{{"items", list},
                    {"passed", items.size() - failed.size()},
                    {"failed", failed.size()}};
  if (!failed.empty()) {
    std::string names;
    for (const auto& n : failed) names += (names.empty() ? "" : ", ") + n;
    return failure(rep, kViolation, "violation", "failing items: " + names);
  }
  return rep;
}

}  // namespace flatflag::cli

#endif  // FLATFLAG_CLI_RUN_HPP
