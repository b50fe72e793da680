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

// flatflag: command-line front end. Reads a JSON input, runs one library
// operation and prints a report. See README.md for the subcommand list.

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "flatflag/cli/run.hpp"

namespace {

using flatflag::cli::json;

struct Options {
  std::string input_file;
  std::string data;
  bool as_json = false;
  std::uint64_t seed = 1;
  std::string filter;
  std::string fixtures = FLATFLAG_FIXTURE_DIR;
  std::map<std::string, std::optional<std::int64_t>> ints;
};

/// Input object: --input file, then --data on top, then individual flags.
json assemble(const Options& o) {
  json in = json::object();
  auto merge = [&in](const json& j, const std::string& where) {
    if (!j.is_object()) throw flatflag::ParseError(where + " must hold a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) in[it.key()] = it.value();
  };
  if (!o.input_file.empty()) {
    std::ifstream f(o.input_file);
    if (!f) throw flatflag::ParseError("cannot open " + o.input_file);
    try {
      merge(json::parse(f), o.input_file);
    } catch (const json::parse_error& e) {
      throw flatflag::ParseError(o.input_file + ": " + e.what());
    }
  }
  if (!o.data.empty()) {
    try {
      merge(json::parse(o.data), "--data");
    } catch (const json::parse_error& e) {
      throw flatflag::ParseError(std::string("--data: ") + e.what());
    }
  }
  for (const auto& [key, value] : o.ints)
    if (value) in[key] = *value;
  return in;
}

int emit(const flatflag::cli::Report& rep, bool as_json) {
  if (as_json)
    std::cout << rep.to_json().dump(2) << "\n";
  else
    std::cout << rep.to_text();
  return rep.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flatflag: flat bundles, level-m modules and flags in characteristic p"};
  app.require_subcommand(1);
  Options o;
  for (const char* key : {"r", "d", "g", "p", "k", "m", "s"}) o.ints[key];

  auto common = [&](CLI::App* sub) {
    sub->add_option("--input", o.input_file, "JSON input file");
    sub->add_option("--data", o.data, "inline JSON input, merged over --input");
    sub->add_flag("--json", o.as_json, "print the JSON report");
    sub->add_option("--seed", o.seed, "seed for randomized suites");
    for (auto& [key, value] : o.ints) sub->add_option("--" + key, value, "integer input field \"" + key + "\"");
  };
  for (const auto& [name, cmd] : flatflag::cli::commands()) common(app.add_subcommand(name, cmd.summary));
  CLI::App* self = app.add_subcommand("selftest", "run the fixture corpus and fast property suites");
  common(self);
  self->add_option("--filter", o.filter, "module name or item-name substring");
  self->add_option("--fixtures", o.fixtures, "fixture directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return flatflag::cli::kParse;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  if (name == "selftest") return emit(flatflag::cli::selftest(o.fixtures, o.filter, o.seed), o.as_json);
  json in;
  try {
    in = assemble(o);
  } catch (const flatflag::ParseError& e) {
    flatflag::cli::Report rep;
    rep.command = name;
    return emit(flatflag::cli::failure(rep, flatflag::cli::kParse, "parse_error", e.what()), o.as_json);
  }
  return emit(flatflag::cli::run(name, in), o.as_json);
}
