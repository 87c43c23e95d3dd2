/*
 * Copyright 2026 The lqc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lqc/colon.hpp"
#include "lqc/poly.hpp"

namespace lqc::cli {

// Keys keep insertion order so documents read top-down.
using Json = nlohmann::ordered_json;

enum class Format { json, tsv, pretty };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitError = 2;
inline constexpr int kSchemaVersion = 1;

struct RunConfig {
  std::string command;
  std::uint64_t p = 0;
  std::vector<std::uint64_t> qs;
  std::optional<std::string> poly_text;
  std::optional<std::string> form;  // only "pow-xy-z2"
  std::optional<unsigned> D;
  std::optional<unsigned> d;        // degree for scan
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  Format format = Format::json;
  std::optional<std::uint64_t> max_degree;
  unsigned jobs = 1;

  RunOptions run_options() const;
  Json params() const;
};

struct ScanResult {
  std::size_t trials = 0;
  std::size_t lqc_count = 0;
  double fraction = 0.0;
  std::map<std::uint64_t, std::size_t> first_bad_degree_histogram;
  std::uint64_t seed = 0;
};

struct CommandResult {
  Json result;
  int exit_code = kExitOk;
};

Format parse_format(const std::string& name);

// Resolves --f or --form into a polynomial over F_p.
Poly input_polynomial(const RunConfig& cfg);

CommandResult cmd_check(const RunConfig& cfg);
CommandResult cmd_report(const RunConfig& cfg);
CommandResult cmd_verify_structural(const RunConfig& cfg);
CommandResult cmd_scan(const RunConfig& cfg);
CommandResult dispatch(const RunConfig& cfg);

ScanResult scan(const RunConfig& cfg);
Json to_json(const ScanResult& r);
Json to_json(const LqcReport& r);
Json to_json(const ColonProfile& r);
Json to_json(const QuotientReport& r);

// Full document: {schema, command, params, result}.
Json envelope(const RunConfig& cfg, const CommandResult& out);
std::string render(const Json& doc, Format fmt);

// Parses argv, runs the command, writes to the given streams and returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lqc::cli
