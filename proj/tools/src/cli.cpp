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

#include "lqc/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "lqc/errors.hpp"
#include "lqc/parallel.hpp"
#include "lqc/structural.hpp"

namespace lqc::cli {

using json = Json;

namespace {

std::uint64_t single_q(const RunConfig& cfg) {
  if (cfg.qs.size() != 1) throw std::invalid_argument(cfg.command + " needs exactly one --q");
  return cfg.qs.front();
}

void validate_field(const RunConfig& cfg) {
  if (cfg.p == 0) throw std::invalid_argument("--p is required");
  const PrimeModulus m(cfg.p);
  if (cfg.qs.empty()) throw std::invalid_argument("--q is required");
  for (auto q : cfg.qs) FrobeniusPower::make(m, q);
}

json generators_json(const std::map<std::uint64_t, std::size_t>& m) {
  json out = json::array();
  for (auto [deg, n] : m) out.push_back({{"degree", deg}, {"count", n}});
  return out;
}

json optional_json(const auto& v) { return v ? json(*v) : json(nullptr); }

json betti_shape(std::uint64_t q, unsigned d) {
  const std::uint64_t b = (3 * q + d - 1) / 2;
  const std::uint64_t n = 2 * d;
  auto row = [](std::uint64_t index, std::uint64_t degree, std::uint64_t rank) {
    return json{{"index", index}, {"degree", degree}, {"rank", rank}};
  };
  json over_r = json::array({row(0, 0, 1), row(1, q, 3)});
  for (std::uint64_t k = 2; k < 6; ++k) {
    const std::uint64_t steps = k - 2;
    over_r.push_back(row(k, b + (steps / 2) * d + steps % 2, n));
  }
  json over_p = json::array({row(0, 0, 1), row(1, d, 1), row(1, q, 3), row(2, b, n), row(2, q + d, 3),
                             row(3, b + 1, n)});
  return {{"b", b},
          {"hypersurface_periodic_from", 2},
          {"hypersurface_period", 2},
          {"over_hypersurface", over_r},
          {"over_polynomial_ring", over_p}};
}

// Flattens a JSON tree into "path<TAB>value" lines; arrays of flat objects become tables.
bool flat_object(const json& j) {
  if (!j.is_object()) return false;
  return std::all_of(j.begin(), j.end(), [](const json& v) { return v.is_primitive(); });
}

bool table_like(const json& j) {
  return j.is_array() && !j.empty() && std::all_of(j.begin(), j.end(), flat_object);
}

std::string scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

void emit_tsv(const json& j, const std::string& path, std::ostringstream& scalars,
              std::ostringstream& tables) {
  if (table_like(j)) {
    tables << "\n# " << path << "\n";
    std::vector<std::string> cols;
    for (auto it = j.front().begin(); it != j.front().end(); ++it) cols.push_back(it.key());
    for (std::size_t c = 0; c < cols.size(); ++c) tables << (c ? "\t" : "") << cols[c];
    tables << "\n";
    for (const auto& row : j) {
      for (std::size_t c = 0; c < cols.size(); ++c)
        tables << (c ? "\t" : "") << (row.contains(cols[c]) ? scalar(row[cols[c]]) : "-");
      tables << "\n";
    }
  } else if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      emit_tsv(it.value(), path.empty() ? it.key() : path + "." + it.key(), scalars, tables);
  } else if (j.is_array()) {
    if (std::all_of(j.begin(), j.end(), [](const json& v) { return v.is_primitive(); })) {
      std::string joined;
      for (const auto& v : j) joined += (joined.empty() ? "" : ",") + scalar(v);
      scalars << path << "\t" << joined << "\n";
    } else {
      for (std::size_t k = 0; k < j.size(); ++k)
        emit_tsv(j[k], path + "." + std::to_string(k), scalars, tables);
    }
  } else {
    scalars << path << "\t" << scalar(j) << "\n";
  }
}

void emit_pretty(const json& j, const std::string& key, int indent, std::ostringstream& os) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (table_like(j)) {
    os << pad << key << ":\n";
    std::vector<std::string> cols;
    for (auto it = j.front().begin(); it != j.front().end(); ++it) cols.push_back(it.key());
    std::vector<std::size_t> width(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      width[c] = cols[c].size();
      for (const auto& row : j) width[c] = std::max(width[c], scalar(row.value(cols[c], json())).size());
    }
    os << pad << "  ";
    for (std::size_t c = 0; c < cols.size(); ++c) os << std::setw(static_cast<int>(width[c]) + 2) << cols[c];
    os << "\n";
    for (const auto& row : j) {
      os << pad << "  ";
      for (std::size_t c = 0; c < cols.size(); ++c)
        os << std::setw(static_cast<int>(width[c]) + 2) << scalar(row.value(cols[c], json()));
      os << "\n";
    }
  } else if (j.is_object()) {
    if (!key.empty()) os << pad << key << ":\n";
    for (auto it = j.begin(); it != j.end(); ++it)
      emit_pretty(it.value(), it.key(), key.empty() ? indent : indent + 2, os);
  } else if (j.is_array() && !std::all_of(j.begin(), j.end(), [](const json& v) { return v.is_primitive(); })) {
    os << pad << key << ":\n";
    for (std::size_t k = 0; k < j.size(); ++k) emit_pretty(j[k], "[" + std::to_string(k) + "]", indent + 2, os);
  } else if (j.is_array()) {
    std::string joined;
    for (const auto& v : j) joined += (joined.empty() ? "" : ", ") + scalar(v);
    os << pad << key << ": [" << joined << "]\n";
  } else {
    os << pad << key << ": " << scalar(j) << "\n";
  }
}

}  // namespace

RunOptions RunConfig::run_options() const {
  RunOptions o;
  o.jobs = std::max(1u, jobs);
  o.max_degree = max_degree;
  return o;
}

json RunConfig::params() const {
  json j = {{"p", p}, {"q", qs}, {"trials", trials}, {"seed", seed}, {"jobs", jobs}};
  j["f"] = optional_json(poly_text);
  j["form"] = optional_json(form);
  j["D"] = optional_json(D);
  j["d"] = optional_json(d);
  j["max_degree"] = optional_json(max_degree);
  return j;
}

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "tsv") return Format::tsv;
  if (name == "pretty") return Format::pretty;
  throw std::invalid_argument("unknown format '" + name + "'");
}

Poly input_polynomial(const RunConfig& cfg) {
  const PrimeModulus m(cfg.p);
  if (cfg.poly_text && cfg.form) throw std::invalid_argument("give either --f or --form, not both");
  if (cfg.poly_text) return parse_poly(*cfg.poly_text, m);
  if (cfg.form) {
    if (*cfg.form != "pow-xy-z2") throw std::invalid_argument("unknown form '" + *cfg.form + "'");
    if (!cfg.D || *cfg.D < 1) throw std::invalid_argument("--form pow-xy-z2 needs --D >= 1");
    return conic(m).pow(*cfg.D);
  }
  throw std::invalid_argument("a polynomial is required (--f or --form)");
}

json to_json(const LqcReport& r) {
  json dims = json::array();
  for (const auto& d : r.dims)
    dims.push_back({{"degree", d.degree}, {"dim_p", d.dim_p}, {"dim_frob", d.dim_frob}, {"dim_colon", d.dim_colon}});
  return {{"lqc", r.lqc},
          {"q", r.q},
          {"d", r.d},
          {"s", r.s},
          {"half_s", r.half_s},
          {"s_odd", r.s_odd},
          {"first_failing_degree", optional_json(r.first_failing_degree)},
          {"excess", r.excess},
          {"dims", dims}};
}

json to_json(const ColonProfile& r) {
  json degs = json::array();
  for (const auto& g : r.degrees)
    degs.push_back({{"degree", g.degree},
                    {"dim_p", g.dim_p},
                    {"dim_frob", g.dim_frob},
                    {"dim_colon", g.dim_colon},
                    {"mu", g.mu},
                    {"extra", g.extra}});
  return {{"q", r.q},
          {"d", r.d},
          {"s", r.s},
          {"s_odd", r.s_odd},
          {"lqc", r.lqc},
          {"last_degree", r.last_degree},
          {"capped", r.capped},
          {"all_generators", generators_json(r.all_generators())},
          {"extra_generators", generators_json(r.extra_generators())},
          {"extra_generator_degrees", r.extra_generator_degrees()},
          {"degrees", degs}};
}

json to_json(const QuotientReport& r) {
  json hilbert = json::array();
  for (std::size_t i = 0; i < r.hilbert.size(); ++i) hilbert.push_back({{"degree", i}, {"h", r.hilbert[i]}});
  json socle = json::array();
  for (auto [deg, n] : r.socle) socle.push_back({{"degree", deg}, {"dim", n}});
  json out = {{"q", r.q},
              {"d", r.d},
              {"s", r.s},
              {"lqc", r.lqc},
              {"hk", r.hk},
              {"hk_formula", optional_json(r.hk_formula)},
              {"top_degree", r.top_degree},
              {"regularity_formula", optional_json(r.regularity_formula)},
              {"socle", socle},
              {"hilbert", hilbert}};
  out["hk_matches_formula"] = r.hk_formula ? json(*r.hk_formula == r.hk) : json(nullptr);
  out["regularity_matches_formula"] =
      r.regularity_formula ? json(*r.regularity_formula == r.top_degree) : json(nullptr);
  return out;
}

json to_json(const ScanResult& r) {
  json hist = json::array();
  for (auto [deg, n] : r.first_bad_degree_histogram) hist.push_back({{"degree", deg}, {"count", n}});
  return {{"trials", r.trials},
          {"lqc_count", r.lqc_count},
          {"fraction", r.fraction},
          {"seed", r.seed},
          {"first_bad_degree_histogram", hist}};
}

CommandResult cmd_check(const RunConfig& cfg) {
  validate_field(cfg);
  const std::uint64_t q = single_q(cfg);
  const Poly f = input_polynomial(cfg);
  const RunOptions opts = cfg.run_options();
  const LqcReport rep = is_lqc(f, q, opts);
  json result = to_json(rep);
  const ColonProfile prof = generator_profile(f, q, opts);
  result["extra_generator_degrees"] = prof.extra_generator_degrees();
  result["generators_capped"] = prof.capped;
  return {result, rep.lqc ? kExitOk : kExitFalse};
}

CommandResult cmd_report(const RunConfig& cfg) {
  validate_field(cfg);
  const std::uint64_t q = single_q(cfg);
  const Poly f = input_polynomial(cfg);
  const RunOptions opts = cfg.run_options();
  const QuotientReport quo = quotient_report(f, q, opts);
  const ColonProfile prof = generator_profile(f, q, opts);
  json result = {{"quotient", to_json(quo)}, {"profile", to_json(prof)}};
  result["betti"] = consequences_apply(quo.lqc, quo.d, q) ? betti_shape(q, quo.d) : json(nullptr);
  return {result, kExitOk};
}

CommandResult cmd_verify_structural(const RunConfig& cfg) {
  validate_field(cfg);
  if (!cfg.D) throw std::invalid_argument("verify-structural needs --D");
  const auto ledger = structural_battery(PrimeModulus(cfg.p), *cfg.D, cfg.qs, cfg.run_options(),
                                         std::max<std::size_t>(cfg.trials, 1), cfg.seed);
  json entries = json::array();
  std::size_t passed = 0;
  for (const auto& e : ledger) {
    entries.push_back({{"check", e.name}, {"pass", e.pass}, {"detail", e.detail}});
    passed += e.pass;
  }
  const bool all = passed == ledger.size();
  return {{{"all_pass", all}, {"passed", passed}, {"total", ledger.size()}, {"ledger", entries}},
          all ? kExitOk : kExitFalse};
}

ScanResult scan(const RunConfig& cfg) {
  validate_field(cfg);
  const std::uint64_t q = single_q(cfg);
  if (!cfg.d) throw std::invalid_argument("scan needs --d");
  const unsigned d = *cfg.d;
  if (d < 2 || d >= q) throw HypothesisError("scan needs 1 < d < q");
  if (cfg.trials < 1) throw std::invalid_argument("--trials must be at least 1");
  const PrimeModulus m(cfg.p);
  const PolyRing ring = xyz_ring(m);
  const auto monos = monomials_of_degree(3, d);
  const RunOptions opts = cfg.run_options();
  std::mt19937_64 rng(cfg.seed);
  ScanResult out;
  out.trials = cfg.trials;
  out.seed = cfg.seed;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    Poly f = Poly::zero(ring);
    for (const auto& mono : monos)
      f += Poly::monomial(ring, mono, FieldElem(static_cast<std::int64_t>(rng() % m.value()), m));
    if (f.is_zero()) {
      ++out.first_bad_degree_histogram[0];
      continue;
    }
    const LqcReport r = is_lqc(f, q, opts);
    if (r.lqc)
      ++out.lqc_count;
    else
      ++out.first_bad_degree_histogram[r.first_failing_degree.value_or(0)];
  }
  out.fraction = static_cast<double>(out.lqc_count) / static_cast<double>(out.trials);
  return out;
}

CommandResult cmd_scan(const RunConfig& cfg) { return {to_json(scan(cfg)), kExitOk}; }

CommandResult dispatch(const RunConfig& cfg) {
  if (cfg.command == "check") return cmd_check(cfg);
  if (cfg.command == "report") return cmd_report(cfg);
  if (cfg.command == "verify-structural") return cmd_verify_structural(cfg);
  if (cfg.command == "scan") return cmd_scan(cfg);
  throw std::invalid_argument("unknown command '" + cfg.command + "'");
}

json envelope(const RunConfig& cfg, const CommandResult& out) {
  return {{"schema", kSchemaVersion}, {"command", cfg.command}, {"params", cfg.params()}, {"result", out.result}};
}

std::string render(const json& doc, Format fmt) {
  std::ostringstream os;
  switch (fmt) {
    case Format::json:
      os << doc.dump(2) << "\n";
      break;
    case Format::tsv: {
      std::ostringstream scalars, tables;
      emit_tsv(doc, "", scalars, tables);
      os << scalars.str() << tables.str();
      break;
    }
    case Format::pretty:
      emit_pretty(doc, "", 0, os);
      break;
  }
  return os.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Link-q-compressed polynomials: colon ideals, Hilbert-Kunz data and Pfaffian resolutions"};
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.jobs = default_jobs();
  std::string format = "json";
  std::optional<std::string> poly_text, form;
  std::optional<unsigned> D, d;
  std::optional<std::uint64_t> max_degree;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--p", cfg.p, "Characteristic (an odd prime)")->required();
    sub->add_option("--q", cfg.qs, "Power of p (repeatable for verify-structural)")->required();
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "tsv", "pretty"}));
    sub->add_option("--max-degree", max_degree, "Cap on the highest degree examined");
    sub->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "Seed for randomized steps");
  };
  auto poly_input = [&](CLI::App* sub) {
    sub->add_option("--f", poly_text, "Homogeneous polynomial in x, y, z");
    sub->add_option("--form", form, "Built-in family")->check(CLI::IsMember({"pow-xy-z2"}));
    sub->add_option("--D", D, "Exponent for --form pow-xy-z2");
  };
  CLI::App* check = app.add_subcommand("check", "Decide whether f is link-q-compressed");
  common(check);
  poly_input(check);
  CLI::App* report = app.add_subcommand("report", "Hilbert function, Hilbert-Kunz value, socle and generators");
  common(report);
  poly_input(report);
  CLI::App* verify = app.add_subcommand("verify-structural", "Run the structural battery for (xy - z^2)^D");
  common(verify);
  verify->add_option("--D", D, "Exponent D")->required();
  verify->add_option("--trials", cfg.trials, "Random evaluation points per q");
  CLI::App* scan_cmd = app.add_subcommand("scan", "Sample random forms of degree d and count lqc ones");
  common(scan_cmd);
  scan_cmd->add_option("--d", d, "Degree of the sampled forms")->required();
  scan_cmd->add_option("--trials", cfg.trials, "Number of samples")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.poly_text = poly_text;
  cfg.form = form;
  cfg.D = D;
  cfg.d = d;
  cfg.max_degree = max_degree;
  try {
    cfg.format = parse_format(format);
    const CommandResult res = dispatch(cfg);
    out << render(envelope(cfg, res), cfg.format);
    return res.exit_code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace lqc::cli
