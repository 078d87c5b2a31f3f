// Copyright 2026 The lgk3 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lgk3/explorer.hpp"
#include "lgk3/io.hpp"
#include "lgk3/protocol.hpp"

using namespace lgk3;

namespace {

#ifndef LGK3_VERSION
#define LGK3_VERSION "0.0.0"
#endif

// Exit codes: 0 success, 1 I/O failure, 2 validation failure.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Effective settings: config-file values overridden by command-line flags.
class Settings {
 public:
  Settings(std::map<std::string, std::string> file_values,
           std::map<std::string, std::string> flag_values)
      : values_(std::move(file_values)) {
    for (auto& [k, v] : flag_values) values_[k] = v;
  }

  std::optional<std::string> get(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }

  std::string get_or(const std::string& key, const std::string& fallback) const {
    return get(key).value_or(fallback);
  }

  std::string require(const std::string& key) const {
    const auto v = get(key);
    if (!v) throw ValidationError("missing required setting '" + key + "'");
    return *v;
  }

  const std::map<std::string, std::string>& all() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

LuedersFamilyPoint parse_family(const std::string& text) {
  const auto v = parse_number_list(text);
  if (v.size() != 5)
    throw ValidationError("family needs 'phi,gamma,gamma_prime,c,c_prime'");
  return {v[0], v[1], v[2], v[3], v[4]};
}

/// The two evolution maps, from map12/map23 specs or a family point, with
/// optional order reversal.
std::pair<UnitalMap, UnitalMap> maps_from_settings(const Settings& s) {
  std::pair<UnitalMap, UnitalMap> pair;
  if (const auto family = s.get("family")) {
    pair = make_lueders_pair(parse_family(*family));
  } else {
    const AffineQubitMap m12 = parse_map_spec(s.require("map12"));
    const AffineQubitMap m23 = parse_map_spec(s.require("map23"));
    if (!m12.is_unital() || !m23.is_unital())
      throw ValidationError("evolution maps must be unital (b = 0)");
    pair = {UnitalMap{m12.delta}, UnitalMap{m23.delta}};
  }
  if (s.get_or("order", "forward") == "reversed") std::swap(pair.first, pair.second);
  return pair;
}

/// Validity gate used by eval/trajectory: complete positivity by default,
/// positivity only when constraint = positive.
void validate_map(const UnitalMap& m, const std::string& name, const Settings& s) {
  const std::string level = s.get_or("constraint", "cptp");
  if (!is_positive(m)) throw ValidationError(name + ": positivity check failed");
  if (level != "positive" && !is_completely_positive(AffineQubitMap(m)))
    throw ValidationError(name + ": completely-positive check failed");
}

std::string resolve_out_path(const std::string& path) {
  const char* dir = std::getenv("LGK3_OUT_DIR");
  if (dir != nullptr && *dir != '\0' && !std::filesystem::path(path).is_absolute())
    return (std::filesystem::path(dir) / path).string();
  return path;
}

JsonValue echo_input(const Settings& s) {
  JsonValue obj = JsonValue::object();
  for (const auto& [k, v] : s.all()) obj.set(k, JsonValue::str(v));
  return obj;
}

JsonValue make_record(const std::string& command, const Settings& s, JsonValue payload) {
  JsonValue rec = JsonValue::object();
  rec.set("command", JsonValue::str(command));
  rec.set("version", JsonValue::str(LGK3_VERSION));
  rec.set("seed", JsonValue::integer(std::stoll(s.get_or("seed", "0"))));
  rec.set("input", echo_input(s));
  rec.set("payload", std::move(payload));
  return rec;
}

void emit(const Settings& s, const std::string& command, JsonValue payload,
          const CsvTable& csv) {
  const auto out = s.get("out");
  if (!out) return;
  const std::string path = resolve_out_path(*out);
  const std::string format = s.get_or("format", "csv");
  if (format == "json")
    write_text_file(path, make_record(command, s, std::move(payload)).dump());
  else if (format == "csv")
    write_text_file(path, csv.dump());
  else
    throw ValidationError("unknown format '" + format + "' (want csv or json)");
  std::printf("wrote %s (%s)\n", path.c_str(), format.c_str());
}

void print_report(const std::string& name, const ChannelReport& r) {
  std::printf("%s: trace-preserving=%s unital=%s positive=%s cp=%s witness=%s\n",
              name.c_str(), r.is_trace_preserving ? "yes" : "no",
              r.is_unital ? "yes" : "no", r.is_positive ? "yes" : "no",
              r.is_completely_positive ? "yes" : "no",
              r.divisibility_witness ? "yes" : "no");
  std::printf("  det = %.12g, choi eigenvalues = [%.12g, %.12g, %.12g, %.12g]\n",
              r.determinant, r.choi_eigenvalues[0], r.choi_eigenvalues[1],
              r.choi_eigenvalues[2], r.choi_eigenvalues[3]);
}

std::vector<std::string> report_csv_cells(const ChannelReport& r) {
  std::vector<std::string> cells;
  for (bool b : {r.is_trace_preserving, r.is_unital, r.is_positive,
                 r.is_completely_positive, r.divisibility_witness})
    cells.push_back(b ? "1" : "0");
  for (double ev : r.choi_eigenvalues) cells.push_back(format_double(ev));
  cells.push_back(format_double(r.determinant));
  return cells;
}

void append_report_header(CsvTable& t) {
  for (const char* name : {"trace_preserving", "unital", "positive",
                           "completely_positive", "divisibility_witness"})
    t.header.emplace_back(name);
  for (int i = 1; i <= 4; ++i) t.header.push_back("choi_ev_" + std::to_string(i));
  t.header.emplace_back("determinant");
}

// --- commands ---------------------------------------------------------------

int cmd_eval(const Settings& s) {
  const auto [d12, d23] = maps_from_settings(s);
  validate_map(d12, "map12", s);
  validate_map(d23, "map23", s);
  const double tol = std::stod(s.get_or("tol", "1e-9"));
  const LGResult r = correlators_from_maps(d12, d23, tol);
  const ChannelReport rep12 = classify(AffineQubitMap(d12));
  const ChannelReport rep23 = classify(AffineQubitMap(d23));

  std::printf("C12 = %.12g\nC23 = %.12g\nC13 = %.12g\nK3  = %.12g\n", r.c12, r.c23,
              r.c13, r.k3);
  print_report("map12", rep12);
  print_report("map23", rep23);

  JsonValue payload = JsonValue::object();
  payload.set("c12", JsonValue::real(r.c12));
  payload.set("c23", JsonValue::real(r.c23));
  payload.set("c13", JsonValue::real(r.c13));
  payload.set("k3", JsonValue::real(r.k3));
  payload.set("map12", json_from_record(map_record(AffineQubitMap(d12)), true));
  payload.set("map23", json_from_record(map_record(AffineQubitMap(d23)), true));
  payload.set("report12", json_from_report(rep12));
  payload.set("report23", json_from_report(rep23));

  CsvTable csv;
  csv.header = {"c12", "c23", "c13", "k3"};
  csv.rows.push_back({format_double(r.c12), format_double(r.c23), format_double(r.c13),
                      format_double(r.k3)});
  emit(s, "eval", std::move(payload), csv);
  return 0;
}

SearchConfig search_config_from(const Settings& s) {
  SearchConfig cfg;
  cfg.grid = std::stoi(s.get_or("grid", "25"));
  cfg.refine_tol = std::stod(s.get_or("tol", "1e-8"));
  cfg.seed = static_cast<std::uint64_t>(std::stoull(s.get_or("seed", "0")));

  if (s.get_or("order", "forward") == "reversed") {
    cfg.constraint = ConstraintSet::ReversedOrder;
    if (const auto fam = s.get("family")) {
      const LuedersFamilyPoint p = parse_family(*fam);
      cfg.c = p.c;
      cfg.c_prime = p.c_prime;
    }
    return cfg;
  }

  const std::string constraint = s.get_or("constraint", "positive");
  if (constraint == "positive") {
    cfg.constraint = ConstraintSet::PositiveUnital;
  } else if (constraint == "cptp") {
    cfg.constraint = ConstraintSet::CptpDivisible;
  } else if (constraint.rfind("shrink=", 0) == 0) {
    cfg.constraint = ConstraintSet::ShrinkLimited;
    cfg.shrink = std::stod(constraint.substr(7));
  } else {
    throw ValidationError("unknown constraint '" + constraint +
                          "' (want positive, cptp or shrink=S)");
  }
  return cfg;
}

JsonValue argmax_json(const std::vector<std::pair<std::string, double>>& argmax) {
  JsonValue obj = JsonValue::object();
  for (const auto& [name, value] : argmax) obj.set(name, JsonValue::real(value));
  return obj;
}

int cmd_maximize(const Settings& s) {
  const SearchConfig cfg = search_config_from(s);
  const SearchResult res = maximize_k3(cfg);

  std::printf("best K3 = %.12g\n", res.best_k3);
  for (const auto& [name, value] : res.argmax)
    std::printf("  %s = %.12g\n", name.c_str(), value);
  std::printf("evaluations = %lld, constraint violations = %lld\n", res.evaluations,
              res.constraint_violations);
  const ChannelReport rep12 = classify(AffineQubitMap(res.d12));
  const ChannelReport rep23 = classify(AffineQubitMap(res.d23));
  print_report("d12(argmax)", rep12);
  print_report("d23(argmax)", rep23);

  JsonValue payload = JsonValue::object();
  payload.set("best_k3", JsonValue::real(res.best_k3));
  payload.set("argmax", argmax_json(res.argmax));
  payload.set("evaluations", JsonValue::integer(res.evaluations));
  payload.set("constraint_violations", JsonValue::integer(res.constraint_violations));
  payload.set("d12", json_from_record(map_record(AffineQubitMap(res.d12)), true));
  payload.set("d23", json_from_record(map_record(AffineQubitMap(res.d23)), true));
  payload.set("report12", json_from_report(rep12));
  payload.set("report23", json_from_report(rep23));

  CsvTable csv;
  csv.header = {"best_k3", "evaluations", "constraint_violations"};
  std::vector<std::string> row{format_double(res.best_k3),
                               std::to_string(res.evaluations),
                               std::to_string(res.constraint_violations)};
  for (const auto& [name, value] : res.argmax) {
    csv.header.push_back(name);
    row.push_back(format_double(value));
  }
  csv.rows.push_back(std::move(row));
  emit(s, "maximize", std::move(payload), csv);
  return 0;
}

int cmd_sweep(const Settings& s) {
  const std::string spec = s.get_or("s-values", "0.2,0.4,0.6,0.8,1.0");
  const std::vector<double> s_values = parse_number_list(spec);
  SearchConfig base = search_config_from(s);
  const auto sweep = shrink_sweep(s_values, base);

  std::printf("%8s  %14s\n", "s", "max_k3");
  for (const auto& pt : sweep) std::printf("%8.4f  %14.10f\n", pt.s, pt.max_k3);

  JsonValue rows = JsonValue::array();
  CsvTable csv;
  csv.header = {"s", "max_k3"};
  if (!sweep.empty())
    for (const auto& [name, value] : sweep.front().argmax) csv.header.push_back(name);
  for (const auto& pt : sweep) {
    JsonValue row = JsonValue::object();
    row.set("s", JsonValue::real(pt.s));
    row.set("max_k3", JsonValue::real(pt.max_k3));
    row.set("argmax", argmax_json(pt.argmax));
    rows.push(std::move(row));
    std::vector<std::string> cells{format_double(pt.s), format_double(pt.max_k3)};
    for (const auto& [name, value] : pt.argmax) cells.push_back(format_double(value));
    csv.rows.push_back(std::move(cells));
  }
  JsonValue payload = JsonValue::object();
  payload.set("points", std::move(rows));
  emit(s, "sweep", std::move(payload), csv);
  return 0;
}

int cmd_trajectory(const Settings& s) {
  const auto [first, second] = maps_from_settings(s);
  validate_map(first, "first leg", s);
  validate_map(second, "second leg", s);

  BlochVector start{0, 0, 1};
  if (const auto text = s.get("start")) {
    const auto v = parse_number_list(*text);
    if (v.size() != 3) throw ValidationError("start needs 'x,y,z'");
    start = {v[0], v[1], v[2]};
  }
  const int samples = std::stoi(s.get_or("samples", "16"));
  const auto points = bloch_trajectory({first, second}, start, samples);

  std::printf("%4s %5s  %12s %12s %12s\n", "leg", "step", "x", "y", "z");
  CsvTable csv;
  csv.header = {"leg", "step", "x", "y", "z"};
  JsonValue rows = JsonValue::array();
  for (std::size_t i = 0; i < points.size(); ++i) {
    const int leg = static_cast<int>(i) / samples;
    const int step = static_cast<int>(i) % samples;
    const BlochVector& w = points[i];
    std::printf("%4d %5d  %12.8f %12.8f %12.8f\n", leg, step, w.x, w.y, w.z);
    csv.rows.push_back({std::to_string(leg), std::to_string(step), format_double(w.x),
                        format_double(w.y), format_double(w.z)});
    JsonValue row = JsonValue::object();
    row.set("leg", JsonValue::integer(leg));
    row.set("step", JsonValue::integer(step));
    row.set("x", JsonValue::real(w.x));
    row.set("y", JsonValue::real(w.y));
    row.set("z", JsonValue::real(w.z));
    rows.push(std::move(row));
  }
  JsonValue payload = JsonValue::object();
  payload.set("points", std::move(rows));
  emit(s, "trajectory", std::move(payload), csv);
  return 0;
}

int cmd_check(const Settings& s) {
  const AffineQubitMap map = parse_map_spec(s.require("map"));
  const double tol = std::stod(s.get_or("tol", "1e-9"));
  const ChannelReport report = classify(map, tol);
  print_report("map", report);

  JsonValue payload = JsonValue::object();
  payload.set("map", json_from_record(map_record(map), map.is_unital(tol)));
  payload.set("report", json_from_report(report));

  CsvTable csv;
  csv.header = {"b_x", "b_y", "b_z"};
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      csv.header.push_back("d_" + std::to_string(i) + std::to_string(j));
  append_report_header(csv);
  std::vector<std::string> row;
  for (double v : map_record(map)) row.push_back(format_double(v));
  for (auto& cell : report_csv_cells(report)) row.push_back(std::move(cell));
  csv.rows.push_back(std::move(row));
  emit(s, "check", std::move(payload), csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Leggett-Garg K3 engine for unital qubit channels"};
  app.require_subcommand(1);

  std::map<std::string, std::string> flags;
  auto add_common = [&flags](CLI::App* cmd, const std::vector<std::string>& keys) {
    for (const std::string& key : keys) {
      cmd->add_option_function<std::string>(
          "--" + key, [&flags, key](const std::string& v) { flags[key] = v; });
    }
  };

  CLI::App* eval = app.add_subcommand("eval", "correlators and K3 for a map pair");
  add_common(eval, {"config", "seed", "out", "format", "tol", "order", "constraint",
                    "map12", "map23", "family"});
  CLI::App* maximize = app.add_subcommand("maximize", "search for the maximal K3");
  add_common(maximize, {"config", "seed", "out", "format", "grid", "tol", "order",
                        "constraint", "family"});
  CLI::App* sweep = app.add_subcommand("sweep", "max K3 vs uniform shrink");
  add_common(sweep, {"config", "seed", "out", "format", "grid", "tol", "s-values"});
  CLI::App* trajectory =
      app.add_subcommand("trajectory", "Bloch path through the two legs");
  add_common(trajectory, {"config", "seed", "out", "format", "tol", "order", "map12",
                          "map23", "family", "start", "samples"});
  CLI::App* check = app.add_subcommand("check", "classification report for one map");
  add_common(check, {"config", "seed", "out", "format", "tol", "map"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    std::map<std::string, std::string> file_values;
    if (const auto it = flags.find("config"); it != flags.end())
      file_values = parse_config_file(it->second);
    const Settings settings(file_values, flags);

    if (eval->parsed()) return cmd_eval(settings);
    if (maximize->parsed()) return cmd_maximize(settings);
    if (sweep->parsed()) return cmd_sweep(settings);
    if (trajectory->parsed()) return cmd_trajectory(settings);
    if (check->parsed()) return cmd_check(settings);
    return 2;
  } catch (const ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
