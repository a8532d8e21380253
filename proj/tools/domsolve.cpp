// Copyright 2026 The domsolve Authors
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

// domsolve command line: exact tables, enumerations, simulations,
// diagnostics and single-game inspection.
//
// Exit codes: 0 ok, 2 usage, 3 capacity, 4 numerical failure.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "domsolve/domsolve.hpp"

namespace ds = domsolve;
using ds::json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitNumerical = 4;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// ---- argument helpers ----

long parse_long(const std::string& s) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw UsageError("not an integer: '" + s + "'");
  return v;
}

// "7", "1..5" or "10,50,200".
std::vector<long> parse_list(const std::string& spec) {
  std::vector<long> out;
  if (const auto dots = spec.find(".."); dots != std::string::npos) {
    const long a = parse_long(spec.substr(0, dots)), b = parse_long(spec.substr(dots + 2));
    if (b < a) throw UsageError("empty range '" + spec + "'");
    if (b - a > 1000000) throw UsageError("range too long '" + spec + "'");
    for (long v = a; v <= b; ++v) out.push_back(v);
    return out;
  }
  std::stringstream in(spec);
  for (std::string item; std::getline(in, item, ',');) out.push_back(parse_long(item));
  if (out.empty()) throw UsageError("empty list");
  return out;
}

std::vector<int> parse_int_list(const std::string& spec, long lo, const char* what) {
  std::vector<int> out;
  for (long v : parse_list(spec)) {
    if (v < lo || v > 1000000000L) {
      throw UsageError(std::string(what) + " out of range: " + std::to_string(v));
    }
    out.push_back(static_cast<int>(v));
  }
  return out;
}

// "5" or "5:2" (master:stream).
ds::Seed parse_seed(const std::string& s) {
  auto to_u64 = [&](const std::string& t) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      if (!t.empty() && t[0] != '-') v = std::stoull(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != t.size()) throw UsageError("bad seed '" + s + "'");
    return static_cast<std::uint64_t>(v);
  };
  const auto colon = s.find(':');
  if (colon == std::string::npos) return ds::Seed{to_u64(s), 0};
  return ds::Seed{to_u64(s.substr(0, colon)), to_u64(s.substr(colon + 1))};
}

int parse_player(const std::string& s) {
  if (s == "row") return ds::kRow;
  if (s == "column" || s == "col") return ds::kColumn;
  const long p = parse_long(s);
  if (p < 0) throw UsageError("player must be >= 0");
  return static_cast<int>(p);
}

// ---- output ----

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<json>> rows;

  void add(std::vector<json> row) { rows.push_back(std::move(row)); }
};

std::string cell_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "NA";
  if (v.is_number_float()) return ds::detail::format_double(v.get<double>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

struct Output {
  std::string path;
  std::string format = "csv";

  std::filesystem::path resolved() const {
    std::filesystem::path p(path);
    const char* base = std::getenv("DOMSOLVE_OUTPUT_DIR");
    if (p.is_relative() && base && *base) p = std::filesystem::path(base) / p;
    return p;
  }

  void write(const std::string& text) const {
    if (path.empty() || path == "-") {
      std::cout << text;
      return;
    }
    const auto p = resolved();
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(p);
    if (!out) throw UsageError("cannot open output file " + p.string());
    out << text;
    if (!out) throw UsageError("write failed: " + p.string());
  }

  void table(const Table& t) const {
    std::ostringstream os;
    if (format == "json") {
      json arr = json::array();
      for (const auto& row : t.rows) {
        json obj = json::object();
        for (std::size_t k = 0; k < t.header.size(); ++k) obj[t.header[k]] = row[k];
        arr.push_back(obj);
      }
      os << arr.dump(2) << '\n';
    } else {
      for (std::size_t k = 0; k < t.header.size(); ++k) os << (k ? "," : "") << t.header[k];
      os << '\n';
      for (const auto& row : t.rows) {
        for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << cell_text(row[k]);
        os << '\n';
      }
    }
    write(os.str());
  }

  void document(const json& j) const { write(j.dump(2) + "\n"); }
};

void add_output_flags(CLI::App* cmd, Output& out) {
  cmd->add_option("--output,-o", out.path, "Output file (default stdout)");
  cmd->add_option("--format", out.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
}

json rational_cell(const ds::BigRational& q) { return ds::to_string(q); }
json decimal_cell(const ds::BigRational& q) { return ds::to_double(q); }

// ---- exact ----

struct ExactArgs {
  std::string family;
  std::string n = "1..5";
  std::string m;
  Output out;
};

void cmd_exact(const ExactArgs& a) {
  static const std::vector<std::string> needs_m = {"meanUC", "pilower", "pointrat", "prEj"};
  const bool uses_m =
      std::find(needs_m.begin(), needs_m.end(), a.family) != needs_m.end();
  if (!uses_m && !a.m.empty()) throw UsageError("family " + a.family + " takes no --m");
  const std::vector<int> ms = uses_m ? parse_int_list(a.m.empty() ? "2" : a.m, 1, "m")
                                     : std::vector<int>{2};
  const std::vector<int> ns = parse_int_list(a.n, 1, "n");

  Table t;
  t.header = {"family", "m", "n", "k", "exact", "decimal"};
  auto scalar = [&](int m, int n, const ds::BigRational& q) {
    t.add({a.family, m, n, nullptr, rational_cell(q), decimal_cell(q)});
  };
  auto vector_rows = [&](int m, int n, const std::vector<ds::BigRational>& v) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      t.add({a.family, m, n, static_cast<int>(k + 1), rational_cell(v[k]), decimal_cell(v[k])});
    }
  };
  for (int m : ms) {
    for (int n : ns) {
      if (a.family == "pi2n") {
        scalar(m, n, ds::pi_2n(n));
      } else if (a.family == "meanI2n") {
        scalar(m, n, ds::mean_I_2n(n));
      } else if (a.family == "distI2n") {
        const auto d = ds::dist_I_2n(n);
        vector_rows(m, n, {d.begin(), d.end()});
      } else if (a.family == "distUC2n") {
        vector_rows(m, n, ds::dist_U_C_2n(n));
      } else if (a.family == "distSC2n") {
        vector_rows(m, n, ds::dist_S_C_2n(n));
      } else if (a.family == "meanSC2n") {
        scalar(m, n, ds::mean_S_C_2n(n));
      } else if (a.family == "varSC2n") {
        scalar(m, n, ds::var_S_C_2n(n));
      } else if (a.family == "stirling") {
        const auto row = ds::stirling_row(n);
        std::vector<ds::BigRational> v;
        for (const auto& s : row.values) v.emplace_back(s);
        vector_rows(m, n, v);
      } else if (a.family == "bruhat") {
        const auto b = ds::bruhat_bounds(n);
        t.add({"bruhat-lower", 3, n, nullptr, rational_cell(b.lower_exact), b.lower});
        t.add({"bruhat-upper", 3, n, nullptr, nullptr, b.upper});
      } else if (a.family == "meanUC") {
        scalar(m, n, ds::mean_U_C_recurrence(m, n));
      } else if (a.family == "pilower") {
        scalar(m, n, ds::pi_lower_bound_exact(m, n));
      } else if (a.family == "pointrat") {
        scalar(m, n, ds::point_rat_unique_prob(m, n));
      } else if (a.family == "prEj") {
        scalar(m, n, ds::pr_Ej(m, n));
      }
    }
  }
  // Families without an m dimension leave it empty.
  if (!uses_m && a.family != "bruhat") {
    for (auto& row : t.rows) row[1] = nullptr;
  }
  a.out.table(t);
}

// ---- enumerate ----

struct EnumerateArgs {
  std::string what;
  std::string n = "3";
  std::string game_class = "baseline";
  int threads = 0;
  Output out;
};

void cmd_enumerate(const EnumerateArgs& a) {
  Table t;
  if (a.what == "uc3xn") {
    t.header = {"n", "k", "count", "probability"};
    for (int n : parse_int_list(a.n, 1, "n")) {
      const auto counts = ds::enumerate_UC_3xn(n, a.threads);
      const ds::BigInt total = ds::factorial(n) * ds::factorial(n);
      for (std::size_t k = 0; k < counts.size(); ++k) {
        ds::BigRational p(counts[k], total);
        p.canonicalize();
        t.add({n, static_cast<int>(k + 1), ds::to_string(counts[k]), ds::to_double(p)});
      }
    }
  } else if (a.what == "full2xn") {
    t.header = {"n", "quantity", "k", "exact", "decimal"};
    for (int n : parse_int_list(a.n, 1, "n")) {
      const auto r = ds::enumerate_2xn(n, a.threads);
      auto row = [&](const char* q, json k, const ds::BigRational& v) {
        t.add({n, q, std::move(k), rational_cell(v), decimal_cell(v)});
      };
      row("pi", nullptr, r.pi);
      for (std::size_t k = 0; k < r.dist_I.size(); ++k) {
        row("I", static_cast<int>(k + 1), r.dist_I[k]);
      }
      for (std::size_t k = 0; k < r.dist_S_C.size(); ++k) {
        row("S_C", static_cast<int>(k + 1), r.dist_S_C[k]);
      }
      for (std::size_t k = 0; k < r.dist_U_C.size(); ++k) {
        row("U_C", static_cast<int>(k + 1), r.dist_U_C[k]);
      }
      row("mean_S_C", nullptr, r.mean_S_C);
      row("var_S_C", nullptr, r.var_S_C);
      t.add({n, "states", nullptr, ds::to_string(r.total_states), nullptr});
    }
  } else if (a.what == "pointrat2x2" || a.what == "cycles2x2") {
    t.header = {"quantity", "exact", "decimal"};
    const auto q = a.what == "pointrat2x2" ? ds::enumerate_point_rat_2x2()
                                           : ds::enumerate_best_response_cycles_2x2();
    t.add({a.what == "pointrat2x2" ? "point-rat-unique" : "best-response-cycles",
           rational_cell(q), decimal_cell(q)});
  } else if (a.what == "class2x2") {
    const auto cls = ds::parse_game_class(a.game_class);
    const auto d = ds::enumerate_class_2x2(cls);
    t.header = {"class", "solvable", "iterations", "S_R", "S_C", "exact", "decimal"};
    for (const auto& [o, p] : d.outcomes) {
      t.add({std::string(ds::to_string(cls)), o.solvable, o.iterations, o.S_R, o.S_C,
             rational_cell(p), decimal_cell(p)});
    }
    t.add({std::string(ds::to_string(cls)), "pi", nullptr, nullptr, nullptr,
           rational_cell(d.solvable), decimal_cell(d.solvable)});
  }
  a.out.table(t);
}

// ---- simulate ----

struct SourceArgs {
  std::string game_class = "baseline";
  std::string dist;
  double alpha = 0;
  bool has_alpha = false;
  std::string m = "2";
  std::string n = "2";
  std::string dims;
};

std::vector<ds::GameSource> build_grid(const SourceArgs& s) {
  std::vector<ds::GameSource> grid;
  ds::GameSource base;
  base.game_class = ds::parse_game_class(s.game_class);
  if (!s.dist.empty()) base.distribution = ds::parse_distribution(s.dist);
  if (s.has_alpha) base.crra_alpha = s.alpha;
  if (!s.dims.empty()) {
    std::string spec = s.dims;
    std::replace(spec.begin(), spec.end(), 'x', ',');
    base.dims = parse_int_list(spec, 1, "dims");
    ds::validate(base);
    grid.push_back(base);
    return grid;
  }
  for (int m : parse_int_list(s.m, 1, "m")) {
    for (int n : parse_int_list(s.n, 1, "n")) {
      ds::GameSource g = base;
      g.m = m;
      g.n = n;
      ds::validate(g);
      grid.push_back(g);
    }
  }
  return grid;
}

struct SimulateArgs {
  SourceArgs source;
  std::string metric = "pi";
  std::string player = "column";
  std::uint64_t samples = 1000000;
  std::string seed = "1";
  int threads = 0;
  Output out;
};

void cmd_simulate(const SimulateArgs& a) {
  if (a.samples == 0) throw UsageError("--samples must be >= 1");
  const auto metric = ds::parse_metric(a.metric);
  const auto grid = build_grid(a.source);
  const auto rows = ds::sweep(metric, grid, a.samples, parse_seed(a.seed), a.threads,
                              parse_player(a.player));
  for (const auto& r : rows) {
    if (r.result.status == ds::RunStatus::kNoConditioningEvents) {
      std::cerr << "warning: no conditioning events for " << ds::to_string(metric) << " at "
                << r.spec.source.m << "x" << r.spec.source.n << "\n";
    }
  }
  if (a.out.format == "json") {
    a.out.document(ds::results_to_json(rows));
  } else {
    std::ostringstream os;
    ds::write_results_csv(os, rows);
    a.out.write(os.str());
  }
}

// ---- diagnose ----

struct DiagnoseArgs {
  std::string what;
  std::string n;
  std::string m;
  int c = 1;
  std::uint64_t samples = 100000;
  std::string seed = "1";
  int threads = 0;
  Output out;
};

void cmd_diagnose(const DiagnoseArgs& a) {
  Table t;
  const ds::Seed seed = parse_seed(a.seed);
  if (a.what == "asymptotics") {
    t.header = {"n", "quantity", "value", "limit", "approximate"};
    using L = ds::DiagnosticLimits;
    for (int n : parse_int_list(a.n.empty() ? "10,100,1000,10000" : a.n, 1, "n")) {
      const auto r = ds::asymptotic_diagnostic(n);
      t.add({n, "sqrt_n_pi", r.sqrt_n_pi, L::sqrt_n_pi, r.approximate});
      t.add({n, "scaled_pr_I1", r.scaled_pr_I1, L::scaled_pr_I1, r.approximate});
      t.add({n, "sqrt_n_pr_I2", r.sqrt_n_pr_I2, L::sqrt_n_pr_I2, r.approximate});
      t.add({n, "sqrt_n_not_I3", r.sqrt_n_not_I3, L::sqrt_n_not_I3, r.approximate});
      t.add({n, "mean_S_C_minus_log", r.mean_S_C_minus_log, L::mean_S_C_minus_log,
             r.approximate});
      t.add({n, "var_S_C_over_log", r.var_S_C_over_log, L::var_S_C_over_log, r.approximate});
    }
  } else if (a.what == "clt") {
    const long n = a.n.empty() ? 10000 : parse_long(a.n);
    const auto r = ds::clt_check(n, a.samples, seed, a.threads);
    t.header = {"quantity", "value"};
    t.add({"n", r.n});
    t.add({"samples", r.samples});
    t.add({"exact_mean", r.exact_mean});
    t.add({"exact_variance", r.exact_variance});
    t.add({"exact_is_approximate", r.exact_is_approximate});
    t.add({"sample_mean", r.sample.mean});
    t.add({"sample_variance", r.sample.variance});
    t.add({"sample_skewness", r.sample.skewness});
    t.add({"sample_excess_kurtosis", r.sample.excess_kurtosis});
    t.add({"mean_se", r.mean_se});
    t.add({"ks_distance", r.ks_distance});
    t.add({"ks_distance_continuity", r.ks_distance_continuity});
  } else if (a.what == "bounds") {
    std::vector<std::pair<int, int>> grid;
    for (int m : parse_int_list(a.m.empty() ? "2,3,5" : a.m, 1, "m")) {
      for (int n : parse_int_list(a.n.empty() ? "10,50,200" : a.n, 1, "n")) {
        grid.emplace_back(m, n);
      }
    }
    t.header = {"m", "n", "pi", "pi_se", "pi_lower", "pi_ok", "sr_less", "sr_less_se",
                "sr_bound", "sr_ok"};
    for (const auto& b : ds::bound_checks(grid, a.samples, seed, a.threads)) {
      t.add({b.m, b.n, b.pi.mean, b.pi.se, b.pi_lower, b.pi_ok, b.sr_less.mean, b.sr_less.se,
             b.sr_bound, b.sr_ok});
    }
  } else if (a.what == "trend") {
    t.header = {"c", "m", "n", "sr_less", "se"};
    const auto ns = parse_int_list(a.n.empty() ? "16,64,256,1024" : a.n, 1, "n");
    for (const auto& p : ds::sr_less_trend(a.c, ns, a.samples, seed, a.threads)) {
      t.add({a.c, p.m, p.n, p.sr_less.mean, p.sr_less.se});
    }
  } else if (a.what == "sandwich") {
    t.header = {"m", "n", "lower", "mean_exact", "mean", "upper", "union_lower", "ok"};
    for (int m : parse_int_list(a.m.empty() ? "2..6" : a.m, 1, "m")) {
      for (int n : parse_int_list(a.n.empty() ? "10,50,200" : a.n, 1, "n")) {
        const auto b = ds::bounds_U_C(m, n);
        const auto mean = ds::mean_U_C_recurrence(m, n);
        const double v = ds::to_double(mean);
        const double slack = 1e-12 * std::max(1.0, v);
        t.add({m, n, b.lower, rational_cell(mean), v, b.upper, ds::union_lower_bound_U_C(m, n),
               b.lower <= v + slack && v <= b.upper + slack});
      }
    }
  }
  a.out.table(t);
}

// ---- game ----

struct GameArgs {
  std::string action;
  SourceArgs source;
  std::string seed = "1";
  std::string input;
  bool ordinal = false;
  Output out;
};

ds::AnyBimatrix read_game(const std::string& path) {
  if (path.empty()) throw UsageError("--input is required");
  json j;
  if (path == "-") {
    j = json::parse(std::cin);
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    j = json::parse(in);
  }
  return ds::game_from_json(j);
}

// Ordinal games used where payoffs are needed take their ranks as payoffs.
ds::CardinalBimatrix as_cardinal(const ds::AnyBimatrix& g) {
  if (const auto* c = std::get_if<ds::CardinalBimatrix>(&g)) return *c;
  const auto& o = std::get<ds::OrdinalBimatrix>(g);
  std::vector<double> r(o.row_ranks().begin(), o.row_ranks().end());
  std::vector<double> c(o.col_ranks().begin(), o.col_ranks().end());
  return ds::CardinalBimatrix(o.rows(), o.cols(), std::move(r), std::move(c));
}

ds::OrdinalBimatrix as_ordinal(const ds::AnyBimatrix& g) {
  if (const auto* o = std::get_if<ds::OrdinalBimatrix>(&g)) return *o;
  return ds::ordinalize(std::get<ds::CardinalBimatrix>(g));
}

void cmd_game(const GameArgs& a) {
  if (a.action == "generate" || a.action == "dump") {
    const auto grid = build_grid(a.source);
    if (grid.size() != 1 || grid[0].nplayer()) {
      throw UsageError("generate needs a single two-player m x n");
    }
    const auto& src = grid[0];
    const ds::Seed seed = parse_seed(a.seed);
    if (src.ordinal_only() && !a.ordinal) {
      a.out.document(json(ds::sample_baseline(src.m, src.n, seed)));
      return;
    }
    auto g = ds::sample_class(src.game_class, src.m, src.n, seed,
                              src.distribution.value_or(ds::Distribution::kUniform01));
    if (src.crra_alpha) g = ds::apply_crra(g, *src.crra_alpha);
    a.out.document(a.ordinal ? json(ds::ordinalize(g)) : json(g));
  } else if (a.action == "load") {
    const auto g = read_game(a.input);
    std::visit([&](const auto& game) { a.out.document(json(game)); }, g);
  } else if (a.action == "trace") {
    a.out.document(json(ds::iterate(as_ordinal(read_game(a.input)))));
  } else if (a.action == "rationalize") {
    a.out.document(json(ds::rationalizable_sets(as_cardinal(read_game(a.input)))));
  }
}

// ---- config ----

bool flag_present(const std::vector<std::string>& args, const std::string& flag) {
  for (const auto& s : args) {
    if (s == flag || s.rfind(flag + "=", 0) == 0) return true;
  }
  return false;
}

// Pulls "--config FILE" out of args and appends the file's entries for flags
// that are not already on the command line.
void apply_config(std::vector<std::string>& args) {
  std::string path;
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (args[k] == "--config") {
      if (k + 1 >= args.size()) throw UsageError("--config needs a file");
      path = args[k + 1];
      args.erase(args.begin() + k, args.begin() + k + 2);
      break;
    }
    if (args[k].rfind("--config=", 0) == 0) {
      path = args[k].substr(9);
      args.erase(args.begin() + k);
      break;
    }
  }
  if (path.empty()) return;
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config " + path);
  const json cfg = json::parse(in);
  if (!cfg.is_object()) throw UsageError("config must be a JSON object");
  for (const auto& [key, value] : cfg.items()) {
    const std::string flag = "--" + key;
    if (flag_present(args, flag)) {
      std::cerr << "note: " << flag << " from the command line overrides " << path << "\n";
      continue;
    }
    if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back(flag);
    } else if (value.is_array()) {
      std::string joined;
      for (const auto& v : value) joined += (joined.empty() ? "" : ",") + cell_text(v);
      args.push_back(flag);
      args.push_back(joined);
    } else if (value.is_string() || value.is_number()) {
      args.push_back(flag);
      args.push_back(cell_text(value));
    } else {
      throw UsageError("config value for '" + key + "' must be a scalar or list");
    }
  }
}

void add_source_flags(CLI::App* cmd, SourceArgs& s) {
  cmd->add_option("--class", s.game_class, "Game class");
  cmd->add_option("--dist", s.dist, "Payoff distribution: uniform or normal");
  cmd->add_option("--alpha", s.alpha, "CRRA exponent in (0, 1]")
      ->each([&s](const std::string&) { s.has_alpha = true; });
  cmd->add_option("--m", s.m, "Row actions: 7, 2..8 or 2,5,10");
  cmd->add_option("--n", s.n, "Column actions: 7, 2..8 or 2,5,10");
  cmd->add_option("--dims", s.dims, "N-player action counts, e.g. 2x3x4");
}

int run_cli(std::vector<std::string> args) {
  CLI::App app{"domsolve: dominance solvability of random games"};
  app.footer("Any subcommand accepts --config FILE (JSON object of flag values; "
             "command-line flags take precedence).\n"
             "Relative --output paths are placed under $DOMSOLVE_OUTPUT_DIR when set.");
  app.require_subcommand(1);

  ExactArgs ex;
  auto* exact = app.add_subcommand("exact", "Exact rational tables");
  exact->add_option("family", ex.family, "Formula family")
      ->required()
      ->check(CLI::IsMember({"pi2n", "meanI2n", "distI2n", "distUC2n", "distSC2n", "meanSC2n",
                             "varSC2n", "stirling", "bruhat", "meanUC", "pilower", "pointrat",
                             "prEj"}));
  exact->add_option("--n", ex.n, "n values: 5, 1..5 or 1,4,9");
  exact->add_option("--m", ex.m, "m values for meanUC, pilower, pointrat, prEj");
  add_output_flags(exact, ex.out);

  EnumerateArgs en;
  auto* enumerate = app.add_subcommand("enumerate", "Exhaustive enumeration");
  enumerate->add_option("what", en.what, "Enumeration")
      ->required()
      ->check(CLI::IsMember({"uc3xn", "full2xn", "pointrat2x2", "cycles2x2", "class2x2"}));
  enumerate->add_option("--n", en.n, "n values");
  enumerate->add_option("--class", en.game_class, "Game class for class2x2");
  enumerate->add_option("--threads", en.threads, "Worker threads (0: all)")
      ->check(CLI::NonNegativeNumber);
  add_output_flags(enumerate, en.out);

  SimulateArgs si;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimates");
  simulate->add_option("--metric", si.metric, "Metric name");
  add_source_flags(simulate, si.source);
  simulate->add_option("--player", si.player, "row, column or a player index");
  simulate->add_option("--samples", si.samples, "Games per grid point");
  simulate->add_option("--seed", si.seed, "Seed: master or master:stream");
  simulate->add_option("--threads", si.threads, "Worker threads (0: all)")
      ->check(CLI::NonNegativeNumber);
  add_output_flags(simulate, si.out);

  DiagnoseArgs di;
  auto* diagnose = app.add_subcommand("diagnose", "Asymptotic, CLT and bound checks");
  diagnose->add_option("what", di.what, "Diagnostic")
      ->required()
      ->check(CLI::IsMember({"asymptotics", "clt", "bounds", "trend", "sandwich"}));
  diagnose->add_option("--n", di.n, "n values");
  diagnose->add_option("--m", di.m, "m values");
  diagnose->add_option("--c", di.c, "Offset for trend: m = ceil(log2 n) + c");
  diagnose->add_option("--samples", di.samples, "Games per point");
  diagnose->add_option("--seed", di.seed, "Seed: master or master:stream");
  diagnose->add_option("--threads", di.threads, "Worker threads (0: all)")
      ->check(CLI::NonNegativeNumber);
  add_output_flags(diagnose, di.out);

  GameArgs ga;
  auto* game = app.add_subcommand("game", "Generate, load and analyse one game");
  game->add_option("action", ga.action, "Action")
      ->required()
      ->check(CLI::IsMember({"generate", "dump", "load", "trace", "rationalize"}));
  add_source_flags(game, ga.source);
  game->add_option("--seed", ga.seed, "Seed: master or master:stream");
  game->add_option("--input,-i", ga.input, "Game JSON file, or - for stdin");
  game->add_flag("--ordinal", ga.ordinal, "Emit the ordinal form of a cardinal draw");
  add_output_flags(game, ga.out);

  apply_config(args);
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (exact->parsed()) cmd_exact(ex);
  if (enumerate->parsed()) cmd_enumerate(en);
  if (simulate->parsed()) cmd_simulate(si);
  if (diagnose->parsed()) cmd_diagnose(di);
  if (game->parsed()) cmd_game(ga);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return run_cli(std::move(args));
  } catch (const ds::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const ds::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const json::exception& e) {
    std::cerr << "error: bad JSON: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {  // invalid_argument, domain_error
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
