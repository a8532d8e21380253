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

// JSON for games, traces and reports; CSV and JSON for experiment rows.
// Matrices are row-major arrays of arrays.

#ifndef DOMSOLVE_SERIALIZE_HPP_
#define DOMSOLVE_SERIALIZE_HPP_

#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "domsolve/elimination.hpp"
#include "domsolve/game.hpp"
#include "domsolve/harness.hpp"
#include "domsolve/rationalizability.hpp"
#include "json.hpp"

namespace domsolve {

using json = nlohmann::json;

namespace detail {

template <class T>
json matrix_to_json(std::span<const T> flat, int m, int n) {
  json rows = json::array();
  for (int i = 0; i < m; ++i) {
    rows.push_back(std::vector<T>(flat.begin() + i * n, flat.begin() + (i + 1) * n));
  }
  return rows;
}

template <class T>
std::vector<T> matrix_from_json(const json& j, int m, int n, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != m) {
    throw std::invalid_argument(std::string(what) + " must have m rows");
  }
  std::vector<T> flat;
  for (const json& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw std::invalid_argument(std::string(what) + " rows must have n entries");
    }
    for (const json& x : row) flat.push_back(x.get<T>());
  }
  return flat;
}

// Shortest text that reads back to the same double; "NA" for NaN.
inline std::string format_double(double x) {
  if (std::isnan(x)) return "NA";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

inline json number_or_null(double x) { return std::isnan(x) ? json(nullptr) : json(x); }

}  // namespace detail

inline void to_json(json& j, const OrdinalBimatrix& g) {
  j = {{"type", "ordinal"},
       {"m", g.rows()},
       {"n", g.cols()},
       {"row_ranks", detail::matrix_to_json(g.row_ranks(), g.rows(), g.cols())},
       {"col_ranks", detail::matrix_to_json(g.col_ranks(), g.rows(), g.cols())}};
}

inline void to_json(json& j, const CardinalBimatrix& g) {
  j = {{"type", "cardinal"},
       {"m", g.rows()},
       {"n", g.cols()},
       {"u_row", detail::matrix_to_json(g.row_payoffs(), g.rows(), g.cols())},
       {"u_col", detail::matrix_to_json(g.col_payoffs(), g.rows(), g.cols())}};
}

using AnyBimatrix = std::variant<OrdinalBimatrix, CardinalBimatrix>;

inline AnyBimatrix game_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("game JSON must be an object");
  const std::string type = j.at("type").get<std::string>();
  const int m = j.at("m").get<int>(), n = j.at("n").get<int>();
  detail::check_dims(m, n);
  if (type == "ordinal") {
    return OrdinalBimatrix(m, n, detail::matrix_from_json<int>(j.at("row_ranks"), m, n, "row_ranks"),
                           detail::matrix_from_json<int>(j.at("col_ranks"), m, n, "col_ranks"));
  }
  if (type == "cardinal") {
    return CardinalBimatrix(m, n, detail::matrix_from_json<double>(j.at("u_row"), m, n, "u_row"),
                            detail::matrix_from_json<double>(j.at("u_col"), m, n, "u_col"));
  }
  throw std::invalid_argument("unknown game type '" + type + "'");
}

inline void to_json(json& j, const ActionSet& s) {
  j = {{"player", s.player}, {"members", s.members}};
}

inline void from_json(const json& j, ActionSet& s) {
  j.at("player").get_to(s.player);
  j.at("members").get_to(s.members);
}

inline void to_json(json& j, const Removal& r) {
  j = {{"player", r.player}, {"removed", r.removed}};
}

inline void from_json(const json& j, Removal& r) {
  j.at("player").get_to(r.player);
  j.at("removed").get_to(r.removed);
}

inline void to_json(json& j, const EliminationTrace& t) {
  j = {{"rounds", t.rounds},
       {"surviving", t.surviving},
       {"undominated_counts", t.undominated_counts},
       {"iterations", t.iterations},
       {"solvable", t.solvable}};
}

inline void from_json(const json& j, EliminationTrace& t) {
  j.at("rounds").get_to(t.rounds);
  j.at("surviving").get_to(t.surviving);
  j.at("undominated_counts").get_to(t.undominated_counts);
  j.at("iterations").get_to(t.iterations);
  j.at("solvable").get_to(t.solvable);
}

inline void to_json(json& j, const RationalizabilityReport& r) {
  j = {{"rationalizable", r.rationalizable},
       {"point_rationalizable", r.point_rationalizable},
       {"pure_survivors", r.pure_survivors},
       {"mixed_solvable", r.mixed_solvable},
       {"mixed_iterations", r.mixed_iterations}};
}

inline void to_json(json& j, const MixedCertificate& c) {
  j = {{"actions", c.actions}, {"weights", c.weights}, {"margin", c.margin}};
}

// Fields shared by the CSV and JSON forms of one experiment row.
struct ResultRecord {
  std::string metric, game_class, m, n, distribution, alpha;
  std::uint64_t samples = 0;
  double estimate = 0, se = 0;
  std::string conditioning_count;
  std::string seed;
};

inline std::vector<ResultRecord> to_records(const std::vector<ResultRow>& rows) {
  std::vector<ResultRecord> out;
  for (const ResultRow& row : rows) {
    const ExperimentSpec& s = row.spec;
    ResultRecord base;
    base.metric = std::string(to_string(s.metric));
    if (s.source.nplayer()) {
      base.game_class = "nplayer";
      for (std::size_t k = 0; k < s.source.dims.size(); ++k) {
        base.m += (k ? "x" : "") + std::to_string(s.source.dims[k]);
      }
      base.n = "NA";
    } else {
      base.game_class = std::string(to_string(s.source.game_class));
      base.m = std::to_string(s.source.m);
      base.n = std::to_string(s.source.n);
    }
    if (s.source.distribution) {
      base.distribution = std::string(to_string(*s.source.distribution));
    } else {
      // Mixed metrics need payoffs, so they draw uniform ones even for the baseline.
      const bool ordinal = (s.source.ordinal_only() && !is_mixed(s.metric)) || s.source.nplayer();
      base.distribution = ordinal ? "ordinal" : "uniform";
    }
    base.alpha = s.source.crra_alpha ? detail::format_double(*s.source.crra_alpha) : "NA";
    base.samples = s.samples;
    base.seed = std::to_string(s.seed.master) + ":" + std::to_string(s.seed.stream);
    const bool conditional = is_conditional(s.metric);
    if (is_histogram(s.metric)) {
      for (const HistogramBin& bin : row.result.histogram) {
        ResultRecord r = base;
        r.metric += ":" + std::to_string(bin.value);
        r.estimate = bin.frequency.mean;
        r.se = bin.frequency.se;
        r.conditioning_count = "NA";
        out.push_back(r);
      }
      continue;
    }
    base.estimate = row.result.estimate.mean;
    base.se = row.result.estimate.se;
    base.conditioning_count =
        conditional ? std::to_string(row.result.estimate.conditioning_count) : "NA";
    out.push_back(base);
  }
  return out;
}

inline constexpr const char* kCsvHeader =
    "metric,class,m,n,distribution,alpha,samples,estimate,se,conditioning_count,seed";

inline void write_results_csv(std::ostream& os, const std::vector<ResultRow>& rows) {
  os << kCsvHeader << '\n';
  for (const ResultRecord& r : to_records(rows)) {
    os << r.metric << ',' << r.game_class << ',' << r.m << ',' << r.n << ',' << r.distribution
       << ',' << r.alpha << ',' << r.samples << ',' << detail::format_double(r.estimate) << ','
       << detail::format_double(r.se) << ',' << r.conditioning_count << ',' << r.seed << '\n';
  }
}

inline json results_to_json(const std::vector<ResultRow>& rows) {
  json out = json::array();
  for (const ResultRecord& r : to_records(rows)) {
    out.push_back({{"metric", r.metric},
                   {"class", r.game_class},
                   {"m", r.m},
                   {"n", r.n},
                   {"distribution", r.distribution},
                   {"alpha", r.alpha},
                   {"samples", r.samples},
                   {"estimate", detail::number_or_null(r.estimate)},
                   {"se", detail::number_or_null(r.se)},
                   {"conditioning_count", r.conditioning_count},
                   {"seed", r.seed}});
  }
  return out;
}

}  // namespace domsolve

#endif  // DOMSOLVE_SERIALIZE_HPP_
