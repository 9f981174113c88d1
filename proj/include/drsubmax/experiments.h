// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Config-driven experiment runner. A config is one JSON object whose "kind"
// selects the experiment; each kind writes one CSV schema:
//
//   revenue-online, location-online  t,value,cumulative       (T rows)
//   revenue-offline, quadratic-offline  i,value,best         (T+1 rows)
//   quadratic-offline with sweep     n,m,rep,seed,value,opt,ratio
//   hardness-gap                     k,ell,h,seed,maxF,maxG,ratio

#ifndef DRSUBMAX_EXPERIMENTS_H_
#define DRSUBMAX_EXPERIMENTS_H_

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "drsubmax/feasible_set.h"
#include "drsubmax/generators.h"
#include "drsubmax/graph.h"
#include "drsubmax/hardness.h"
#include "drsubmax/meta_fw.h"
#include "drsubmax/nmfw.h"
#include "drsubmax/numeric.h"
#include "drsubmax/objectives.h"
#include "drsubmax/quadratic_bounds.h"
#include "drsubmax/rng.h"
#include "json.hpp"

namespace drsubmax::experiments {

using Json = nlohmann::ordered_json;

class ConfigError : public UsageError {
 public:
  ConfigError(const std::string& field, const std::string& what)
      : UsageError("config field '" + field + "': " + what), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// Typed access to a flat JSON object that remembers which keys were read,
// so leftovers can be reported as unknown fields.
class ConfigReader {
 public:
  explicit ConfigReader(const Json& j) : j_(j) {
    if (!j_.is_object()) throw UsageError("config must be a JSON object");
  }

  bool Has(const std::string& key) const { return j_.contains(key); }

  template <typename T>
  std::optional<T> Optional(const std::string& key) {
    used_.insert(key);
    if (!j_.contains(key) || j_.at(key).is_null()) return std::nullopt;
    return Convert<T>(key, j_.at(key));
  }

  template <typename T>
  T Get(const std::string& key, T fallback) {
    return Optional<T>(key).value_or(fallback);
  }

  template <typename T>
  T Require(const std::string& key) {
    auto v = Optional<T>(key);
    if (!v) throw ConfigError(key, "required");
    return *v;
  }

  // Accepts a scalar or an array of scalars.
  template <typename T>
  std::vector<T> List(const std::string& key, std::vector<T> fallback) {
    used_.insert(key);
    if (!j_.contains(key)) return fallback;
    const Json& v = j_.at(key);
    std::vector<T> out;
    if (v.is_array()) {
      for (const Json& e : v) out.push_back(Convert<T>(key, e));
    } else {
      out.push_back(Convert<T>(key, v));
    }
    if (out.empty()) throw ConfigError(key, "must not be empty");
    return out;
  }

  void RejectUnknown() const {
    for (const auto& [key, value] : j_.items()) {
      if (!used_.count(key)) throw ConfigError(key, "unknown field");
    }
  }

 private:
  template <typename T>
  static T Convert(const std::string& key, const Json& v) {
    if constexpr (std::is_same_v<T, bool>) {
      if (!v.is_boolean()) throw ConfigError(key, "expected a boolean");
      return v.get<bool>();
    } else if constexpr (std::is_same_v<T, std::string>) {
      if (!v.is_string()) throw ConfigError(key, "expected a string");
      return v.get<std::string>();
    } else if constexpr (std::is_integral_v<T>) {
      if (!v.is_number_integer()) throw ConfigError(key, "expected an integer");
      if constexpr (std::is_unsigned_v<T>) {
        if (v.is_number_unsigned()) return v.get<T>();
        if (v.get<long long>() < 0) throw ConfigError(key, "must be non-negative");
      }
      return v.get<T>();
    } else {
      if (!v.is_number()) throw ConfigError(key, "expected a number");
      return v.get<T>();
    }
  }

  const Json& j_;
  std::set<std::string> used_;
};

inline Json LoadConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError("config " + path + " is not valid JSON: " + e.what());
  }
}

// Applies "key=value"; the value is parsed as JSON and falls back to a plain
// string (so --set distribution=uniform works unquoted).
inline void ApplyOverride(Json& config, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw UsageError("override '" + assignment + "' must look like key=value");
  }
  const std::string key = assignment.substr(0, eq);
  const std::string text = assignment.substr(eq + 1);
  Json value = Json::parse(text, nullptr, false);
  if (value.is_discarded()) value = text;
  config[key] = value;
}

// Shortest round-trip-safe form with 17 significant digits.
inline std::string FormatNumber(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

class CsvWriter {
 public:
  CsvWriter(std::ostream& out, const std::vector<std::string>& header) : out_(out) {
    Line(header);
  }

  void Line(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << cells[i];
    out_ << '\n';
  }

 private:
  std::ostream& out_;
};

inline std::string Cell(double v) { return FormatNumber(v); }
inline std::string Cell(long long v) { return std::to_string(v); }
inline std::string Cell(int v) { return std::to_string(v); }
inline std::string Cell(std::uint64_t v) { return std::to_string(v); }

struct RunContext {
  // Directory that relative data paths in the config are resolved against.
  std::filesystem::path base_dir = ".";
};

namespace internal {

// Calls fn(i) for i in [0, count) on up to hardware_concurrency threads and
// rethrows the first exception.
template <typename Fn>
void ParallelFor(std::size_t count, Fn fn) {
  const std::size_t workers =
      std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

inline double ReadEps(ConfigReader& cfg, double fallback) {
  const double eps = cfg.Get<double>("eps", fallback);
  if (!(eps > 0.0 && eps < 1.0)) throw ConfigError("eps", "must lie in (0,1)");
  return eps;
}

inline int ReadPositive(ConfigReader& cfg, const std::string& key, int fallback) {
  const int v = cfg.Get<int>(key, fallback);
  if (v < 1) throw ConfigError(key, "must be >= 1");
  return v;
}

inline GraphData ReadGraph(ConfigReader& cfg, const RunContext& ctx, std::uint64_t seed) {
  if (auto path = cfg.Optional<std::string>("graph")) {
    std::filesystem::path p(*path);
    if (p.is_relative()) p = ctx.base_dir / p;
    if (!std::filesystem::exists(p)) {
      throw ConfigError("graph", "file " + p.string() + " not found");
    }
    return LoadEdgeList(p.string());
  }
  const int vertices = ReadPositive(cfg, "vertices", 200);
  const int edges = cfg.Get<int>("edges", 1000);
  const bool weighted = cfg.Get<bool>("weighted", true);
  if (vertices < 2) throw ConfigError("vertices", "must be >= 2");
  if (edges < 0 || edges > static_cast<long long>(vertices) * (vertices - 1) / 2) {
    throw ConfigError("edges", "must lie in [0, vertices (vertices - 1) / 2]");
  }
  return RandomGraph(vertices, edges, weighted, DeriveSeed(seed, "graph"));
}

inline double ReadProbability(ConfigReader& cfg) {
  const double p = cfg.Get<double>("p", 0.0001);
  if (!(p > 0.0 && p < 1.0)) throw ConfigError("p", "must lie in (0,1)");
  return p;
}

inline std::shared_ptr<SumBoxPolytope> ReadSumBox(ConfigReader& cfg, std::size_t n, double lo,
                                                  double hi) {
  const double lower = cfg.Get<double>("lower", lo);
  const double upper = cfg.Get<double>("upper", hi);
  if (!(lower >= 0.0)) throw ConfigError("lower", "must be >= 0");
  if (!(upper >= lower)) throw ConfigError("upper", "must be >= lower");
  if (lower > static_cast<double>(n)) throw ConfigError("lower", "exceeds the dimension");
  return std::make_shared<SumBoxPolytope>(n, lower, upper);
}

inline MetaFwConfig ReadMetaFw(ConfigReader& cfg, std::uint64_t seed) {
  MetaFwConfig m;
  m.T = ReadPositive(cfg, "T", 100);
  if (cfg.Has("eps")) m.eps = ReadEps(cfg, 0.5);
  if (auto l = cfg.Optional<int>("L")) {
    if (*l < 1) throw ConfigError("L", "must be >= 1");
    m.L = *l;
  }
  m.sigma = cfg.Get<double>("sigma", 0.0);
  if (!(m.sigma >= 0.0)) throw ConfigError("sigma", "must be >= 0");
  m.dynamic_eps = cfg.Get<bool>("dynamic_eps", false);
  m.L_max = ReadPositive(cfg, "L_max", 100);
  m.seed = DeriveSeed(seed, "meta-fw");
  if (!m.eps && m.T == 1 && !m.dynamic_eps) throw ConfigError("eps", "required when T = 1");
  return m;
}

// Runs report the infinity-norm decay invariant as an oracle failure.
inline void CheckDecay(double violation, const std::string& what) {
  if (violation > 1e-9) {
    throw std::runtime_error(what + ": infinity-norm decay violated by " + FormatNumber(violation));
  }
}

inline void WriteOnline(const OnlineRunRecord& rec, std::ostream& out) {
  CheckDecay(rec.decay_violation, "meta-fw");
  CsvWriter csv(out, {"t", "value", "cumulative"});
  for (std::size_t t = 0; t < rec.values.size(); ++t) {
    csv.Line({Cell(static_cast<long long>(t + 1)), Cell(rec.values[t]), Cell(rec.cumulative[t])});
  }
}

inline void WriteOffline(const RunRecord& rec, double eps, std::ostream& out) {
  CheckDecay(InfNormDecayViolation(rec.iterates, eps), "nmfw");
  CsvWriter csv(out, {"i", "value", "best"});
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < rec.values.size(); ++i) {
    best = std::max(best, rec.values[i]);
    csv.Line({Cell(static_cast<long long>(i)), Cell(rec.values[i]), Cell(best)});
  }
}

inline NmfwConfig ReadNmfw(ConfigReader& cfg) {
  const double eps = ReadEps(cfg, 0.03);
  NmfwConfig n = NmfwConfig::FromEps(eps);
  n.T = ReadPositive(cfg, "T", n.T);
  return n;
}

inline void RunRevenueOnline(ConfigReader& cfg, const RunContext& ctx, std::uint64_t seed,
                             std::ostream& out) {
  const GraphData graph = ReadGraph(cfg, ctx, seed);
  const double p = ReadProbability(cfg);
  const int subsample = cfg.Get<int>("subsample", 0);
  if (subsample < 0 || subsample > graph.vertex_count) {
    throw ConfigError("subsample", "must lie in [0, vertex count]");
  }
  auto set = ReadSumBox(cfg, graph.vertex_count, 0.1, 1.0);
  const MetaFwConfig meta = ReadMetaFw(cfg, seed);
  cfg.RejectUnknown();
  Rng rng(DeriveSeed(seed, "revenue-subsample"));
  auto full = std::make_shared<RevenueObjective>(graph, p);
  FunctionStream stream([&](int) -> ObjectivePtr {
    if (subsample == 0) return full;
    return std::make_shared<RevenueObjective>(SubsampleStep(graph, subsample, rng).graph, p);
  });
  WriteOnline(MetaFw(stream, set, meta), out);
}

inline void RunRevenueOffline(ConfigReader& cfg, const RunContext& ctx, std::uint64_t seed,
                              std::ostream& out) {
  const GraphData graph = ReadGraph(cfg, ctx, seed);
  const double p = ReadProbability(cfg);
  auto set = ReadSumBox(cfg, graph.vertex_count, 0.25, 1.0);
  const NmfwConfig nmfw = ReadNmfw(cfg);
  cfg.RejectUnknown();
  RevenueObjective f(graph, p);
  WriteOffline(Nmfw(f, *set, nmfw, seed), nmfw.eps, out);
}

inline void RunLocationOnline(ConfigReader& cfg, std::uint64_t seed, std::ostream& out) {
  const int n = ReadPositive(cfg, "n", 50);
  auto set = ReadSumBox(cfg, n, 1.0, 2.0);
  const MetaFwConfig meta = ReadMetaFw(cfg, seed);
  cfg.RejectUnknown();
  const LocationInstance inst = GenLocationInstance(n, DeriveSeed(seed, "location-instance"));
  Rng users(DeriveSeed(seed, "location-users"));
  FunctionStream stream([&](int) -> ObjectivePtr {
    const double x = users.Uniform();
    const double y = users.Uniform();
    return LocationForUser(inst, {x, y});
  });
  WriteOnline(MetaFw(stream, set, meta), out);
}

inline QuadraticDistribution ReadDistribution(ConfigReader& cfg) {
  const std::string d = cfg.Get<std::string>("distribution", "uniform");
  if (d == "uniform") return QuadraticDistribution::kUniform;
  if (d == "exponential") return QuadraticDistribution::kExponential;
  throw ConfigError("distribution", "must be 'uniform' or 'exponential'");
}

inline void RunQuadraticOffline(ConfigReader& cfg, std::uint64_t seed, std::ostream& out) {
  const QuadraticDistribution dist = ReadDistribution(cfg);
  const NmfwConfig nmfw = ReadNmfw(cfg);
  if (!cfg.Get<bool>("sweep", false)) {
    const int n = ReadPositive(cfg, "n", 8);
    const int m = ReadPositive(cfg, "m", 4);
    if (n > 22) throw ConfigError("n", "must be <= 22");
    cfg.RejectUnknown();
    const QuadraticInstance inst = GenQuadratic({n, m, dist, DeriveSeed(seed, "quadratic")});
    WriteOffline(Nmfw(*inst.objective, *inst.polytope, nmfw, seed), nmfw.eps, out);
    return;
  }
  const std::vector<int> ns = cfg.List<int>("n", {8});
  const std::vector<double> factors = cfg.List<double>("m_factor", {0.5});
  const int reps = ReadPositive(cfg, "reps", 10);
  const int grid = ReadPositive(cfg, "grid_resolution", 100);
  for (int n : ns) {
    if (n < 1 || n > 22) throw ConfigError("n", "entries must lie in [1, 22]");
  }
  for (double f : factors) {
    if (!(f > 0.0)) throw ConfigError("m_factor", "entries must be positive");
  }
  cfg.RejectUnknown();
  struct Job {
    int n, m, rep;
    std::uint64_t seed;
    std::vector<std::string> cells;
  };
  std::vector<Job> jobs;
  for (int n : ns) {
    for (double factor : factors) {
      const int m = std::max(1, static_cast<int>(std::floor(factor * n)));
      for (int rep = 0; rep < reps; ++rep) {
        const std::uint64_t s = DeriveSeed(seed, "quadratic-sweep",
                                           static_cast<std::uint64_t>(n) * 1000003u * 1000u +
                                               static_cast<std::uint64_t>(m) * 1000u + rep);
        jobs.push_back({n, m, rep, s, {}});
      }
    }
  }
  // Repetitions are independent and individually seeded, so they run in
  // parallel and are written back in job order.
  const auto run_job = [&](Job& job) {
    const QuadraticInstance inst = GenQuadratic({job.n, job.m, dist, job.seed});
    const RunRecord rec = Nmfw(*inst.objective, *inst.polytope, nmfw, job.seed);
    CheckDecay(InfNormDecayViolation(rec.iterates, nmfw.eps), "nmfw");
    const double value = rec.best_value();
    std::string opt, ratio;
    if (job.n <= 4) {
      const double o = QuadraticGridOptimum(inst, grid);
      opt = Cell(o);
      ratio = Cell(value / o);
    }
    job.cells = {Cell(job.n), Cell(job.m), Cell(job.rep), Cell(job.seed), Cell(value), opt, ratio};
  };
  ParallelFor(jobs.size(), [&](std::size_t i) { run_job(jobs[i]); });
  CsvWriter csv(out, {"n", "m", "rep", "seed", "value", "opt", "ratio"});
  for (const Job& job : jobs) csv.Line(job.cells);
}

inline void RunHardnessGap(ConfigReader& cfg, std::uint64_t seed, std::ostream& out) {
  const std::vector<int> ks = cfg.List<int>("k", {100});
  const std::vector<int> ells = cfg.List<int>("ell", {2});
  const std::vector<double> hs = cfg.List<double>("h", {0.0});
  cfg.RejectUnknown();
  for (double h : hs) {
    if (!(h >= 0.0 && h < 1.0)) throw ConfigError("h", "entries must lie in [0,1)");
    for (int k : ks) {
      if (k < 1) throw ConfigError("k", "entries must be >= 1");
      if (k * (1.0 - h) < 1.0) throw ConfigError("k", "must be >= 1/(1-h)");
    }
  }
  for (int l : ells) {
    if (l < 1) throw ConfigError("ell", "entries must be >= 1");
  }
  CsvWriter csv(out, {"k", "ell", "h", "seed", "maxF", "maxG", "ratio"});
  for (int k : ks) {
    for (int l : ells) {
      for (double h : hs) {
        const GapReport r = ComputeGapReport(k, l, h, seed);
        csv.Line({Cell(k), Cell(l), Cell(h), Cell(seed), Cell(r.max_f), Cell(r.max_g),
                  Cell(r.ratio)});
      }
    }
  }
}

}  // namespace internal

inline const std::vector<std::string>& ExperimentKinds() {
  static const std::vector<std::string> kinds = {
      "revenue-online", "revenue-offline", "location-online", "quadratic-offline",
      "hardness-gap"};
  return kinds;
}

// Runs one experiment and writes its CSV to `out`.
inline void RunExperiment(const Json& config, std::ostream& out, const RunContext& ctx = {}) {
  ConfigReader cfg(config);
  const std::string kind = cfg.Require<std::string>("kind");
  const std::uint64_t seed = cfg.Get<std::uint64_t>("seed", 0);
  cfg.Optional<std::string>("output");
  cfg.Optional<std::string>("description");
  cfg.Optional<bool>("long_running");
  if (kind == "revenue-online") {
    internal::RunRevenueOnline(cfg, ctx, seed, out);
  } else if (kind == "revenue-offline") {
    internal::RunRevenueOffline(cfg, ctx, seed, out);
  } else if (kind == "location-online") {
    internal::RunLocationOnline(cfg, seed, out);
  } else if (kind == "quadratic-offline") {
    internal::RunQuadraticOffline(cfg, seed, out);
  } else if (kind == "hardness-gap") {
    internal::RunHardnessGap(cfg, seed, out);
  } else {
    std::string all;
    for (const auto& k : ExperimentKinds()) all += (all.empty() ? "" : ", ") + k;
    throw ConfigError("kind", "unknown kind '" + kind + "' (expected one of " + all + ")");
  }
}

inline std::string RunExperimentToString(const Json& config, const RunContext& ctx = {}) {
  std::ostringstream out;
  RunExperiment(config, out, ctx);
  return out.str();
}

// Summary of homogeneous CSV files: rows are grouped by the schema's key
// columns and every other numeric column is reduced to mean, sample
// standard deviation and count.
struct SummaryRow {
  std::string group;
  std::string metric;
  double mean = 0.0;
  double stddev = 0.0;
  long long count = 0;
};

namespace internal {

inline std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

// Key columns per known schema; columns listed as ignored are neither keys
// nor metrics.
struct Schema {
  std::vector<std::string> keys;
  std::set<std::string> ignored;
};

inline Schema SchemaFor(const std::vector<std::string>& header) {
  const auto is = [&](std::vector<std::string> cols) { return header == cols; };
  if (is({"t", "value", "cumulative"})) return {{"t"}, {}};
  if (is({"i", "value", "best"})) return {{"i"}, {}};
  if (is({"n", "m", "rep", "seed", "value", "opt", "ratio"})) return {{"n", "m"}, {"rep", "seed"}};
  if (is({"k", "ell", "h", "seed", "maxF", "maxG", "ratio"})) return {{"k", "ell", "h"}, {"seed"}};
  std::string joined;
  for (const auto& h : header) joined += (joined.empty() ? "" : ",") + h;
  throw UsageError("unrecognized CSV schema: " + joined);
}

}  // namespace internal

inline std::vector<SummaryRow> Summarize(const std::vector<std::string>& paths) {
  if (paths.empty()) throw UsageError("summarize needs at least one CSV file");
  std::vector<std::string> header;
  internal::Schema schema;
  // group -> metric -> values, in first-seen order.
  std::vector<std::string> group_order;
  std::map<std::string, std::vector<std::string>> metric_order;
  std::map<std::string, std::map<std::string, std::vector<double>>> data;
  for (const std::string& path : paths) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw UsageError(path + " is empty");
    const auto cols = internal::SplitCsvLine(line);
    if (header.empty()) {
      header = cols;
      schema = internal::SchemaFor(header);
    } else if (cols != header) {
      throw UsageError("mixed schemas: " + path + " differs from " + paths.front());
    }
    long long row_no = 1;
    while (std::getline(in, line)) {
      ++row_no;
      if (line.empty()) continue;
      const auto cells = internal::SplitCsvLine(line);
      if (cells.size() != header.size()) {
        throw UsageError(path + ":" + std::to_string(row_no) + ": wrong number of columns");
      }
      std::string group;
      for (std::size_t c = 0; c < header.size(); ++c) {
        if (std::find(schema.keys.begin(), schema.keys.end(), header[c]) != schema.keys.end()) {
          group += (group.empty() ? "" : ";") + header[c] + "=" + cells[c];
        }
      }
      if (!data.count(group)) group_order.push_back(group);
      auto& metrics = data[group];
      for (std::size_t c = 0; c < header.size(); ++c) {
        const std::string& name = header[c];
        if (schema.ignored.count(name) || cells[c].empty() ||
            std::find(schema.keys.begin(), schema.keys.end(), name) != schema.keys.end()) {
          continue;
        }
        double v = 0.0;
        try {
          std::size_t used = 0;
          v = std::stod(cells[c], &used);
          if (used != cells[c].size()) throw std::invalid_argument(cells[c]);
        } catch (const std::exception&) {
          throw UsageError(path + ":" + std::to_string(row_no) + ": non-numeric " + name);
        }
        if (!metrics.count(name)) metric_order[group].push_back(name);
        metrics[name].push_back(v);
      }
    }
  }
  std::vector<SummaryRow> out;
  for (const std::string& group : group_order) {
    for (const std::string& metric : metric_order[group]) {
      const std::vector<double>& v = data[group][metric];
      SummaryRow row{group, metric};
      row.count = static_cast<long long>(v.size());
      for (double x : v) row.mean += x;
      row.mean /= static_cast<double>(v.size());
      if (v.size() > 1) {
        double ss = 0.0;
        for (double x : v) ss += (x - row.mean) * (x - row.mean);
        row.stddev = std::sqrt(ss / static_cast<double>(v.size() - 1));
      }
      out.push_back(row);
    }
  }
  return out;
}

inline void WriteSummary(const std::vector<SummaryRow>& rows, std::ostream& out) {
  CsvWriter csv(out, {"group", "metric", "mean", "std", "count"});
  for (const SummaryRow& r : rows) {
    csv.Line({r.group, r.metric, Cell(r.mean), Cell(r.stddev), Cell(r.count)});
  }
}

}  // namespace drsubmax::experiments

#endif  // DRSUBMAX_EXPERIMENTS_H_
