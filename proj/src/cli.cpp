// Copyright 2026 The qswitch Authors
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

#include "qswitch/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"

namespace qswitch::cli {

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

nlohmann::json to_json(const BoundsReport& r) {
  nlohmann::json j;
  j["p"] = r.params.p;
  j["q"] = r.params.q;
  j["q_d"] = r.q_d;
  j["q_e"] = r.q_e;
  j["ub_classical"] = r.ub_classical;
  j["lb_qs"] = r.lb_qs;
  j["ub_qs"] = r.ub_qs;
  j["gain"] = r.gain;
  j["uncertainty"] = r.uncertainty;
  j["herald_prob"] = r.herald_prob;
  j["plus_coherent_info"] = r.plus_coherent_info ? nlohmann::json(*r.plus_coherent_info) : nlohmann::json();
  return j;
}

nlohmann::json to_json(const Threshold& p0, const Threshold& p1) {
  nlohmann::json j;
  for (const Threshold* t : {&p0, &p1}) {
    j[t->name] = t->value;
    j[t->name + "_residual"] = t->residual;
    j[t->name + "_bracket_lo"] = t->bracket.first;
    j[t->name + "_bracket_hi"] = t->bracket.second;
    j[t->name + "_iterations"] = t->iterations;
  }
  return j;
}

nlohmann::json to_json(const oracle::VerificationReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"max_deviation", c.max_deviation},
                      {"tolerance", c.tolerance},
                      {"passed", c.passed},
                      {"evaluations", c.evaluations},
                      {"worst_p", c.worst_point.p},
                      {"worst_q", c.worst_point.q}});
  }
  return {{"resolution", report.grid.resolution},
          {"tolerance", report.tol},
          {"seed", report.seed},
          {"passed", report.all_passed()},
          {"checks", checks}};
}

std::string surface_csv(const std::vector<SurfacePoint>& points) {
  std::string out = "p,q,value\n";
  for (const auto& pt : points) {
    out += format_double(pt.p);
    out += ',';
    out += format_double(pt.q);
    out += ',';
    out += format_double(pt.value);
    out += '\n';
  }
  return out;
}

std::string slice_csv(const std::vector<SlicePoint>& points) {
  std::string out = "p,ub_classical,lb_qs,ub_qs\n";
  for (const auto& pt : points) {
    out += format_double(pt.p) + ',' + format_double(pt.ub_classical) + ',' +
           format_double(pt.lb_qs) + ',' + format_double(pt.ub_qs) + '\n';
  }
  return out;
}

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
  T value{};
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw std::invalid_argument("config: bad value for " + key + ": '" + text + "'");
  }
  return value;
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << content;
  file.flush();
  if (!file) throw IoError("failed writing '" + path + "'");
}

void print_report_text(const BoundsReport& r, std::ostream& out) {
  const auto j = to_json(r);
  for (const char* key : {"p", "q", "q_d", "q_e", "ub_classical", "lb_qs", "ub_qs", "gain",
                          "uncertainty", "herald_prob"}) {
    out << key << ": " << format_double(j[key].get<double>()) << '\n';
  }
  out << "plus_coherent_info: "
      << (r.plus_coherent_info ? format_double(*r.plus_coherent_info) : std::string("absent")) << '\n';
}

void print_threshold_text(const Threshold& t, std::ostream& out) {
  out << t.name << ": " << format_double(t.value) << " (residual " << format_double(t.residual)
      << ", bracket [" << format_double(t.bracket.first) << ", " << format_double(t.bracket.second)
      << "], " << t.iterations << " iterations)\n";
}

}  // namespace

Config parse_config(std::istream& in) {
  Config cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "resolution") {
      cfg.resolution = parse_number<std::size_t>(key, value);
    } else if (key == "tolerance" || key == "tol") {
      cfg.tolerance = parse_number<double>(key, value);
    } else if (key == "seed") {
      cfg.seed = parse_number<std::uint64_t>(key, value);
    } else {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  return cfg;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Capacity bounds for a bit-flip and a phase-flip channel combined by a quantum switch"};
  app.require_subcommand(1);

  std::string config_path;
  int threads = 0;
  app.add_option("--config", config_path, "key=value file with defaults for resolution, tolerance, seed");
  app.add_option("--threads", threads, "OpenMP thread count (0 keeps the runtime default)")
      ->check(CLI::NonNegativeNumber);

  // bounds
  auto* bounds = app.add_subcommand("bounds", "All capacity quantities at one (p, q)");
  double p = 0.0, q = 0.0;
  std::string bounds_format = "text";
  bounds->add_option("--p", p, "bit-flip probability")->required()->check(CLI::Range(0.0, 1.0));
  bounds->add_option("--q", q, "phase-flip probability")->required()->check(CLI::Range(0.0, 1.0));
  bounds->add_option("--format", bounds_format)->check(CLI::IsMember({"json", "text"}));

  // surface
  auto* surface = app.add_subcommand("surface", "CSV surface of one bound over the (p, q) grid");
  std::string quantity_name;
  std::size_t surface_resolution = 101;
  std::string surface_out;
  AxisRange p_range, q_range;
  std::vector<std::string> names;
  for (auto qty : all_surface_quantities()) names.emplace_back(to_string(qty));
  surface->add_option("--quantity", quantity_name)->required()->check(CLI::IsMember(names));
  auto* surface_res_opt = surface->add_option("--resolution", surface_resolution, "points per axis");
  surface->add_option("--out", surface_out, "output path ('-' for stdout)");
  surface->add_option("--p-min", p_range.lo);
  surface->add_option("--p-max", p_range.hi);
  surface->add_option("--q-min", q_range.lo);
  surface->add_option("--q-max", q_range.hi);

  // slice
  auto* slice = app.add_subcommand("slice", "CSV of the three bounds along p = q");
  std::size_t steps = 1001;
  std::string slice_out;
  slice->add_option("--steps", steps, "number of sample points, endpoints included");
  slice->add_option("--out", slice_out, "output path ('-' for stdout)");

  // thresholds
  auto* thresholds = app.add_subcommand("thresholds", "Solve for the diagonal thresholds p0 and p1");
  std::string thresholds_format = "text";
  thresholds->add_option("--format", thresholds_format)->check(CLI::IsMember({"json", "text"}));

  // verify
  auto* verify = app.add_subcommand("verify", "Run every oracle cross-check over a grid");
  std::size_t verify_resolution = 21;
  double tol = 1e-10;
  std::uint64_t seed = 42;
  std::string verify_format = "text";
  auto* verify_res_opt = verify->add_option("--resolution", verify_resolution, "points per axis");
  auto* tol_opt = verify->add_option("--tol", tol, "pass threshold on every max deviation");
  auto* seed_opt = verify->add_option("--seed", seed, "seed for random input states");
  verify->add_option("--format", verify_format)->check(CLI::IsMember({"json", "text"}));

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("qswitch");

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#endif
    Config cfg;
    if (!config_path.empty()) {
      std::ifstream file(config_path);
      if (!file) throw IoError("cannot open config '" + config_path + "'");
      try {
        cfg = parse_config(file);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
    if (cfg.resolution && surface_res_opt->count() == 0) surface_resolution = *cfg.resolution;
    if (cfg.resolution && verify_res_opt->count() == 0) verify_resolution = *cfg.resolution;
    if (cfg.tolerance && tol_opt->count() == 0) tol = *cfg.tolerance;
    if (cfg.seed && seed_opt->count() == 0) seed = *cfg.seed;

    if (*bounds) {
      const auto report = bounds_report(ErrorProbs::checked(p, q));
      if (bounds_format == "json") out << to_json(report).dump(2) << '\n';
      else print_report_text(report, out);
      return kOk;
    }

    if (*surface) {
      const GridSpec grid{surface_resolution, p_range, q_range};
      try {
        grid.validate();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const auto quantity = *parse_surface_quantity(quantity_name);
      emit(surface_out, surface_csv(evaluate_surface(quantity, grid)), out);
      return kOk;
    }

    if (*slice) {
      if (steps < 2) throw UsageError("slice: --steps must be at least 2");
      emit(slice_out, slice_csv(evaluate_diagonal_slice(steps)), out);
      return kOk;
    }

    if (*thresholds) {
      const auto p0 = threshold_p0();
      const auto p1 = threshold_p1();
      if (thresholds_format == "json") {
        out << to_json(p0, p1).dump(2) << '\n';
      } else {
        print_threshold_text(p0, out);
        print_threshold_text(p1, out);
      }
      return kOk;
    }

    if (*verify) {
      const GridSpec grid{verify_resolution, {}, {}};
      try {
        grid.validate();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      oracle::VerifyOptions options;
      options.tol = tol;
      options.seed = seed;
      const auto report = oracle::verify_all(grid, options);
      if (verify_format == "json") {
        out << to_json(report).dump(2) << '\n';
      } else {
        out << "grid " << grid.resolution << "x" << grid.resolution << ", tol "
            << format_double(tol) << ", seed " << seed << '\n';
        for (const auto& c : report.checks) {
          out << (c.passed ? "PASS " : "FAIL ") << c.name << " max_deviation="
              << format_double(c.max_deviation) << " at (p=" << format_double(c.worst_point.p)
              << ", q=" << format_double(c.worst_point.q) << ") over " << c.evaluations
              << " points\n";
        }
      }
      if (!report.all_passed()) {
        err << "verification failed:";
        for (const auto& name : report.failed()) err << ' ' << name;
        err << '\n';
        return kVerificationFailed;
      }
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
  return kUsageError;
}

}  // namespace qswitch::cli
