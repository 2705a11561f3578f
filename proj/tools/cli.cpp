// Copyright 2026 The zne-mixed Authors
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

#include "cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include <filesystem>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "zne/config_io.hpp"
#include "zne/dataset_io.hpp"
#include "zne/errors.hpp"
#include "zne/experiment.hpp"
#include "zne/resource_model.hpp"

namespace zne::cli {

namespace fs = std::filesystem;

namespace {

struct GlobalFlags {
  std::optional<std::string> config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> output;
  std::optional<std::size_t> threads;
};

// Built-in defaults, then the config file, then command-line flags.
io::ConfigFile resolve_config(const GlobalFlags& flags) {
  io::ConfigFile cfg = flags.config ? io::load_config(*flags.config) : io::ConfigFile{};
  if (flags.seed) cfg.run.seed = *flags.seed;
  if (flags.threads) cfg.run.threads = *flags.threads;
  if (flags.output) cfg.output = *flags.output;
  cfg.run.validate();
  return cfg;
}

void ensure_directory(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw IoError(fmt::format("cannot create output directory '{}'", dir.string()));
  }
}

std::vector<std::vector<int>> parse_subsets(const std::string& spec) {
  std::vector<std::vector<int>> subsets;
  std::stringstream groups(spec);
  for (std::string group; std::getline(groups, group, ';');) {
    std::vector<int> subset;
    std::stringstream items(group);
    for (std::string item; std::getline(items, item, ',');) {
      try {
        std::size_t used = 0;
        subset.push_back(std::stoi(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw ConfigError(fmt::format("invalid regime '{}' in --subsets", item));
      }
    }
    if (subset.empty()) throw ConfigError("empty regime subset in --subsets");
    subsets.push_back(std::move(subset));
  }
  if (subsets.empty()) throw ConfigError("--subsets is empty");
  return subsets;
}

std::string subset_label(const std::vector<int>& subset) {
  return fmt::format("{}", fmt::join(subset, "-"));
}

int cmd_tables(const GlobalFlags& flags, const std::vector<double>& gammas,
               const std::vector<std::size_t>& orders, std::ostream& out) {
  const auto tables = resource::emit_tables(gammas, orders);
  const auto text = resource::format_tables_text(tables);
  out << text;
  if (flags.output) {
    const fs::path dir(*flags.output);
    ensure_directory(dir);
    io::write_text_file(dir / "tables.txt", text);
    io::write_text_file(dir / "tau_ratio.csv",
                        resource::format_table_csv(tables, resource::TableKind::kTauRatio));
    io::write_text_file(dir / "mixed_variance.csv",
                        resource::format_table_csv(tables, resource::TableKind::kMixedVariance));
    out << fmt::format("wrote {}/{{tables.txt,tau_ratio.csv,mixed_variance.csv}}\n", dir.string());
  }
  return kOk;
}

int cmd_prefactor(double gamma, std::size_t order, std::vector<double> multipliers,
                  double tau_logical, double tau_physical, std::ostream& out) {
  if (multipliers.empty()) multipliers = resource::default_multipliers(order);
  if (multipliers.size() != order + 1) {
    throw ConfigError(fmt::format("--multipliers needs {} values for order {}", order + 1, order));
  }
  const auto logical = resource::ScheduleSpec::all_logical(multipliers);
  std::vector<double> physical(multipliers.begin() + 1, multipliers.end());
  const auto mixed = resource::ScheduleSpec::mixed(multipliers.front(), physical);
  for (double& m : physical) m /= multipliers.front();

  const double p1 = resource::prefactor_all_logical(order, multipliers);
  const double p2 = resource::prefactor_mixed(order, gamma, physical);
  const resource::RuntimeModel runtime{tau_logical, tau_physical};
  const double ideal =
      resource::runtime_ratio(logical, mixed, gamma, runtime, resource::RuntimeLimit::kIdealized);
  const double exact =
      resource::runtime_ratio(logical, mixed, gamma, runtime, resource::RuntimeLimit::kExact);

  out << fmt::format("gamma                      {}\n", gamma);
  out << fmt::format("order K                    {}\n", order);
  out << fmt::format("multipliers                [{}]\n", fmt::join(multipliers, ", "));
  out << fmt::format("#1 (all logical)           {:.6g}\n", p1);
  out << fmt::format("#2 (mixed)                 {:.6g}\n", p2);
  out << fmt::format("tau1/tau2 (idealized)      {:.6g}\n", ideal);
  out << fmt::format("tau1/tau2 (tau_p/tau_l={:.3g}) {:.6g}\n", tau_physical / tau_logical, exact);
  return kOk;
}

int cmd_simulate(const GlobalFlags& flags, std::ostream& out) {
  const auto cfg = resolve_config(flags);
  const fs::path path = cfg.output.value_or("dataset.csv");
  const auto records = experiment::run_regime_sweep(cfg.run);
  io::save_dataset(path, records);
  out << fmt::format("wrote {} records ({} states x {} regimes) to {}\n", records.size(),
                     cfg.run.resolved_states().size(), experiment::regimes(cfg.run).size(),
                     path.string());
  return kOk;
}

int cmd_analyze(const GlobalFlags& flags, std::optional<std::string> dataset,
                const std::string& subsets_spec, std::size_t order, std::size_t bins,
                std::ostream& out) {
  auto cfg = resolve_config(flags);
  if (!dataset) dataset = cfg.dataset;
  if (!dataset) throw ConfigError("analyze needs a dataset (--dataset or config 'dataset')");
  const fs::path out_dir = cfg.output.value_or("analysis");
  const auto subsets = parse_subsets(subsets_spec);

  const auto records = io::load_dataset(*dataset);
  if (records.empty()) throw IncompleteDatasetError("dataset has no records");
  std::set<std::size_t> seen;
  cfg.run.states.clear();
  for (const auto& r : records) {
    if (seen.insert(r.state).second) cfg.run.states.push_back(r.state);
  }
  cfg.run.validate();
  const auto reference = experiment::noiseless_reference(cfg.run);

  std::vector<io::SubsetAnalysis> analyses;
  for (const auto& subset : subsets) {
    io::SubsetAnalysis a;
    a.regime_subset = subset;
    a.reports = experiment::extrapolate_subset(records, subset, order, reference);
    a.summary = experiment::aggregate_statistics(a.reports);
    analyses.push_back(std::move(a));
  }

  ensure_directory(out_dir);
  io::write_text_file(out_dir / "reports.json", io::analysis_to_json(analyses, order));
  std::string error_hist = "subset,bin_lo,bin_hi,count\n";
  std::string variance_hist = error_hist;
  for (const auto& a : analyses) {
    std::vector<double> errors, variances;
    for (const auto& r : a.reports) {
      errors.push_back(r.error);
      variances.push_back(r.variance);
    }
    const auto label = subset_label(a.regime_subset);
    for (const auto& b : experiment::histogram(errors, bins)) {
      error_hist += fmt::format("{},{},{},{}\n", label, b.lo, b.hi, b.count);
    }
    for (const auto& b : experiment::histogram(variances, bins)) {
      variance_hist += fmt::format("{},{},{},{}\n", label, b.lo, b.hi, b.count);
    }
  }
  io::write_text_file(out_dir / "error_histogram.csv", error_hist);
  io::write_text_file(out_dir / "variance_histogram.csv", variance_hist);

  out << fmt::format("{:>10} {:>12} {:>12} {:>12} {:>12}\n", "subset", "mean_err", "err_var",
                     "mean|err|", "mean_var");
  for (const auto& a : analyses) {
    const auto& s = a.summary;
    out << fmt::format("{:>10} {:>12.4e} {:>12.4e} {:>12.4e} {:>12.4e}\n",
                       subset_label(a.regime_subset), s.mean_error, s.error_variance,
                       s.mean_abs_error, s.variance.mean);
  }
  out << fmt::format("wrote {}/{{reports.json,error_histogram.csv,variance_histogram.csv}}\n",
                     out_dir.string());
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero-noise extrapolation from mixed physical/logical data", "zne"};
  app.require_subcommand(1);

  GlobalFlags flags;
  app.add_option("--config", flags.config, "JSON run configuration");
  app.add_option("--seed", flags.seed, "Base RNG seed (overrides config)");
  app.add_option("--output", flags.output, "Output file (simulate) or directory");
  app.add_option("--threads", flags.threads, "Worker threads, 0 = all cores")
      ->check(CLI::NonNegativeNumber);

  auto* tables = app.add_subcommand("tables", "Runtime-ratio and mixed-variance tables");
  tables->fallthrough();
  std::vector<double> gammas{0.01, 0.1, 0.5, 0.9};
  std::vector<std::size_t> orders{1, 2, 3, 4, 5};
  tables->add_option("--gammas", gammas, "Suppression factors")->delimiter(',');
  tables->add_option("--orders", orders, "Polynomial orders")->delimiter(',');

  auto* prefactor = app.add_subcommand("prefactor", "Variance prefactors and runtime ratio");
  prefactor->fallthrough();
  double gamma = 0.1;
  std::size_t order = 1;
  std::vector<double> multipliers;
  double tau_logical = 1.0;
  double tau_physical = 0.01;
  prefactor->add_option("--gamma", gamma, "Suppression factor")->capture_default_str();
  prefactor->add_option("--order", order, "Polynomial order K")->capture_default_str();
  prefactor->add_option("--multipliers", multipliers, "M_0..M_K (default 1..K+1)")
      ->delimiter(',');
  prefactor->add_option("--tau-logical", tau_logical, "Logical shot time")->capture_default_str();
  prefactor->add_option("--tau-physical", tau_physical, "Physical shot time")
      ->capture_default_str();

  auto* simulate = app.add_subcommand("simulate", "Run the six-regime sweep, write a dataset CSV");
  simulate->fallthrough();

  auto* analyze = app.add_subcommand("analyze", "Extrapolate a dataset and summarize errors");
  analyze->fallthrough();
  std::optional<std::string> dataset;
  std::string subsets = "1,2,3;4,5,6;1,4,5";
  std::size_t analyze_order = 2;
  std::size_t bins = 16;
  analyze->add_option("dataset,--dataset", dataset, "Dataset CSV");
  analyze->add_option("--subsets", subsets, "Regime subsets, e.g. 1,2,3;4,5,6")
      ->capture_default_str();
  analyze->add_option("--order", analyze_order, "Richardson order K")->capture_default_str();
  analyze->add_option("--bins", bins, "Histogram bins")->capture_default_str();

  std::vector<std::string> argv_store{"zne"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }

  try {
    if (*tables) return cmd_tables(flags, gammas, orders, out);
    if (*prefactor) {
      return cmd_prefactor(gamma, order, multipliers, tau_logical, tau_physical, out);
    }
    if (*simulate) return cmd_simulate(flags, out);
    if (*analyze) return cmd_analyze(flags, dataset, subsets, analyze_order, bins, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIoError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kDataError;
  } catch (const IncompleteDatasetError& e) {
    err << "dataset error: " << e.what() << '\n';
    return kDataError;
  } catch (const Error& e) {
    err << "numerical error: " << e.what() << '\n';
    return kNumericalError;
  }
  return kConfigError;
}

}  // namespace zne::cli
