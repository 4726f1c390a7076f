// Copyright 2026 The lexboost Authors
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

#include "lexboost/cli.hpp"

#include <filesystem>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "lexboost/corpus.hpp"
#include "lexboost/errors.hpp"
#include "lexboost/eval.hpp"
#include "lexboost/io_util.hpp"
#include "lexboost/ocr_pool.hpp"
#include "lexboost/power_law.hpp"
#include "lexboost/rescore.hpp"
#include "lexboost/rf_model.hpp"

namespace lexboost::cli {

namespace {

using nlohmann::json;

// One JSON config file may carry settings for the whole pipeline; each
// subcommand picks the keys it understands. Command-line flags win.
const std::set<std::string>& known_config_keys() {
  static const std::set<std::string> keys{
      "ltd",  "ocr",    "mode",     "out",  "rf",
      "fit",  "nbest",  "lambda",   "k",    "exclude_sub_one",
      "ref",  "baseline", "rescored"};
  return keys;
}

json load_config(const std::optional<std::string>& path) {
  if (!path) return json::object();
  const std::string content = read_file(*path);
  json j;
  try {
    j = json::parse(content);
  } catch (const json::exception& e) {
    throw ConfigError("config '" + *path + "': invalid JSON: " + e.what());
  }
  if (!j.is_object()) {
    throw ConfigError("config '" + *path + "': expected a JSON object");
  }
  for (const auto& [key, value] : j.items()) {
    if (!known_config_keys().contains(key)) {
      throw ConfigError("config '" + *path + "': unknown key '" + key + "'");
    }
  }
  return j;
}

template <typename T>
void fill_from_config(std::optional<T>& dst, const json& cfg,
                      const char* key) {
  if (dst || !cfg.contains(key)) return;
  try {
    dst = cfg.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("config key '") + key + "': wrong type");
  }
}

void fill_paths_from_config(std::vector<std::string>& dst, const json& cfg,
                            const char* key) {
  if (!dst.empty() || !cfg.contains(key)) return;
  const json& v = cfg.at(key);
  if (v.is_string()) {
    dst.push_back(v.get<std::string>());
  } else if (v.is_array()) {
    for (const auto& item : v) {
      if (!item.is_string()) {
        throw ConfigError(std::string("config key '") + key +
                          "': expected strings");
      }
      dst.push_back(item.get<std::string>());
    }
  } else {
    throw ConfigError(std::string("config key '") + key +
                      "': expected string or array of strings");
  }
}

template <typename T>
T require(const std::optional<T>& value, const char* flag) {
  if (!value) {
    throw ConfigError(std::string("missing required option ") + flag);
  }
  return *value;
}

void require_input(const std::string& path) {
  if (!std::filesystem::exists(path)) {
    throw IoError("input file not found: '" + path + "'");
  }
}

std::istringstream open_text(const std::string& path) {
  return std::istringstream(read_file(path));
}

bool resolve_exclude_sub_one(bool exclude_flag, bool include_flag,
                             const json& cfg) {
  if (exclude_flag && include_flag) {
    throw ConfigError(
        "--exclude-sub-one and --include-sub-one are mutually exclusive");
  }
  if (exclude_flag) return true;
  if (include_flag) return false;
  if (cfg.contains("exclude_sub_one")) {
    if (!cfg.at("exclude_sub_one").is_boolean()) {
      throw ConfigError("config key 'exclude_sub_one': expected a boolean");
    }
    return cfg.at("exclude_sub_one").get<bool>();
  }
  return true;
}

struct BuildRfArgs {
  std::optional<std::string> ltd;
  std::vector<std::string> ocr;
  std::optional<std::string> mode;
  std::optional<std::string> out;
  std::optional<std::string> config;
};

void run_build_rf(const BuildRfArgs& args) {
  const json cfg = load_config(args.config);
  auto ltd_path = args.ltd;
  auto mode_name = args.mode;
  auto out_path = args.out;
  auto ocr_paths = args.ocr;
  fill_from_config(ltd_path, cfg, "ltd");
  fill_from_config(mode_name, cfg, "mode");
  fill_from_config(out_path, cfg, "out");
  fill_paths_from_config(ocr_paths, cfg, "ocr");

  const std::string ltd = require(ltd_path, "--ltd");
  const std::string out = require(out_path, "--out");
  if (ocr_paths.empty()) {
    throw ConfigError("missing required option --ocr");
  }
  const RfMode mode = parse_rf_mode(mode_name.value_or("method1+2"));

  require_input(ltd);
  for (const auto& p : ocr_paths) require_input(p);

  auto ltd_stream = open_text(ltd);
  const FrequencyTable table = load_frequency_table(ltd_stream);

  std::vector<OcrDocument> docs;
  for (const auto& p : ocr_paths) {
    auto stream = open_text(p);
    auto batch =
        read_ocr_dump(stream, std::filesystem::path(p).stem().string());
    docs.insert(docs.end(), std::make_move_iterator(batch.begin()),
                std::make_move_iterator(batch.end()));
  }
  const WordPool pool = build_pool(docs);
  const RfTable rf = compute_rf_table(table, pool, mode);

  std::ostringstream csv;
  write_rf_csv(rf, csv);
  atomic_write_file(out, csv.str());
}

struct FitArgs {
  std::optional<std::string> rf;
  std::optional<std::string> out;
  bool exclude_flag = false;
  bool include_flag = false;
  std::optional<std::string> config;
};

void run_fit(const FitArgs& args) {
  const json cfg = load_config(args.config);
  auto rf_path = args.rf;
  auto out_path = args.out;
  fill_from_config(rf_path, cfg, "rf");
  fill_from_config(out_path, cfg, "out");
  const bool exclude =
      resolve_exclude_sub_one(args.exclude_flag, args.include_flag, cfg);

  const std::string rf = require(rf_path, "--rf");
  const std::string out = require(out_path, "--out");
  require_input(rf);

  auto stream = open_text(rf);
  const RfTable table = read_rf_csv(stream);
  const PowerLawFit fit = fit_power_law(table, exclude);

  const json j{{"k", fit.k},           {"intercept", fit.intercept},
               {"rse", fit.rse},       {"dof", fit.dof},
               {"n_points", fit.n_points}, {"log_base", fit.log_base}};
  atomic_write_file(out, j.dump(2) + "\n");
}

struct PlotDataArgs {
  std::optional<std::string> rf;
  std::optional<std::string> out;
  bool exclude_flag = false;
  bool include_flag = false;
  std::optional<std::string> config;
};

void run_plot_data(const PlotDataArgs& args) {
  const json cfg = load_config(args.config);
  auto rf_path = args.rf;
  auto out_path = args.out;
  fill_from_config(rf_path, cfg, "rf");
  fill_from_config(out_path, cfg, "out");
  const bool exclude =
      resolve_exclude_sub_one(args.exclude_flag, args.include_flag, cfg);

  const std::string rf = require(rf_path, "--rf");
  const std::string out = require(out_path, "--out");
  require_input(rf);

  auto stream = open_text(rf);
  const RfTable table = read_rf_csv(stream);

  std::ostringstream csv;
  csv << "log10_rank,log10_rf\n";
  for (const auto& [x, y] : plot_points(table, exclude)) {
    csv << format_double_17(x) << ',' << format_double_17(y) << '\n';
  }
  atomic_write_file(out, csv.str());
}

struct RescoreArgs {
  std::optional<std::string> rf;
  std::optional<std::string> fit;
  std::optional<std::string> nbest;
  std::optional<std::string> out;
  std::optional<double> lambda;
  std::optional<double> k;
  std::optional<std::string> config;
};

double load_fitted_k(const std::string& fit_path) {
  require_input(fit_path);
  json j;
  try {
    j = json::parse(read_file(fit_path));
  } catch (const json::exception& e) {
    throw ParseError("fit report '" + fit_path + "': invalid JSON: " +
                     e.what());
  }
  if (!j.is_object() || !j.contains("k") || !j.at("k").is_number()) {
    throw ParseError("fit report '" + fit_path +
                     "': expected an object with a numeric 'k'");
  }
  return j.at("k").get<double>();
}

void run_rescore(const RescoreArgs& args) {
  const json cfg = load_config(args.config);
  auto rf_path = args.rf;
  auto fit_path = args.fit;
  auto nbest_path = args.nbest;
  auto out_path = args.out;
  auto lambda = args.lambda;
  auto k_override = args.k;
  fill_from_config(rf_path, cfg, "rf");
  fill_from_config(fit_path, cfg, "fit");
  fill_from_config(nbest_path, cfg, "nbest");
  fill_from_config(out_path, cfg, "out");
  fill_from_config(lambda, cfg, "lambda");
  fill_from_config(k_override, cfg, "k");

  const std::string rf = require(rf_path, "--rf");
  const std::string nbest = require(nbest_path, "--nbest");
  const std::string out = require(out_path, "--out");
  require_input(rf);
  require_input(nbest);

  RescoreConfig config;
  config.lambda_ocr = lambda.value_or(1.0);
  if (config.lambda_ocr < 0) {
    throw ConfigError("--lambda must be >= 0");
  }
  if (k_override) {
    config.k = *k_override;
  } else if (fit_path) {
    config.k = load_fitted_k(*fit_path);
  } else {
    throw ConfigError("rescore needs either --fit or --k");
  }
  if (config.k >= 0) {
    throw ConfigError("slope k must be negative, got " +
                      std::to_string(config.k));
  }

  auto rf_stream = open_text(rf);
  const RfTable table = read_rf_csv(rf_stream);
  for (const RfRow& row : table.rows()) {
    if (row.rf < 1.0) {
      throw ValidationError(
          "rescore needs a method1+2 table (every rf >= 1); found rf = " +
          format_double_17(row.rf) + " for '" + row.word +
          "', rebuild with --mode method1+2");
    }
  }

  auto nbest_stream = open_text(nbest);
  const auto lists = read_nbest_jsonl(nbest_stream);
  std::vector<NBestList> rescored;
  rescored.reserve(lists.size());
  for (const NBestList& list : lists) {
    rescored.push_back(rescore_nbest(list, table, config));
  }

  std::ostringstream jsonl;
  write_nbest_jsonl(rescored, jsonl);
  atomic_write_file(out, jsonl.str());
}

struct EvalArgs {
  std::optional<std::string> ref;
  std::optional<std::string> baseline;
  std::optional<std::string> rescored;
  std::optional<std::string> out;
  std::optional<std::string> config;
};

void run_eval(const EvalArgs& args) {
  const json cfg = load_config(args.config);
  auto ref_path = args.ref;
  auto baseline_path = args.baseline;
  auto rescored_path = args.rescored;
  auto out_path = args.out;
  fill_from_config(ref_path, cfg, "ref");
  fill_from_config(baseline_path, cfg, "baseline");
  fill_from_config(rescored_path, cfg, "rescored");
  fill_from_config(out_path, cfg, "out");

  const std::string ref = require(ref_path, "--ref");
  const std::string baseline = require(baseline_path, "--baseline");
  const std::string rescored = require(rescored_path, "--rescored");
  const std::string out = require(out_path, "--out");
  require_input(ref);
  require_input(baseline);
  require_input(rescored);

  auto ref_stream = open_text(ref);
  const auto refs = read_references_jsonl(ref_stream);
  auto base_stream = open_text(baseline);
  const auto base_lists = read_nbest_jsonl(base_stream);
  auto resc_stream = open_text(rescored);
  const auto resc_lists = read_nbest_jsonl(resc_stream);

  const EvalReport report = compare_runs(refs, base_lists, resc_lists);

  std::ostringstream buf;
  write_report_json(report, buf);
  atomic_write_file(out, buf.str());
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{
      "Boosts domain terminology in ASR n-best lists using word "
      "frequency statistics from OCR text",
      "lexboost"};
  app.require_subcommand(1);

  BuildRfArgs build_args;
  CLI::App* build = app.add_subcommand(
      "build-rf", "Build a relative-frequency table from an LTD and OCR dumps");
  build->add_option("--ltd", build_args.ltd,
                    "Unigram count file, word<TAB>count per line");
  build->add_option("--ocr", build_args.ocr,
                    "OCR dump (JSON Lines or plain text); repeatable");
  build->add_option("--mode", build_args.mode,
                    "legacy|method1|method1+2 (default method1+2)");
  build->add_option("--out", build_args.out, "Output RF CSV");
  build->add_option("--config", build_args.config, "JSON config file");

  FitArgs fit_args;
  CLI::App* fit = app.add_subcommand(
      "fit", "Fit the rank-frequency power law on an RF table");
  fit->add_option("--rf", fit_args.rf, "RF CSV from build-rf");
  fit->add_option("--out", fit_args.out, "Output fit report JSON");
  fit->add_flag("--exclude-sub-one", fit_args.exclude_flag,
                "Drop rows with rf_raw < 1 before fitting (default)");
  fit->add_flag("--include-sub-one", fit_args.include_flag,
                "Keep rows with rf_raw < 1");
  fit->add_option("--config", fit_args.config, "JSON config file");

  PlotDataArgs plot_args;
  CLI::App* plot = app.add_subcommand(
      "plot-data", "Emit log-log plot points for the rank-frequency curve");
  plot->add_option("--rf", plot_args.rf, "RF CSV from build-rf");
  plot->add_option("--out", plot_args.out, "Output CSV of log10 points");
  plot->add_flag("--exclude-sub-one", plot_args.exclude_flag,
                 "Drop rows with rf_raw < 1 (default)");
  plot->add_flag("--include-sub-one", plot_args.include_flag,
                 "Keep rows with rf_raw < 1");
  plot->add_option("--config", plot_args.config, "JSON config file");

  RescoreArgs rescore_args;
  CLI::App* rescore = app.add_subcommand(
      "rescore", "Rescore n-best lists with the OCR-derived score");
  rescore->add_option("--rf", rescore_args.rf, "RF CSV (method1+2 mode)");
  rescore->add_option("--fit", rescore_args.fit,
                      "Fit report JSON supplying the slope k");
  rescore->add_option("--k", rescore_args.k,
                      "Override the slope (must be negative)");
  rescore->add_option("--nbest", rescore_args.nbest, "Input n-best JSONL");
  rescore->add_option("--lambda", rescore_args.lambda,
                      "OCR score weight (default 1.0)");
  rescore->add_option("--out", rescore_args.out, "Output rescored JSONL");
  rescore->add_option("--config", rescore_args.config, "JSON config file");

  EvalArgs eval_args;
  CLI::App* eval = app.add_subcommand(
      "eval", "Compare top-1 word error rate of two runs against references");
  eval->add_option("--ref", eval_args.ref, "References JSONL");
  eval->add_option("--baseline", eval_args.baseline, "Baseline n-best JSONL");
  eval->add_option("--rescored", eval_args.rescored, "Rescored n-best JSONL");
  eval->add_option("--out", eval_args.out, "Output report JSON");
  eval->add_option("--config", eval_args.config, "JSON config file");

  try {
    app.parse(argc, argv);
    if (build->parsed()) run_build_rf(build_args);
    if (fit->parsed()) run_fit(fit_args);
    if (plot->parsed()) run_plot_data(plot_args);
    if (rescore->parsed()) run_rescore(rescore_args);
    if (eval->parsed()) run_eval(eval_args);
    return 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << '\n';
    return 1;
  }
}

int run(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("lexboost");
  for (const auto& arg : args) argv.push_back(arg.c_str());
  return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace lexboost::cli
