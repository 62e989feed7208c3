#include "gecstrat/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "gecstrat/error.hpp"
#include "gecstrat/report.hpp"

namespace gecstrat {
namespace cli {

using json = nlohmann::json;
namespace fs = std::filesystem;

OutputFormat parse_format(const std::string& text) {
  if (text == "text") return OutputFormat::Text;
  if (text == "tsv") return OutputFormat::Tsv;
  if (text == "json") return OutputFormat::Json;
  throw ConfigError("--format must be text, tsv or json, got '" + text + "'");
}

std::vector<CorpusFile> select_corpus(const Selection& sel, const RunConfig& cfg) {
  std::optional<fs::path> root = sel.data ? sel.data : cfg.data_dir;
  if (!root) throw ConfigError("no data selected: pass --data or set GECSTRAT_DATA_DIR");
  std::optional<ProficiencyLevel> forced;
  if (sel.level) {
    forced = parse_level(*sel.level);
    if (!forced) throw ConfigError("--level must be one of A, B, C, N; got '" + *sel.level + "'");
  }
  return discover_corpus(*root, cfg.level_rules, forced, sel.glob.value_or(cfg.file_glob));
}

void apply_scoring_flags(const ScoringOptions& flags, RunConfig& cfg) {
  if (flags.betas) cfg.betas = parse_betas(*flags.betas);
  if (flags.mode) cfg.mode = parse_match_mode(*flags.mode);
  if (flags.lexicon) cfg.lexicon_path = *flags.lexicon;
  for (const auto& s : flags.labels) {
    try {
      validate_selector(s);
    } catch (const Error& e) {
      throw ConfigError(std::string("--labels: ") + e.what());
    }
  }
}

json scoring_snapshot(const RunConfig& cfg) {
  std::vector<double> betas = cfg.betas;
  std::sort(betas.begin(), betas.end());
  betas.erase(std::unique(betas.begin(), betas.end()), betas.end());
  return {
      {"mode", match_mode_name(cfg.mode)},
      {"betas", betas},
      {"lexicon", cfg.lexicon_path ? cfg.lexicon_path->filename().string() : std::string("bundled")},
      {"edit_extraction",
       {{"substitute_base", cfg.costs.substitute_base},
        {"insert", cfg.costs.insert},
        {"delete", cfg.costs.deletion},
        {"case_only_substitute", cfg.costs.case_only_substitute},
        {"transpose_per_token", cfg.costs.transpose_per_token}}},
  };
}

json inputs_snapshot(const std::vector<CorpusFile>& files) {
  json out = json::array();
  for (const auto& f : files) {
    out.push_back({{"file", f.path.filename().string()}, {"level", std::string(1, level_letter(f.level))}});
  }
  return out;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot write " + path.string());
  f << text;
  if (!f.flush()) throw IoError("failed writing " + path.string());
}

void emit(const Output& output, const std::string& text, std::ostream& out) {
  if (output.file) {
    write_file(*output.file, text);
  } else {
    out << text;
  }
}

std::string render_report(const StratifiedReport& report, const json& snapshot, const ScoringOptions& flags,
                          OutputFormat format) {
  switch (format) {
    case OutputFormat::Json:
      return dump_report_json(report_to_json(report, snapshot));
    case OutputFormat::Tsv:
      return report_to_tsv(report);
    case OutputFormat::Text:
      break;
  }
  return report_to_text(report, flags.labels);
}

namespace {

void add_selection(CLI::App* cmd, Selection& sel, const char* data_help) {
  cmd->add_option("--data", sel.data, data_help);
  cmd->add_option("--level", sel.level, "Force the proficiency level (A, B, C or N) of every input file");
  cmd->add_option("--glob", sel.glob, "File-name glob for directory inputs (default *.m2)");
}

void add_output(CLI::App* cmd, Output& out) {
  cmd->add_option("--format", out.format, "Output format: text, tsv or json")->capture_default_str();
  cmd->add_option("--output", out.file, "Write the result to this file instead of stdout");
}

void add_scoring(CLI::App* cmd, ScoringOptions& s) {
  cmd->add_option("--betas", s.betas, "Comma-separated F-beta weights, e.g. 0.5,1,2");
  cmd->add_option("--labels", s.labels, "Label-by-label table for a type, M:*/R:*/U:* or *; repeatable");
  cmd->add_option("--mode", s.mode, "Edit matching: correction or detection");
  cmd->add_option("--lexicon", s.lexicon, "TSV lexicon merged over the bundled one");
}

}  // namespace
}  // namespace cli

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const EnvLookup& env) {
  using namespace cli;
  CLI::App app{"Proficiency-stratified GEC evaluation and prompting toolkit", "gecstrat"};
  app.require_subcommand(1);
  std::optional<fs::path> config_file;
  app.add_option("--config", config_file, "TOML config file (default $GECSTRAT_CONFIG)");

  StatsOptions stats;
  auto* stats_cmd = app.add_subcommand("stats", "Corpus size, tokens per sentence and error-type distribution per level");
  add_selection(stats_cmd, stats.selection, "M2 file or directory (default $GECSTRAT_DATA_DIR)");
  add_output(stats_cmd, stats.output);
  stats_cmd->add_option("--top", stats.top, "Number of most frequent error types per level");
  stats_cmd->add_option("--policy", stats.policy, "Annotators counted: first or all");

  EvaluateOptions evaluate;
  auto* eval_cmd = app.add_subcommand("evaluate", "Score hypotheses against reference M2 annotations");
  add_selection(eval_cmd, evaluate.selection, "Reference M2 file or directory (default $GECSTRAT_DATA_DIR)");
  eval_cmd->add_option("--ref", evaluate.selection.data, "Alias of --data");
  eval_cmd->add_option("--hyp", evaluate.hypothesis, "Hypotheses: one corrected sentence per line, or an M2 file")
      ->required();
  eval_cmd->add_option("--hyp-format", evaluate.hypothesis_format, "auto, text or m2")->capture_default_str();
  add_output(eval_cmd, evaluate.output);
  add_scoring(eval_cmd, evaluate.scoring);

  CorrectOptions correct;
  auto* correct_cmd = app.add_subcommand("correct", "Correct a corpus with a completion endpoint, a mock or a replay");
  add_selection(correct_cmd, correct.selection, "Input M2 file or directory (default $GECSTRAT_DATA_DIR)");
  add_output(correct_cmd, correct.output);
  add_scoring(correct_cmd, correct.scoring);
  auto* mock_opt = correct_cmd->add_option("--mock", correct.mock, "identity, echo_reference or drop_token:SEED");
  auto* replay_opt = correct_cmd->add_option("--replay", correct.replay, "Answer from a recorded JSONL transcript");
  replay_opt->excludes(mock_opt);
  correct_cmd->add_option("--record", correct.record, "Append every exchange to this JSONL transcript");
  correct_cmd->add_option("--shots", correct.shots, "Number of exemplars in the prompt (0-4)");
  correct_cmd->add_option("--endpoint", correct.endpoint, "Completion endpoint base URL");
  correct_cmd->add_option("--model", correct.model, "Model identifier sent to the endpoint");
  correct_cmd->add_option("--max-in-flight", correct.max_in_flight, "Concurrent requests");
  correct_cmd->add_option("--out-dir", correct.out_dir, "Directory for hypotheses, manifest and report")
      ->capture_default_str();
  correct_cmd->add_option("--checkpoint", correct.checkpoint, "Checkpoint file (default <out-dir>/checkpoint.jsonl)");
  correct_cmd->add_flag("--no-checkpoint", correct.no_checkpoint, "Do not read or write a checkpoint");
  correct_cmd->add_flag("--evaluate", correct.evaluate, "Score the hypotheses against the input annotations");

  ReportOptions report;
  auto* report_cmd = app.add_subcommand("report", "Compare two JSON reports stratum by stratum");
  report_cmd->add_option("left", report.left, "Baseline report JSON")->required();
  report_cmd->add_option("right", report.right, "Report JSON compared against the baseline")->required();
  add_output(report_cmd, report.output);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitIoError;
  }

  try {
    RunConfig cfg = load_run_config(config_file, env);
    if (stats_cmd->parsed()) return cmd_stats(stats, std::move(cfg), out);
    if (eval_cmd->parsed()) return cmd_evaluate(evaluate, std::move(cfg), out);
    if (correct_cmd->parsed()) return cmd_correct(correct, std::move(cfg), env, out);
    return cmd_report(report, out);
  } catch (const IoError& e) {
    err << "gecstrat: " << e.what() << '\n';
    return kExitIoError;
  } catch (const ConfigError& e) {
    err << "gecstrat: " << e.what() << '\n';
    return kExitIoError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "gecstrat: " << e.what() << '\n';
    return kExitIoError;
  } catch (const std::exception& e) {
    err << "gecstrat: " << e.what() << '\n';
    return kExitDataError;
  }
}

}  // namespace gecstrat
