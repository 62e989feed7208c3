#include <memory>
#include <ostream>

#include "commands.hpp"
#include "gecstrat/batch.hpp"
#include "gecstrat/error.hpp"
#include "gecstrat/report.hpp"

namespace gecstrat::cli {

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

json prompt_snapshot(const PromptConfig& p) {
  json exemplars = json::array();
  for (int i = 0; i < p.n_shots; ++i) {
    const auto& ex = p.exemplars[static_cast<std::size_t>(i)];
    exemplars.push_back({ex.ungrammatical, ex.grammatical});
  }
  return {
      {"instruction", p.instruction},
      {"n_shots", p.n_shots},
      {"exemplars", std::move(exemplars)},
      {"delimiter_left", p.delimiter_left},
      {"delimiter_right", p.delimiter_right},
      {"max_model_token_length", p.token_budget()},
      {"temperature", p.sampling.temperature},
      {"max_tokens", p.sampling.max_tokens},
  };
}

}  // namespace

int cmd_correct(const CorrectOptions& opts, RunConfig cfg, const EnvLookup& env, std::ostream& out) {
  const auto format = parse_format(opts.output.format);
  apply_scoring_flags(opts.scoring, cfg);
  if (opts.shots) cfg.prompt.n_shots = *opts.shots;
  if (opts.endpoint) cfg.endpoint.base_url = *opts.endpoint;
  if (opts.model) cfg.endpoint.model = *opts.model;
  if (opts.max_in_flight) cfg.endpoint.max_in_flight = *opts.max_in_flight;
  cfg.prompt.validate();

  // Resolve the corrector before touching data so misconfiguration fails fast.
  std::unique_ptr<Corrector> base;
  if (opts.mock) {
    base = make_mock_corrector(*opts.mock);
  } else if (opts.replay) {
    base = std::make_unique<ReplayCorrector>(*opts.replay);
  } else {
    base = std::make_unique<HttpCorrector>(cfg.endpoint, env);
  }
  std::unique_ptr<RecordingCorrector> recorder;
  Corrector* corrector = base.get();
  if (opts.record) {
    recorder = std::make_unique<RecordingCorrector>(*base, *opts.record);
    corrector = recorder.get();
  }

  const auto files = select_corpus(opts.selection, cfg);
  const auto refs = load_corpus(files);
  std::vector<M2Sentence> corpus;
  corpus.reserve(refs.size());
  for (const auto& r : refs) corpus.push_back(r.sentence);

  std::error_code ec;
  fs::create_directories(opts.out_dir, ec);
  if (ec) throw IoError("cannot create output directory " + opts.out_dir.string() + ": " + ec.message());

  BatchOptions batch;
  batch.model = cfg.endpoint.model;
  batch.max_in_flight = cfg.endpoint.max_in_flight;
  batch.max_attempts = cfg.endpoint.max_attempts;
  batch.backoff_base_seconds = cfg.endpoint.backoff_base_seconds;
  if (!opts.no_checkpoint) batch.checkpoint = opts.checkpoint.value_or(opts.out_dir / "checkpoint.jsonl");
  const auto run = run_batch(corpus, *corrector, cfg.prompt, batch);

  std::string hypotheses;
  std::vector<Tokens> hyp_tokens;
  for (const auto& r : run.records) {
    hypotheses += join_tokens(r.hypothesis) + '\n';
    hyp_tokens.push_back(r.hypothesis);
  }
  write_file(opts.out_dir / "hypotheses.txt", hypotheses);

  auto snapshot = scoring_snapshot(cfg);
  snapshot["command"] = "correct";
  snapshot["corrector"] = base->name();
  snapshot["model"] = cfg.endpoint.model;
  snapshot["prompt"] = prompt_snapshot(cfg.prompt);
  snapshot["inputs"] = inputs_snapshot(files);

  json records = json::array();
  for (const auto& r : run.records) {
    json rec = {{"index", r.index},
                {"status", record_status_name(r.status)},
                {"attempts", r.attempts},
                {"prompt_truncated", r.prompt_truncated}};
    if (!r.error.empty()) rec["error"] = r.error;
    records.push_back(std::move(rec));
  }
  const json manifest = {
      {"schema_version", kReportSchemaVersion},
      {"config_snapshot", snapshot},
      {"max_in_flight", batch.max_in_flight},
      {"statuses",
       {{"ok", run.count(RecordStatus::Ok)},
        {"empty", run.count(RecordStatus::Empty)},
        {"failed", run.count(RecordStatus::Failed)}}},
      {"resumed", run.resumed},
      {"elapsed_seconds", run.elapsed_seconds},
      {"hypotheses_file", "hypotheses.txt"},
      {"records", std::move(records)},
  };
  write_file(opts.out_dir / "manifest.json", manifest.dump(2) + "\n");

  if (!opts.evaluate) {
    emit(opts.output,
         "corrected " + std::to_string(run.records.size()) + " sentences: ok " +
             std::to_string(run.count(RecordStatus::Ok)) + ", empty " + std::to_string(run.count(RecordStatus::Empty)) +
             ", failed " + std::to_string(run.count(RecordStatus::Failed)) + "\n",
         out);
    return 0;
  }
  const auto edits = hypothesis_edits(refs, hyp_tokens, cfg.costs, load_lexicon(cfg.lexicon_path));
  const auto report = evaluate_corpus(refs, edits, cfg.mode, cfg.betas);
  write_file(opts.out_dir / "report.json", dump_report_json(report_to_json(report, snapshot)));
  emit(opts.output, render_report(report, snapshot, opts.scoring, format), out);
  return 0;
}

}  // namespace gecstrat::cli
