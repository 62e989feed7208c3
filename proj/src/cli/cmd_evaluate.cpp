#include <ostream>

#include "commands.hpp"
#include "gecstrat/error.hpp"
#include "gecstrat/report.hpp"

namespace gecstrat::cli {

int cmd_evaluate(const EvaluateOptions& opts, RunConfig cfg, std::ostream& out) {
  const auto format = parse_format(opts.output.format);
  apply_scoring_flags(opts.scoring, cfg);
  const auto& fmt = opts.hypothesis_format;
  if (fmt != "auto" && fmt != "text" && fmt != "m2") {
    throw ConfigError("--hyp-format must be auto, text or m2, got '" + fmt + "'");
  }
  const bool m2 = fmt == "m2" || (fmt == "auto" && opts.hypothesis.extension() == ".m2");

  const auto files = select_corpus(opts.selection, cfg);
  const auto refs = load_corpus(files);
  std::vector<std::vector<Edit>> hyps;
  if (m2) {
    hyps = hypothesis_edits_from_m2(refs, read_m2_file(opts.hypothesis));
  } else {
    const auto lines = read_hypothesis_lines(read_text_file(opts.hypothesis), opts.hypothesis.string());
    hyps = hypothesis_edits(refs, lines, cfg.costs, load_lexicon(cfg.lexicon_path));
  }
  const auto report = evaluate_corpus(refs, hyps, cfg.mode, cfg.betas);

  auto snapshot = scoring_snapshot(cfg);
  snapshot["command"] = "evaluate";
  snapshot["inputs"] = inputs_snapshot(files);
  snapshot["hypothesis"] = opts.hypothesis.filename().string();
  emit(opts.output, render_report(report, snapshot, opts.scoring, format), out);
  return 0;
}

}  // namespace gecstrat::cli
