#include <map>
#include <ostream>

#include "commands.hpp"
#include "gecstrat/error.hpp"
#include "gecstrat/report.hpp"

namespace gecstrat::cli {

int cmd_stats(const StatsOptions& opts, RunConfig cfg, std::ostream& out) {
  const auto format = parse_format(opts.output.format);
  if (opts.top) {
    if (*opts.top < 1) throw ConfigError("--top must be >= 1");
    cfg.top_k = *opts.top;
  }
  if (opts.policy) {
    auto p = parse_annotator_policy(*opts.policy);
    if (!p) throw ConfigError("--policy must be first or all, got '" + *opts.policy + "'");
    cfg.annotator_policy = *p;
  }

  const auto files = select_corpus(opts.selection, cfg);
  std::map<ProficiencyLevel, std::vector<M2Sentence>> by_level;
  for (const auto& f : files) {
    auto sentences = read_m2_file(f.path);
    auto& bucket = by_level[f.level];
    bucket.insert(bucket.end(), std::make_move_iterator(sentences.begin()),
                  std::make_move_iterator(sentences.end()));
  }
  std::vector<CorpusSummary> summaries;
  for (const auto& [level, sentences] : by_level) {
    if (sentences.empty()) {
      throw Error(std::string("no sentences for level ") + level_letter(level));
    }
    summaries.push_back(summarize(sentences, level, cfg.annotator_policy));
  }

  std::string text;
  switch (format) {
    case OutputFormat::Json:
      text = summaries_to_json(summaries, cfg.top_k, cfg.annotator_policy).dump(2) + "\n";
      break;
    case OutputFormat::Tsv:
      text = summaries_to_tsv(summaries, cfg.top_k);
      break;
    case OutputFormat::Text:
      text = summaries_to_text(summaries, cfg.top_k);
      break;
  }
  emit(opts.output, text, out);
  return 0;
}

}  // namespace gecstrat::cli
