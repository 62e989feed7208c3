#include "gecstrat/evaluate.hpp"

#include <algorithm>

#include "gecstrat/edit_extraction.hpp"
#include "gecstrat/error.hpp"

namespace gecstrat {
namespace {

void check_counts(std::size_t hyps, std::size_t refs) {
  if (hyps != refs) {
    throw Error("hypothesis has " + std::to_string(hyps) + " sentences but the reference has " +
                std::to_string(refs));
  }
}

}  // namespace

std::optional<std::vector<Edit>> reproduced_annotation(const M2Sentence& ref, std::span<const std::string> hypothesis) {
  for (const auto& [id, edits] : ref.annotations) {
    std::vector<Edit> real;
    for (const auto& e : edits) {
      if (!e.is_noop()) real.push_back(e);
    }
    if (std::ranges::equal(apply_edits(ref.source, real), hypothesis)) return real;
  }
  return std::nullopt;
}

std::vector<LeveledSentence> load_corpus(std::span<const CorpusFile> files) {
  std::vector<LeveledSentence> out;
  for (const auto& f : files) {
    for (auto& s : read_m2_file(f.path)) out.push_back({std::move(s), f.level});
  }
  return out;
}

std::vector<Tokens> read_hypothesis_lines(std::string_view text, const std::string& source) {
  std::vector<Tokens> out;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    const auto nl = text.find('\n', pos);
    auto line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    if (line.ends_with('\r')) line.remove_suffix(1);
    if (!is_valid_utf8(line)) throw ParseError(line_no, "hypothesis line is not valid UTF-8", source);
    out.push_back(split_tokens(line));
  }
  return out;
}

std::vector<std::vector<Edit>> hypothesis_edits(std::span<const LeveledSentence> refs,
                                                std::span<const Tokens> hypotheses,
                                                const CostConfig& costs, const Lexicon& lexicon) {
  check_counts(hypotheses.size(), refs.size());
  std::vector<std::vector<Edit>> out;
  out.reserve(refs.size());
  for (std::size_t i = 0; i < refs.size(); ++i) {
    const auto& ref = refs[i].sentence;
    if (auto reproduced = reproduced_annotation(ref, hypotheses[i])) {
      out.push_back(std::move(*reproduced));
    } else {
      out.push_back(extract_edits(ref.source, hypotheses[i], costs, lexicon));
    }
  }
  return out;
}

std::vector<std::vector<Edit>> hypothesis_edits_from_m2(std::span<const LeveledSentence> refs,
                                                        std::span<const M2Sentence> hypotheses) {
  check_counts(hypotheses.size(), refs.size());
  std::vector<std::vector<Edit>> out;
  out.reserve(refs.size());
  for (std::size_t i = 0; i < refs.size(); ++i) {
    const auto& h = hypotheses[i];
    if (h.source != refs[i].sentence.source) {
      throw Error("hypothesis sentence " + std::to_string(i + 1) +
                  " has a different source than the reference");
    }
    std::vector<Edit> edits;
    if (auto first = h.first_annotator()) {
      for (const auto& e : h.annotations.at(*first)) {
        if (!e.is_noop()) edits.push_back(e);
      }
    }
    out.push_back(std::move(edits));
  }
  return out;
}

StratifiedReport evaluate_corpus(std::span<const LeveledSentence> refs,
                                 std::span<const std::vector<Edit>> hyps, MatchMode mode,
                                 std::span<const double> betas) {
  check_counts(hyps.size(), refs.size());
  std::vector<SentenceResult> results;
  results.reserve(refs.size());
  for (std::size_t i = 0; i < refs.size(); ++i) {
    results.push_back(make_result(compare_sentence(hyps[i], refs[i].sentence, mode), refs[i].level));
  }
  return aggregate(results, betas);
}

}  // namespace gecstrat
