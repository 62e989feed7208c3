#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gecstrat/alignment.hpp"
#include "gecstrat/corpus_stats.hpp"
#include "gecstrat/lexicon.hpp"
#include "gecstrat/m2.hpp"
#include "gecstrat/scoring.hpp"

namespace gecstrat {

struct LeveledSentence {
  M2Sentence sentence;
  ProficiencyLevel level = ProficiencyLevel::A;
};

// Reads every file in order, tagging each sentence with its file's level.
std::vector<LeveledSentence> load_corpus(std::span<const CorpusFile> files);

// One hypothesis per line; '\r' is stripped and a final newline is optional.
// Lines that are not valid UTF-8 throw ParseError.
std::vector<Tokens> read_hypothesis_lines(std::string_view text, const std::string& source = {});

// Edits of the lowest annotator whose correction equals `hypothesis`, if any.
std::optional<std::vector<Edit>> reproduced_annotation(const M2Sentence& ref,
                                                       std::span<const std::string> hypothesis);

// Edits turning each reference source into its hypothesis. A hypothesis that
// reproduces an annotator's correction takes that annotator's segmentation;
// any other is aligned and classified. Throws Error when the counts differ.
std::vector<std::vector<Edit>> hypothesis_edits(std::span<const LeveledSentence> refs,
                                                std::span<const Tokens> hypotheses,
                                                const CostConfig& costs, const Lexicon& lexicon);

// Hypothesis edits taken from an M2 file (lowest annotator of each
// sentence). Sentence counts and source tokens must agree with the reference.
std::vector<std::vector<Edit>> hypothesis_edits_from_m2(std::span<const LeveledSentence> refs,
                                                        std::span<const M2Sentence> hypotheses);

StratifiedReport evaluate_corpus(std::span<const LeveledSentence> refs,
                                 std::span<const std::vector<Edit>> hypothesis_edits,
                                 MatchMode mode, std::span<const double> betas);

}  // namespace gecstrat
