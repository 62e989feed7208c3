#pragma once

#include <span>
#include <string>
#include <vector>

#include "gecstrat/alignment.hpp"
#include "gecstrat/lexicon.hpp"
#include "gecstrat/m2.hpp"

namespace gecstrat {

// A contiguous non-match region of an alignment.
struct RawEdit {
  TokenRange src;
  TokenRange tgt;
  Tokens source_tokens;
  Tokens replacement;

  friend bool operator==(const RawEdit&, const RawEdit&) = default;
};

/// Groups the non-Match operations of an alignment into edits.
///
/// Match operations are boundaries. Inside a run of non-Match operations a
/// new edit starts at every Substitute that follows another Substitute, so
/// word-for-word replacements stay separate while insertions and deletions
/// attach to the neighbouring replacement. A Transpose is always an edit of
/// its own. Throws Error if the ops do not tile source and target from 0.
std::vector<RawEdit> merge_alignment(std::span<const AlignmentOp> ops,
                                     std::span<const std::string> source,
                                     std::span<const std::string> target);

// align -> merge_alignment -> classify_edit. Edits are returned sorted by
// span, attributed to annotator 0.
std::vector<Edit> extract_edits(std::span<const std::string> source,
                                std::span<const std::string> target,
                                const CostConfig& cfg = {},
                                const Lexicon& lexicon = Lexicon::bundled());

}  // namespace gecstrat
