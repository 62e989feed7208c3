#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gecstrat/error_type.hpp"
#include "gecstrat/tokens.hpp"

namespace gecstrat {

// CEFR proficiency of the writer; N marks native text.
enum class ProficiencyLevel : std::uint8_t { A, B, C, N };

inline constexpr ProficiencyLevel kAllLevels[] = {
    ProficiencyLevel::A, ProficiencyLevel::B, ProficiencyLevel::C, ProficiencyLevel::N};

// Accepts exactly one of the letters A/B/C/N, either case.
std::optional<ProficiencyLevel> parse_level(std::string_view text) noexcept;
char level_letter(ProficiencyLevel level) noexcept;

// Replacement-field spelling of the empty string.
inline constexpr std::string_view kNoneToken = "-NONE-";

/// One token-span operation on a source sentence.
///
/// The span [start, end) is half-open over source tokens; start == end is an
/// insertion before `start`. `replacement` holds space-joined tokens and is
/// empty for deletions. The noop sentinel uses the span (-1, -1).
struct Edit {
  int start = 0;
  int end = 0;
  std::string replacement;
  ErrorType type;
  int annotator = 0;
  // Opaque M2 fields, re-emitted verbatim.
  std::string required = "REQUIRED";
  std::string comment = std::string(kNoneToken);

  bool is_noop() const noexcept { return type.is_noop(); }
  Tokens replacement_tokens() const { return split_tokens(replacement); }

  friend bool operator==(const Edit&, const Edit&) = default;
};

Edit make_noop_edit(int annotator);

struct M2Sentence {
  Tokens source;
  // annotator id -> that annotator's edits, sorted by span.
  std::map<int, std::vector<Edit>> annotations;
  // 1-based line of the S line in the originating file; 0 if synthetic.
  std::size_t origin_line = 0;

  // Lowest annotator id, or nullopt for a sentence without A lines.
  std::optional<int> first_annotator() const;

  // Ignores origin_line.
  friend bool operator==(const M2Sentence& a, const M2Sentence& b) {
    return a.source == b.source && a.annotations == b.annotations;
  }
};

// Throws Error if `sentence` breaks the span/order/noop invariants.
void validate_sentence(const M2Sentence& sentence);

std::vector<M2Sentence> parse_m2(std::string_view text);

// Canonical form: one blank line between blocks, A lines ordered by
// annotator then span, trailing newline. Empty input gives "".
std::string serialize_m2(std::span<const M2Sentence> sentences);

// Produces the corrected token sequence. Edits must come from one annotator,
// be sorted and non-overlapping; noop edits contribute nothing.
Tokens apply_edits(std::span<const std::string> source, std::span<const Edit> edits);

std::string read_text_file(const std::filesystem::path& path);
std::vector<M2Sentence> read_m2_file(const std::filesystem::path& path);

}  // namespace gecstrat
