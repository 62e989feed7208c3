#pragma once

#include <span>
#include <string>
#include <string_view>

#include "gecstrat/edit_extraction.hpp"
#include "gecstrat/error_type.hpp"
#include "gecstrat/lexicon.hpp"

namespace gecstrat {

/// Rule-based error typing.
///
/// The operation follows from the sides: M when the source side is empty,
/// U when the replacement is empty, R otherwise. Tokens shared at both ends
/// of the two sides are set aside; the category comes from the first rule
/// that fires on what remains:
///
///   1. PUNCT       every changed token on the non-empty side(s) is punctuation
///   2. ORTH        (R) sides equal ignoring case, or ignoring the spaces between tokens
///   3. WO          (R) same case-folded token multiset, different order
///   4. PREP, DET, PRON, CONJ
///                  closed-class membership of every changed token, checked in
///                  that order (both sides for R, the present side for M/U)
///   5. VERB:TENSE  (R) one token per side sharing a verb lemma, via the
///                  irregular table or -ed/-ing/-s stripping, with at least one
///                  side verbal (known verb, irregular form, -ed/-ing)
///   6. NOUN:NUM    (R) one token per side differing by a plural ending
///   7. VERB, NOUN, ADJ, ADV
///                  all changed tokens share the POS in the lexicon
///   8. SPELL       (R) one token per side, source unknown to the lexicon,
///                  character edit distance <= 2
///   9. OTHER
///
/// Rules 7-9 approximate what a statistical tagger would decide.
ErrorType classify_edit(const RawEdit& edit, const Lexicon& lexicon = Lexicon::bundled());

ErrorType classify_edit(std::span<const std::string> source_side,
                        std::span<const std::string> target_side,
                        const Lexicon& lexicon = Lexicon::bundled());

// Plain Levenshtein distance over bytes.
std::size_t char_edit_distance(std::string_view a, std::string_view b);

}  // namespace gecstrat
