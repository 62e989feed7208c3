#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace gecstrat {

enum class PosTag : std::uint8_t { Prep, Det, Pron, Conj, Verb, Noun, Adj, Adv, Punct };

std::optional<PosTag> pos_tag_from_name(std::string_view name) noexcept;
std::string_view pos_tag_name(PosTag tag) noexcept;

// Word lists consulted by the edit classifier. All entries are stored
// lowercase and every lookup folds case first. Immutable once loaded, so a
// single instance can be shared across threads.
class Lexicon {
 public:
  // The lexicon compiled into the library from data/lexicon.tsv and
  // data/irregular_verbs.tsv.
  static const Lexicon& bundled();

  bool has_tag(std::string_view word, PosTag tag) const;
  bool is_preposition(std::string_view word) const { return has_tag(word, PosTag::Prep); }
  bool is_determiner(std::string_view word) const { return has_tag(word, PosTag::Det); }
  bool is_pronoun(std::string_view word) const { return has_tag(word, PosTag::Pron); }
  bool is_conjunction(std::string_view word) const { return has_tag(word, PosTag::Conj); }

  // Listed PUNCT, or made only of ASCII punctuation characters.
  bool is_punctuation(std::string_view token) const;

  // True when the word has any tag or is a form in the irregular-verb table.
  bool contains(std::string_view word) const;

  // Lemmas whose irregular paradigm includes `word` (base forms included).
  std::vector<std::string> irregular_lemmas(std::string_view word) const;
  // True for irregular past, participle and other non-base forms.
  bool is_irregular_inflection(std::string_view word) const;

  std::size_t count(PosTag tag) const;
  std::size_t irregular_verb_count() const { return irregular_count_; }

  // Merges TSV rows (word<TAB>TAG). Rows for a word replace that word's
  // existing tags; several rows for one word accumulate. Blank lines and
  // lines starting with '#' are skipped. `source` names the input in errors.
  void merge_tsv(std::string_view text, const std::string& source);

  // base<TAB>past<TAB>participle[<TAB>other], '/' separating alternatives.
  void merge_irregular_tsv(std::string_view text, const std::string& source);

 private:
  std::unordered_map<std::string, std::uint16_t> tags_;
  // form -> lemmas, with a flag marking non-base forms.
  struct FormInfo {
    std::vector<std::string> lemmas;
    bool inflected = false;
  };
  std::unordered_map<std::string, FormInfo> forms_;
  std::size_t irregular_count_ = 0;
};

// No path: the bundled lexicon. With a path: bundled entries extended or
// overridden by the TSV file. Throws IoError / ParseError.
Lexicon load_lexicon(const std::optional<std::filesystem::path>& path = std::nullopt);

}  // namespace gecstrat
