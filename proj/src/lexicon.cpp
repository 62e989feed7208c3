#include "gecstrat/lexicon.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <utility>

#include "gecstrat/error.hpp"
#include "gecstrat/m2.hpp"
#include "gecstrat/tokens.hpp"

namespace gecstrat {
namespace assets {
extern const std::string_view kLexiconTsv;
extern const std::string_view kIrregularVerbsTsv;
}  // namespace assets

namespace {

constexpr std::array<std::pair<PosTag, std::string_view>, 9> kTagNames{{
    {PosTag::Prep, "PREP"},
    {PosTag::Det, "DET"},
    {PosTag::Pron, "PRON"},
    {PosTag::Conj, "CONJ"},
    {PosTag::Verb, "VERB"},
    {PosTag::Noun, "NOUN"},
    {PosTag::Adj, "ADJ"},
    {PosTag::Adv, "ADV"},
    {PosTag::Punct, "PUNCT"},
}};

std::uint16_t bit(PosTag tag) { return static_cast<std::uint16_t>(1u << static_cast<unsigned>(tag)); }

bool is_ascii_punct(char c) {
  return (c >= '!' && c <= '/') || (c >= ':' && c <= '@') || (c >= '[' && c <= '`') ||
         (c >= '{' && c <= '~');
}

// Calls fn(line_no, line) for every non-blank, non-comment line.
template <typename Fn>
void for_each_row(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty() || line.front() == '#') continue;
    fn(line_no, line);
  }
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    auto t = line.find('\t', pos);
    if (t == std::string_view::npos) {
      out.push_back(line.substr(pos));
      return out;
    }
    out.push_back(line.substr(pos, t - pos));
    pos = t + 1;
  }
}

std::vector<std::string> alternatives(std::string_view field) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= field.size()) {
    auto slash = field.find('/', pos);
    auto part = trim(field.substr(pos, slash == std::string_view::npos ? std::string_view::npos
                                                                        : slash - pos));
    if (!part.empty()) out.push_back(fold_case(part));
    if (slash == std::string_view::npos) break;
    pos = slash + 1;
  }
  return out;
}

}  // namespace

std::optional<PosTag> pos_tag_from_name(std::string_view name) noexcept {
  for (const auto& [tag, n] : kTagNames) {
    if (n == name) return tag;
  }
  return std::nullopt;
}

std::string_view pos_tag_name(PosTag tag) noexcept {
  for (const auto& [t, n] : kTagNames) {
    if (t == tag) return n;
  }
  return "?";
}

const Lexicon& Lexicon::bundled() {
  static const Lexicon instance = [] {
    Lexicon lex;
    lex.merge_tsv(assets::kLexiconTsv, "bundled lexicon");
    lex.merge_irregular_tsv(assets::kIrregularVerbsTsv, "bundled irregular verbs");
    return lex;
  }();
  return instance;
}

bool Lexicon::has_tag(std::string_view word, PosTag tag) const {
  auto it = tags_.find(fold_case(word));
  return it != tags_.end() && (it->second & bit(tag)) != 0;
}

bool Lexicon::is_punctuation(std::string_view token) const {
  if (token.empty()) return false;
  if (has_tag(token, PosTag::Punct)) return true;
  return std::all_of(token.begin(), token.end(), is_ascii_punct);
}

bool Lexicon::contains(std::string_view word) const {
  auto folded = fold_case(word);
  auto it = tags_.find(folded);
  return (it != tags_.end() && it->second != 0) || forms_.count(folded) > 0;
}

std::vector<std::string> Lexicon::irregular_lemmas(std::string_view word) const {
  auto it = forms_.find(fold_case(word));
  if (it == forms_.end()) return {};
  return it->second.lemmas;
}

bool Lexicon::is_irregular_inflection(std::string_view word) const {
  auto it = forms_.find(fold_case(word));
  return it != forms_.end() && it->second.inflected;
}

std::size_t Lexicon::count(PosTag tag) const {
  return static_cast<std::size_t>(std::count_if(
      tags_.begin(), tags_.end(), [&](const auto& kv) { return (kv.second & bit(tag)) != 0; }));
}

void Lexicon::merge_tsv(std::string_view text, const std::string& source) {
  std::set<std::string> replaced;
  for_each_row(text, [&](std::size_t line_no, std::string_view line) {
    auto cols = split_tabs(line);
    if (cols.size() != 2 || trim(cols[0]).empty()) {
      throw ParseError(line_no, "expected word<TAB>TAG, got '" + std::string(line) + "'", source);
    }
    auto tag = pos_tag_from_name(trim(cols[1]));
    if (!tag) {
      throw ParseError(line_no, "unknown tag '" + std::string(cols[1]) + "'", source);
    }
    auto word = fold_case(trim(cols[0]));
    if (replaced.insert(word).second) tags_[word] = 0;
    tags_[word] |= bit(*tag);
  });
}

void Lexicon::merge_irregular_tsv(std::string_view text, const std::string& source) {
  for_each_row(text, [&](std::size_t line_no, std::string_view line) {
    auto cols = split_tabs(line);
    if (cols.size() < 3 || cols.size() > 4 || trim(cols[0]).empty()) {
      throw ParseError(line_no, "expected base<TAB>past<TAB>participle, got '" +
                                    std::string(line) + "'", source);
    }
    auto base = fold_case(trim(cols[0]));
    auto add_form = [&](const std::string& form, bool inflected) {
      auto& info = forms_[form];
      if (std::find(info.lemmas.begin(), info.lemmas.end(), base) == info.lemmas.end()) {
        info.lemmas.push_back(base);
      }
      info.inflected = info.inflected || inflected;
    };
    add_form(base, false);
    for (std::size_t c = 1; c < cols.size(); ++c) {
      for (const auto& form : alternatives(cols[c])) {
        if (form != base) add_form(form, true);
      }
    }
    ++irregular_count_;
  });
}

Lexicon load_lexicon(const std::optional<std::filesystem::path>& path) {
  Lexicon lex = Lexicon::bundled();
  if (path) lex.merge_tsv(read_text_file(*path), path->string());
  return lex;
}

}  // namespace gecstrat
