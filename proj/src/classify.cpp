#include "gecstrat/classify.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <utility>
#include <vector>

namespace gecstrat {
namespace {

using Side = std::span<const std::string>;

constexpr std::array<std::pair<std::string_view, std::string_view>, 10> kIrregularPlurals{{
    {"man", "men"},
    {"woman", "women"},
    {"child", "children"},
    {"person", "people"},
    {"foot", "feet"},
    {"tooth", "teeth"},
    {"mouse", "mice"},
    {"life", "lives"},
    {"wife", "wives"},
    {"knife", "knives"},
}};

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

void add_stem_variants(std::set<std::string>& out, const std::string& stem) {
  if (stem.empty()) return;
  out.insert(stem);
  out.insert(stem + "e");
  const auto n = stem.size();
  if (n >= 2 && stem[n - 1] == stem[n - 2] && !is_vowel(stem[n - 1])) {
    out.insert(stem.substr(0, n - 1));
  }
}

// Candidate verb lemmas for a (lowercase) word.
std::set<std::string> lemma_candidates(const std::string& w, const Lexicon& lex) {
  std::set<std::string> out{w};
  for (auto& lemma : lex.irregular_lemmas(w)) out.insert(std::move(lemma));
  const auto n = w.size();
  if (ends_with(w, "ies") && n > 4) out.insert(w.substr(0, n - 3) + "y");
  if (ends_with(w, "es") && n > 3) out.insert(w.substr(0, n - 2));
  if (ends_with(w, "s") && !ends_with(w, "ss") && n > 2) out.insert(w.substr(0, n - 1));
  if (ends_with(w, "ied") && n > 4) out.insert(w.substr(0, n - 3) + "y");
  if (ends_with(w, "ed") && n > 3) add_stem_variants(out, w.substr(0, n - 2));
  if (ends_with(w, "ing") && n > 4) add_stem_variants(out, w.substr(0, n - 3));
  return out;
}

bool has_verb_morphology(const std::string& w) {
  return (ends_with(w, "ed") && w.size() > 3) || (ends_with(w, "ing") && w.size() > 4);
}

bool is_known_verb(const std::string& w, const Lexicon& lex) {
  return lex.has_tag(w, PosTag::Verb) || !lex.irregular_lemmas(w).empty();
}

bool is_verbal(const std::string& w, const std::set<std::string>& lemmas, const Lexicon& lex) {
  if (has_verb_morphology(w) || lex.is_irregular_inflection(w)) return true;
  return std::any_of(lemmas.begin(), lemmas.end(),
                     [&](const std::string& l) { return is_known_verb(l, lex); });
}

bool is_plural_of(const std::string& plural, const std::string& singular) {
  if (plural == singular + "s" || plural == singular + "es") return true;
  if (ends_with(singular, "y") && singular.size() > 1 &&
      plural == singular.substr(0, singular.size() - 1) + "ies") {
    return true;
  }
  return std::any_of(kIrregularPlurals.begin(), kIrregularPlurals.end(), [&](const auto& p) {
    return p.first == singular && p.second == plural;
  });
}

// Word carries the POS either directly or as an inflection of a tagged lemma.
bool has_pos(const std::string& w, PosTag tag, const Lexicon& lex) {
  if (lex.has_tag(w, tag)) return true;
  if (tag == PosTag::Verb) {
    if (!lex.irregular_lemmas(w).empty()) return true;
    auto lemmas = lemma_candidates(w, lex);
    return has_verb_morphology(w) && std::any_of(lemmas.begin(), lemmas.end(), [&](const auto& l) {
             return lex.has_tag(l, PosTag::Verb);
           });
  }
  if (tag == PosTag::Noun) {
    for (const auto& [singular, plural] : kIrregularPlurals) {
      if (plural == w && lex.has_tag(singular, PosTag::Noun)) return true;
    }
    if (ends_with(w, "s") && w.size() > 2) {
      for (const auto& stem : {w.substr(0, w.size() - 1), w.substr(0, w.size() - 2),
                               w.substr(0, w.size() - 3) + "y"}) {
        if (is_plural_of(w, stem) && lex.has_tag(stem, PosTag::Noun)) return true;
      }
    }
  }
  return false;
}

bool all_tokens(const std::vector<Side>& sides, auto&& pred) {
  return std::all_of(sides.begin(), sides.end(), [&](Side side) {
    return std::all_of(side.begin(), side.end(), pred);
  });
}

std::vector<std::string> folded_sorted(Side side) {
  std::vector<std::string> out;
  out.reserve(side.size());
  for (const auto& t : side) out.push_back(fold_case(t));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::size_t char_edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0u : 1u)});
      diag = up;
    }
  }
  return row[b.size()];
}

ErrorType classify_edit(const RawEdit& edit, const Lexicon& lexicon) {
  return classify_edit(edit.source_tokens, edit.replacement, lexicon);
}

ErrorType classify_edit(Side source_side, Side target_side, const Lexicon& lex) {
  EditOp op = EditOp::Replacement;
  if (source_side.empty()) {
    op = EditOp::Missing;
  } else if (target_side.empty()) {
    op = EditOp::Unnecessary;
  }
  auto typed = [op](Category c) { return ErrorType::known(op, c); };
  if (source_side.empty() && target_side.empty()) return typed(Category::Other);

  // Set aside tokens shared at both ends.
  Side a = source_side;
  Side b = target_side;
  while (!a.empty() && !b.empty() && a.front() == b.front()) {
    a = a.subspan(1);
    b = b.subspan(1);
  }
  while (!a.empty() && !b.empty() && a.back() == b.back()) {
    a = a.first(a.size() - 1);
    b = b.first(b.size() - 1);
  }
  if (a.empty() && b.empty()) {
    a = source_side;
    b = target_side;
  }
  std::vector<Side> sides;
  if (!a.empty()) sides.push_back(a);
  if (!b.empty()) sides.push_back(b);
  const bool replacement = op == EditOp::Replacement;
  const bool single = a.size() == 1 && b.size() == 1;

  // 1
  if (all_tokens(sides, [&](const std::string& t) { return lex.is_punctuation(t); })) {
    return typed(Category::Punct);
  }
  // 2
  if (replacement && !a.empty() && !b.empty() &&
      (iequals(join_tokens(a), join_tokens(b)) || iequals(join_tokens(a, ""), join_tokens(b, "")))) {
    return typed(Category::Orth);
  }
  // 3
  if (replacement && a.size() == b.size() && a.size() >= 2 && folded_sorted(a) == folded_sorted(b)) {
    return typed(Category::WordOrder);
  }
  // 4
  constexpr std::array<std::pair<PosTag, Category>, 4> kClosed{{
      {PosTag::Prep, Category::Prep},
      {PosTag::Det, Category::Det},
      {PosTag::Pron, Category::Pron},
      {PosTag::Conj, Category::Conj},
  }};
  for (const auto& [tag, category] : kClosed) {
    if (all_tokens(sides, [&](const std::string& t) { return lex.has_tag(t, tag); })) {
      return typed(category);
    }
  }
  const std::string wa = single ? fold_case(a.front()) : std::string();
  const std::string wb = single ? fold_case(b.front()) : std::string();
  // 5
  if (replacement && single && wa != wb) {
    auto la = lemma_candidates(wa, lex);
    auto lb = lemma_candidates(wb, lex);
    const bool shared = std::any_of(la.begin(), la.end(), [&](const auto& l) { return lb.count(l) > 0; });
    if (shared && (is_verbal(wa, la, lex) || is_verbal(wb, lb, lex))) {
      return typed(Category::VerbTense);
    }
  }
  // 6
  if (replacement && single && (is_plural_of(wa, wb) || is_plural_of(wb, wa))) {
    return typed(Category::NounNum);
  }
  // 7
  constexpr std::array<std::pair<PosTag, Category>, 4> kOpen{{
      {PosTag::Verb, Category::Verb},
      {PosTag::Noun, Category::Noun},
      {PosTag::Adj, Category::Adj},
      {PosTag::Adv, Category::Adv},
  }};
  for (const auto& [tag, category] : kOpen) {
    if (all_tokens(sides, [&](const std::string& t) { return has_pos(fold_case(t), tag, lex); })) {
      return typed(category);
    }
  }
  // 8
  if (replacement && single && !lex.contains(wa) && char_edit_distance(wa, wb) <= 2) {
    return typed(Category::Spell);
  }
  return typed(Category::Other);
}

}  // namespace gecstrat
