#include <sstream>

#include "doctest.h"
#include "gecstrat/classify.hpp"
#include "gecstrat/error.hpp"
#include "test_support.hpp"

using namespace gecstrat;
using gecstrat::testing::kTestData;
using gecstrat::testing::read_text;

namespace {

struct GoldenEdit {
  std::string source;
  std::string target;
  std::string type;
};

std::vector<GoldenEdit> load_golden() {
  std::vector<GoldenEdit> out;
  std::istringstream in(read_text(kTestData / "classification_golden.tsv"));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto t1 = line.find('\t');
    const auto t2 = line.find('\t', t1 + 1);
    out.push_back({line.substr(0, t1), line.substr(t1 + 1, t2 - t1 - 1), line.substr(t2 + 1)});
  }
  return out;
}

std::string classify(std::string_view source, std::string_view target) {
  return classify_edit(split_tokens(source), split_tokens(target)).to_string();
}

}  // namespace

TEST_CASE("golden classification set") {
  const auto golden = load_golden();
  REQUIRE(golden.size() >= 40);
  for (const std::string type : {"M:PUNCT", "R:ORTH", "R:PREP", "M:DET", "R:VERB:TENSE", "R:VERB"}) {
    CHECK(std::any_of(golden.begin(), golden.end(), [&](const GoldenEdit& g) { return g.type == type; }));
  }
  for (const auto& g : golden) {
    CAPTURE(g.source);
    CAPTURE(g.target);
    CHECK(classify(g.source, g.target) == g.type);
  }
}

TEST_CASE("worked classifications") {
  CHECK(classify("in", "In") == "R:ORTH");
  CHECK(classify("", ",") == "M:PUNCT");
  CHECK(classify("with", "that") == "R:PREP");
  CHECK(classify("alien", "aliens") == "R:NOUN:NUM");
}

TEST_CASE("RawEdit overload uses the token slices") {
  RawEdit raw{{0, 1}, {0, 1}, {"in"}, {"In"}};
  CHECK(classify_edit(raw) == ErrorType::known(EditOp::Replacement, Category::Orth));
}

TEST_CASE("operation follows the sides") {
  CHECK(classify_edit(Tokens{}, Tokens{"zzq"}).op() == EditOp::Missing);
  CHECK(classify_edit(Tokens{"zzq"}, Tokens{}).op() == EditOp::Unnecessary);
  CHECK(classify_edit(Tokens{"zzq"}, Tokens{"qqz"}).op() == EditOp::Replacement);
}

TEST_CASE("shared end tokens are set aside before typing") {
  CHECK(classify("went to", "went into") == "R:PREP");
  CHECK(classify("the dog", "the dogs") == "R:NOUN:NUM");
}

TEST_CASE("ErrorType string round trip over the taxonomy") {
  int count = 0;
  for (const EditOp op : {EditOp::Missing, EditOp::Replacement, EditOp::Unnecessary}) {
    for (const Category c : kAllCategories) {
      const auto t = ErrorType::known(op, c);
      CHECK(ErrorType::parse(t.to_string()) == t);
      CHECK(t.op() == op);
      CHECK(t.category() == c);
      ++count;
    }
  }
  CHECK(count == 45);
  CHECK(ErrorType::known(EditOp::Replacement, Category::VerbTense).to_string() == "R:VERB:TENSE");
  CHECK(ErrorType::known(EditOp::Missing, Category::WordOrder).to_string() == "M:WO");
}

TEST_CASE("unknown type strings are carried verbatim") {
  const auto t = ErrorType::parse("R:NOUN:INFL");
  CHECK(t.kind() == ErrorType::Kind::Unknown);
  CHECK(t.to_string() == "R:NOUN:INFL");
  CHECK(t.op() == EditOp::Replacement);
  CHECK_FALSE(t.category().has_value());
  CHECK(ErrorType::parse("UNK").kind() == ErrorType::Kind::Unknown);
  CHECK_FALSE(ErrorType::parse("UNK").op().has_value());
  CHECK(ErrorType::parse("OTHER") != ErrorType::known(EditOp::Replacement, Category::Other));
  CHECK(ErrorType::parse("noop").is_noop());
  CHECK(ErrorType::parse("noop").to_string() == "noop");
}

TEST_CASE("bundled lexicon contents") {
  const auto& lex = Lexicon::bundled();
  CHECK(lex.is_preposition("with"));
  CHECK(lex.is_preposition("that"));
  CHECK(lex.is_preposition("WITH"));
  CHECK(lex.count(PosTag::Prep) >= 50);
  CHECK(lex.count(PosTag::Det) + lex.count(PosTag::Pron) >= 30);
  CHECK(lex.irregular_verb_count() >= 150);
  for (const char* p : {".", ",", ";", ":", "!", "?", "'", "\"", "(", ")", "-"}) {
    CAPTURE(p);
    CHECK(lex.is_punctuation(p));
  }
  CHECK(lex.is_punctuation("..."));
  CHECK_FALSE(lex.is_punctuation("a."));
  CHECK(lex.is_irregular_inflection("went"));
  CHECK_FALSE(lex.is_irregular_inflection("go"));
  CHECK(lex.irregular_lemmas("went") == std::vector<std::string>{"go"});
}

TEST_CASE("lexicon TSV merges and overrides") {
  Lexicon lex = Lexicon::bundled();
  CHECK_FALSE(lex.is_preposition("zorp"));
  lex.merge_tsv("zorp\tPREP\n", "extra.tsv");
  CHECK(lex.is_preposition("zorp"));
  lex.merge_tsv("# comment\n\nwith\tNOUN\n", "extra.tsv");
  CHECK_FALSE(lex.is_preposition("with"));
  CHECK(lex.has_tag("with", PosTag::Noun));
  lex.merge_tsv("blip\tVERB\nblip\tNOUN\n", "extra.tsv");
  CHECK(lex.has_tag("blip", PosTag::Verb));
  CHECK(lex.has_tag("blip", PosTag::Noun));
}

TEST_CASE("malformed lexicon rows name the row") {
  Lexicon lex;
  try {
    lex.merge_tsv("zorp PREP\n", "bad.tsv");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
  }
  try {
    lex.merge_tsv("a\tDET\nzorp\tWHAT\n", "bad.tsv");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("load_lexicon from a file") {
  gecstrat::testing::TempDir dir("lex");
  gecstrat::testing::write_text(dir / "extra.tsv", "Zorp\tPREP\n");
  const auto lex = load_lexicon(dir / "extra.tsv");
  CHECK(lex.is_preposition("zorp"));
  CHECK(lex.is_preposition("with"));
  CHECK_THROWS_AS(load_lexicon(dir / "absent.tsv"), IoError);
  gecstrat::testing::write_text(dir / "bad.tsv", "ok\tPREP\nbroken\n");
  CHECK_THROWS_AS(load_lexicon(dir / "bad.tsv"), ParseError);
}

TEST_CASE("character edit distance") {
  CHECK(char_edit_distance("", "") == 0);
  CHECK(char_edit_distance("freind", "friend") == 2);
  CHECK(char_edit_distance("ther", "their") == 1);
  CHECK(char_edit_distance("kitten", "sitting") == 3);
  CHECK(char_edit_distance("", "abc") == 3);
}

TEST_CASE("pos tag names round trip") {
  for (const PosTag tag : {PosTag::Prep, PosTag::Det, PosTag::Pron, PosTag::Conj, PosTag::Verb, PosTag::Noun,
                           PosTag::Adj, PosTag::Adv, PosTag::Punct}) {
    CHECK(pos_tag_from_name(pos_tag_name(tag)) == tag);
  }
  CHECK_FALSE(pos_tag_from_name("prep").has_value());
}
