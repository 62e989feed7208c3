#include "doctest.h"
#include "gecstrat/error.hpp"
#include "gecstrat/m2.hpp"
#include "test_support.hpp"

using namespace gecstrat;
using gecstrat::testing::kTestData;
using gecstrat::testing::read_text;

namespace {

const std::string kExampleLine =
    "S in addition more and more scientists agree with alien really exist\n"
    "A 0 1|||R:ORTH|||In|||REQUIRED|||-NONE-|||0\n";

Edit edit(int start, int end, std::string replacement, std::string_view type = "R:OTHER", int annotator = 0) {
  return Edit{start, end, std::move(replacement), ErrorType::parse(type), annotator};
}

}  // namespace

TEST_CASE("parse_m2 reads one sentence with one edit") {
  const auto sentences = parse_m2(kExampleLine);
  REQUIRE(sentences.size() == 1);
  const auto& s = sentences[0];
  CHECK(s.source.size() == 11);
  CHECK(s.source[0] == "in");
  CHECK(s.origin_line == 1);
  REQUIRE(s.annotations.size() == 1);
  REQUIRE(s.annotations.at(0).size() == 1);
  const Edit& e = s.annotations.at(0)[0];
  CHECK(e.start == 0);
  CHECK(e.end == 1);
  CHECK(e.replacement == "In");
  CHECK(e.type.to_string() == "R:ORTH");
  CHECK(e.annotator == 0);
}

TEST_CASE("parse_m2 reads a noop annotation") {
  const auto sentences = parse_m2("S Hello .\nA -1 -1|||noop|||-NONE-|||REQUIRED|||-NONE-|||0");
  REQUIRE(sentences.size() == 1);
  REQUIRE(sentences[0].annotations.at(0).size() == 1);
  const Edit& e = sentences[0].annotations.at(0)[0];
  CHECK(e.is_noop());
  CHECK(e.start == -1);
  CHECK(e.end == -1);
  CHECK(e.replacement.empty());
}

TEST_CASE("parse_m2 of empty text is empty") {
  CHECK(parse_m2("").empty());
  CHECK(parse_m2("\n\n").empty());
}

TEST_CASE("parse_m2 keeps sentences without A lines and non-contiguous annotators") {
  const auto s = parse_m2(
      "S a b\n\nS c d\nA 0 1|||R:OTHER|||x|||REQUIRED|||-NONE-|||7\nA 1 2|||R:OTHER|||y|||REQUIRED|||-NONE-|||3\n");
  REQUIRE(s.size() == 2);
  CHECK(s[0].annotations.empty());
  CHECK_FALSE(s[0].first_annotator().has_value());
  CHECK(s[1].first_annotator() == 3);
  CHECK(s[1].origin_line == 3);
}

TEST_CASE("parse_m2 decodes -NONE- and keeps opaque fields") {
  const auto s = parse_m2("S a b\nA 0 1|||U:OTHER|||-NONE-|||NOT_REQUIRED|||some note|||0\n");
  const Edit& e = s[0].annotations.at(0)[0];
  CHECK(e.replacement.empty());
  CHECK(e.required == "NOT_REQUIRED");
  CHECK(e.comment == "some note");
}

TEST_CASE("parse_m2 carries unknown types verbatim") {
  const auto s = parse_m2("S a b\nA 0 1|||R:NOUN:INFL|||x|||REQUIRED|||-NONE-|||0\n");
  const Edit& e = s[0].annotations.at(0)[0];
  CHECK(e.type.kind() == ErrorType::Kind::Unknown);
  CHECK(e.type.to_string() == "R:NOUN:INFL");
}

TEST_CASE("parse_m2 errors carry the line number") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_m2(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  SUBCASE("wrong field count") { CHECK(line_of("S a b\nA 0 1|||R:OTHER|||x|||REQUIRED|||0\n") == 2); }
  SUBCASE("span out of range") {
    CHECK(line_of("S a b\n\nS c\nA 0 2|||R:OTHER|||x|||REQUIRED|||-NONE-|||0\n") == 4);
  }
  SUBCASE("reversed span") { CHECK(line_of("S a b\nA 2 1|||R:OTHER|||x|||REQUIRED|||-NONE-|||0\n") == 2); }
  SUBCASE("non-integer annotator") {
    CHECK(line_of("S a b\nA 0 1|||R:OTHER|||x|||REQUIRED|||-NONE-|||zero\n") == 2);
  }
  SUBCASE("negative annotator") { CHECK(line_of("S a b\nA 0 1|||R:OTHER|||x|||REQUIRED|||-NONE-|||-1\n") == 2); }
  SUBCASE("span without a space") { CHECK(line_of("S a b\nA 0|||R:OTHER|||x|||REQUIRED|||-NONE-|||0\n") == 2); }
  SUBCASE("A line before any S line") { CHECK(line_of("A 0 1|||R:OTHER|||x|||REQUIRED|||-NONE-|||0\n") == 1); }
  SUBCASE("unrecognized line") { CHECK(line_of("S a\nX junk\n") == 2); }
  SUBCASE("noop with a real span") { CHECK(line_of("S a\nA 0 1|||noop|||-NONE-|||REQUIRED|||-NONE-|||0\n") == 2); }
  SUBCASE("sentinel span on a real type") {
    CHECK(line_of("S a\nA -1 -1|||R:OTHER|||x|||REQUIRED|||-NONE-|||0\n") == 2);
  }
  SUBCASE("overlapping edits") {
    CHECK(line_of("S a b c\nA 0 2|||R:OTHER|||x|||REQUIRED|||-NONE-|||0\nA 1 3|||R:OTHER|||y|||REQUIRED|||-NONE-|||0\n") ==
          3);
  }
  SUBCASE("noop mixed with an edit") {
    CHECK(line_of("S a\nA -1 -1|||noop|||-NONE-|||REQUIRED|||-NONE-|||0\nA 0 1|||R:OTHER|||x|||REQUIRED|||-NONE-|||0\n") ==
          3);
  }
}

TEST_CASE("parse errors render with the offending text") {
  try {
    parse_m2("S a b\nA 0 1|||R:OTHER|||x\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("A 0 1|||R:OTHER|||x") != std::string::npos);
  }
}

TEST_CASE("serialize_m2 emits the canonical block") {
  const auto sentences = parse_m2(kExampleLine);
  const auto text = serialize_m2(sentences);
  CHECK(text.rfind("S in addition more", 0) == 0);
  CHECK(text.find("A 0 1|||R:ORTH|||In") != std::string::npos);
  CHECK(text == kExampleLine);
  CHECK(serialize_m2({}) == "");
}

TEST_CASE("serialize_m2 orders annotators then spans") {
  M2Sentence s;
  s.source = {"a", "b", "c"};
  s.annotations[1] = {edit(0, 1, "x", "R:OTHER", 1), edit(2, 3, "", "U:OTHER", 1)};
  s.annotations[0] = {edit(1, 1, ",", "M:PUNCT", 0)};
  const std::vector<M2Sentence> v{s};
  const std::string expected =
      "S a b c\n"
      "A 1 1|||M:PUNCT|||,|||REQUIRED|||-NONE-|||0\n"
      "A 0 1|||R:OTHER|||x|||REQUIRED|||-NONE-|||1\n"
      "A 2 3|||U:OTHER|||-NONE-|||REQUIRED|||-NONE-|||1\n";
  CHECK(serialize_m2(v) == expected);
  CHECK(parse_m2(serialize_m2(v)) == v);
}

TEST_CASE("serialize_m2 rejects invalid sentences naming the index") {
  M2Sentence good;
  good.source = {"a"};
  M2Sentence bad;
  bad.source = {"a", "b"};
  bad.annotations[0] = {edit(0, 3, "x")};
  const std::vector<M2Sentence> v{good, bad};
  try {
    serialize_m2(v);
    FAIL("expected Error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("sentence 1") != std::string::npos);
  }
  SUBCASE("unsorted") {
    bad.annotations[0] = {edit(1, 2, "x"), edit(0, 1, "y")};
    CHECK_THROWS_AS(validate_sentence(bad), Error);
  }
  SUBCASE("noop mixed") {
    bad.annotations[0] = {make_noop_edit(0), edit(0, 1, "y")};
    CHECK_THROWS_AS(validate_sentence(bad), Error);
  }
  SUBCASE("replacement with outer whitespace") {
    bad.annotations[0] = {edit(0, 1, " y")};
    CHECK_THROWS_AS(validate_sentence(bad), Error);
  }
  SUBCASE("field separator inside a comment") {
    auto e = edit(0, 1, "y");
    e.comment = "a|||b";
    bad.annotations[0] = {e};
    CHECK_THROWS_AS(validate_sentence(bad), Error);
  }
}

TEST_CASE("apply_edits reconstructs the corrected example") {
  const auto source = split_tokens("in addition more and more scientists agree with alien really exist");
  const std::vector<Edit> edits{edit(0, 1, "In", "R:ORTH"), edit(2, 2, ",", "M:PUNCT"), edit(7, 8, "that", "R:PREP"),
                                edit(8, 9, "aliens", "R:NOUN:NUM"), edit(11, 11, ".", "M:PUNCT")};
  CHECK(join_tokens(apply_edits(source, edits)) ==
        "In addition , more and more scientists agree that aliens really exist .");
}

TEST_CASE("apply_edits basics") {
  const Tokens ab{"a", "b"};
  CHECK(apply_edits(ab, {}) == ab);
  const std::vector<Edit> del{edit(0, 1, "", "U:OTHER")};
  CHECK(apply_edits(ab, del) == Tokens{"b"});
  const std::vector<Edit> ins{edit(1, 1, "x", "M:OTHER"), edit(1, 1, "y z", "M:OTHER")};
  CHECK(apply_edits(ab, ins) == Tokens{"a", "x", "y", "z", "b"});
  const std::vector<Edit> noop{make_noop_edit(0)};
  CHECK(apply_edits(ab, noop) == ab);
  const std::vector<Edit> touching{edit(0, 1, "x"), edit(1, 2, "y")};
  CHECK(apply_edits(ab, touching) == Tokens{"x", "y"});
  const Tokens none;
  const std::vector<Edit> into_empty{edit(0, 0, "hi", "M:OTHER")};
  CHECK(apply_edits(none, into_empty) == Tokens{"hi"});
}

TEST_CASE("apply_edits rejects bad edit lists") {
  const Tokens abc{"a", "b", "c"};
  const std::vector<Edit> overlap{edit(0, 2, "x"), edit(1, 3, "y")};
  CHECK_THROWS_AS(apply_edits(abc, overlap), Error);
  const std::vector<Edit> unsorted{edit(2, 3, "x"), edit(0, 1, "y")};
  CHECK_THROWS_AS(apply_edits(abc, unsorted), Error);
  const std::vector<Edit> too_far{edit(2, 4, "x")};
  CHECK_THROWS_AS(apply_edits(abc, too_far), Error);
}

TEST_CASE("round-trip fixture is byte-stable") {
  const auto text = read_text(kTestData / "m2" / "roundtrip.m2");
  const auto parsed = parse_m2(text);
  CHECK(parsed.size() >= 20);
  CHECK(serialize_m2(parsed) == text);
  CHECK(parse_m2(serialize_m2(parsed)) == parsed);
}

TEST_CASE("non-canonical input serializes to its canonical form") {
  const auto parsed = parse_m2(read_text(kTestData / "m2" / "noncanonical.m2"));
  const auto canonical = read_text(kTestData / "m2" / "noncanonical.canonical.m2");
  CHECK(serialize_m2(parsed) == canonical);
  CHECK(parse_m2(canonical) == parsed);
}

TEST_CASE("read_m2_file reports the path") {
  CHECK_THROWS_AS(read_m2_file(kTestData / "m2" / "absent.m2"), IoError);
  CHECK_THROWS_AS(read_m2_file(kTestData / "m2"), IoError);
  gecstrat::testing::TempDir dir("m2");
  gecstrat::testing::write_text(dir / "bad.m2", "S a\nQ\n");
  try {
    read_m2_file(dir / "bad.m2");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("bad.m2") != std::string::npos);
  }
}

TEST_CASE("proficiency levels parse from single letters only") {
  CHECK(parse_level("A") == ProficiencyLevel::A);
  CHECK(parse_level("c") == ProficiencyLevel::C);
  CHECK(parse_level("n") == ProficiencyLevel::N);
  CHECK_FALSE(parse_level("D").has_value());
  CHECK_FALSE(parse_level("AB").has_value());
  CHECK_FALSE(parse_level("").has_value());
  CHECK(level_letter(ProficiencyLevel::B) == 'B');
}
