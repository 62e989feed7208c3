#include "synthetic.hpp"

#include <fstream>
#include <map>
#include <stdexcept>

#include "printed_tables.hpp"

namespace gecstrat::testing {
namespace {

struct Template {
  const char* source;
  int start;
  int end;
  const char* replacement;
};

const std::map<std::string, Template, std::less<>>& templates() {
  static const std::map<std::string, Template, std::less<>> t = {
      {"M:PUNCT", {"we went home", 1, 1, ","}},
      {"M:DET", {"i saw dog", 2, 2, "a"}},
      {"M:PREP", {"we waited the bus", 2, 2, "for"}},
      {"R:DET", {"i saw a dog", 2, 3, "the"}},
      {"R:PREP", {"he sat in the chair", 2, 3, "on"}},
      {"R:VERB", {"they cook dinner", 1, 2, "prepare"}},
      {"R:VERB:TENSE", {"they walk home", 1, 2, "walked"}},
      {"R:ORTH", {"in the morning", 0, 1, "In"}},
      {"R:OTHER", {"the zorblat works", 1, 2, "flimflam"}},
  };
  return t;
}

void emit(GeneratedLevel& out, const std::string& type, const EvalCounts& counts) {
  const auto it = templates().find(type);
  if (it == templates().end()) throw std::invalid_argument("no template for type " + type);
  const Template& t = it->second;
  Edit edit{t.start, t.end, t.replacement, ErrorType::parse(type)};
  const Tokens source = split_tokens(t.source);
  const std::string corrected = join_tokens(apply_edits(source, std::vector<Edit>{edit}));
  const std::string plain = join_tokens(source);

  auto add = [&](bool annotated, const std::string& hyp) {
    M2Sentence s;
    s.source = source;
    s.annotations[0] = annotated ? std::vector<Edit>{edit} : std::vector<Edit>{make_noop_edit(0)};
    out.reference.push_back(std::move(s));
    out.hypotheses.push_back(hyp);
  };
  for (std::int64_t i = 0; i < counts.tp; ++i) add(true, corrected);
  for (std::int64_t i = 0; i < counts.fp; ++i) add(false, corrected);
  for (std::int64_t i = 0; i < counts.fn; ++i) add(true, plain);
}

}  // namespace

GeneratedLevel generate_level(const LevelPlan& plan) {
  EvalCounts rest = plan.total;
  GeneratedLevel out;
  for (const auto& cell : plan.cells) {
    rest.tp -= cell.counts.tp;
    rest.fp -= cell.counts.fp;
    rest.fn -= cell.counts.fn;
    emit(out, cell.type, cell.counts);
  }
  if (rest.tp < 0 || rest.fp < 0 || rest.fn < 0) throw std::invalid_argument("typed cells exceed the total");
  emit(out, "R:OTHER", rest);
  return out;
}

FixtureFiles write_fixture(const std::filesystem::path& dir, const std::vector<LevelPlan>& plans) {
  std::filesystem::create_directories(dir);
  FixtureFiles files;
  files.hypotheses = dir / "hyp.txt";
  std::ofstream hyp(files.hypotheses, std::ios::binary);
  for (const auto& plan : plans) {
    const auto level = generate_level(plan);
    const auto path = dir / (std::string(1, level_letter(plan.level)) + ".fixture.m2");
    std::ofstream(path, std::ios::binary) << serialize_m2(level.reference);
    files.references.push_back(path);
    for (const auto& line : level.hypotheses) hyp << line << '\n';
  }
  return files;
}

std::vector<LevelPlan> printed_plans(std::string_view system, std::string_view setting, bool with_labels) {
  std::vector<LevelPlan> plans;
  for (const ProficiencyLevel level : {ProficiencyLevel::A, ProficiencyLevel::B, ProficiencyLevel::C}) {
    const std::string stratum(1, level_letter(level));
    LevelPlan plan{level, system_row(system, setting, stratum).counts, {}};
    if (with_labels) {
      for (const auto& row : label_rows()) {
        if (row.stratum == stratum) plan.cells.push_back({std::string(row.label), row.counts});
      }
    }
    plans.push_back(std::move(plan));
  }
  return plans;
}

}  // namespace gecstrat::testing
