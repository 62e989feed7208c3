#include "gecstrat/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>

#include "gecstrat/error.hpp"

namespace gecstrat {

using json = nlohmann::json;

std::string format_rounded(double value, int decimals) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[400];
  auto res = std::to_chars(buf, buf + sizeof buf, std::fabs(value), std::chars_format::fixed);
  std::string digits(buf, res.ptr);
  const bool negative = std::signbit(value);

  auto dot = digits.find('.');
  if (dot == std::string::npos) {
    digits += '.';
    dot = digits.size() - 1;
  }
  const auto keep = dot + 1 + static_cast<std::size_t>(std::max(decimals, 0));
  if (digits.size() > keep) {
    const bool round_up = digits[keep] >= '5';
    digits.resize(keep);
    if (round_up) {
      // Carry through the kept digits, skipping the point.
      std::size_t i = digits.size();
      bool carry = true;
      while (carry && i > 0) {
        --i;
        if (digits[i] == '.') continue;
        if (digits[i] == '9') {
          digits[i] = '0';
        } else {
          ++digits[i];
          carry = false;
        }
      }
      if (carry) digits.insert(digits.begin(), '1');
    }
  }
  while (digits.back() == '0') digits.pop_back();
  if (digits.back() == '.') digits.pop_back();
  if (digits.empty()) digits = "0";
  if (negative && digits != "0") digits.insert(digits.begin(), '-');
  return digits;
}

std::string format_beta(double beta) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, beta);
  return std::string(buf, res.ptr);
}

std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size(), 0);
  auto widen = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
  };
  widen(header);
  for (const auto& r : rows) widen(r);

  std::string out;
  auto emit = [&](const std::vector<std::string>& row) {
    std::string line;
    for (std::size_t c = 0; c < width.size(); ++c) {
      const std::string cell = c < row.size() ? row[c] : std::string();
      const std::string pad(width[c] - cell.size(), ' ');
      if (c > 0) line += "  ";
      line += c == 0 ? cell + pad : pad + cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  };
  emit(header);
  for (const auto& r : rows) emit(r);
  return out;
}

json report_to_json(const StratifiedReport& report, const json& config_snapshot) {
  json strata = json::array();
  for (const auto& [key, row] : report.rows()) {
    json f = json::object();
    for (const auto& [beta, value] : row.f) f[format_beta(beta)] = value;
    strata.push_back({
        {"key", key},
        {"tp", row.counts.tp},
        {"fp", row.counts.fp},
        {"fn", row.counts.fn},
        {"precision", row.precision},
        {"recall", row.recall},
        {"f", std::move(f)},
    });
  }
  return {
      {"schema_version", kReportSchemaVersion},
      {"strata", std::move(strata)},
      {"config_snapshot", config_snapshot},
  };
}

std::string dump_report_json(const json& report) { return report.dump(2) + "\n"; }

namespace {

std::vector<std::string> score_cells(const ScoreRow& row, std::span<const double> betas) {
  std::vector<std::string> cells{std::to_string(row.counts.tp), std::to_string(row.counts.fp),
                                 std::to_string(row.counts.fn), format_rounded(row.precision),
                                 format_rounded(row.recall)};
  for (double b : betas) cells.push_back(format_rounded(row.f_at(b)));
  return cells;
}

std::vector<std::string> score_header(std::vector<std::string> lead, std::span<const double> betas) {
  for (const char* h : {"TP", "FP", "FN", "Prec", "Rec"}) lead.emplace_back(h);
  for (double b : betas) lead.push_back("F" + format_beta(b));
  return lead;
}

std::vector<std::optional<ProficiencyLevel>> strata_of(const StratifiedReport& report) {
  std::vector<std::optional<ProficiencyLevel>> out(report.levels().begin(), report.levels().end());
  out.emplace_back(std::nullopt);
  return out;
}

std::string tsv_number(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string report_to_tsv(const StratifiedReport& report) {
  std::string out = "key\ttp\tfp\tfn\tprecision\trecall";
  for (double b : report.betas()) out += "\tf" + format_beta(b);
  out += '\n';
  for (const auto& [key, row] : report.rows()) {
    out += key + '\t' + std::to_string(row.counts.tp) + '\t' + std::to_string(row.counts.fp) + '\t' +
           std::to_string(row.counts.fn) + '\t' + tsv_number(row.precision) + '\t' + tsv_number(row.recall);
    for (double b : report.betas()) out += '\t' + tsv_number(row.f_at(b));
    out += '\n';
  }
  return out;
}

std::string report_to_text(const StratifiedReport& report, std::span<const std::string> label_selectors) {
  const auto& betas = report.betas();
  std::vector<std::vector<std::string>> rows;
  for (const auto& level : strata_of(report)) {
    auto cells = score_cells(report.at(level_key(level)), betas);
    cells.insert(cells.begin(), level_key(level));
    rows.push_back(std::move(cells));
  }
  std::string out = render_table(score_header({"stratum"}, betas), rows);

  for (const auto& selector : label_selectors) {
    validate_selector(selector);
    std::vector<std::vector<std::string>> label_rows;
    for (const auto& level : strata_of(report)) {
      for (const auto& lr : label_breakdown(report, level, selector)) {
        auto cells = score_cells(lr.row, betas);
        cells.insert(cells.begin(), {level_key(level), lr.label});
        label_rows.push_back(std::move(cells));
      }
    }
    out += "\nlabels " + selector + "\n";
    out += label_rows.empty() ? std::string("(no edits with this label)\n")
                              : render_table(score_header({"stratum", "label"}, betas), label_rows);
  }
  return out;
}

const ReportRow* LoadedReport::find(std::string_view key) const {
  auto it = std::find_if(strata.begin(), strata.end(), [&](const ReportRow& r) { return r.key == key; });
  return it == strata.end() ? nullptr : &*it;
}

LoadedReport parse_report(std::string_view text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(0, "malformed JSON at byte " + std::to_string(e.byte), source);
  }
  auto bad = [&](const std::string& what) { throw ParseError(0, "not a report: " + what, source); };
  if (!doc.is_object()) bad("top level must be an object");
  if (!doc.contains("schema_version") || !doc["schema_version"].is_number_integer()) {
    bad("missing integer schema_version");
  }
  if (!doc.contains("strata") || !doc["strata"].is_array()) bad("missing strata array");

  LoadedReport out;
  out.schema_version = doc["schema_version"].get<int>();
  if (doc.contains("config_snapshot")) out.config_snapshot = doc["config_snapshot"];
  std::set<std::string> seen;
  for (const auto& s : doc["strata"]) {
    if (!s.is_object()) bad("stratum entries must be objects");
    ReportRow row;
    try {
      row.key = s.at("key").get<std::string>();
      row.counts = {s.at("tp").get<std::int64_t>(), s.at("fp").get<std::int64_t>(), s.at("fn").get<std::int64_t>()};
      row.precision = s.at("precision").get<double>();
      row.recall = s.at("recall").get<double>();
      for (const auto& [beta, value] : s.at("f").items()) row.f[beta] = value.get<double>();
    } catch (const json::exception&) {
      bad("stratum entry lacks key, counts, precision, recall or f");
    }
    if (row.counts.tp < 0 || row.counts.fp < 0 || row.counts.fn < 0) bad("negative counts in " + row.key);
    if (!seen.insert(row.key).second) bad("duplicate stratum " + row.key);
    out.strata.push_back(std::move(row));
  }
  return out;
}

std::vector<ReportDelta> compare_reports(const LoadedReport& left, const LoadedReport& right) {
  if (left.schema_version != right.schema_version) {
    throw Error("report schema version mismatch: " + std::to_string(left.schema_version) + " vs " +
                std::to_string(right.schema_version));
  }
  if (left.schema_version != kReportSchemaVersion) {
    throw Error("unsupported report schema version " + std::to_string(left.schema_version) + " (expected " +
                std::to_string(kReportSchemaVersion) + ")");
  }
  std::vector<ReportDelta> out;
  for (const auto& l : left.strata) {
    const ReportRow* r = right.find(l.key);
    if (r == nullptr) continue;
    ReportDelta d{l.key, l, *r, r->precision - l.precision, r->recall - l.recall, {}};
    for (const auto& [beta, value] : l.f) {
      if (auto it = r->f.find(beta); it != r->f.end()) d.d_f[beta] = it->second - value;
    }
    out.push_back(std::move(d));
  }
  return out;
}

namespace {

std::vector<std::string> delta_betas(std::span<const ReportDelta> deltas) {
  std::vector<std::string> betas;
  if (!deltas.empty()) {
    for (const auto& [beta, v] : deltas.front().d_f) betas.push_back(beta);
  }
  std::sort(betas.begin(), betas.end(), [](const std::string& a, const std::string& b) {
    return std::stod(a) < std::stod(b);
  });
  return betas;
}

}  // namespace

std::string deltas_to_text(std::span<const ReportDelta> deltas) {
  const auto betas = delta_betas(deltas);
  std::vector<std::string> header{"stratum", "P left", "P right", "dP", "R left", "R right", "dR"};
  for (const auto& b : betas) {
    for (const char* part : {"F%s left", "F%s right", "dF%s"}) {
      std::string h(part);
      h.replace(h.find("%s"), 2, b);
      header.push_back(h);
    }
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& d : deltas) {
    std::vector<std::string> row{d.key,
                                 format_rounded(d.left.precision),
                                 format_rounded(d.right.precision),
                                 format_rounded(d.d_precision),
                                 format_rounded(d.left.recall),
                                 format_rounded(d.right.recall),
                                 format_rounded(d.d_recall)};
    for (const auto& b : betas) {
      auto lf = d.left.f.find(b);
      auto rf = d.right.f.find(b);
      auto df = d.d_f.find(b);
      const bool shared = lf != d.left.f.end() && rf != d.right.f.end() && df != d.d_f.end();
      row.push_back(shared ? format_rounded(lf->second) : "-");
      row.push_back(shared ? format_rounded(rf->second) : "-");
      row.push_back(shared ? format_rounded(df->second) : "-");
    }
    rows.push_back(std::move(row));
  }
  return render_table(header, rows);
}

std::string deltas_to_tsv(std::span<const ReportDelta> deltas) {
  const auto betas = delta_betas(deltas);
  std::string out = "key\td_precision\td_recall";
  for (const auto& b : betas) out += "\td_f" + b;
  out += '\n';
  for (const auto& d : deltas) {
    out += d.key + '\t' + tsv_number(d.d_precision) + '\t' + tsv_number(d.d_recall);
    for (const auto& b : betas) {
      auto it = d.d_f.find(b);
      out += '\t' + (it == d.d_f.end() ? std::string("-") : tsv_number(it->second));
    }
    out += '\n';
  }
  return out;
}

json deltas_to_json(std::span<const ReportDelta> deltas) {
  json rows = json::array();
  for (const auto& d : deltas) {
    rows.push_back({{"key", d.key},
                    {"d_precision", d.d_precision},
                    {"d_recall", d.d_recall},
                    {"d_f", d.d_f}});
  }
  return {{"schema_version", kReportSchemaVersion}, {"deltas", std::move(rows)}};
}

json summaries_to_json(std::span<const CorpusSummary> summaries, int top_k, AnnotatorPolicy policy) {
  json levels = json::array();
  for (const auto& s : summaries) {
    json top = json::array();
    for (const auto& [type, ratio] : top_k_errors(s, top_k)) top.push_back({{"type", type}, {"ratio", ratio}});
    levels.push_back({
        {"level", std::string(1, level_letter(s.proficiency))},
        {"sentences", s.sentences},
        {"tokens", s.tokens},
        {"avg_tokens_per_sentence", s.avg_tokens_per_sentence},
        {"edits", s.edits},
        {"type_counts", s.type_counts},
        {"type_ratios", s.type_ratios},
        {"top", std::move(top)},
    });
  }
  return {
      {"schema_version", kReportSchemaVersion},
      {"annotator_policy", annotator_policy_name(policy)},
      {"top_k", top_k},
      {"levels", std::move(levels)},
  };
}

std::string summaries_to_text(std::span<const CorpusSummary> summaries, int top_k) {
  std::vector<std::vector<std::string>> overview;
  for (const auto& s : summaries) {
    overview.push_back({std::string(1, level_letter(s.proficiency)), std::to_string(s.sentences),
                        std::to_string(s.tokens), format_rounded(s.avg_tokens_per_sentence, 3),
                        std::to_string(s.edits)});
  }
  std::string out = render_table({"level", "sentences", "tokens", "avg tokens", "edits"}, overview);

  std::vector<std::vector<std::pair<std::string, double>>> tops;
  std::vector<std::string> header{"rank"};
  for (const auto& s : summaries) {
    tops.push_back(top_k_errors(s, top_k));
    header.push_back(std::string(1, level_letter(s.proficiency)));
    header.emplace_back("ratio");
  }
  std::vector<std::vector<std::string>> rows;
  for (int rank = 0; rank < top_k; ++rank) {
    std::vector<std::string> row{std::to_string(rank + 1)};
    bool any = false;
    for (const auto& top : tops) {
      if (static_cast<std::size_t>(rank) < top.size()) {
        row.push_back(top[static_cast<std::size_t>(rank)].first);
        row.push_back(format_rounded(top[static_cast<std::size_t>(rank)].second));
        any = true;
      } else {
        row.insert(row.end(), {"-", "-"});
      }
    }
    if (any) rows.push_back(std::move(row));
  }
  out += '\n' + render_table(header, rows);
  return out;
}

std::string summaries_to_tsv(std::span<const CorpusSummary> summaries, int top_k) {
  std::string out = "level\trank\ttype\tcount\tratio\n";
  for (const auto& s : summaries) {
    int rank = 0;
    for (const auto& [type, ratio] : top_k_errors(s, top_k)) {
      out += std::string(1, level_letter(s.proficiency)) + '\t' + std::to_string(++rank) + '\t' + type + '\t' +
             std::to_string(s.type_counts.at(type)) + '\t' + tsv_number(ratio) + '\n';
    }
  }
  return out;
}

}  // namespace gecstrat
