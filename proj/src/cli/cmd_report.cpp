#include <ostream>

#include "commands.hpp"
#include "gecstrat/report.hpp"

namespace gecstrat::cli {

int cmd_report(const ReportOptions& opts, std::ostream& out) {
  const auto format = parse_format(opts.output.format);
  const auto left = parse_report(read_text_file(opts.left), opts.left.string());
  const auto right = parse_report(read_text_file(opts.right), opts.right.string());
  const auto deltas = compare_reports(left, right);

  std::string text;
  switch (format) {
    case OutputFormat::Json:
      text = deltas_to_json(deltas).dump(2) + "\n";
      break;
    case OutputFormat::Tsv:
      text = deltas_to_tsv(deltas);
      break;
    case OutputFormat::Text:
      text = deltas_to_text(deltas);
      break;
  }
  emit(opts.output, text, out);
  return 0;
}

}  // namespace gecstrat::cli
