#include "gecstrat/classify.hpp"
#include "gecstrat/edit_extraction.hpp"
#include "gecstrat/error.hpp"

namespace gecstrat {
namespace {

void check_shape(const AlignmentOp& op, std::size_t index) {
  const int s = op.src.size();
  const int t = op.tgt.size();
  bool ok = false;
  switch (op.kind) {
    case AlignKind::Match:
    case AlignKind::Substitute:
      ok = s == 1 && t == 1;
      break;
    case AlignKind::Insert:
      ok = s == 0 && t == 1;
      break;
    case AlignKind::Delete:
      ok = s == 1 && t == 0;
      break;
    case AlignKind::Transpose:
      ok = s >= 2 && s == t;
      break;
  }
  if (!ok) {
    throw Error("alignment op " + std::to_string(index) + " (" +
                std::string(align_kind_name(op.kind)) + ") has inconsistent ranges");
  }
}

}  // namespace

std::vector<RawEdit> merge_alignment(std::span<const AlignmentOp> ops,
                                     std::span<const std::string> source,
                                     std::span<const std::string> target) {
  TokenRange cursor_src{0, 0};
  TokenRange cursor_tgt{0, 0};
  for (std::size_t n = 0; n < ops.size(); ++n) {
    const auto& op = ops[n];
    check_shape(op, n);
    if (op.src.begin != cursor_src.end || op.tgt.begin != cursor_tgt.end) {
      throw Error("alignment is not contiguous at op " + std::to_string(n));
    }
    cursor_src.end = op.src.end;
    cursor_tgt.end = op.tgt.end;
  }
  if (static_cast<std::size_t>(cursor_src.end) != source.size() ||
      static_cast<std::size_t>(cursor_tgt.end) != target.size()) {
    throw Error("alignment does not cover the source and target");
  }

  std::vector<RawEdit> out;
  RawEdit open;
  bool is_open = false;
  bool anchored = false;
  auto close = [&] {
    if (is_open) {
      open.source_tokens.assign(source.begin() + open.src.begin, source.begin() + open.src.end);
      open.replacement.assign(target.begin() + open.tgt.begin, target.begin() + open.tgt.end);
      out.push_back(std::move(open));
      open = RawEdit{};
      is_open = false;
    }
    anchored = false;
  };
  auto extend = [&](const AlignmentOp& op) {
    if (!is_open) {
      open = RawEdit{op.src, op.tgt, {}, {}};
      is_open = true;
    } else {
      open.src.end = op.src.end;
      open.tgt.end = op.tgt.end;
    }
  };

  for (const auto& op : ops) {
    switch (op.kind) {
      case AlignKind::Match:
        close();
        break;
      case AlignKind::Transpose:
        close();
        extend(op);
        close();
        break;
      case AlignKind::Substitute:
        if (anchored) close();
        extend(op);
        anchored = true;
        break;
      case AlignKind::Insert:
      case AlignKind::Delete:
        extend(op);
        break;
    }
  }
  close();
  return out;
}

std::vector<Edit> extract_edits(std::span<const std::string> source,
                                std::span<const std::string> target, const CostConfig& cfg,
                                const Lexicon& lexicon) {
  auto ops = align(source, target, cfg);
  auto raw = merge_alignment(ops, source, target);
  std::vector<Edit> edits;
  edits.reserve(raw.size());
  for (const auto& r : raw) {
    Edit e;
    e.start = r.src.begin;
    e.end = r.src.end;
    e.replacement = join_tokens(r.replacement);
    e.type = classify_edit(r, lexicon);
    e.annotator = 0;
    edits.push_back(std::move(e));
  }
  return edits;
}

}  // namespace gecstrat
