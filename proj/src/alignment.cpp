#include "gecstrat/alignment.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "gecstrat/error.hpp"

namespace gecstrat {
namespace {

constexpr double kUnitsPerCost = 1e6;

std::int64_t to_units(double cost) { return std::llround(cost * kUnitsPerCost); }
double from_units(std::int64_t units) { return static_cast<double>(units) / kUnitsPerCost; }

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace

std::string_view align_kind_name(AlignKind kind) noexcept {
  switch (kind) {
    case AlignKind::Match:
      return "Match";
    case AlignKind::Substitute:
      return "Substitute";
    case AlignKind::Insert:
      return "Insert";
    case AlignKind::Delete:
      return "Delete";
    case AlignKind::Transpose:
      return "Transpose";
  }
  return "?";
}

void CostConfig::validate() const {
  const std::array<std::pair<const char*, double>, 5> fields{{
      {"substitute_base", substitute_base},
      {"insert", insert},
      {"delete", deletion},
      {"case_only_substitute", case_only_substitute},
      {"transpose_per_token", transpose_per_token},
  }};
  for (const auto& [name, value] : fields) {
    if (!std::isfinite(value) || value < 0.0) {
      throw ConfigError(std::string("cost '") + name + "' must be a finite non-negative number");
    }
    if (value > 1e9) throw ConfigError(std::string("cost '") + name + "' is too large");
  }
}

Aligner::Aligner(std::span<const std::string> source, const CostConfig& cfg) {
  cfg.validate();
  sub_base_ = to_units(cfg.substitute_base);
  ins_ = to_units(cfg.insert);
  del_ = to_units(cfg.deletion);
  case_sub_ = to_units(cfg.case_only_substitute);
  transpose_ = to_units(cfg.transpose_per_token);

  src_.reserve(source.size());
  src_hash_prefix_.assign(1, 0);
  for (const auto& tok : source) {
    src_.push_back(intern(tok));
    src_hash_prefix_.push_back(src_hash_prefix_.back() + src_.back().folded_hash);
  }
  tgt_hash_prefix_.assign(1, 0);
  cols_.resize(1);
  cols_[0].resize(src_.size() + 1);
  for (std::size_t i = 0; i <= src_.size(); ++i) {
    cols_[0][i] = static_cast<std::int64_t>(i) * del_;
  }
}

Aligner::Token Aligner::intern(std::string_view token) {
  std::string key(token);
  auto exact = exact_ids_.try_emplace(key, static_cast<int>(exact_ids_.size())).first->second;
  auto folded_key = fold_case(token);
  auto folded =
      folded_ids_.try_emplace(std::move(folded_key), static_cast<int>(folded_ids_.size()))
          .first->second;
  return Token{exact, folded, splitmix64(static_cast<std::uint64_t>(folded) + 1)};
}

std::int64_t Aligner::substitute_units(const Token& a, const Token& b) const noexcept {
  if (a.exact == b.exact) return 0;
  return a.folded == b.folded ? case_sub_ : sub_base_;
}

bool Aligner::transposable(int i, int j, int k) const {
  if (src_hash_prefix_[i] - src_hash_prefix_[i - k] != tgt_hash_prefix_[j] - tgt_hash_prefix_[j - k]) {
    return false;
  }
  std::array<int, kMaxTransposeBlock> a{};
  std::array<int, kMaxTransposeBlock> b{};
  bool same_order = true;
  for (int d = 0; d < k; ++d) {
    a[d] = src_[i - k + d].folded;
    b[d] = tgt_[j - k + d].folded;
    same_order = same_order && a[d] == b[d];
  }
  if (same_order) return false;
  std::sort(a.begin(), a.begin() + k);
  std::sort(b.begin(), b.begin() + k);
  return std::equal(a.begin(), a.begin() + k, b.begin());
}

void Aligner::push_target(std::string_view token) {
  tgt_.push_back(intern(token));
  tgt_hash_prefix_.push_back(tgt_hash_prefix_.back() + tgt_.back().folded_hash);
  const int j = static_cast<int>(tgt_.size());
  const int m = static_cast<int>(src_.size());
  if (cols_.size() <= static_cast<std::size_t>(j)) cols_.emplace_back(m + 1);
  auto& col = cols_[j];
  const auto& prev = cols_[j - 1];
  const Token& t = tgt_.back();

  col[0] = static_cast<std::int64_t>(j) * ins_;
  for (int i = 1; i <= m; ++i) {
    std::int64_t best = prev[i - 1] + substitute_units(src_[i - 1], t);
    best = std::min(best, col[i - 1] + del_);
    best = std::min(best, prev[i] + ins_);
    const int max_k = std::min({kMaxTransposeBlock, i, j});
    for (int k = 2; k <= max_k; ++k) {
      const std::int64_t via = cols_[j - k][i - k] + k * transpose_;
      if (via < best && transposable(i, j, k)) best = via;
    }
    col[i] = best;
  }
}

void Aligner::pop_target() {
  if (tgt_.empty()) throw std::logic_error("pop_target on empty target");
  tgt_.pop_back();
  tgt_hash_prefix_.pop_back();
}

void Aligner::clear_target() {
  tgt_.clear();
  tgt_hash_prefix_.assign(1, 0);
}

double Aligner::cost() const noexcept { return from_units(cost_units()); }

std::vector<AlignmentOp> Aligner::backtrace() const {
  std::vector<AlignmentOp> ops;
  int i = static_cast<int>(src_.size());
  int j = static_cast<int>(tgt_.size());
  ops.reserve(static_cast<std::size_t>(std::max(i, j)));
  auto emit = [&](AlignKind kind, int di, int dj, std::int64_t units) {
    ops.push_back(AlignmentOp{kind, {i - di, i}, {j - dj, j}, from_units(units)});
    i -= di;
    j -= dj;
  };

  while (i > 0 || j > 0) {
    const std::int64_t here = cell(i, j);
    if (i > 0 && j > 0) {
      const auto& s = src_[i - 1];
      const auto& t = tgt_[j - 1];
      if (s.exact == t.exact && cell(i - 1, j - 1) == here) {
        emit(AlignKind::Match, 1, 1, 0);
        continue;
      }
      const auto sub = substitute_units(s, t);
      if (s.exact != t.exact && cell(i - 1, j - 1) + sub == here) {
        emit(AlignKind::Substitute, 1, 1, sub);
        continue;
      }
      bool transposed = false;
      const int max_k = std::min({kMaxTransposeBlock, i, j});
      for (int k = 2; k <= max_k; ++k) {
        if (cell(i - k, j - k) + k * transpose_ == here && transposable(i, j, k)) {
          emit(AlignKind::Transpose, k, k, k * transpose_);
          transposed = true;
          break;
        }
      }
      if (transposed) continue;
    }
    if (i > 0 && cell(i - 1, j) + del_ == here) {
      emit(AlignKind::Delete, 1, 0, del_);
      continue;
    }
    if (j > 0 && cell(i, j - 1) + ins_ == here) {
      emit(AlignKind::Insert, 0, 1, ins_);
      continue;
    }
    throw std::logic_error("alignment backtrace found no predecessor");
  }
  std::reverse(ops.begin(), ops.end());
  return ops;
}

std::vector<AlignmentOp> align(std::span<const std::string> source,
                               std::span<const std::string> target, const CostConfig& cfg) {
  Aligner aligner(source, cfg);
  for (const auto& tok : target) aligner.push_target(tok);
  return aligner.backtrace();
}

double total_cost(std::span<const AlignmentOp> ops) noexcept {
  double sum = 0.0;
  for (const auto& op : ops) sum += op.cost;
  return sum;
}

}  // namespace gecstrat
