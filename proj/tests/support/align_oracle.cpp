#include "align_oracle.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gecstrat::testing {
namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

std::int64_t units(double cost) { return std::llround(cost * 1e6); }

std::string lower(const std::string& s) {
  std::string out = s;
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

struct Enumerator {
  std::span<const std::string> src;
  std::span<const std::string> tgt;
  OracleCosts costs;
  std::int64_t best = kInf;

  void walk(std::size_t i, std::size_t j, std::int64_t acc) {
    if (i == src.size() && j == tgt.size()) {
      best = std::min(best, acc);
      return;
    }
    if (i < src.size() && j < tgt.size()) {
      if (src[i] == tgt[j]) {
        walk(i + 1, j + 1, acc);
      } else {
        const bool case_only = lower(src[i]) == lower(tgt[j]);
        walk(i + 1, j + 1, acc + (case_only ? costs.case_substitute : costs.substitute));
      }
    }
    if (i < src.size()) walk(i + 1, j, acc + costs.deletion);
    if (j < tgt.size()) walk(i, j + 1, acc + costs.insert);
    for (std::size_t k = 2; k <= static_cast<std::size_t>(kMaxTransposeBlock); ++k) {
      if (i + k > src.size() || j + k > tgt.size()) break;
      if (oracle_transposable(src.subspan(i, k), tgt.subspan(j, k))) {
        walk(i + k, j + k, acc + static_cast<std::int64_t>(k) * costs.transpose_per_token);
      }
    }
  }
};

}  // namespace

OracleCosts::OracleCosts(const CostConfig& cfg)
    : substitute(units(cfg.substitute_base)),
      case_substitute(units(cfg.case_only_substitute)),
      insert(units(cfg.insert)),
      deletion(units(cfg.deletion)),
      transpose_per_token(units(cfg.transpose_per_token)) {}

bool oracle_transposable(std::span<const std::string> a, std::span<const std::string> b) {
  if (a.size() != b.size() || a.size() < 2) return false;
  std::vector<std::string> fa, fb;
  for (const auto& t : a) fa.push_back(lower(t));
  for (const auto& t : b) fb.push_back(lower(t));
  if (fa == fb) return false;
  std::sort(fa.begin(), fa.end());
  std::sort(fb.begin(), fb.end());
  return fa == fb;
}

std::int64_t enumerate_min_cost(std::span<const std::string> source, std::span<const std::string> target,
                                const CostConfig& cfg) {
  Enumerator e{source, target, OracleCosts(cfg)};
  e.walk(0, 0, 0);
  return e.best;
}

MemoOracle::MemoOracle(std::span<const std::string> source, const CostConfig& cfg) : costs_(cfg) {
  for (const auto& t : source) {
    src_exact_.push_back(exact_id(t));
    src_folded_.push_back(folded_id(t));
  }
  memo_.emplace_back(source.size() + 1, -1);
}

int MemoOracle::exact_id(const std::string& token) {
  const auto it = std::find(exact_names_.begin(), exact_names_.end(), token);
  if (it != exact_names_.end()) return static_cast<int>(it - exact_names_.begin());
  exact_names_.push_back(token);
  return static_cast<int>(exact_names_.size()) - 1;
}

int MemoOracle::folded_id(const std::string& token) {
  const auto folded = lower(token);
  const auto it = std::find(folded_names_.begin(), folded_names_.end(), folded);
  if (it != folded_names_.end()) return static_cast<int>(it - folded_names_.begin());
  folded_names_.push_back(folded);
  return static_cast<int>(folded_names_.size()) - 1;
}

void MemoOracle::push_target(const std::string& token) {
  tgt_exact_.push_back(exact_id(token));
  tgt_folded_.push_back(folded_id(token));
  // Columns past the target are kept allocated and reset on reuse.
  if (memo_.size() <= tgt_exact_.size()) {
    memo_.emplace_back(src_exact_.size() + 1, -1);
  } else {
    std::fill(memo_[tgt_exact_.size()].begin(), memo_[tgt_exact_.size()].end(), -1);
  }
}

void MemoOracle::pop_target() {
  if (tgt_exact_.empty()) throw std::logic_error("pop on empty target");
  tgt_exact_.pop_back();
  tgt_folded_.pop_back();
}

std::int64_t MemoOracle::cost() {
  return best(static_cast<int>(src_exact_.size()), static_cast<int>(tgt_exact_.size()));
}

bool MemoOracle::transposable(int i, int j, int k) const {
  std::array<int, kMaxTransposeBlock> a{};
  std::array<int, kMaxTransposeBlock> b{};
  std::copy_n(src_folded_.begin() + (i - k), k, a.begin());
  std::copy_n(tgt_folded_.begin() + (j - k), k, b.begin());
  if (a == b) return false;
  std::sort(a.begin(), a.begin() + k);
  std::sort(b.begin(), b.begin() + k);
  return a == b;
}

std::int64_t MemoOracle::best(int i, int j) {
  auto& slot = memo_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  if (slot >= 0) return slot;
  std::int64_t result = kInf;
  if (i == 0 && j == 0) result = 0;
  if (i > 0 && j > 0) {
    std::int64_t step = 0;
    if (src_exact_[i - 1] != tgt_exact_[j - 1]) {
      step = src_folded_[i - 1] == tgt_folded_[j - 1] ? costs_.case_substitute : costs_.substitute;
    }
    result = std::min(result, best(i - 1, j - 1) + step);
  }
  if (i > 0) result = std::min(result, best(i - 1, j) + costs_.deletion);
  if (j > 0) result = std::min(result, best(i, j - 1) + costs_.insert);
  for (int k = 2; k <= kMaxTransposeBlock && k <= i && k <= j; ++k) {
    if (transposable(i, j, k)) result = std::min(result, best(i - k, j - k) + k * costs_.transpose_per_token);
  }
  slot = result;
  return result;
}

}  // namespace gecstrat::testing
