#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gecstrat/tokens.hpp"

namespace gecstrat {

struct TokenRange {
  int begin = 0;
  int end = 0;

  int size() const noexcept { return end - begin; }
  bool empty() const noexcept { return begin == end; }
  friend bool operator==(const TokenRange&, const TokenRange&) = default;
};

enum class AlignKind : std::uint8_t { Match, Substitute, Insert, Delete, Transpose };

std::string_view align_kind_name(AlignKind kind) noexcept;

struct AlignmentOp {
  AlignKind kind = AlignKind::Match;
  TokenRange src;
  TokenRange tgt;
  double cost = 0.0;

  friend bool operator==(const AlignmentOp&, const AlignmentOp&) = default;
};

// Operation costs. Match always costs 0. Substitution between tokens that are
// equal ignoring case costs `case_only_substitute` instead of
// `substitute_base`; a transposition of k tokens costs k * transpose_per_token.
struct CostConfig {
  double substitute_base = 1.0;
  double insert = 1.0;
  double deletion = 1.0;
  double case_only_substitute = 0.1;
  double transpose_per_token = 0.5;

  // Throws ConfigError on negative or non-finite costs.
  void validate() const;
};

// Longest block considered for a transposition.
inline constexpr int kMaxTransposeBlock = 4;

/// Damerau-Levenshtein style token aligner with configurable costs.
///
/// The source is fixed at construction; target tokens are pushed and popped
/// one at a time, each push filling one DP column. `align` is the one-shot
/// wrapper; the incremental interface lets callers sweep many targets that
/// share prefixes. Costs are held as integers in millionths so equal-cost
/// paths compare exactly.
///
/// Transpositions cover adjacent blocks of 2..4 tokens whose case-folded
/// multisets agree but whose order differs.
class Aligner {
 public:
  Aligner(std::span<const std::string> source, const CostConfig& cfg);

  void push_target(std::string_view token);
  void pop_target();
  void clear_target();

  std::size_t source_size() const noexcept { return src_.size(); }
  std::size_t target_size() const noexcept { return tgt_.size(); }

  // Minimum cost of aligning the source with the current target, in the
  // fixed-point unit and as a double.
  std::int64_t cost_units() const noexcept { return cols_[tgt_.size()].back(); }
  double cost() const noexcept;

  /// One minimum-cost path, in source order. At each backtrace step the
  /// candidate operations are tried in the order Match, Substitute,
  /// Transpose (shortest block first), Delete, Insert; the first one that
  /// reproduces the cell value wins.
  std::vector<AlignmentOp> backtrace() const;

 private:
  struct Token {
    int exact;
    int folded;
    std::uint64_t folded_hash;
  };

  Token intern(std::string_view token);
  std::int64_t substitute_units(const Token& a, const Token& b) const noexcept;
  bool transposable(int i, int j, int k) const;
  std::int64_t cell(int i, int j) const noexcept { return cols_[j][i]; }

  std::int64_t sub_base_, ins_, del_, case_sub_, transpose_;
  std::unordered_map<std::string, int> exact_ids_;
  std::unordered_map<std::string, int> folded_ids_;
  std::vector<Token> src_;
  std::vector<Token> tgt_;
  // Prefix sums of folded-token hashes; block multiset fingerprints.
  std::vector<std::uint64_t> src_hash_prefix_;
  std::vector<std::uint64_t> tgt_hash_prefix_;
  // cols_[j][i]: cost of aligning source[0, i) with target[0, j).
  std::vector<std::vector<std::int64_t>> cols_;
};

std::vector<AlignmentOp> align(std::span<const std::string> source,
                               std::span<const std::string> target,
                               const CostConfig& cfg = {});

double total_cost(std::span<const AlignmentOp> ops) noexcept;

}  // namespace gecstrat
