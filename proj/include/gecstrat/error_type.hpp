#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace gecstrat {

// Edit operation: Missing (insertion), Replacement, Unnecessary (deletion).
enum class EditOp : std::uint8_t { Missing, Replacement, Unnecessary };

char op_letter(EditOp op) noexcept;
std::optional<EditOp> op_from_letter(char c) noexcept;

enum class Category : std::uint8_t {
  Punct,
  Orth,
  Prep,
  Det,
  Verb,
  VerbTense,
  Noun,
  NounNum,
  Pron,
  Conj,
  Adj,
  Adv,
  Spell,
  WordOrder,
  Other,
};

inline constexpr Category kAllCategories[] = {
    Category::Punct, Category::Orth,    Category::Prep,  Category::Det,
    Category::Verb,  Category::VerbTense, Category::Noun, Category::NounNum,
    Category::Pron,  Category::Conj,    Category::Adj,   Category::Adv,
    Category::Spell, Category::WordOrder, Category::Other,
};

std::string_view category_name(Category c) noexcept;
std::optional<Category> category_from_name(std::string_view name) noexcept;

/// Error type of an edit in "OP:CATEGORY" form, e.g. "R:VERB:TENSE".
///
/// Three kinds exist. Known types belong to the classifier's taxonomy. The
/// noop sentinel marks an annotator who proposed no edits. Every other string
/// (full ERRANT labels such as "R:NOUN:INFL", or "UNK") is kept verbatim as
/// an Unknown carrier so gold labels survive parsing and reporting untouched.
class ErrorType {
 public:
  enum class Kind : std::uint8_t { Known, Noop, Unknown };

  // Default is the opaque "UNK" label.
  ErrorType() : kind_(Kind::Unknown), raw_("UNK") {}

  static ErrorType known(EditOp op, Category category) noexcept;
  static ErrorType noop() noexcept;
  static ErrorType unknown(std::string raw);

  static ErrorType parse(std::string_view text);
  std::string to_string() const;

  Kind kind() const noexcept { return kind_; }
  bool is_known() const noexcept { return kind_ == Kind::Known; }
  bool is_noop() const noexcept { return kind_ == Kind::Noop; }

  // Operation of the type. Unknown types report the op of an "M:", "R:" or
  // "U:" prefix when they have one.
  std::optional<EditOp> op() const noexcept;
  std::optional<Category> category() const noexcept;

  friend bool operator==(const ErrorType&, const ErrorType&) = default;
  friend auto operator<=>(const ErrorType&, const ErrorType&) = default;

 private:
  Kind kind_;
  EditOp op_ = EditOp::Missing;
  Category category_ = Category::Punct;
  std::string raw_;
};

}  // namespace gecstrat
