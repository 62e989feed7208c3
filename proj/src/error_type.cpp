#include "gecstrat/error_type.hpp"

#include <array>
#include <utility>

namespace gecstrat {
namespace {

constexpr std::array<std::pair<Category, std::string_view>, 15> kCategoryNames{{
    {Category::Punct, "PUNCT"},
    {Category::Orth, "ORTH"},
    {Category::Prep, "PREP"},
    {Category::Det, "DET"},
    {Category::Verb, "VERB"},
    {Category::VerbTense, "VERB:TENSE"},
    {Category::Noun, "NOUN"},
    {Category::NounNum, "NOUN:NUM"},
    {Category::Pron, "PRON"},
    {Category::Conj, "CONJ"},
    {Category::Adj, "ADJ"},
    {Category::Adv, "ADV"},
    {Category::Spell, "SPELL"},
    {Category::WordOrder, "WO"},
    {Category::Other, "OTHER"},
}};

}  // namespace

char op_letter(EditOp op) noexcept {
  switch (op) {
    case EditOp::Missing:
      return 'M';
    case EditOp::Replacement:
      return 'R';
    case EditOp::Unnecessary:
      return 'U';
  }
  return '?';
}

std::optional<EditOp> op_from_letter(char c) noexcept {
  switch (c) {
    case 'M':
      return EditOp::Missing;
    case 'R':
      return EditOp::Replacement;
    case 'U':
      return EditOp::Unnecessary;
    default:
      return std::nullopt;
  }
}

std::string_view category_name(Category c) noexcept {
  for (const auto& [cat, name] : kCategoryNames) {
    if (cat == c) return name;
  }
  return "OTHER";
}

std::optional<Category> category_from_name(std::string_view name) noexcept {
  for (const auto& [cat, n] : kCategoryNames) {
    if (n == name) return cat;
  }
  return std::nullopt;
}

ErrorType ErrorType::known(EditOp op, Category category) noexcept {
  ErrorType t;
  t.kind_ = Kind::Known;
  t.op_ = op;
  t.category_ = category;
  t.raw_.clear();
  return t;
}

ErrorType ErrorType::noop() noexcept {
  ErrorType t;
  t.kind_ = Kind::Noop;
  t.raw_.clear();
  return t;
}

ErrorType ErrorType::unknown(std::string raw) {
  ErrorType t;
  t.kind_ = Kind::Unknown;
  t.raw_ = std::move(raw);
  return t;
}

ErrorType ErrorType::parse(std::string_view text) {
  if (text == "noop") return noop();
  if (text.size() > 2 && text[1] == ':') {
    auto op = op_from_letter(text[0]);
    auto cat = category_from_name(text.substr(2));
    if (op && cat) return known(*op, *cat);
  }
  return unknown(std::string(text));
}

std::string ErrorType::to_string() const {
  switch (kind_) {
    case Kind::Known: {
      std::string s(1, op_letter(op_));
      s += ':';
      s += category_name(category_);
      return s;
    }
    case Kind::Noop:
      return "noop";
    case Kind::Unknown:
      return raw_;
  }
  return raw_;
}

std::optional<EditOp> ErrorType::op() const noexcept {
  if (kind_ == Kind::Known) return op_;
  if (kind_ == Kind::Unknown && raw_.size() > 2 && raw_[1] == ':') {
    return op_from_letter(raw_[0]);
  }
  return std::nullopt;
}

std::optional<Category> ErrorType::category() const noexcept {
  if (kind_ == Kind::Known) return category_;
  return std::nullopt;
}

}  // namespace gecstrat
