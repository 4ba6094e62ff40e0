#include <algorithm>
#include <cctype>

#include "metricide/corpus.hpp"

namespace metricide {

MrParseError::MrParseError(const std::string& message, std::size_t offset)
    : std::runtime_error(message + " at byte " + std::to_string(offset)),
      offset_(offset) {}

namespace {

bool is_ws(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

class MrParser {
 public:
  explicit MrParser(std::string_view text) : text_(text) {}

  MeaningRepresentation parse() {
    MeaningRepresentation mr;
    mr.raw = std::string(text_);

    skip_ws();
    const std::size_t act_begin = pos_;
    while (pos_ < text_.size() && text_[pos_] != '(' && !is_ws(text_[pos_])) {
      const char c = text_[pos_];
      if (c == ')' || c == ',' || c == '=') {
        throw MrParseError(std::string("unexpected '") + c + "' in act type",
                           pos_);
      }
      ++pos_;
    }
    mr.act_type = std::string(text_.substr(act_begin, pos_ - act_begin));
    if (mr.act_type.empty()) throw MrParseError("empty act type", act_begin);
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != '(') {
      throw MrParseError("expected '('", pos_);
    }
    ++pos_;
    skip_ws();

    if (pos_ < text_.size() && text_[pos_] == ')') {
      ++pos_;
    } else {
      for (;;) {
        mr.slots.push_back(parse_slot());
        if (pos_ >= text_.size()) {
          throw MrParseError("unbalanced parentheses: missing ')'", pos_);
        }
        if (text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (text_[pos_] == ')') {
          ++pos_;
          break;
        }
        throw MrParseError(std::string("unexpected '") + text_[pos_] + "'",
                           pos_);
      }
    }
    skip_ws();
    if (pos_ != text_.size()) {
      throw MrParseError("trailing characters after ')'", pos_);
    }
    return mr;
  }

 private:
  Slot parse_slot() {
    skip_ws();
    const std::size_t name_begin = pos_;
    std::size_t name_end = pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '=' || c == ',' || c == ')') break;
      if (c == '(') throw MrParseError("unexpected '(' in slot name", pos_);
      ++pos_;
      if (!is_ws(c)) name_end = pos_;
    }
    Slot slot;
    slot.name = std::string(text_.substr(name_begin, name_end - name_begin));
    if (slot.name.empty()) throw MrParseError("empty slot name", name_begin);
    if (std::any_of(slot.name.begin(), slot.name.end(), is_ws)) {
      throw MrParseError("white space inside slot name", name_begin);
    }
    if (pos_ < text_.size() && text_[pos_] == '=') {
      ++pos_;
      skip_ws();
      const std::size_t value_begin = pos_;
      std::size_t value_end = pos_;
      while (pos_ < text_.size()) {
        const char c = text_[pos_];
        if (c == ',' || c == ')') break;
        if (c == '(') throw MrParseError("unexpected '(' in value", pos_);
        ++pos_;
        if (!is_ws(c)) value_end = pos_;
      }
      if (value_end == value_begin) {
        throw MrParseError("empty value after '='", value_begin);
      }
      slot.value = std::string(text_.substr(value_begin, value_end - value_begin));
    }
    return slot;
  }

  void skip_ws() {
    while (pos_ < text_.size() && is_ws(text_[pos_])) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MeaningRepresentation parse_mr(std::string_view text) {
  return MrParser(text).parse();
}

std::string MeaningRepresentation::serialize() const {
  std::string out = act_type;
  out += '(';
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (i > 0) out += ", ";
    out += slots[i].name;
    if (slots[i].value) {
      out += '=';
      out += *slots[i].value;
    }
  }
  out += ')';
  return out;
}

bool MeaningRepresentation::operator==(const MeaningRepresentation& other) const {
  if (act_type != other.act_type || slots.size() != other.slots.size()) {
    return false;
  }
  auto a = slots;
  auto b = other.slots;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace metricide
