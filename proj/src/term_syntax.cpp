#include "cfforge/term_syntax.hpp"

#include <cctype>
#include <limits>

namespace cfforge {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t offset, const ParameterBindings& bindings)
      : text_(text), offset_(offset), bindings_(bindings) {}

  Poly parse_all() {
    Poly p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw TermParseError(what + " at column " + std::to_string(offset_ + pos_), offset_ + pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expression() {
    Poly acc;
    if (accept('-')) {
      acc = -product();
    } else {
      accept('+');
      acc = product();
    }
    while (true) {
      if (accept('+')) {
        acc += product();
      } else if (accept('-')) {
        acc -= product();
      } else {
        return acc;
      }
    }
  }

  Poly product() {
    Poly acc = unary();
    while (true) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        const Poly d = unary();
        if (d.degree() != 0) {
          pos_ = at;
          fail("division by a non-constant or zero polynomial");
        }
        acc *= RationalComplex(1) / d.leading();
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
    if (accept('-')) return -unary();
    return power();
  }

  Poly power() {
    Poly base = primary();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a non-negative integer exponent");
    if (pos_ - start > 3) fail("exponent too large");
    const int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
    Poly out(RationalComplex(1));
    for (int k = 0; k < e; ++k) out *= base;
    return out;
  }

  Poly primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of term");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
        ++pos_;
      }
      try {
        return Poly(RationalComplex(parse_rational(text_.substr(start, pos_ - start))));
      } catch (const std::invalid_argument&) {
        pos_ = start;
        fail("malformed number");
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const auto name = text_.substr(start, pos_ - start);
      if (name == "x") return Poly::variable();
      if (name == "i") return Poly(RationalComplex::i());
      if (const auto it = bindings_.find(name); it != bindings_.end()) {
        return Poly(RationalComplex(it->second));
      }
      pos_ = start;
      fail("unknown symbol '" + std::string(name) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t offset_;
  const ParameterBindings& bindings_;
  std::size_t pos_ = 0;
};

}  // namespace

TermParseError::TermParseError(const std::string& message, std::size_t position)
    : std::invalid_argument(message), position_(position) {}

Poly parse_polynomial(std::string_view text, const ParameterBindings& bindings) {
  return Parser(text, 0, bindings).parse_all();
}

ParsedTerm parse_term(std::string_view text, const ParameterBindings& bindings) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) {
      throw TermParseError("expected '" + std::string(1, c) + "' at column " + std::to_string(pos),
                           pos);
    }
    ++pos;
  };
  expect('m');
  expect('=');
  skip();
  const std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (start == pos || pos - start > 2) {
    throw TermParseError("expected a derivative order at column " + std::to_string(start), start);
  }
  const int order = std::stoi(std::string(text.substr(start, pos - start)));
  expect(':');
  Poly p = Parser(text.substr(pos), pos, bindings).parse_all();
  return {order, std::move(p)};
}

PolyDiffOperator parse_operator(const std::vector<std::string>& terms,
                                const ParameterBindings& bindings) {
  PolyDiffOperator op(VariableTag::XSpace);
  for (const auto& t : terms) {
    auto parsed = parse_term(t, bindings);
    op.add_term(parsed.order, parsed.coefficient);
  }
  return op;
}

}  // namespace cfforge
