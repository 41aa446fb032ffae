#include "qprove/parser.hpp"

#include <cctype>
#include <map>

namespace qprove {
namespace {

struct Token {
  enum class Kind {
    Number,
    Variable,  // x<digits>
    Plus,
    Star,
    Caret,
    LBrace,
    RBrace,
    LParen,
    RParen,
    End,
  };

  Kind kind;
  std::size_t offset;
  std::string_view text;  // digits of Number / Variable index
};

class Tokenizer {
 public:
  explicit Tokenizer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ >= text_.size()) {
      current_ = {Token::Kind::End, text_.size(), {}};
      return;
    }
    std::size_t start = pos_;
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      current_ = {Token::Kind::Number, start, text_.substr(start, pos_ - start)};
      return;
    }
    if (c == 'x') {
      ++pos_;
      std::size_t digits = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      if (pos_ == digits) {
        throw SyntaxError("expected a variable index after 'x'", start);
      }
      current_ = {Token::Kind::Variable, start,
                  text_.substr(digits, pos_ - digits)};
      return;
    }
    ++pos_;
    switch (c) {
      case '+': current_ = {Token::Kind::Plus, start, {}}; return;
      case '*': current_ = {Token::Kind::Star, start, {}}; return;
      case '^': current_ = {Token::Kind::Caret, start, {}}; return;
      case '{': current_ = {Token::Kind::LBrace, start, {}}; return;
      case '}': current_ = {Token::Kind::RBrace, start, {}}; return;
      case '(': current_ = {Token::Kind::LParen, start, {}}; return;
      case ')': current_ = {Token::Kind::RParen, start, {}}; return;
      default:
        throw SyntaxError(std::string("unexpected character '") + c + "'",
                          start);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_ = {Token::Kind::End, 0, {}};
};

std::uint64_t parse_uint(const Token& t, std::uint64_t max_value,
                         const char* what) {
  std::uint64_t value = 0;
  for (char c : t.text) {
    std::uint64_t digit = static_cast<std::uint64_t>(c - '0');
    if (value > (max_value - digit) / 10) {
      throw SyntaxError(std::string(what) + " out of range", t.offset);
    }
    value = value * 10 + digit;
  }
  return value;
}

constexpr std::uint64_t kMaxLiteral = (std::uint64_t(1) << 63) - 1;

class SetParser {
 public:
  explicit SetParser(std::string_view text) : tokens_(text) {}

  SetExpr parse() {
    SetExpr e = expr();
    const Token& t = tokens_.peek();
    if (t.kind != Token::Kind::End) {
      throw SyntaxError("unexpected trailing input", t.offset);
    }
    return e;
  }

 private:
  SetExpr expr() {
    SetExpr e = term();
    while (tokens_.peek().kind == Token::Kind::Plus) {
      tokens_.next();
      e = SetExpr::sum(std::move(e), term());
    }
    return e;
  }

  SetExpr term() {
    SetExpr e = atom();
    while (tokens_.peek().kind == Token::Kind::Star) {
      tokens_.next();
      e = SetExpr::star(std::move(e));
    }
    return e;
  }

  SetExpr atom() {
    Token t = tokens_.next();
    if (t.kind == Token::Kind::LBrace) {
      Token num = tokens_.next();
      if (num.kind != Token::Kind::Number) {
        throw SyntaxError("expected an integer inside '{...}'", num.offset);
      }
      std::uint64_t value = parse_uint(num, kMaxLiteral, "singleton literal");
      Token close = tokens_.next();
      if (close.kind != Token::Kind::RBrace) {
        throw SyntaxError("expected '}'", close.offset);
      }
      return SetExpr::singleton(value);
    }
    if (t.kind == Token::Kind::LParen) {
      SetExpr e = expr();
      Token close = tokens_.next();
      if (close.kind != Token::Kind::RParen) {
        throw SyntaxError("expected ')'", close.offset);
      }
      return e;
    }
    throw SyntaxError("expected '{' or '('", t.offset);
  }

  Tokenizer tokens_;
};

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : tokens_(text) {}

  NonnegPolynomial parse() {
    terms_.push_back(term());
    while (tokens_.peek().kind == Token::Kind::Plus) {
      tokens_.next();
      terms_.push_back(term());
    }
    const Token& t = tokens_.peek();
    if (t.kind != Token::Kind::End) {
      throw SyntaxError("unexpected trailing input", t.offset);
    }

    int arity = static_cast<int>(max_index_);
    std::vector<PolyTerm> dense;
    for (auto& [coeff, exps] : terms_) {
      PolyTerm t2;
      t2.coefficient = std::move(coeff);
      t2.exponents.assign(arity, 0);
      for (auto& [index, e] : exps) t2.exponents[index - 1] = e;
      dense.push_back(std::move(t2));
    }
    return NonnegPolynomial(arity, std::move(dense));
  }

 private:
  // coefficient and sparse exponent map (1-based variable index)
  using SparseTerm = std::pair<BigInt, std::map<std::uint64_t, std::uint32_t>>;

  SparseTerm term() {
    SparseTerm out{1, {}};
    factor(out);
    while (tokens_.peek().kind == Token::Kind::Star) {
      tokens_.next();
      factor(out);
    }
    return out;
  }

  void factor(SparseTerm& out) {
    Token t = tokens_.next();
    if (t.kind == Token::Kind::Number) {
      BigInt value(std::string(t.text));
      out.first *= value;
      return;
    }
    if (t.kind == Token::Kind::Variable) {
      std::uint64_t index = parse_uint(t, kMaxVariableIndex, "variable index");
      if (index == 0) {
        throw SyntaxError("variables are numbered from x1", t.offset);
      }
      std::uint32_t exponent = 1;
      if (tokens_.peek().kind == Token::Kind::Caret) {
        tokens_.next();
        Token e = tokens_.next();
        if (e.kind != Token::Kind::Number) {
          throw SyntaxError("expected an integer exponent after '^'", e.offset);
        }
        exponent =
            static_cast<std::uint32_t>(parse_uint(e, kMaxExponent, "exponent"));
      }
      std::uint32_t& slot = out.second[index];
      if (exponent > kMaxExponent - slot) {
        throw SyntaxError("exponent out of range", t.offset);
      }
      slot += exponent;
      max_index_ = std::max(max_index_, index);
      return;
    }
    throw SyntaxError("expected an integer or a variable", t.offset);
  }

  static constexpr std::uint64_t kMaxVariableIndex = 1 << 20;
  static constexpr std::uint64_t kMaxExponent = 1 << 20;

  Tokenizer tokens_;
  std::vector<SparseTerm> terms_;
  std::uint64_t max_index_ = 0;
};

}  // namespace

SyntaxError::SyntaxError(const std::string& message, std::size_t offset)
    : std::runtime_error("syntax error at byte " + std::to_string(offset) +
                         ": " + message),
      offset_(offset) {}

SetExpr parse_set_expr(std::string_view text) {
  return SetParser(text).parse();
}

NonnegPolynomial parse_polynomial(std::string_view text) {
  return PolyParser(text).parse();
}

}  // namespace qprove
