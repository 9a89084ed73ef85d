#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "gl/formula.hpp"

namespace gl {

namespace {

enum class Tok {
  End,
  LParen,
  RParen,
  Arrow,   // ->
  Iff,     // <->
  AndOp,   // &
  OrOp,    // |
  NotOp,   // ~
  BoxOp,   // [] or "box"
  DiaOp,   // <> or "dia"
  Bot,     // "bot"
  Top,     // "top"
  Ident,
};

struct Token {
  Tok tok;
  std::size_t offset;
  std::string text;  // Ident only
};

[[noreturn]] void fail(std::size_t offset, std::vector<std::string> expected) {
  std::ostringstream msg;
  msg << "parse error at byte " << offset << ": expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) msg << (i + 1 == expected.size() ? " or " : ", ");
    msg << expected[i];
  }
  throw ParseError(msg.str(), offset, std::move(expected));
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
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
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      current_ = {Tok::End, start, {}};
      return;
    }
    const char c = text_[pos_];
    switch (c) {
      case '(': ++pos_; current_ = {Tok::LParen, start, {}}; return;
      case ')': ++pos_; current_ = {Tok::RParen, start, {}}; return;
      case '&': ++pos_; current_ = {Tok::AndOp, start, {}}; return;
      case '|': ++pos_; current_ = {Tok::OrOp, start, {}}; return;
      case '~': ++pos_; current_ = {Tok::NotOp, start, {}}; return;
      case '-':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
          pos_ += 2;
          current_ = {Tok::Arrow, start, {}};
          return;
        }
        fail(start, {"'->'"});
      case '<':
        if (text_.compare(pos_, 3, "<->") == 0) {
          pos_ += 3;
          current_ = {Tok::Iff, start, {}};
          return;
        }
        if (text_.compare(pos_, 2, "<>") == 0) {
          pos_ += 2;
          current_ = {Tok::DiaOp, start, {}};
          return;
        }
        fail(start, {"'<->'", "'<>'"});
      case '[':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == ']') {
          pos_ += 2;
          current_ = {Tok::BoxOp, start, {}};
          return;
        }
        fail(start, {"'[]'"});
      default:
        break;
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t end = pos_ + 1;
      while (end < text_.size() && (std::isalnum(static_cast<unsigned char>(
                                        text_[end])) ||
                                    text_[end] == '_')) {
        ++end;
      }
      std::string word(text_.substr(pos_, end - pos_));
      pos_ = end;
      if (word == "bot") { current_ = {Tok::Bot, start, {}}; return; }
      if (word == "top") { current_ = {Tok::Top, start, {}}; return; }
      if (word == "box") { current_ = {Tok::BoxOp, start, {}}; return; }
      if (word == "dia") { current_ = {Tok::DiaOp, start, {}}; return; }
      current_ = {Tok::Ident, start, std::move(word)};
      return;
    }
    fail(start, {"formula"});
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  FormulaPtr run() {
    FormulaPtr f = parse_iff();
    if (lex_.peek().tok != Tok::End) {
      fail(lex_.peek().offset,
           {"'<->'", "'->'", "'|'", "'&'", "end of input"});
    }
    return f;
  }

 private:
  // Nesting guard so adversarial input cannot exhaust the stack.
  static constexpr int kMaxNesting = 4096;

  struct DepthScope {
    explicit DepthScope(Parser& p) : parser(p) {
      if (++parser.depth_ > kMaxNesting) {
        fail(parser.lex_.peek().offset, {"shallower nesting"});
      }
    }
    ~DepthScope() { --parser.depth_; }
    Parser& parser;
  };

  FormulaPtr parse_iff() {
    DepthScope scope(*this);
    FormulaPtr f = parse_imp();
    while (lex_.peek().tok == Tok::Iff) {
      lex_.take();
      f = Formula::iff(std::move(f), parse_imp());
    }
    return f;
  }

  FormulaPtr parse_imp() {
    DepthScope scope(*this);
    FormulaPtr f = parse_or();
    if (lex_.peek().tok == Tok::Arrow) {
      lex_.take();
      f = Formula::imp(std::move(f), parse_imp());
    }
    return f;
  }

  FormulaPtr parse_or() {
    DepthScope scope(*this);
    FormulaPtr f = parse_and();
    while (lex_.peek().tok == Tok::OrOp) {
      lex_.take();
      f = Formula::disj(std::move(f), parse_and());
    }
    return f;
  }

  FormulaPtr parse_and() {
    DepthScope scope(*this);
    FormulaPtr f = parse_unary();
    while (lex_.peek().tok == Tok::AndOp) {
      lex_.take();
      f = Formula::conj(std::move(f), parse_unary());
    }
    return f;
  }

  FormulaPtr parse_unary() {
    DepthScope scope(*this);
    switch (lex_.peek().tok) {
      case Tok::NotOp:
        lex_.take();
        return Formula::neg(parse_unary());
      case Tok::BoxOp:
        lex_.take();
        return Formula::box(parse_unary());
      case Tok::DiaOp:
        lex_.take();
        return Formula::diamond(parse_unary());
      default:
        return parse_atom();
    }
  }

  FormulaPtr parse_atom() {
    DepthScope scope(*this);
    const Token t = lex_.peek();
    switch (t.tok) {
      case Tok::Bot:
        lex_.take();
        return Formula::falsum();
      case Tok::Top:
        lex_.take();
        return Formula::verum();
      case Tok::Ident:
        lex_.take();
        return Formula::atom(t.text);
      case Tok::LParen: {
        lex_.take();
        FormulaPtr f = parse_iff();
        if (lex_.peek().tok != Tok::RParen) {
          fail(lex_.peek().offset, {"')'"});
        }
        lex_.take();
        return f;
      }
      default:
        fail(t.offset,
             {"'bot'", "'top'", "identifier", "'('", "'~'", "'[]'", "'<>'"});
    }
  }

  Lexer lex_;
  int depth_ = 0;
};

}  // namespace

FormulaPtr parse(std::string_view text) { return Parser(text).run(); }

}  // namespace gl
