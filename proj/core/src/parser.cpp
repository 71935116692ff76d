#include "kbsim/parser.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>
#include <utility>

namespace kbsim {

std::string_view to_string(ParseErrorKind k) {
  switch (k) {
    case ParseErrorKind::syntax: return "syntax";
    case ParseErrorKind::duplicate_knowledge: return "duplicate-knowledge";
    case ParseErrorKind::negated_head: return "negated-head";
    case ParseErrorKind::empty_body: return "empty-body";
    case ParseErrorKind::bad_identifier: return "bad-identifier";
  }
  return "syntax";
}

std::string format_error(const ParseError& e) {
  return std::to_string(e.line) + ":" + std::to_string(e.column) + ": " +
         std::string(to_string(e.kind)) + ": " + e.message;
}

namespace {

enum class TokKind : std::uint8_t {
  ident,
  lbrace,
  rbrace,
  implies,  // ":-"
  comma,
  dot,
  bang,
  lparen,
  rparen,
  bad,  // illegal character
  end,
};

struct Token {
  TokKind kind = TokKind::end;
  std::string_view text;
  std::size_t offset = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

bool is_ident_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t last_line = 1, last_col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      last_line = line;
      last_col = col;
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '%') {  // line comment
      std::size_t j = i;
      while (j < text.size() && text[j] != '\n') ++j;
      advance(j - i);
      continue;
    }
    Token t;
    t.offset = i;
    t.line = line;
    t.column = col;
    if (is_ident_char(c)) {
      std::size_t j = i;
      while (j < text.size() && is_ident_char(text[j])) ++j;
      t.kind = TokKind::ident;
      t.text = text.substr(i, j - i);
      advance(j - i);
    } else if (c == ':' && i + 1 < text.size() && text[i + 1] == '-') {
      t.kind = TokKind::implies;
      t.text = text.substr(i, 2);
      advance(2);
    } else {
      switch (c) {
        case '{': t.kind = TokKind::lbrace; break;
        case '}': t.kind = TokKind::rbrace; break;
        case ',': t.kind = TokKind::comma; break;
        case '.': t.kind = TokKind::dot; break;
        case '!': t.kind = TokKind::bang; break;
        case '(': t.kind = TokKind::lparen; break;
        case ')': t.kind = TokKind::rparen; break;
        default: t.kind = TokKind::bad; break;
      }
      t.text = text.substr(i, 1);
      advance(1);
    }
    out.push_back(t);
  }
  // The end token points at the last character so that errors reported at
  // end of input still lie inside the text.
  Token end;
  end.kind = TokKind::end;
  end.offset = text.empty() ? 0 : text.size() - 1;
  end.line = last_line;
  end.column = last_col;
  out.push_back(end);
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  ParseResult run() {
    std::vector<Knowledge> knowledges;
    std::unordered_set<std::string> names;
    while (peek().kind != TokKind::end) {
      if (peek().kind == TokKind::ident && peek().text == "knowledge") {
        parse_block(knowledges, names);
      } else {
        error(ParseErrorKind::syntax, peek(), "expected 'knowledge'");
        skip_to_block();
      }
    }
    ParseResult result;
    result.errors = std::move(errors_);
    result.warnings = std::move(warnings_);
    if (result.errors.empty())
      result.kb = KnowledgeBase(std::move(knowledges));
    return result;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (t.kind != TokKind::end) ++pos_;
    return t;
  }

  void error(ParseErrorKind kind, const Token& at, std::string message) {
    ParseError e;
    e.kind = kind;
    e.line = at.line;
    e.column = at.column;
    e.span = {at.offset, at.offset + std::max<std::size_t>(at.text.size(), 1)};
    e.message = std::move(message);
    errors_.push_back(std::move(e));
  }

  void skip_to_block() {
    while (peek().kind != TokKind::end &&
           !(peek().kind == TokKind::ident && peek().text == "knowledge"))
      next();
  }

  // Skips to the end of the current rule. Consumes a terminating '.', stops
  // in front of '}' or the next block.
  void skip_rule() {
    while (true) {
      const Token& t = peek();
      if (t.kind == TokKind::end || t.kind == TokKind::rbrace) return;
      if (t.kind == TokKind::ident && t.text == "knowledge") return;
      next();
      if (t.kind == TokKind::dot) return;
    }
  }

  void parse_block(std::vector<Knowledge>& knowledges,
                   std::unordered_set<std::string>& names) {
    next();  // 'knowledge'
    const Token& name_tok = peek();
    if (name_tok.kind != TokKind::ident) {
      error(ParseErrorKind::syntax, name_tok, "expected knowledge name");
      skip_to_block();
      return;
    }
    std::string name(name_tok.text);
    if (!std::isalpha(static_cast<unsigned char>(name.front()))) {
      error(ParseErrorKind::bad_identifier, name_tok,
            "knowledge name must start with a letter: '" + name + "'");
    } else if (!names.insert(name).second) {
      error(ParseErrorKind::duplicate_knowledge, name_tok,
            "knowledge '" + name + "' already defined");
    }
    next();
    if (peek().kind != TokKind::lbrace) {
      error(ParseErrorKind::syntax, peek(), "expected '{' after knowledge name");
      skip_to_block();
      return;
    }
    next();
    std::vector<Property> properties;
    while (peek().kind != TokKind::rbrace && peek().kind != TokKind::end) {
      if (peek().kind == TokKind::ident && peek().text == "knowledge") {
        // Likely a missing '}' before the next block.
        error(ParseErrorKind::syntax, peek(),
              "expected '}' before next knowledge block");
        break;
      }
      parse_rule(properties);
    }
    if (peek().kind == TokKind::rbrace)
      next();
    else if (peek().kind == TokKind::end)
      error(ParseErrorKind::syntax, peek(),
            "unterminated knowledge block '" + name + "'");
    if (properties.empty())
      warnings_.push_back({name_tok.line, name_tok.column,
                           "knowledge '" + name + "' has no properties"});
    if (errors_.empty())
      knowledges.emplace_back(std::move(name), std::move(properties));
  }

  void parse_rule(std::vector<Property>& properties) {
    bool negated_head = false;
    if (peek().kind == TokKind::bang) {
      error(ParseErrorKind::negated_head, peek(),
            "rule head must be a positive atom");
      negated_head = true;
      next();
    }
    std::optional<Atom> head = parse_atom("head");
    if (!head) {
      skip_rule();
      return;
    }
    if (peek().kind == TokKind::dot) {
      error(ParseErrorKind::empty_body, peek(),
            "facts are not allowed: rule needs a body ('" +
                to_string(*head) + " :- ...')");
      next();
      return;
    }
    if (peek().kind != TokKind::implies) {
      error(ParseErrorKind::syntax, peek(), "expected ':-' after rule head");
      skip_rule();
      return;
    }
    next();
    if (peek().kind == TokKind::dot) {
      error(ParseErrorKind::empty_body, peek(), "rule body is empty");
      next();
      return;
    }
    std::vector<Literal> body;
    while (true) {
      std::optional<Literal> lit = parse_literal();
      if (!lit) {
        skip_rule();
        return;
      }
      body.push_back(std::move(*lit));
      if (peek().kind == TokKind::comma) {
        next();
        continue;
      }
      break;
    }
    if (peek().kind != TokKind::dot) {
      error(ParseErrorKind::syntax, peek(),
            "expected '.' at the end of the rule");
      skip_rule();
      return;
    }
    next();
    if (negated_head) return;
    if (errors_.empty())
      properties.emplace_back(properties.size() + 1, std::move(body),
                              std::move(*head));
  }

  std::optional<Literal> parse_literal() {
    Polarity pol = Polarity::positive;
    if (peek().kind == TokKind::bang) {
      pol = Polarity::negative;
      next();
    }
    std::optional<Atom> atom = parse_atom("literal");
    if (!atom) return std::nullopt;
    return Literal{std::move(*atom), pol};
  }

  std::optional<Atom> parse_atom(const char* where) {
    const Token& pred_tok = peek();
    if (pred_tok.kind == TokKind::bad) {
      error(ParseErrorKind::bad_identifier, pred_tok,
            "illegal character '" + std::string(pred_tok.text) + "'");
      return std::nullopt;
    }
    if (pred_tok.kind != TokKind::ident) {
      error(ParseErrorKind::syntax, pred_tok,
            std::string("expected ") + where + " atom");
      return std::nullopt;
    }
    std::string pred(pred_tok.text);
    char first = pred.front();
    if (!((first >= 'a' && first <= 'z') || (first >= '0' && first <= '9'))) {
      error(ParseErrorKind::bad_identifier, pred_tok,
            "predicate must start with a lowercase letter or digit: '" +
                pred + "'");
      // Keep parsing with the name as written; the rule is dropped anyway.
    }
    next();
    std::vector<Term> args;
    if (peek().kind == TokKind::lparen) {
      next();
      while (true) {
        const Token& term_tok = peek();
        if (term_tok.kind != TokKind::ident) {
          error(term_tok.kind == TokKind::bad ? ParseErrorKind::bad_identifier
                                              : ParseErrorKind::syntax,
                term_tok, "expected term");
          return std::nullopt;
        }
        std::optional<TermKind> kind = term_kind_of(term_tok.text);
        if (!kind) {
          error(ParseErrorKind::bad_identifier, term_tok,
                "term must start with a letter or digit: '" +
                    std::string(term_tok.text) + "'");
          kind = TermKind::constant;  // recovered placeholder
        }
        args.push_back(Term{*kind, std::string(term_tok.text)});
        next();
        if (peek().kind == TokKind::comma) {
          next();
          continue;
        }
        break;
      }
      if (peek().kind != TokKind::rparen) {
        error(ParseErrorKind::syntax, peek(), "expected ')'");
        return std::nullopt;
      }
      next();
    }
    return Atom{std::move(pred), std::move(args)};
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<ParseError> errors_;
  std::vector<ParseWarning> warnings_;
};

}  // namespace

ParseResult parse_knowledge_base(std::string_view text) {
  return Parser(text).run();
}

std::string serialize_knowledge_base(const KnowledgeBase& kb) {
  std::string out;
  bool first = true;
  for (const Knowledge& k : kb.knowledges()) {
    if (!first) out += '\n';
    first = false;
    out += "knowledge " + k.name() + " {\n";
    for (const Property& p : k.properties()) {
      out += "  " + to_string(p.head()) + " :- ";
      for (std::size_t i = 0; i < p.body().size(); ++i) {
        if (i > 0) out += ", ";
        out += to_string(p.body()[i]);
      }
      out += ".\n";
    }
    out += "}\n";
  }
  return out;
}

}  // namespace kbsim
