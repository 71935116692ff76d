#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kbsim/model.hpp"

namespace kbsim {

// Byte offsets into the parsed text, for diagnostics.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;  // one past the last byte; begin <= end

  bool operator==(const SourceSpan&) const = default;
};

enum class ParseErrorKind : std::uint8_t {
  syntax,
  duplicate_knowledge,
  negated_head,
  empty_body,
  bad_identifier,
};

std::string_view to_string(ParseErrorKind k);

struct ParseError {
  ParseErrorKind kind = ParseErrorKind::syntax;
  std::size_t line = 1;    // 1-based, inside the input
  std::size_t column = 1;  // 1-based, inside the offending line
  SourceSpan span;
  std::string message;
};

struct ParseWarning {
  std::size_t line = 1;
  std::size_t column = 1;
  std::string message;
};

// "<line>:<col>: <kind>: <message>"
std::string format_error(const ParseError& e);

// Either a knowledge base satisfying every model invariant, or at least one
// error and no partial result. Warnings (e.g. an empty knowledge block) can
// accompany a successful parse.
struct ParseResult {
  std::optional<KnowledgeBase> kb;
  std::vector<ParseError> errors;
  std::vector<ParseWarning> warnings;

  bool ok() const { return kb.has_value(); }
};

// Grammar:
//
//   file      := { knowledge }
//   knowledge := "knowledge" Name "{" { rule } "}"
//   rule      := atom ":-" literal { "," literal } "."
//   literal   := [ "!" ] atom
//   atom      := pred [ "(" term { "," term } ")" ]
//
// "%" starts a line comment; whitespace is insignificant; LF and CRLF both
// accepted. The parser recovers at rule boundaries and reports every error.
ParseResult parse_knowledge_base(std::string_view text);

// Canonical text form: knowledges in stored order, one rule per line, body
// literals in canonical set order. Output reparses to an equal knowledge
// base and is byte-deterministic.
std::string serialize_knowledge_base(const KnowledgeBase& kb);

}  // namespace kbsim
