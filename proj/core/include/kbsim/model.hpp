#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kbsim {

// Base class for the semantic errors thrown by the library. Invariant
// violations in constructors throw std::invalid_argument instead: those
// indicate misuse, not bad user input.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Identifiers
//
// Constants and predicates start with a lowercase letter or a digit,
// variables with an uppercase letter (Prolog convention). Only ASCII
// letters, digits and underscore are identifier characters.

enum class TermKind : std::uint8_t { constant, variable };

bool is_identifier(std::string_view name);

// Classifies an identifier by its first character; nullopt if the name is
// not a valid term identifier (empty, underscore-first, illegal character).
std::optional<TermKind> term_kind_of(std::string_view name);

struct Term {
  TermKind kind = TermKind::constant;
  std::string name;

  static Term constant(std::string name);
  static Term variable(std::string name);

  auto operator<=>(const Term&) const = default;
};

// A predicate applied to zero or more terms. Arity is part of identity:
// p/1 and p/2 never compare equal.
struct Atom {
  std::string predicate;
  std::vector<Term> args;

  static Atom make(std::string predicate, std::vector<Term> args = {});

  auto operator<=>(const Atom&) const = default;
};

enum class Polarity : std::uint8_t { positive, negative };

struct Literal {
  Atom atom;
  Polarity polarity = Polarity::positive;

  static Literal positive(Atom atom);
  static Literal negative(Atom atom);

  bool negated() const { return polarity == Polarity::negative; }

  bool operator==(const Literal&) const = default;
  // Canonical order: polarity first (positive before negative), then atom.
  std::strong_ordering operator<=>(const Literal& other) const;
};

std::string to_string(const Term& t);
std::string to_string(const Atom& a);
std::string to_string(const Literal& l);

// ---------------------------------------------------------------------------
// Rules and knowledges

// One rule: a non-empty body of literals and a positive head atom.
// The body behaves as a set: duplicates collapse and order is canonical
// (sorted by polarity, then predicate, then arguments).
class Property {
 public:
  Property(std::size_t index, std::vector<Literal> body, Atom head);

  std::size_t index() const { return index_; }
  const std::vector<Literal>& body() const { return body_; }
  const Atom& head() const { return head_; }

  bool operator==(const Property&) const = default;

 private:
  std::size_t index_;
  std::vector<Literal> body_;  // sorted, unique
  Atom head_;
};

// The comparison unit: body literals plus the head as a positive literal,
// returned sorted and duplicate-free.
std::vector<Literal> literal_set(const Property& p);

enum class MatchMode : std::uint8_t { exact, alpha };

std::string_view to_string(MatchMode m);

// exact: syntactic equality including polarity.
// alpha: equal up to a consistent (bijective) renaming of variables built
//        per call; constants and polarity must still match exactly.
bool literals_match(const Literal& a, const Literal& b,
                    MatchMode mode = MatchMode::exact);

// A named, ordered list of properties with indices 1..n. An empty
// knowledge is representable; the parser warns about it.
class Knowledge {
 public:
  Knowledge(std::string name, std::vector<Property> properties);

  const std::string& name() const { return name_; }
  const std::vector<Property>& properties() const { return properties_; }
  std::size_t size() const { return properties_.size(); }
  bool empty() const { return properties_.empty(); }

  bool operator==(const Knowledge&) const = default;

 private:
  std::string name_;
  std::vector<Property> properties_;
};

class KnowledgeBase {
 public:
  KnowledgeBase() = default;
  explicit KnowledgeBase(std::vector<Knowledge> knowledges);

  const std::vector<Knowledge>& knowledges() const { return knowledges_; }
  std::size_t size() const { return knowledges_.size(); }
  bool empty() const { return knowledges_.empty(); }

  // Case-sensitive lookup; nullptr if absent.
  const Knowledge* find(std::string_view name) const;

  bool operator==(const KnowledgeBase&) const = default;

 private:
  std::vector<Knowledge> knowledges_;
};

}  // namespace kbsim
