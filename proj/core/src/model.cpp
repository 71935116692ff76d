#include "kbsim/model.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

namespace kbsim {

namespace {

bool is_ident_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}

bool is_lower_or_digit(char c) {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
}

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }

}  // namespace

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), is_ident_char);
}

std::optional<TermKind> term_kind_of(std::string_view name) {
  if (!is_identifier(name)) return std::nullopt;
  if (is_lower_or_digit(name.front())) return TermKind::constant;
  if (is_upper(name.front())) return TermKind::variable;
  return std::nullopt;  // underscore-first
}

Term Term::constant(std::string name) {
  if (term_kind_of(name) != TermKind::constant)
    throw std::invalid_argument("invalid constant name: '" + name + "'");
  return Term{TermKind::constant, std::move(name)};
}

Term Term::variable(std::string name) {
  if (term_kind_of(name) != TermKind::variable)
    throw std::invalid_argument("invalid variable name: '" + name + "'");
  return Term{TermKind::variable, std::move(name)};
}

Atom Atom::make(std::string predicate, std::vector<Term> args) {
  // Predicates follow the constant convention; anything else would
  // serialize into text the parser rejects.
  if (term_kind_of(predicate) != TermKind::constant)
    throw std::invalid_argument("invalid predicate name: '" + predicate + "'");
  return Atom{std::move(predicate), std::move(args)};
}

Literal Literal::positive(Atom atom) {
  return Literal{std::move(atom), Polarity::positive};
}

Literal Literal::negative(Atom atom) {
  return Literal{std::move(atom), Polarity::negative};
}

std::strong_ordering Literal::operator<=>(const Literal& other) const {
  if (auto c = polarity <=> other.polarity; c != 0) return c;
  return atom <=> other.atom;
}

std::string to_string(const Term& t) { return t.name; }

std::string to_string(const Atom& a) {
  std::string out = a.predicate;
  if (!a.args.empty()) {
    out += '(';
    for (std::size_t i = 0; i < a.args.size(); ++i) {
      if (i > 0) out += ", ";
      out += a.args[i].name;
    }
    out += ')';
  }
  return out;
}

std::string to_string(const Literal& l) {
  return l.negated() ? "!" + to_string(l.atom) : to_string(l.atom);
}

Property::Property(std::size_t index, std::vector<Literal> body, Atom head)
    : index_(index), body_(std::move(body)), head_(std::move(head)) {
  if (body_.empty())
    throw std::invalid_argument("property body must not be empty");
  std::sort(body_.begin(), body_.end());
  body_.erase(std::unique(body_.begin(), body_.end()), body_.end());
}

std::vector<Literal> literal_set(const Property& p) {
  std::vector<Literal> out = p.body();
  Literal head = Literal::positive(p.head());
  auto pos = std::lower_bound(out.begin(), out.end(), head);
  if (pos == out.end() || *pos != head) out.insert(pos, std::move(head));
  return out;
}

std::string_view to_string(MatchMode m) {
  return m == MatchMode::exact ? "exact" : "alpha";
}

namespace {

// Bijective variable renaming, rebuilt for every call.
bool alpha_match(const Atom& a, const Atom& b) {
  if (a.predicate != b.predicate || a.args.size() != b.args.size())
    return false;
  std::vector<std::pair<const std::string*, const std::string*>> renaming;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    const Term& ta = a.args[i];
    const Term& tb = b.args[i];
    if (ta.kind != tb.kind) return false;
    if (ta.kind == TermKind::constant) {
      if (ta.name != tb.name) return false;
      continue;
    }
    bool bound = false;
    for (const auto& [from, to] : renaming) {
      if (*from == ta.name || *to == tb.name) {
        if (*from != ta.name || *to != tb.name) return false;
        bound = true;
        break;
      }
    }
    if (!bound) renaming.emplace_back(&ta.name, &tb.name);
  }
  return true;
}

}  // namespace

bool literals_match(const Literal& a, const Literal& b, MatchMode mode) {
  if (mode == MatchMode::exact) return a == b;
  if (a.polarity != b.polarity) return false;
  return alpha_match(a.atom, b.atom);
}

Knowledge::Knowledge(std::string name, std::vector<Property> properties)
    : name_(std::move(name)), properties_(std::move(properties)) {
  // Letter-first identifier, the same rule the parser applies, so any
  // programmatically built knowledge serializes into parseable text.
  if (name_.empty() || !is_identifier(name_) ||
      !((name_.front() >= 'A' && name_.front() <= 'Z') ||
        (name_.front() >= 'a' && name_.front() <= 'z')))
    throw std::invalid_argument("invalid knowledge name: '" + name_ + "'");
  for (std::size_t i = 0; i < properties_.size(); ++i) {
    if (properties_[i].index() != i + 1)
      throw std::invalid_argument("property indices of '" + name_ +
                                  "' must be contiguous from 1");
  }
}

KnowledgeBase::KnowledgeBase(std::vector<Knowledge> knowledges)
    : knowledges_(std::move(knowledges)) {
  std::unordered_set<std::string_view> seen;
  for (const Knowledge& k : knowledges_) {
    if (!seen.insert(k.name()).second)
      throw std::invalid_argument("duplicate knowledge name: '" + k.name() +
                                  "'");
  }
}

const Knowledge* KnowledgeBase::find(std::string_view name) const {
  for (const Knowledge& k : knowledges_)
    if (k.name() == name) return &k;
  return nullptr;
}

}  // namespace kbsim
