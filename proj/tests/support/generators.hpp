#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "kbsim/model.hpp"
#include "kbsim/similarity.hpp"

// Seeded random instance generation for the property suites. All symbols are
// drawn from one small shared pool so generated knowledges actually overlap
// and every similarity class shows up.
namespace kbtest {

struct GenOptions {
  std::size_t min_knowledges = 2;
  std::size_t max_knowledges = 4;
  std::size_t max_properties = 5;  // per knowledge; at least 1
  std::size_t max_body = 6;        // literals per rule; at least 1
  std::size_t predicates = 6;      // pool size: p1..pN
  std::size_t max_args = 2;
  double variable_chance = 0.35;   // else constant, pool c1..c3
  double negative_chance = 0.3;
};

inline std::size_t pick(std::mt19937& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool chance(std::mt19937& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

inline kbsim::Term random_term(std::mt19937& rng, const GenOptions& o) {
  if (chance(rng, o.variable_chance)) {
    static const char* kVars[] = {"X", "Y", "Z"};
    return kbsim::Term::variable(kVars[pick(rng, 0, 2)]);
  }
  return kbsim::Term::constant("c" + std::to_string(pick(rng, 1, 3)));
}

inline kbsim::Atom random_atom(std::mt19937& rng, const GenOptions& o) {
  std::vector<kbsim::Term> args;
  const std::size_t arity = pick(rng, 0, o.max_args);
  for (std::size_t i = 0; i < arity; ++i) args.push_back(random_term(rng, o));
  return kbsim::Atom::make("p" + std::to_string(pick(rng, 1, o.predicates)),
                           std::move(args));
}

inline kbsim::Literal random_literal(std::mt19937& rng, const GenOptions& o) {
  kbsim::Atom atom = random_atom(rng, o);
  return chance(rng, o.negative_chance)
             ? kbsim::Literal::negative(std::move(atom))
             : kbsim::Literal::positive(std::move(atom));
}

inline kbsim::Property random_property(std::mt19937& rng, std::size_t index,
                                       const GenOptions& o) {
  std::vector<kbsim::Literal> body;
  const std::size_t size = pick(rng, 1, o.max_body);
  for (std::size_t i = 0; i < size; ++i) body.push_back(random_literal(rng, o));
  return kbsim::Property(index, std::move(body), random_atom(rng, o));
}

inline kbsim::Knowledge random_knowledge(std::mt19937& rng, std::string name,
                                         const GenOptions& o) {
  std::vector<kbsim::Property> properties;
  const std::size_t count = pick(rng, 1, o.max_properties);
  for (std::size_t i = 0; i < count; ++i)
    properties.push_back(random_property(rng, i + 1, o));
  return kbsim::Knowledge(std::move(name), std::move(properties));
}

inline kbsim::KnowledgeBase random_kb(std::mt19937& rng,
                                      const GenOptions& o = {}) {
  std::vector<kbsim::Knowledge> knowledges;
  const std::size_t count = pick(rng, o.min_knowledges, o.max_knowledges);
  for (std::size_t i = 0; i < count; ++i)
    knowledges.push_back(
        random_knowledge(rng, "K" + std::to_string(i + 1), o));
  return kbsim::KnowledgeBase(std::move(knowledges));
}

// Signatures with a strong pull toward empty classes, so all eight category
// configurations occur.
inline kbsim::CardinalitySignature random_signature(std::mt19937& rng) {
  auto bucket = [&rng]() -> std::size_t {
    return chance(rng, 0.5) ? 0 : pick(rng, 1, 20);
  };
  return kbsim::CardinalitySignature{bucket(), bucket(), bucket()};
}

}  // namespace kbtest
