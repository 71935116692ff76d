#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "kbsim/parser.hpp"
#include "kbsim/similarity.hpp"
#include "support/generators.hpp"

using namespace kbsim;

namespace {

Property rule(std::size_t index, std::vector<const char*> body,
              const char* head) {
  std::vector<Literal> literals;
  for (const char* pred : body) {
    if (pred[0] == '!')
      literals.push_back(Literal::negative(Atom::make(pred + 1)));
    else
      literals.push_back(Literal::positive(Atom::make(pred)));
  }
  return Property(index, std::move(literals), Atom::make(head));
}

KnowledgeBase example2() {
  ParseResult r = parse_knowledge_base(
      "knowledge K1 {\n"
      "  p1 :- q1, q2.\n"
      "  p2 :- q3, q4.\n"
      "}\n"
      "knowledge K2 {\n"
      "  r1 :- q3, q5.\n"
      "  r2 :- q1, q4.\n"
      "  r3 :- q1, q2, p1.\n"
      "}\n");
  REQUIRE(r.ok());
  return *r.kb;
}

constexpr ComparisonMode kDirectional{MatchMode::exact,
                                      Direction::directional};
constexpr ComparisonMode kSymmetric{MatchMode::exact, Direction::symmetric};

}  // namespace

TEST_CASE("directional classification covers the three regimes") {
  const Property base = rule(1, {"q1", "q2"}, "p");
  CHECK(classify_pair(base, rule(1, {"q1", "q2", "q3"}, "p"), kDirectional) ==
        SimilarityClass::equal);  // all literals found, extras ignored
  CHECK(classify_pair(base, rule(1, {"q1", "q9"}, "r"), kDirectional) ==
        SimilarityClass::similar);
  CHECK(classify_pair(base, rule(1, {"q8", "q9"}, "r"), kDirectional) ==
        SimilarityClass::different);
}

TEST_CASE("the equal check precedes the similar check") {
  // Every literal matches, which also satisfies the existential condition;
  // the all-quantified regime must win.
  const Property small = rule(1, {"q1"}, "p");
  const Property big = rule(1, {"q1", "q2", "p"}, "p");
  CHECK(classify_pair(small, big, kDirectional) == SimilarityClass::equal);
  // The reverse direction only finds a subset.
  CHECK(classify_pair(big, small, kDirectional) == SimilarityClass::similar);
  // Which is exactly why the symmetric combination demotes the pair.
  CHECK(classify_pair(small, big, kSymmetric) == SimilarityClass::similar);
}

TEST_CASE("self comparison is equal in every mode") {
  const Property p = rule(1, {"q1", "!q2"}, "head");
  for (ComparisonMode mode :
       {kDirectional, kSymmetric, ComparisonMode{MatchMode::alpha, Direction::directional},
        ComparisonMode{MatchMode::alpha, Direction::symmetric}})
    CHECK(classify_pair(p, p, mode) == SimilarityClass::equal);
}

TEST_CASE("polarity separates literals") {
  const Property pos = rule(1, {"q1"}, "p");
  const Property neg = rule(1, {"!q1"}, "p2");
  // q1 and !q1 do not match; p and p2 differ, so only Different is left.
  CHECK(classify_pair(pos, neg, kDirectional) == SimilarityClass::different);
}

TEST_CASE("alpha mode classifies up to variable renaming") {
  const Term X = Term::variable("X");
  const Term Y = Term::variable("Y");
  Property px(1, {Literal::positive(Atom::make("q", {X}))},
              Atom::make("h", {X}));
  Property py(1, {Literal::positive(Atom::make("q", {Y}))},
              Atom::make("h", {Y}));
  CHECK(classify_pair(px, py, kDirectional) == SimilarityClass::different);
  CHECK(classify_pair(px, py, {MatchMode::alpha, Direction::directional}) ==
        SimilarityClass::equal);
  CHECK(classify_pair(px, py, {MatchMode::alpha, Direction::symmetric}) ==
        SimilarityClass::equal);
}

TEST_CASE("the reference grid comes out cell for cell") {
  const KnowledgeBase kb = example2();
  const PropertyComparisonMatrix m =
      property_space(*kb.find("K1"), *kb.find("K2"), kDirectional);
  CHECK(m.left() == "K1");
  CHECK(m.right() == "K2");
  REQUIRE(m.rows() == 3);  // rows follow the right knowledge
  REQUIRE(m.cols() == 2);
  CHECK(m.cell(0, 0) == SimilarityClass::different);
  CHECK(m.cell(0, 1) == SimilarityClass::similar);
  CHECK(m.cell(1, 0) == SimilarityClass::similar);
  CHECK(m.cell(1, 1) == SimilarityClass::similar);
  CHECK(m.cell(2, 0) == SimilarityClass::equal);
  CHECK(m.cell(2, 1) == SimilarityClass::different);
  CHECK(cardinality_signature(m) == CardinalitySignature{1, 3, 2});
  CHECK(cardinality_signature(m).total() == 6);
}

TEST_CASE("comparing a knowledge against itself is rejected") {
  const KnowledgeBase kb = example2();
  CHECK_THROWS_AS(property_space(*kb.find("K1"), *kb.find("K1"), kDirectional),
                  same_knowledge_error);
}

TEST_CASE("empty knowledges produce empty grids") {
  Knowledge a("A", {});
  Knowledge b("B", {});
  const PropertyComparisonMatrix m = property_space(a, b, kDirectional);
  CHECK(m.cell_count() == 0);
  CHECK(cardinality_signature(m) == CardinalitySignature{0, 0, 0});
}

TEST_CASE("the space holds every ordered pair in left-major order") {
  std::mt19937 rng(7);
  kbtest::GenOptions opts;
  opts.min_knowledges = 3;
  opts.max_knowledges = 3;
  const KnowledgeBase kb = kbtest::random_kb(rng, opts);
  const KnowledgeSimilaritySpace space = knowledge_space(kb, kSymmetric);
  REQUIRE(space.entries().size() == 6);
  CHECK(space.mode() == kSymmetric);
  const std::size_t expected[6][2] = {{0, 1}, {0, 2}, {1, 0},
                                      {1, 2}, {2, 0}, {2, 1}};
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(space.entries()[i].left_index == expected[i][0]);
    CHECK(space.entries()[i].right_index == expected[i][1]);
  }
  CHECK(&space.entry(1, 2) == &space.entries()[3]);
  CHECK_THROWS_AS(space.entry(0, 0), std::out_of_range);
  CHECK_THROWS_AS(space.entry(3, 0), std::out_of_range);
}

TEST_CASE("the interned fast path agrees with the generic one") {
  std::mt19937 rng(99);
  for (int round = 0; round < 25; ++round) {
    const KnowledgeBase kb = kbtest::random_kb(rng);
    for (ComparisonMode mode : {kDirectional, kSymmetric}) {
      const KnowledgeSimilaritySpace space = knowledge_space(kb, mode);
      for (const SpaceEntry& e : space.entries()) {
        const PropertyComparisonMatrix direct =
            property_space(kb.knowledges()[e.left_index],
                           kb.knowledges()[e.right_index], mode);
        CHECK(e.matrix == direct);
        CHECK(e.signature == cardinality_signature(direct));
      }
    }
  }
}

TEST_CASE("spaces need at least two knowledges") {
  CHECK_THROWS_AS(knowledge_space(KnowledgeBase{}, kSymmetric),
                  too_few_knowledges_error);
  std::vector<Property> props;
  props.push_back(rule(1, {"q"}, "p"));
  KnowledgeBase one({Knowledge("K", std::move(props))});
  CHECK_THROWS_AS(knowledge_space(one, kSymmetric), too_few_knowledges_error);
}

TEST_CASE("symmetric entries are swap invariant") {
  std::mt19937 rng(40);
  for (int round = 0; round < 20; ++round) {
    const KnowledgeBase kb = kbtest::random_kb(rng);
    const KnowledgeSimilaritySpace space = knowledge_space(kb, kSymmetric);
    for (const SpaceEntry& e : space.entries()) {
      const SpaceEntry& mirrored = space.entry(e.right_index, e.left_index);
      CHECK(e.signature == mirrored.signature);
      for (std::size_t i = 0; i < e.matrix.rows(); ++i)
        for (std::size_t j = 0; j < e.matrix.cols(); ++j)
          CHECK(e.matrix.cell(i, j) == mirrored.matrix.cell(j, i));
    }
  }
}

TEST_CASE("source information keeps the redundancy-free half") {
  std::mt19937 rng(11);
  kbtest::GenOptions opts;
  opts.min_knowledges = 4;
  opts.max_knowledges = 4;
  const KnowledgeBase kb = kbtest::random_kb(rng, opts);
  const KnowledgeSimilaritySpace space = knowledge_space(kb, kSymmetric);
  const SourceInformation source = source_information(space);
  REQUIRE(source.entries.size() == 6);  // (16 - 4) / 2
  CHECK(2 * source.entries.size() == space.entries().size());
  for (const SpaceEntry& e : source.entries)
    CHECK(e.left_index < e.right_index);  // first-appearing knowledge left
  // Pairs are listed in appearance order.
  CHECK(source.entries[0].left_index == 0);
  CHECK(source.entries[0].right_index == 1);
  CHECK(source.entries[5].left_index == 2);
  CHECK(source.entries[5].right_index == 3);
}

TEST_CASE("directional spaces have no source information") {
  const KnowledgeBase kb = example2();
  const KnowledgeSimilaritySpace space = knowledge_space(kb, kDirectional);
  CHECK_THROWS_AS(source_information(space), directional_space_error);
}

TEST_CASE("category configurations mirror the signature") {
  CHECK(category_configuration({1, 3, 2}) ==
        CategoryConfiguration{true, true, true});
  CHECK(category_configuration({0, 0, 6}) ==
        CategoryConfiguration{false, false, true});
  CHECK(category_configuration({0, 0, 0}) ==
        CategoryConfiguration{false, false, false});
}

TEST_CASE("identifiability readings differ exactly on partial configurations") {
  const CategoryConfiguration all{true, true, true};
  const CategoryConfiguration none{false, false, false};
  const CategoryConfiguration partial{false, true, true};
  CHECK(is_identifiable(all));
  CHECK(is_identifiable(all, IdentifiabilityReading::all_nonempty));
  CHECK_FALSE(is_identifiable(none));
  CHECK_FALSE(is_identifiable(none, IdentifiabilityReading::all_nonempty));
  CHECK(is_identifiable(partial));
  CHECK_FALSE(is_identifiable(partial, IdentifiabilityReading::all_nonempty));
}

TEST_CASE("super categories group by the number of non-empty classes") {
  const SuperCategory one = super_category({true, false, false});
  CHECK(one.kind == SuperCase::case1);
  CHECK(one.members == std::vector{SimilarityClass::equal});

  const SuperCategory two = super_category({true, false, true});
  CHECK(two.kind == SuperCase::case2);
  CHECK(two.members ==
        std::vector{SimilarityClass::equal, SimilarityClass::different});

  const SuperCategory three = super_category({true, true, true});
  CHECK(three.kind == SuperCase::case3);
  CHECK(three.members.size() == 3);

  CHECK_THROWS_AS(super_category({false, false, false}),
                  not_identifiable_error);
}

TEST_CASE("class names and glyphs are stable") {
  CHECK(to_string(SimilarityClass::equal) == "equal");
  CHECK(to_string(SimilarityClass::similar) == "similar");
  CHECK(to_string(SimilarityClass::different) == "different");
  CHECK(glyph(SimilarityClass::equal) == '=');
  CHECK(glyph(SimilarityClass::similar) == '~');
  CHECK(glyph(SimilarityClass::different) == '#');
  CHECK(to_string(Direction::directional) == "directional");
  CHECK(to_string(Direction::symmetric) == "symmetric");
  CHECK(to_string(IdentifiabilityReading::union_nonempty) == "union");
  CHECK(to_string(IdentifiabilityReading::all_nonempty) == "strict");
}
