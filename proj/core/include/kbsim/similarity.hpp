#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kbsim/model.hpp"

namespace kbsim {

// ---------------------------------------------------------------------------
// The three-way comparison calculus.
//
// Two properties are compared through their literal sets (body plus head).
// Directionally, the left property's literals are sought in the right
// property's literal set: all found -> Equal, some found -> Similar, none
// found -> Different. The Equal check runs first; its condition subsumes the
// existential one. Symmetric comparison combines both directions: Equal and
// Different require agreement, everything else is Similar.

enum class SimilarityClass : std::uint8_t { equal, similar, different };

std::string_view to_string(SimilarityClass c);  // "equal" | "similar" | "different"
char glyph(SimilarityClass c);                  // '=' | '~' | '#'

enum class Direction : std::uint8_t { directional, symmetric };

std::string_view to_string(Direction d);

struct ComparisonMode {
  MatchMode match = MatchMode::exact;
  Direction direction = Direction::directional;

  bool operator==(const ComparisonMode&) const = default;
};

struct same_knowledge_error : error {
  using error::error;
};
struct too_few_knowledges_error : error {
  using error::error;
};
struct directional_space_error : error {
  using error::error;
};
struct not_identifiable_error : error {
  using error::error;
};

SimilarityClass classify_pair(const Property& left, const Property& right,
                              ComparisonMode mode = {});

// Grid of similarity classes over all property pairs of two knowledges.
// Rows follow the right knowledge's properties, columns the left one's:
// cell(i, j) classifies left property j+1 against right property i+1.
class PropertyComparisonMatrix {
 public:
  PropertyComparisonMatrix(std::string left, std::string right,
                           std::size_t rows, std::size_t cols,
                           std::vector<SimilarityClass> cells);

  const std::string& left() const { return left_; }
  const std::string& right() const { return right_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t cell_count() const { return cells_.size(); }
  SimilarityClass cell(std::size_t row, std::size_t col) const {
    return cells_[row * cols_ + col];
  }
  const std::vector<SimilarityClass>& cells() const { return cells_; }

  bool operator==(const PropertyComparisonMatrix&) const = default;

 private:
  std::string left_;
  std::string right_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<SimilarityClass> cells_;  // row-major
};

PropertyComparisonMatrix property_space(const Knowledge& left,
                                        const Knowledge& right,
                                        ComparisonMode mode = {});

struct CardinalitySignature {
  std::size_t equal = 0;
  std::size_t similar = 0;
  std::size_t different = 0;

  std::size_t total() const { return equal + similar + different; }

  auto operator<=>(const CardinalitySignature&) const = default;
};

CardinalitySignature cardinality_signature(const PropertyComparisonMatrix& m);

// One ordered pair of the knowledge similarity space.
struct SpaceEntry {
  std::size_t left_index = 0;
  std::size_t right_index = 0;
  PropertyComparisonMatrix matrix;
  CardinalitySignature signature;

  bool operator==(const SpaceEntry&) const = default;
};

// All ordered knowledge pairs of a base, diagonal excluded:
// |K|^2 - |K| entries, stored left-major.
class KnowledgeSimilaritySpace {
 public:
  KnowledgeSimilaritySpace(std::vector<std::string> names, ComparisonMode mode,
                           std::vector<SpaceEntry> entries);

  const std::vector<std::string>& names() const { return names_; }
  ComparisonMode mode() const { return mode_; }
  const std::vector<SpaceEntry>& entries() const { return entries_; }

  // Lookup by knowledge positions; throws std::out_of_range on the diagonal
  // or outside the base.
  const SpaceEntry& entry(std::size_t left_index,
                          std::size_t right_index) const;

  bool operator==(const KnowledgeSimilaritySpace&) const = default;

 private:
  std::vector<std::string> names_;
  ComparisonMode mode_;
  std::vector<SpaceEntry> entries_;
};

KnowledgeSimilaritySpace knowledge_space(
    const KnowledgeBase& kb,
    ComparisonMode mode = {MatchMode::exact, Direction::symmetric});

// The redundancy-free lower triangle: one entry per unordered knowledge
// pair, keyed by order of first appearance, (|K|^2 - |K|) / 2 entries.
// Only defined for symmetric spaces.
struct SourceInformation {
  std::vector<SpaceEntry> entries;

  bool operator==(const SourceInformation&) const = default;
};

SourceInformation source_information(const KnowledgeSimilaritySpace& space);

// Which of the three class sets are non-empty; 2^3 = 8 possible values.
struct CategoryConfiguration {
  bool equal_nonempty = false;
  bool similar_nonempty = false;
  bool different_nonempty = false;

  auto operator<=>(const CategoryConfiguration&) const = default;
};

CategoryConfiguration category_configuration(const CardinalitySignature& sig);

// union_nonempty: at least one class non-empty (discards only the all-empty
// configuration, leaving 7). all_nonempty: the stricter reading requiring
// all three classes.
enum class IdentifiabilityReading : std::uint8_t { union_nonempty, all_nonempty };

std::string_view to_string(IdentifiabilityReading r);  // "union" | "strict"

bool is_identifiable(
    const CategoryConfiguration& cfg,
    IdentifiabilityReading reading = IdentifiabilityReading::union_nonempty);

enum class SuperCase : std::uint8_t { case1 = 1, case2 = 2, case3 = 3 };

// Grouping of the 7 identifiable configurations by how many class sets are
// non-empty.
struct SuperCategory {
  SuperCase kind = SuperCase::case1;
  std::vector<SimilarityClass> members;  // the non-empty classes, in order

  bool operator==(const SuperCategory&) const = default;
};

// Throws not_identifiable_error for the all-empty configuration.
SuperCategory super_category(const CategoryConfiguration& cfg);

}  // namespace kbsim
