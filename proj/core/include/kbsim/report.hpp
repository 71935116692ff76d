#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "kbsim/similarity.hpp"

namespace kbsim {

// Reports wrap engine results together with the metadata needed to
// reproduce them: comparison mode, input name and tool version. Every JSON
// document carries "schema_version": 1.

struct ReportMeta {
  ComparisonMode mode;
  std::string input;
  std::string tool_version;

  bool operator==(const ReportMeta&) const = default;
};

struct PairReport {
  ReportMeta meta;
  PropertyComparisonMatrix matrix;
  CardinalitySignature signature;

  bool operator==(const PairReport&) const = default;
};

struct SpaceReport {
  ReportMeta meta;
  KnowledgeSimilaritySpace space;
  // Present only for symmetric-mode spaces.
  std::optional<SourceInformation> source;

  bool operator==(const SpaceReport&) const = default;
};

struct CategoryReport {
  ReportMeta meta;
  std::string left;
  std::string right;
  CardinalitySignature signature;
  CategoryConfiguration configuration;
  IdentifiabilityReading reading = IdentifiabilityReading::union_nonempty;
  bool identifiable = false;
  std::optional<SuperCategory> super;  // absent for the all-empty configuration

  bool operator==(const CategoryReport&) const = default;
};

using Report = std::variant<PairReport, SpaceReport, CategoryReport>;

struct report_parse_error : error {
  using error::error;
};

// Deterministic JSON with stable key order. Classes are encoded as "equal" /
// "similar" / "different", matrices as row-major nested arrays, signatures
// as {"equal": n, "similar": n, "different": n} and super-categories as
// {"case": 1|2|3, "members": [...]}.
std::string render_json(const Report& r);

// Inverse of render_json; throws report_parse_error on malformed input.
Report parse_report(std::string_view json);

// Header "left_knowledge,left_property,right_knowledge,right_property,class",
// one row per cell, ordered by (right_property, left_property) ascending.
// Property columns hold 1-based indices.
std::string render_csv(const PropertyComparisonMatrix& m);
// All entries' cells under one header, entries in stored order.
std::string render_csv(const SpaceReport& r);
// One summary row per pair.
std::string render_csv(const CategoryReport& r);

// Aligned table using '=' / '~' / '#' glyphs plus a signature line; category
// reports add the super-category case.
std::string render_text(const Report& r);

}  // namespace kbsim
