#include "kbsim/similarity.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace kbsim {

std::string_view to_string(SimilarityClass c) {
  switch (c) {
    case SimilarityClass::equal: return "equal";
    case SimilarityClass::similar: return "similar";
    case SimilarityClass::different: return "different";
  }
  return "different";
}

char glyph(SimilarityClass c) {
  switch (c) {
    case SimilarityClass::equal: return '=';
    case SimilarityClass::similar: return '~';
    case SimilarityClass::different: return '#';
  }
  return '#';
}

std::string_view to_string(Direction d) {
  return d == Direction::directional ? "directional" : "symmetric";
}

namespace {

// How many literals of |from| match some literal of |in|. Both vectors are
// sorted and duplicate-free, so in exact mode this is the intersection size.
std::size_t matched_count(const std::vector<Literal>& from,
                          const std::vector<Literal>& in, MatchMode mode) {
  if (mode == MatchMode::exact) {
    std::size_t count = 0;
    auto a = from.begin();
    auto b = in.begin();
    while (a != from.end() && b != in.end()) {
      auto c = *a <=> *b;
      if (c < 0) {
        ++a;
      } else if (c > 0) {
        ++b;
      } else {
        ++count;
        ++a;
        ++b;
      }
    }
    return count;
  }
  std::size_t count = 0;
  for (const Literal& la : from) {
    for (const Literal& lb : in) {
      if (literals_match(la, lb, mode)) {
        ++count;
        break;
      }
    }
  }
  return count;
}

SimilarityClass classify_from_count(std::size_t matched, std::size_t total) {
  if (matched == total) return SimilarityClass::equal;
  if (matched == 0) return SimilarityClass::different;
  return SimilarityClass::similar;
}

SimilarityClass classify_sets(const std::vector<Literal>& left,
                              const std::vector<Literal>& right,
                              ComparisonMode mode) {
  SimilarityClass forward =
      classify_from_count(matched_count(left, right, mode.match), left.size());
  if (mode.direction == Direction::directional) return forward;
  SimilarityClass backward =
      classify_from_count(matched_count(right, left, mode.match), right.size());
  if (forward == backward &&
      (forward == SimilarityClass::equal || forward == SimilarityClass::different))
    return forward;
  return SimilarityClass::similar;
}

}  // namespace

SimilarityClass classify_pair(const Property& left, const Property& right,
                              ComparisonMode mode) {
  return classify_sets(literal_set(left), literal_set(right), mode);
}

PropertyComparisonMatrix::PropertyComparisonMatrix(
    std::string left, std::string right, std::size_t rows, std::size_t cols,
    std::vector<SimilarityClass> cells)
    : left_(std::move(left)),
      right_(std::move(right)),
      rows_(rows),
      cols_(cols),
      cells_(std::move(cells)) {
  if (cells_.size() != rows_ * cols_)
    throw std::invalid_argument("matrix cell count does not match dimensions");
}

PropertyComparisonMatrix property_space(const Knowledge& left,
                                        const Knowledge& right,
                                        ComparisonMode mode) {
  if (left.name() == right.name())
    throw same_knowledge_error("cannot compare knowledge '" + left.name() +
                               "' against itself");
  std::vector<std::vector<Literal>> left_sets;
  left_sets.reserve(left.size());
  for (const Property& p : left.properties()) left_sets.push_back(literal_set(p));
  std::vector<std::vector<Literal>> right_sets;
  right_sets.reserve(right.size());
  for (const Property& p : right.properties())
    right_sets.push_back(literal_set(p));

  std::vector<SimilarityClass> cells;
  cells.reserve(left.size() * right.size());
  for (const auto& rs : right_sets)
    for (const auto& ls : left_sets) cells.push_back(classify_sets(ls, rs, mode));
  return PropertyComparisonMatrix(left.name(), right.name(), right.size(),
                                  left.size(), std::move(cells));
}

CardinalitySignature cardinality_signature(const PropertyComparisonMatrix& m) {
  CardinalitySignature sig;
  for (SimilarityClass c : m.cells()) {
    switch (c) {
      case SimilarityClass::equal: ++sig.equal; break;
      case SimilarityClass::similar: ++sig.similar; break;
      case SimilarityClass::different: ++sig.different; break;
    }
  }
  return sig;
}

KnowledgeSimilaritySpace::KnowledgeSimilaritySpace(
    std::vector<std::string> names, ComparisonMode mode,
    std::vector<SpaceEntry> entries)
    : names_(std::move(names)), mode_(mode), entries_(std::move(entries)) {}

const SpaceEntry& KnowledgeSimilaritySpace::entry(
    std::size_t left_index, std::size_t right_index) const {
  const std::size_t n = names_.size();
  if (left_index >= n || right_index >= n || left_index == right_index)
    throw std::out_of_range("no such space entry");
  // Left-major layout with the diagonal skipped.
  std::size_t idx = left_index * (n - 1) + right_index -
                    (right_index > left_index ? 1 : 0);
  return entries_[idx];
}

namespace {

// Interned representation for exact matching: each distinct literal gets one
// id, literal sets become sorted id vectors and matching reduces to integer
// intersection.
struct InternedProperties {
  // literal-id sets per knowledge, per property
  std::vector<std::vector<std::vector<std::int32_t>>> sets;
};

InternedProperties intern(const KnowledgeBase& kb) {
  InternedProperties out;
  std::map<Literal, std::int32_t> ids;
  out.sets.reserve(kb.size());
  for (const Knowledge& k : kb.knowledges()) {
    auto& ksets = out.sets.emplace_back();
    ksets.reserve(k.size());
    for (const Property& p : k.properties()) {
      auto& pset = ksets.emplace_back();
      for (const Literal& l : literal_set(p)) {
        auto [it, inserted] =
            ids.emplace(l, static_cast<std::int32_t>(ids.size()));
        pset.push_back(it->second);
      }
      std::sort(pset.begin(), pset.end());
    }
  }
  return out;
}

std::size_t id_intersection(const std::vector<std::int32_t>& a,
                            const std::vector<std::int32_t>& b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j)
      ++i;
    else if (*j < *i)
      ++j;
    else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

SpaceEntry make_entry_exact(const KnowledgeBase& kb,
                            const InternedProperties& interned, std::size_t li,
                            std::size_t ri, ComparisonMode mode) {
  const auto& lsets = interned.sets[li];
  const auto& rsets = interned.sets[ri];
  std::vector<SimilarityClass> cells;
  cells.reserve(lsets.size() * rsets.size());
  for (const auto& rs : rsets) {
    for (const auto& ls : lsets) {
      std::size_t common = id_intersection(ls, rs);
      SimilarityClass forward = classify_from_count(common, ls.size());
      if (mode.direction == Direction::directional) {
        cells.push_back(forward);
        continue;
      }
      SimilarityClass backward = classify_from_count(common, rs.size());
      if (forward == backward && (forward == SimilarityClass::equal ||
                                  forward == SimilarityClass::different))
        cells.push_back(forward);
      else
        cells.push_back(SimilarityClass::similar);
    }
  }
  PropertyComparisonMatrix m(kb.knowledges()[li].name(),
                             kb.knowledges()[ri].name(), rsets.size(),
                             lsets.size(), std::move(cells));
  CardinalitySignature sig = cardinality_signature(m);
  return SpaceEntry{li, ri, std::move(m), sig};
}

SpaceEntry make_entry_generic(const KnowledgeBase& kb, std::size_t li,
                              std::size_t ri, ComparisonMode mode) {
  PropertyComparisonMatrix m =
      property_space(kb.knowledges()[li], kb.knowledges()[ri], mode);
  CardinalitySignature sig = cardinality_signature(m);
  return SpaceEntry{li, ri, std::move(m), sig};
}

}  // namespace

KnowledgeSimilaritySpace knowledge_space(const KnowledgeBase& kb,
                                         ComparisonMode mode) {
  const std::size_t n = kb.size();
  if (n < 2)
    throw too_few_knowledges_error(
        "knowledge space needs at least 2 knowledges, got " +
        std::to_string(n));
  std::vector<std::string> names;
  names.reserve(n);
  for (const Knowledge& k : kb.knowledges()) names.push_back(k.name());

  std::vector<SpaceEntry> entries;
  entries.reserve(n * n - n);
  if (mode.match == MatchMode::exact) {
    InternedProperties interned = intern(kb);
    for (std::size_t li = 0; li < n; ++li)
      for (std::size_t ri = 0; ri < n; ++ri)
        if (li != ri)
          entries.push_back(make_entry_exact(kb, interned, li, ri, mode));
  } else {
    for (std::size_t li = 0; li < n; ++li)
      for (std::size_t ri = 0; ri < n; ++ri)
        if (li != ri) entries.push_back(make_entry_generic(kb, li, ri, mode));
  }
  return KnowledgeSimilaritySpace(std::move(names), mode, std::move(entries));
}

SourceInformation source_information(const KnowledgeSimilaritySpace& space) {
  if (space.mode().direction != Direction::symmetric)
    throw directional_space_error(
        "source information requires a symmetric-mode space");
  const std::size_t n = space.names().size();
  SourceInformation out;
  out.entries.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      out.entries.push_back(space.entry(i, j));
  return out;
}

CategoryConfiguration category_configuration(const CardinalitySignature& sig) {
  return CategoryConfiguration{sig.equal > 0, sig.similar > 0,
                               sig.different > 0};
}

std::string_view to_string(IdentifiabilityReading r) {
  return r == IdentifiabilityReading::union_nonempty ? "union" : "strict";
}

bool is_identifiable(const CategoryConfiguration& cfg,
                     IdentifiabilityReading reading) {
  if (reading == IdentifiabilityReading::all_nonempty)
    return cfg.equal_nonempty && cfg.similar_nonempty && cfg.different_nonempty;
  return cfg.equal_nonempty || cfg.similar_nonempty || cfg.different_nonempty;
}

SuperCategory super_category(const CategoryConfiguration& cfg) {
  SuperCategory out;
  if (cfg.equal_nonempty) out.members.push_back(SimilarityClass::equal);
  if (cfg.similar_nonempty) out.members.push_back(SimilarityClass::similar);
  if (cfg.different_nonempty) out.members.push_back(SimilarityClass::different);
  switch (out.members.size()) {
    case 1: out.kind = SuperCase::case1; break;
    case 2: out.kind = SuperCase::case2; break;
    case 3: out.kind = SuperCase::case3; break;
    default:
      throw not_identifiable_error(
          "the all-empty configuration has no super-category");
  }
  return out;
}

}  // namespace kbsim
