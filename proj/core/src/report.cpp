#include "kbsim/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <utility>

namespace kbsim {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json mode_json(ComparisonMode mode) {
  return ordered_json{{"match", to_string(mode.match)},
                      {"direction", to_string(mode.direction)}};
}

ordered_json signature_json(const CardinalitySignature& sig) {
  return ordered_json{{"equal", sig.equal},
                      {"similar", sig.similar},
                      {"different", sig.different}};
}

ordered_json matrix_json(const PropertyComparisonMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(to_string(m.cell(i, j)));
    rows.push_back(std::move(row));
  }
  return ordered_json{{"rows", m.rows()}, {"cols", m.cols()}, {"cells", std::move(rows)}};
}

ordered_json super_json(const SuperCategory& s) {
  ordered_json members = ordered_json::array();
  for (SimilarityClass c : s.members) members.push_back(to_string(c));
  return ordered_json{{"case", static_cast<int>(s.kind)},
                      {"members", std::move(members)}};
}

ordered_json header_json(std::string_view kind, const ReportMeta& meta) {
  ordered_json doc;
  doc["schema_version"] = 1;
  doc["kind"] = kind;
  doc["tool_version"] = meta.tool_version;
  doc["input"] = meta.input;
  doc["mode"] = mode_json(meta.mode);
  return doc;
}

// --- parsing helpers -------------------------------------------------------

[[noreturn]] void fail(const std::string& what) {
  throw report_parse_error("malformed report: " + what);
}

SimilarityClass class_from_string(const std::string& s) {
  if (s == "equal") return SimilarityClass::equal;
  if (s == "similar") return SimilarityClass::similar;
  if (s == "different") return SimilarityClass::different;
  fail("unknown similarity class '" + s + "'");
}

ComparisonMode mode_from_json(const ordered_json& j) {
  ComparisonMode mode;
  const std::string match = j.at("match");
  if (match == "exact")
    mode.match = MatchMode::exact;
  else if (match == "alpha")
    mode.match = MatchMode::alpha;
  else
    fail("unknown match mode '" + match + "'");
  const std::string dir = j.at("direction");
  if (dir == "directional")
    mode.direction = Direction::directional;
  else if (dir == "symmetric")
    mode.direction = Direction::symmetric;
  else
    fail("unknown direction '" + dir + "'");
  return mode;
}

CardinalitySignature signature_from_json(const ordered_json& j) {
  return CardinalitySignature{j.at("equal").get<std::size_t>(),
                              j.at("similar").get<std::size_t>(),
                              j.at("different").get<std::size_t>()};
}

PropertyComparisonMatrix matrix_from_json(const ordered_json& j,
                                          const std::string& left,
                                          const std::string& right) {
  const std::size_t rows = j.at("rows").get<std::size_t>();
  const std::size_t cols = j.at("cols").get<std::size_t>();
  std::vector<SimilarityClass> cells;
  cells.reserve(rows * cols);
  for (const auto& row : j.at("cells"))
    for (const auto& cell : row)
      cells.push_back(class_from_string(cell.get<std::string>()));
  if (cells.size() != rows * cols) fail("matrix cells do not match dimensions");
  return PropertyComparisonMatrix(left, right, rows, cols, std::move(cells));
}

ReportMeta meta_from_json(const ordered_json& doc) {
  if (doc.at("schema_version").get<int>() != 1) fail("unsupported schema version");
  return ReportMeta{mode_from_json(doc.at("mode")), doc.at("input"),
                    doc.at("tool_version")};
}

std::size_t index_of(const std::vector<std::string>& names,
                     const std::string& name) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) fail("unknown knowledge '" + name + "' in entry");
  return static_cast<std::size_t>(it - names.begin());
}

// --- text helpers ----------------------------------------------------------

std::string signature_line(const CardinalitySignature& sig) {
  return "equal: " + std::to_string(sig.equal) +
         "  similar: " + std::to_string(sig.similar) +
         "  different: " + std::to_string(sig.different);
}

std::string mode_line(ComparisonMode mode) {
  return "mode: " + std::string(to_string(mode.match)) + " " +
         std::string(to_string(mode.direction));
}

std::string padded(std::string s, std::size_t width) {
  if (s.size() < width) s.insert(0, width - s.size(), ' ');
  return s;
}

void append_grid(std::string& out, const PropertyComparisonMatrix& m) {
  if (m.cell_count() == 0) {
    out += "no comparisons\n";
    return;
  }
  const std::size_t row_width = 1 + std::to_string(m.rows()).size();
  std::vector<std::size_t> col_widths(m.cols());
  std::string header(row_width, ' ');
  for (std::size_t j = 0; j < m.cols(); ++j) {
    std::string label = "P" + std::to_string(j + 1);
    col_widths[j] = label.size();
    header += "  " + label;
  }
  out += header + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::string line = padded("P" + std::to_string(i + 1), row_width);
    for (std::size_t j = 0; j < m.cols(); ++j)
      line += "  " + padded(std::string(1, glyph(m.cell(i, j))), col_widths[j]);
    out += line + "\n";
  }
}

// --- renderers -------------------------------------------------------------

struct JsonRenderer {
  ordered_json operator()(const PairReport& r) const {
    ordered_json doc = header_json("pair-report", r.meta);
    doc["left"] = r.matrix.left();
    doc["right"] = r.matrix.right();
    doc["matrix"] = matrix_json(r.matrix);
    doc["signature"] = signature_json(r.signature);
    return doc;
  }

  ordered_json operator()(const SpaceReport& r) const {
    ordered_json doc = header_json("space-report", r.meta);
    doc["knowledges"] = r.space.names();
    ordered_json entries = ordered_json::array();
    for (const SpaceEntry& e : r.space.entries()) {
      entries.push_back(ordered_json{{"left", e.matrix.left()},
                                     {"right", e.matrix.right()},
                                     {"matrix", matrix_json(e.matrix)},
                                     {"signature", signature_json(e.signature)}});
    }
    doc["entries"] = std::move(entries);
    if (r.source) {
      ordered_json pairs = ordered_json::array();
      for (const SpaceEntry& e : r.source->entries) {
        pairs.push_back(ordered_json{{"left", e.matrix.left()},
                                     {"right", e.matrix.right()},
                                     {"signature", signature_json(e.signature)}});
      }
      doc["source_information"] = std::move(pairs);
    }
    return doc;
  }

  ordered_json operator()(const CategoryReport& r) const {
    ordered_json doc = header_json("category-report", r.meta);
    doc["left"] = r.left;
    doc["right"] = r.right;
    doc["signature"] = signature_json(r.signature);
    doc["configuration"] =
        ordered_json{{"equal_nonempty", r.configuration.equal_nonempty},
                     {"similar_nonempty", r.configuration.similar_nonempty},
                     {"different_nonempty", r.configuration.different_nonempty}};
    doc["identifiability"] = ordered_json{{"reading", to_string(r.reading)},
                                          {"identifiable", r.identifiable}};
    doc["super_category"] = r.super ? super_json(*r.super) : ordered_json(nullptr);
    return doc;
  }
};

struct TextRenderer {
  std::string operator()(const PairReport& r) const {
    std::string out = "pair: " + r.matrix.left() + " / " + r.matrix.right() + "\n";
    out += mode_line(r.meta.mode) + "\n";
    append_grid(out, r.matrix);
    out += signature_line(r.signature) + "\n";
    return out;
  }

  std::string operator()(const SpaceReport& r) const {
    std::string out = "knowledge similarity space\n";
    out += mode_line(r.meta.mode) + "\n";
    out += "knowledges: " + std::to_string(r.space.names().size()) + " (";
    for (std::size_t i = 0; i < r.space.names().size(); ++i) {
      if (i > 0) out += ' ';
      out += r.space.names()[i];
    }
    out += ")\n";
    if (r.space.entries().empty()) {
      out += "no comparisons\n";
      return out;
    }
    out += "entries: " + std::to_string(r.space.entries().size()) + "\n";
    for (const SpaceEntry& e : r.space.entries())
      out += e.matrix.left() + " / " + e.matrix.right() + ": " +
             signature_line(e.signature) + "\n";
    if (r.source) {
      out += "source information: " + std::to_string(r.source->entries.size()) +
             " pairs\n";
      for (const SpaceEntry& e : r.source->entries)
        out += e.matrix.left() + " / " + e.matrix.right() + ": " +
               signature_line(e.signature) + "\n";
    } else {
      out += "source information: none (requires symmetric mode)\n";
    }
    return out;
  }

  std::string operator()(const CategoryReport& r) const {
    std::string out = "pair: " + r.left + " / " + r.right + "\n";
    out += mode_line(r.meta.mode) + "\n";
    out += signature_line(r.signature) + "\n";
    out += "configuration:";
    if (!is_identifiable(r.configuration)) {
      out += " none";
    } else {
      if (r.configuration.equal_nonempty) out += " equal";
      if (r.configuration.similar_nonempty) out += " similar";
      if (r.configuration.different_nonempty) out += " different";
    }
    out += "\n";
    out += std::string("identifiable: ") + (r.identifiable ? "yes" : "no") +
           " (" + std::string(to_string(r.reading)) + " reading)\n";
    if (r.super) {
      out += "super-category: case " +
             std::to_string(static_cast<int>(r.super->kind)) + "\n";
    } else {
      out += "super-category: none\n";
    }
    return out;
  }
};

constexpr std::string_view kCsvHeader =
    "left_knowledge,left_property,right_knowledge,right_property,class\n";

void append_csv_rows(std::string& out, const PropertyComparisonMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out += m.left() + "," + std::to_string(j + 1) + "," + m.right() + "," +
             std::to_string(i + 1) + "," + std::string(to_string(m.cell(i, j))) +
             "\n";
}

}  // namespace

std::string render_json(const Report& r) {
  return std::visit(JsonRenderer{}, r).dump();
}

std::string render_text(const Report& r) { return std::visit(TextRenderer{}, r); }

std::string render_csv(const PropertyComparisonMatrix& m) {
  std::string out{kCsvHeader};
  append_csv_rows(out, m);
  return out;
}

std::string render_csv(const SpaceReport& r) {
  std::string out{kCsvHeader};
  for (const SpaceEntry& e : r.space.entries()) append_csv_rows(out, e.matrix);
  return out;
}

std::string render_csv(const CategoryReport& r) {
  std::string out =
      "left_knowledge,right_knowledge,equal,similar,different,identifiable,"
      "super_category\n";
  out += r.left + "," + r.right + "," + std::to_string(r.signature.equal) +
         "," + std::to_string(r.signature.similar) + "," +
         std::to_string(r.signature.different) + "," +
         (r.identifiable ? "yes" : "no") + ",";
  out += r.super ? "case" + std::to_string(static_cast<int>(r.super->kind))
                 : std::string("none");
  out += "\n";
  return out;
}

Report parse_report(std::string_view json) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json);
  } catch (const nlohmann::json::exception& e) {
    throw report_parse_error(std::string("malformed report: ") + e.what());
  }
  try {
    const std::string kind = doc.at("kind");
    ReportMeta meta = meta_from_json(doc);
    if (kind == "pair-report") {
      PropertyComparisonMatrix m =
          matrix_from_json(doc.at("matrix"), doc.at("left"), doc.at("right"));
      return PairReport{std::move(meta), std::move(m),
                        signature_from_json(doc.at("signature"))};
    }
    if (kind == "space-report") {
      std::vector<std::string> names =
          doc.at("knowledges").get<std::vector<std::string>>();
      std::vector<SpaceEntry> entries;
      for (const auto& je : doc.at("entries")) {
        const std::string left = je.at("left");
        const std::string right = je.at("right");
        SpaceEntry e{index_of(names, left), index_of(names, right),
                     matrix_from_json(je.at("matrix"), left, right),
                     signature_from_json(je.at("signature"))};
        entries.push_back(std::move(e));
      }
      KnowledgeSimilaritySpace space(std::move(names),
                                     meta.mode, std::move(entries));
      std::optional<SourceInformation> source;
      if (doc.contains("source_information")) {
        SourceInformation src;
        for (const auto& jp : doc.at("source_information")) {
          const std::size_t li = index_of(space.names(), jp.at("left"));
          const std::size_t ri = index_of(space.names(), jp.at("right"));
          const SpaceEntry& full = space.entry(li, ri);
          if (signature_from_json(jp.at("signature")) != full.signature)
            fail("source signature does not match its space entry");
          src.entries.push_back(full);
        }
        source = std::move(src);
      }
      return SpaceReport{std::move(meta), std::move(space), std::move(source)};
    }
    if (kind == "category-report") {
      CategoryReport r{std::move(meta),
                       doc.at("left"),
                       doc.at("right"),
                       signature_from_json(doc.at("signature")),
                       CategoryConfiguration{},
                       IdentifiabilityReading::union_nonempty,
                       false,
                       std::nullopt};
      const auto& jc = doc.at("configuration");
      r.configuration = CategoryConfiguration{jc.at("equal_nonempty"),
                                              jc.at("similar_nonempty"),
                                              jc.at("different_nonempty")};
      const auto& ji = doc.at("identifiability");
      const std::string reading = ji.at("reading");
      if (reading == "union")
        r.reading = IdentifiabilityReading::union_nonempty;
      else if (reading == "strict")
        r.reading = IdentifiabilityReading::all_nonempty;
      else
        fail("unknown identifiability reading '" + reading + "'");
      r.identifiable = ji.at("identifiable");
      if (!doc.at("super_category").is_null()) {
        const auto& js = doc.at("super_category");
        SuperCategory s;
        s.kind = static_cast<SuperCase>(js.at("case").get<int>());
        for (const auto& m : js.at("members"))
          s.members.push_back(class_from_string(m.get<std::string>()));
        if (static_cast<int>(s.kind) < 1 || static_cast<int>(s.kind) > 3 ||
            s.members.size() != static_cast<std::size_t>(s.kind))
          fail("inconsistent super-category");
        r.super = std::move(s);
      }
      return r;
    }
    fail("unknown report kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw report_parse_error(std::string("malformed report: ") + e.what());
  }
}

}  // namespace kbsim
