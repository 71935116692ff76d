#include "kbsim/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

#include "kbsim/parser.hpp"
#include "kbsim/report.hpp"
#include "kbsim/similarity.hpp"
#include "kbsim/version.hpp"

namespace kbsim::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitSemantic = 3;

struct Options {
  std::string input;
  std::string left;
  std::string right;
  std::string format = "text";
  bool directional = false;
  bool alpha = false;
  bool strict = false;
  std::string output;
};

bool read_file(const std::string& path, std::string& text) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) return false;
  text = buf.str();
  return true;
}

// Writes the payload either to standard output or to --output; the bytes are
// identical in both cases.
int emit(const std::string& payload, const Options& opt, std::ostream& out,
         std::ostream& err) {
  if (opt.output.empty()) {
    out << payload;
    return kExitOk;
  }
  std::ofstream file(opt.output, std::ios::binary);
  if (!file) {
    err << "kbsim: cannot open output file '" << opt.output << "'\n";
    return kExitUsage;
  }
  file << payload;
  file.flush();
  if (!file) {
    err << "kbsim: failed to write output file '" << opt.output << "'\n";
    return kExitUsage;
  }
  return kExitOk;
}

std::size_t levenshtein(std::string_view a, std::string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diagonal = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t above = row[j];
      const std::size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
      row[j] = std::min({above + 1, row[j - 1] + 1, diagonal + cost});
      diagonal = above;
    }
  }
  return row[b.size()];
}

const Knowledge* resolve(const KnowledgeBase& kb, const std::string& name,
                         std::ostream& err) {
  if (const Knowledge* k = kb.find(name)) return k;
  err << "kbsim: unknown knowledge '" << name << "'";
  const Knowledge* best = nullptr;
  std::size_t best_distance = 0;
  for (const Knowledge& k : kb.knowledges()) {
    const std::size_t d = levenshtein(name, k.name());
    if (!best || d < best_distance) {
      best = &k;
      best_distance = d;
    }
  }
  if (best) err << " (did you mean '" << best->name() << "'?)";
  err << "\n";
  return nullptr;
}

void print_diagnostics(const ParseResult& result, const Options& opt,
                       std::ostream& err) {
  for (const ParseError& e : result.errors)
    err << opt.input << ":" << format_error(e) << "\n";
  for (const ParseWarning& w : result.warnings)
    err << opt.input << ":" << w.line << ":" << w.column
        << ": warning: " << w.message << "\n";
}

// Parses the input file; on failure prints every diagnostic and returns
// nullopt (the caller exits with kExitParse).
std::optional<KnowledgeBase> load(const Options& opt, std::ostream& err) {
  std::string text;
  if (!read_file(opt.input, text)) {
    err << "kbsim: cannot read '" << opt.input << "'\n";
    return std::nullopt;
  }
  ParseResult result = parse_knowledge_base(text);
  print_diagnostics(result, opt, err);
  if (!result.ok()) return std::nullopt;
  return std::move(result.kb);
}

ReportMeta make_meta(const Options& opt, Direction direction) {
  ComparisonMode mode{opt.alpha ? MatchMode::alpha : MatchMode::exact,
                      direction};
  return ReportMeta{mode, opt.input, std::string(version)};
}

std::string render(const Report& report, const std::string& format) {
  if (format == "json") return render_json(report) + "\n";
  if (format == "csv") {
    if (const auto* pair = std::get_if<PairReport>(&report))
      return render_csv(pair->matrix);
    if (const auto* space = std::get_if<SpaceReport>(&report))
      return render_csv(*space);
    return render_csv(std::get<CategoryReport>(report));
  }
  return render_text(report);
}

int run_validate(const Options& opt, std::ostream& out, std::ostream& err) {
  std::string text;
  if (!read_file(opt.input, text)) {
    err << "kbsim: cannot read '" << opt.input << "'\n";
    return kExitParse;
  }
  ParseResult result = parse_knowledge_base(text);
  print_diagnostics(result, opt, err);

  std::size_t properties = 0;
  if (result.ok())
    for (const Knowledge& k : result.kb->knowledges()) properties += k.size();

  std::string payload;
  if (opt.format == "json") {
    nlohmann::ordered_json doc;
    doc["schema_version"] = 1;
    doc["kind"] = "validate-report";
    doc["tool_version"] = std::string(version);
    doc["input"] = opt.input;
    doc["ok"] = result.ok();
    doc["knowledges"] = result.ok() ? result.kb->size() : 0;
    doc["properties"] = properties;
    nlohmann::ordered_json errors = nlohmann::ordered_json::array();
    for (const ParseError& e : result.errors)
      errors.push_back({{"kind", to_string(e.kind)},
                        {"line", e.line},
                        {"column", e.column},
                        {"message", e.message}});
    doc["errors"] = std::move(errors);
    nlohmann::ordered_json warnings = nlohmann::ordered_json::array();
    for (const ParseWarning& w : result.warnings)
      warnings.push_back(
          {{"line", w.line}, {"column", w.column}, {"message", w.message}});
    doc["warnings"] = std::move(warnings);
    payload = doc.dump() + "\n";
  } else if (result.ok()) {
    payload = "ok: " + std::to_string(result.kb->size()) + " knowledges, " +
              std::to_string(properties) + " properties\n";
  } else {
    payload = "invalid: " + std::to_string(result.errors.size()) + " errors\n";
  }

  const int emitted = emit(payload, opt, out, err);
  if (emitted != kExitOk) return emitted;
  return result.ok() ? kExitOk : kExitParse;
}

int run_compare(const Options& opt, std::ostream& out, std::ostream& err) {
  std::optional<KnowledgeBase> kb = load(opt, err);
  if (!kb) return kExitParse;
  const Knowledge* left = resolve(*kb, opt.left, err);
  const Knowledge* right = left ? resolve(*kb, opt.right, err) : nullptr;
  if (!left || !right) return kExitSemantic;

  ReportMeta meta = make_meta(opt, Direction::directional);
  PropertyComparisonMatrix matrix = property_space(*left, *right, meta.mode);
  CardinalitySignature signature = cardinality_signature(matrix);
  Report report = PairReport{std::move(meta), std::move(matrix), signature};
  return emit(render(report, opt.format), opt, out, err);
}

int run_matrix(const Options& opt, std::ostream& out, std::ostream& err) {
  std::optional<KnowledgeBase> kb = load(opt, err);
  if (!kb) return kExitParse;

  ReportMeta meta = make_meta(
      opt, opt.directional ? Direction::directional : Direction::symmetric);
  KnowledgeSimilaritySpace space = knowledge_space(*kb, meta.mode);
  std::optional<SourceInformation> source;
  if (meta.mode.direction == Direction::symmetric)
    source = source_information(space);
  Report report =
      SpaceReport{std::move(meta), std::move(space), std::move(source)};
  return emit(render(report, opt.format), opt, out, err);
}

int run_categorize(const Options& opt, std::ostream& out, std::ostream& err) {
  std::optional<KnowledgeBase> kb = load(opt, err);
  if (!kb) return kExitParse;
  const Knowledge* left = resolve(*kb, opt.left, err);
  const Knowledge* right = left ? resolve(*kb, opt.right, err) : nullptr;
  if (!left || !right) return kExitSemantic;

  ReportMeta meta = make_meta(opt, Direction::directional);
  PropertyComparisonMatrix matrix = property_space(*left, *right, meta.mode);
  CardinalitySignature signature = cardinality_signature(matrix);
  CategoryConfiguration configuration = category_configuration(signature);
  const IdentifiabilityReading reading =
      opt.strict ? IdentifiabilityReading::all_nonempty
                 : IdentifiabilityReading::union_nonempty;
  CategoryReport report{std::move(meta),
                        left->name(),
                        right->name(),
                        signature,
                        configuration,
                        reading,
                        is_identifiable(configuration, reading),
                        std::nullopt};
  if (is_identifiable(configuration))
    report.super = super_category(configuration);
  return emit(render(Report{std::move(report)}, opt.format), opt, out, err);
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"knowledge-base similarity calculus"};
  app.name("kbsim");
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&opt](CLI::App* sub, bool pair) {
    sub->add_option("file", opt.input, "input .kb file")->required();
    if (pair) {
      sub->add_option("--left", opt.left, "left knowledge name")->required();
      sub->add_option("--right", opt.right, "right knowledge name")
          ->required();
    }
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_flag("--directional", opt.directional,
                  "one-sided containment semantics");
    sub->add_flag("--alpha", opt.alpha,
                  "match literals up to variable renaming");
    sub->add_flag("--strict-identifiability", opt.strict,
                  "require all three classes to be non-empty");
    sub->add_option("--output", opt.output, "write the report to a file");
  };

  add_common(app.add_subcommand("validate", "parse and check a .kb file"),
             false);
  add_common(app.add_subcommand("compare", "compare two knowledges"), true);
  add_common(app.add_subcommand(
                 "matrix", "compute the full knowledge similarity space"),
             false);
  add_common(app.add_subcommand("categorize",
                                "categorize a pair of knowledges"),
             true);

  // CLI11 consumes a reversed argument vector.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "kbsim: " << e.what() << "\n";
    return kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  if (command == "validate" && opt.format == "csv") {
    err << "kbsim: validate does not support csv output\n";
    return kExitUsage;
  }

  try {
    if (command == "validate") return run_validate(opt, out, err);
    if (command == "compare") return run_compare(opt, out, err);
    if (command == "matrix") return run_matrix(opt, out, err);
    return run_categorize(opt, out, err);
  } catch (const kbsim::error& e) {
    err << "kbsim: " << e.what() << "\n";
    return kExitSemantic;
  }
}

}  // namespace kbsim::cli
