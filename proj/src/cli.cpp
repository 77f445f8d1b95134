#include "fibrekit/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "fibrekit/criteria.hpp"
#include "fibrekit/report.hpp"

namespace fibrekit::cli {

namespace {

// FIBREKIT_LOG: 0/quiet (default), 1/info, 2/debug.
int log_level() {
  static const int level = [] {
    const char* v = std::getenv("FIBREKIT_LOG");
    if (!v) return 0;
    std::string s(v);
    if (s == "debug" || s == "2") return 2;
    if (s == "info" || s == "1") return 1;
    return 0;
  }();
  return level;
}

void log(std::ostream& err, int level, const std::string& message) {
  if (log_level() >= level) err << "fibrekit: " << message << '\n';
}

class Timer {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput:
    case ErrorKind::RingMismatch:
      return kInputError;
    case ErrorKind::TheoremViolation:
      return kTheoremViolation;
    default:
      return kComputationError;
  }
}

InputDocument effective(InputDocument doc, const CommandOptions& options) {
  if (options.n_max) doc.n_max = options.n_max;
  if (options.n_check) doc.n_check = options.n_check;
  return doc;
}

FiltrationSpec spec_with_reduction(const InputDocument& doc, const std::string& command) {
  FiltrationSpec spec = to_spec(doc);
  if (!spec.J) spec.J = default_reduction(spec);
  if (!spec.J)
    throw Error(ErrorKind::InvalidInput, "'" + command + "' needs a minimal reduction: add a 'J:' line");
  return spec;
}

std::string reduction_text(const ReductionData& red) {
  std::ostringstream out;
  out << "J = " << red.J.format() << '\n'
      << "r_J(I) = " << red.r << '\n'
      << "minimal reduction: " << (red.is_minimal ? "yes" : "no") << '\n';
  return out.str();
}

std::string coefficient_text(const AnalysisReport& r) {
  std::ostringstream out;
  const auto& co = *r.coefficients;
  out << "e = " << tuple_text(co.e.c) << '\n'
      << "g = " << tuple_text(co.g.c) << '\n'
      << "f = " << tuple_text(co.f.c) << '\n';
  if (r.vseq) out << "v = " << tuple_text(r.vseq->v) << '\n';
  if (r.g1_onedim) out << "g1 (one-dimensional route) = " << *r.g1_onedim << '\n';
  return out.str();
}

std::string lemma_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << std::setw(4) << "n" << std::setw(12) << "lhs" << std::setw(12) << "rhs" << "  equal\n";
  for (const auto& row : r.lemma)
    out << std::setw(4) << row.n << std::setw(12) << row.lhs << std::setw(12) << row.rhs << "  "
        << (row.equal() ? "yes" : "NO") << '\n';
  return out.str();
}

const char* criterion_for(const std::string& command) {
  if (command == "check cm-fiber") return "fiber-cm";
  if (command == "check depth-fiber") return "fiber-depth-d-minus-1";
  if (command == "check min-mult") return "minimal-multiplicity";
  if (command == "check depth-g") return "depth-g";
  return nullptr;
}

void write_report(const std::string& path, const std::string& text) {
  std::ofstream file(path);
  if (!file) throw Error(ErrorKind::InvalidInput, "cannot write report to " + path);
  file << text;
  if (!file) throw Error(ErrorKind::InvalidInput, "cannot write report to " + path);
}

int execute(const std::string& command, const InputDocument& given, const CommandOptions& options,
            std::ostream& out, std::ostream& err) {
  static const char* analysis_commands[] = {"analyze", "coeffs", "fundamental-lemma", "series",
                                            "check cm-fiber", "check depth-fiber",
                                            "check min-mult", "check depth-g"};
  const bool analysis = std::find(std::begin(analysis_commands), std::end(analysis_commands),
                                  command) != std::end(analysis_commands);
  if (!analysis && command != "reduction")
    throw Error(ErrorKind::InvalidInput, "unknown command '" + command + "'");

  const InputDocument doc = effective(given, options);
  FiltrationSpec spec = spec_with_reduction(doc, command);
  const ReportFormat format = options.format;
  Timer timer;

  if (command == "reduction") {
    Filtration f(spec);
    ReductionData red = reduction_number(f);
    log(err, 1, "reduction number computed in " + std::to_string(timer.ms()) + " ms");
    std::string text;
    if (format == ReportFormat::Tree) {
      nlohmann::ordered_json j{{"schema", "fibrekit-reduction/1"},
                               {"input", to_text(doc)},
                               {"J", red.J.format()},
                               {"r", red.r},
                               {"minimal", red.is_minimal}};
      text = j.dump(2) + "\n";
    } else {
      text = reduction_text(red);
    }
    if (options.report_path) write_report(*options.report_path, text);
    out << text;
    return kOk;
  }

  if (command == "fundamental-lemma" && spec.ring.dim() != 2)
    throw Error(ErrorKind::InvalidInput, "fundamental-lemma needs a two-dimensional ring");

  AnalysisOptions ao;
  ao.n_max = doc.n_max;
  ao.n_check = doc.n_check;
  AnalysisReport report = analyze(spec, ao);
  log(err, 1, "analysis finished in " + std::to_string(timer.ms()) + " ms (n_max " +
                  std::to_string(report.n_max) + ", n_check " + std::to_string(report.n_check) + ")");
  if (log_level() >= 2) err << table_text(report.table);

  if (report.has_violation()) {
    err << "fibrekit: theorem violation, results are not trustworthy\n";
    for (const auto& c : report.criteria)
      if (c.violation) err << "  " << criterion_line(c) << '\n';
    return kTheoremViolation;
  }

  const std::string tree = render_tree(report, doc);
  std::string text;
  if (format == ReportFormat::Tree) {
    text = tree;
  } else if (command == "analyze") {
    text = render_text(report);
  } else if (command == "coeffs") {
    text = coefficient_text(report);
  } else if (command == "fundamental-lemma") {
    text = lemma_text(report);
  } else if (command == "series") {
    text = series_text(*report.series, report.k_is_maximal) + "\n";
  } else {
    const CriterionResult* c = report.find(criterion_for(command));
    if (!c) throw Error(ErrorKind::Internal, "criterion missing from report");
    text = criterion_line(*c) + "\n";
  }
  if (options.report_path) write_report(*options.report_path, tree);
  out << text;
  return kOk;
}

const char* kThreeGenerated = R"(# I = (x^3, x^2 y, y^3) with its monomial minimal reduction
ring: power-series
vars: x y
I: [[3,0],[2,1],[0,3]]
J: [[3,0],[0,3]]
K: maximal
)";

const char* kEquigenerated = R"(# I = (x^4, x^3 y, x y^3, y^4): depth G = 0, fiber cone not Cohen-Macaulay
ring: power-series
vars: x y
I: [[4,0],[3,1],[1,3],[0,4]]
J: [[4,0],[0,4]]
K: maximal
)";

const char* kSemigroup = R"(# I = (t^4, t^5, t^6) in k[[t^4, t^5, t^6, t^7]]
ring: semigroup
generators: 4 5 6 7
I: [4, 5, 6]
J: [4]
K: maximal
)";

struct Check {
  std::string label;
  bool ok;
};

std::vector<Check> check_three_generated(const AnalysisReport& r) {
  const auto& co = *r.coefficients;
  bool v_zero = r.vseq && r.vseq->v.size() >= 8;
  for (std::size_t n = 2; v_zero && n <= 7; ++n) v_zero = r.vseq->v[n] == 0;
  return {{"e0 = 9", co.e[0] == 9},
          {"lambda(R/mI) = 10", r.table.HK[1] == 10},
          {"v0 = 9, v1 = 0", r.vseq && r.vseq->v[0] == 9 && r.vseq->v[1] == 0},
          {"v_n = 0 for 2 <= n <= 7", v_zero},
          {"g = (9, 0, 1)", co.g.c == std::vector<Int>{9, 0, 1}},
          {"fiber cone Cohen-Macaulay", r.find("fiber-cm")->status == Status::Pass}};
}

std::vector<Check> check_equigenerated(const AnalysisReport& r) {
  const auto& co = *r.coefficients;
  const auto* cm = r.find("fiber-cm");
  return {{"e = (16, 6, 0)", co.e.c == std::vector<Int>{16, 6, 0}},
          {"depth G = 0 (sums 5 and 7)", r.depth_g.cls == DepthClass::Low &&
                                             r.depth_g.sum_cm == 5 && r.depth_g.sum_amd == 7},
          {"f0 = 4, g1 = 2", co.f0() == 4 && co.g[1] == 2},
          {"series 1 + 2t + 2t^2 - t^3", r.series->format() == "1 + 2t + 2t^2 - t^3" &&
                                             r.series->has_negative()},
          {"fiber-cm gated, equality 2 = g1",
           cm->status == Status::PreconditionNotEstablished && cm->lhs == 2 && cm->rhs == 2}};
}

std::vector<Check> check_semigroup(const AnalysisReport& r) {
  const auto& co = *r.coefficients;
  const auto& mm = r.minimal_multiplicity;
  return {{"mI = mJ", mm.ki_equals_kj},
          {"minimal multiplicity", r.find("minimal-multiplicity")->status == Status::Pass},
          {"g1 = -1 (fit)", co.g[1] == -1},
          {"g1 = -1 (one-dimensional route)", r.g1_onedim && *r.g1_onedim == -1},
          {"fiber cone Cohen-Macaulay", r.find("fiber-cm")->status == Status::Pass}};
}

}  // namespace

int run_command(const std::string& command, const InputDocument& doc, const CommandOptions& options,
                std::ostream& out, std::ostream& err) {
  try {
    return execute(command, doc, options, out, err);
  } catch (const Error& e) {
    err << "fibrekit: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "fibrekit: internal error: " << e.what() << '\n';
    return kComputationError;
  }
}

int selftest(std::ostream& out, std::ostream& err) {
  struct Case {
    const char* name;
    const char* text;
    std::function<std::vector<Check>(const AnalysisReport&)> checks;
  };
  const Case cases[] = {{"three-generated", kThreeGenerated, check_three_generated},
                        {"equigenerated", kEquigenerated, check_equigenerated},
                        {"semigroup", kSemigroup, check_semigroup}};
  std::ostringstream buffer;
  bool all = true;
  for (const auto& c : cases) {
    try {
      AnalysisReport r = analyze(to_spec(parse_input(c.text)));
      if (r.has_violation()) {
        err << "fibrekit: theorem violation in selftest " << c.name << '\n';
        return kTheoremViolation;
      }
      for (const auto& check : c.checks(r)) {
        buffer << (check.ok ? "ok      " : "FAILED  ") << c.name << "  " << check.label << '\n';
        all = all && check.ok;
      }
    } catch (const Error& e) {
      err << "fibrekit: selftest " << c.name << ": " << e.what() << '\n';
      return e.kind() == ErrorKind::TheoremViolation ? kTheoremViolation : kComputationError;
    }
  }
  if (!all) {
    err << buffer.str();
    return kComputationError;
  }
  out << buffer.str();
  return kOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert coefficients and depth of fiber cones"};
  app.name("fibrekit");
  app.require_subcommand(1);

  CommandOptions options;
  std::string format = "text";
  app.add_option("--n-max", options.n_max, "Last index of the Hilbert table")
      ->check(CLI::Range(1, 10000));
  app.add_option("--n-check", options.n_check, "Horizon for every 'for all n' check")
      ->check(CLI::Range(1, 10000));
  app.add_option("--report", options.report_path, "Write the structured report to PATH");
  app.add_option("--format", format, "Standard output format")
      ->check(CLI::IsMember({"text", "tree"}));

  std::string file;
  std::string check_what;
  auto file_command = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "Input document or structured report")->required();
    sub->fallthrough();
    return sub;
  };
  file_command("analyze", "Full analysis");
  file_command("coeffs", "Hilbert coefficients e, g, f");
  file_command("fundamental-lemma", "Both sides of the second-difference identity (d = 2)");
  file_command("series", "Numerator of the fiber cone Hilbert series");
  file_command("reduction", "Reduction number of I with respect to J");
  auto* check = app.add_subcommand("check", "One criterion");
  check->add_option("criterion", check_what, "cm-fiber, depth-fiber, min-mult or depth-g")
      ->required()
      ->check(CLI::IsMember({"cm-fiber", "depth-fiber", "min-mult", "depth-g"}));
  check->add_option("file", file, "Input document or structured report")->required();
  check->fallthrough();
  app.add_subcommand("selftest", "Reference examples")->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? kOk : kInputError;
  }
  options.format = format == "tree" ? ReportFormat::Tree : ReportFormat::Text;

  auto* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  if (name == "selftest") return selftest(out, err);

  const std::string command = name == "check" ? "check " + check_what : name;
  InputDocument doc;
  try {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw Error(ErrorKind::InvalidInput, "cannot read " + file);
    std::stringstream text;
    text << in.rdbuf();
    const std::string s = text.str();
    const auto first = s.find_first_not_of(" \t\r\n");
    doc = first != std::string::npos && s[first] == '{' ? parse_report_input(s) : parse_input(s);
  } catch (const Error& e) {
    err << "fibrekit: " << file << ": " << e.what() << '\n';
    return kInputError;
  }
  if (app.count("--format") == 0 && doc.format) options.format = *doc.format;
  return run_command(command, doc, options, out, err);
}

}  // namespace fibrekit::cli
