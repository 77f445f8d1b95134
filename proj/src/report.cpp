#include "fibrekit/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace fibrekit {

using Json = nlohmann::ordered_json;

std::string tuple_text(const std::vector<Int>& values) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? ", " : "") << values[i];
  out << ')';
  return out.str();
}

std::string criterion_line(const CriterionResult& c) {
  std::ostringstream line;
  line << std::left << std::setw(29) << to_string(c.status) << std::setw(31) << c.name << c.relation
       << "  [lhs " << c.lhs << ", rhs " << c.rhs;
  if (c.witness_n) line << ", n = " << *c.witness_n;
  line << ", checked to n = " << c.bound << ']';
  if (c.violation) line << "  THEOREM VIOLATION";
  if (!c.note.empty()) line << "  " << c.note;
  return line.str();
}

std::string table_text(const HilbertTable& table) {
  std::ostringstream out;
  out << std::right << std::setw(4) << "n" << std::setw(10) << "H" << std::setw(10) << "H_K"
      << std::setw(10) << "H_F" << '\n';
  for (int n = 0; n <= table.n_max; ++n)
    out << std::setw(4) << n << std::setw(10) << table.H[n] << std::setw(10) << table.HK[n]
        << std::setw(10) << table.HF[n] << '\n';
  return out.str();
}

std::string series_text(const SeriesNumerator& s, bool k_is_maximal) {
  std::string ring = k_is_maximal ? "F(I)" : "F_K(I)";
  std::string out = s.format() + " over (1-t)^" + std::to_string(s.dim);
  if (s.has_negative())
    out += "; NEGATIVE COEFFICIENT: " + ring + " not Cohen-Macaulay";
  else
    out += "; all coefficients nonnegative";
  return out;
}

std::string render_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "ring        " << r.ring << " (d = " << r.dim << ")\n";
  out << "filtration  " << r.mode;
  for (std::size_t i = 0; i < r.terms.size(); ++i)
    out << ", I_" << i + 1 << " = " << r.terms[i];
  out << "\n";
  out << "K           " << r.K << ", lambda(R/K) = " << r.colength_K << "\n";
  out << "I           mu = " << r.mu_I << ", lambda(R/I) = " << r.colength_I << "\n";
  out << "J           " << r.J << ", lambda(R/J) = " << r.colength_J;
  if (r.reduction) out << ", r_J = " << r.reduction->r;
  out << "\n";
  out << "n_max " << r.n_max << ", n_check " << r.n_check << "\n\n";
  out << table_text(r.table) << '\n';

  if (r.coefficients) {
    const auto& co = *r.coefficients;
    out << "e = " << tuple_text(co.e.c) << "  (from n = " << co.e.postulation << ")\n";
    out << "g = " << tuple_text(co.g.c) << "  (from n = " << co.g.postulation << ")\n";
    out << "f = " << tuple_text(co.f.c) << "  (from n = " << co.f.postulation << ")\n";
  }
  if (r.vseq) out << "v = " << tuple_text(r.vseq->v) << ", g2 = " << r.vseq->g2 << '\n';
  if (r.g1_onedim) out << "g1 (one-dimensional route) = " << *r.g1_onedim << '\n';
  if (r.series) out << "fiber series: " << series_text(*r.series, r.k_is_maximal) << '\n';
  if (r.coefficients) {
    out << "depth G: " << to_string(r.depth_g.cls) << "  (e1 = " << r.depth_g.e1
        << ", sum lambda((I_n+J)/J) = " << r.depth_g.sum_cm
        << ", sum lambda(I_n/JI_{n-1}) = " << r.depth_g.sum_amd << ")\n";
    const auto& mm = r.minimal_multiplicity;
    out << "minimal multiplicity: KI = KJ " << (mm.ki_equals_kj ? "yes" : "no")
        << ", g1 = -lambda(R/K) " << (mm.g1_is_minus_colength_k ? "yes" : "no");
    if (r.k_is_maximal) out << ", mu(I) = e0 + d - lambda(R/I) " << (mm.goto_equality ? "yes" : "no");
    out << '\n';
    if (r.goto_equivalence)
      out << "goto: G CM " << (r.goto_equivalence->g_cohen_macaulay ? "yes" : "no") << ", F CM "
          << (r.goto_equivalence->f_cohen_macaulay ? "yes" : "no") << ", r <= 1 "
          << (r.goto_equivalence->r_at_most_one ? "yes" : "no") << '\n';
  }
  if (!r.criteria.empty()) {
    out << "\ncriteria\n";
    for (const auto& c : r.criteria) out << "  " << criterion_line(c) << '\n';
  }
  return out.str();
}

namespace {

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

Json coefficient_json(const CoefficientSet& c) {
  return Json{{"values", c.c}, {"postulation", c.postulation}, {"window", c.window}};
}

Json sequence_json(const SequenceCheck& s) {
  return Json{{"passes", s.passes}, {"failing_n", optional_int(s.failing_n)}, {"bound", s.bound}};
}

}  // namespace

std::string render_tree(const AnalysisReport& r, const InputDocument& doc) {
  Json j;
  j["schema"] = "fibrekit-report/1";
  j["input"] = to_text(doc);
  j["ring"] = r.ring;
  j["dim"] = r.dim;
  j["mode"] = r.mode;
  j["terms"] = r.terms;
  j["J"] = r.J;
  j["K"] = r.K;
  j["k_is_maximal"] = r.k_is_maximal;
  j["colength"] = Json{{"K", r.colength_K}, {"I", r.colength_I}, {"J", r.colength_J}};
  j["mu_I"] = r.mu_I;
  if (r.reduction)
    j["reduction"] = Json{{"r", r.reduction->r},
                          {"minimal", r.reduction->is_minimal},
                          {"bound", r.reduction->bound}};
  else
    j["reduction"] = nullptr;
  j["n_max"] = r.n_max;
  j["n_check"] = r.n_check;
  j["table"] = Json{{"H", r.table.H}, {"HK", r.table.HK}, {"HF", r.table.HF}};
  if (r.coefficients)
    j["coefficients"] = Json{{"e", coefficient_json(r.coefficients->e)},
                             {"g", coefficient_json(r.coefficients->g)},
                             {"f", coefficient_json(r.coefficients->f)}};
  else
    j["coefficients"] = nullptr;
  if (r.vseq)
    j["v_sequence"] = Json{{"v", r.vseq->v}, {"g1", r.vseq->g1}, {"g2", r.vseq->g2}};
  else
    j["v_sequence"] = nullptr;
  Json lemma = Json::array();
  for (const auto& row : r.lemma) lemma.push_back(Json{{"n", row.n}, {"lhs", row.lhs}, {"rhs", row.rhs}});
  j["fundamental_lemma"] = lemma;
  j["g1_onedim"] = r.g1_onedim ? Json(*r.g1_onedim) : Json(nullptr);
  if (r.series)
    j["series"] = Json{{"numerator", r.series->h},
                       {"dim", r.series->dim},
                       {"text", series_text(*r.series, r.k_is_maximal)}};
  else
    j["series"] = nullptr;
  if (r.coefficients) {
    j["depth_g"] = Json{{"class", to_string(r.depth_g.cls)},
                        {"e1", r.depth_g.e1},
                        {"sum_cm", r.depth_g.sum_cm},
                        {"sum_amd", r.depth_g.sum_amd},
                        {"bound", r.depth_g.bound}};
    j["valabrega_valla"] = sequence_json(r.valabrega_valla);
    j["fiber_sequence"] = r.fiber_sequence ? sequence_json(*r.fiber_sequence) : Json(nullptr);
    const auto& mm = r.minimal_multiplicity;
    j["minimal_multiplicity"] = Json{{"ki_equals_kj", mm.ki_equals_kj},
                                     {"g1_is_minus_colength_k", mm.g1_is_minus_colength_k},
                                     {"goto_equality", mm.goto_equality},
                                     {"g1_is_minus_one", mm.g1_is_minus_one}};
  } else {
    j["depth_g"] = nullptr;
    j["valabrega_valla"] = nullptr;
    j["fiber_sequence"] = nullptr;
    j["minimal_multiplicity"] = nullptr;
  }
  if (r.goto_equivalence)
    j["goto_equivalence"] = Json{{"g_cohen_macaulay", r.goto_equivalence->g_cohen_macaulay},
                                 {"f_cohen_macaulay", r.goto_equivalence->f_cohen_macaulay},
                                 {"r_at_most_one", r.goto_equivalence->r_at_most_one}};
  else
    j["goto_equivalence"] = nullptr;
  Json criteria = Json::array();
  for (const auto& c : r.criteria)
    criteria.push_back(Json{{"name", c.name},
                            {"status", to_string(c.status)},
                            {"relation", c.relation},
                            {"lhs", c.lhs},
                            {"rhs", c.rhs},
                            {"witness_n", optional_int(c.witness_n)},
                            {"bound", c.bound},
                            {"violation", c.violation},
                            {"note", c.note}});
  j["criteria"] = criteria;
  return j.dump(2) + "\n";
}

InputDocument parse_report_input(std::string_view json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, std::string("report is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("input") || !j["input"].is_string())
    throw Error(ErrorKind::InvalidInput, "report has no string member \"input\"");
  return parse_input(j["input"].get<std::string>());
}

}  // namespace fibrekit
