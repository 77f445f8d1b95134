#include "fibrekit/input.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include "fibrekit/ideal.hpp"

namespace fibrekit {

ParseError::ParseError(int line, int column, const std::string& message)
    : Error(ErrorKind::InvalidInput,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

struct Entry {
  std::string value;
  int line = 0;
  int column = 0;  // column of the first value character
  int key_column = 0;
};

// Scanner over one value string; columns are reported relative to the line.
class Cursor {
 public:
  Cursor(std::string_view s, int line, int column) : s_(s), line_(line), base_(column) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'" + found());
  }
  Int integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    Int v = 0;
    auto text = s_.substr(start, pos_ - start);
    if (text.starts_with('+')) text.remove_prefix(1);
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc() || p != text.data() + text.size()) {
      pos_ = start;
      fail("expected an integer" + found());
    }
    return v;
  }
  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    if (start == pos_ || std::isdigit(static_cast<unsigned char>(s_[start]))) {
      pos_ = start;
      fail("expected a variable name" + found());
    }
    return std::string(s_.substr(start, pos_ - start));
  }
  int column() const { return base_ + static_cast<int>(pos_); }
  [[noreturn]] void fail(const std::string& message) const { fail_at(column(), message); }
  [[noreturn]] void fail_at(int column, const std::string& message) const {
    throw ParseError(line_, column, message);
  }

 private:
  std::string found() const {
    if (pos_ >= s_.size()) return ", found end of line";
    return std::string(", found '") + s_[pos_] + "'";
  }
  std::string_view s_;
  int line_;
  int base_;
  std::size_t pos_ = 0;
};

bool is_term_key(const std::string& key, int& index) {
  if (key == "I") {
    index = 1;
    return true;
  }
  if (key.size() < 2 || key[0] != 'I') return false;
  if (!std::all_of(key.begin() + 1, key.end(), [](char c) { return std::isdigit(c); }))
    return false;
  index = std::stoi(key.substr(1));
  return index >= 1;
}

std::vector<std::string> words(const Entry& e) {
  std::istringstream in(e.value);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

Monomial monomial_expression(Cursor& c, const std::vector<std::string>& names, bool semigroup) {
  const std::size_t arity = semigroup ? 1 : names.size();
  Monomial m{std::vector<Int>(arity, 0)};
  if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
    int col = c.column();
    if (c.integer() != 1) c.fail_at(col, "the only constant monomial is 1");
    return m;
  }
  do {
    int col = c.column();
    std::string name = c.identifier();
    Int e = 1;
    if (c.accept('^')) e = c.integer();
    if (semigroup) {
      if (name != "t") c.fail("semigroup elements are written t^s");
      m.exponents[0] += e;
      continue;
    }
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) c.fail_at(col, "unknown variable '" + name + "'");
    m.exponents[static_cast<std::size_t>(it - names.begin())] += e;
  } while (c.accept('*'));
  return m;
}

IdealText ideal_value(const Entry& e, const std::vector<std::string>& names, bool semigroup,
                      bool allow_keywords) {
  IdealText out;
  out.line = e.line;
  out.column = e.column;
  std::string trimmed = e.value;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
    trimmed.pop_back();
  if (trimmed == "maximal" || trimmed == "unit") {
    if (!allow_keywords) throw ParseError(e.line, e.column, "'" + trimmed + "' is only allowed for K");
    out.kind = trimmed == "maximal" ? IdealText::Kind::Maximal : IdealText::Kind::Unit;
    return out;
  }

  Cursor c(e.value, e.line, e.column);
  if (c.peek() == '[') {
    c.expect('[');
    if (!c.accept(']')) {
      do {
        Monomial m;
        if (semigroup) {
          m.exponents.push_back(c.integer());
        } else {
          const int start = c.column();
          c.expect('[');
          do m.exponents.push_back(c.integer());
          while (c.accept(','));
          c.expect(']');
          if (m.exponents.size() != names.size())
            c.fail_at(start, "exponent vector has " + std::to_string(m.exponents.size()) +
                   " entries, ring has " + std::to_string(names.size()) + " variables");
        }
        out.generators.push_back(std::move(m));
      } while (c.accept(','));
      c.expect(']');
    }
  } else {
    do out.generators.push_back(monomial_expression(c, names, semigroup));
    while (c.accept(','));
  }
  if (!c.done()) c.fail("unexpected trailing text");
  if (out.generators.empty()) throw ParseError(e.line, e.column, "empty generator list");
  return out;
}

int small_int(const Entry& e, int min) {
  Cursor c(e.value, e.line, e.column);
  Int v = c.integer();
  if (!c.done()) c.fail("unexpected trailing text");
  if (v < min || v > 10000)
    throw ParseError(e.line, e.column, "value out of range [" + std::to_string(min) + ", 10000]");
  return static_cast<int>(v);
}

}  // namespace

InputDocument parse_input(std::string_view text) {
  std::map<std::string, Entry> entries;
  std::map<int, std::string> term_keys;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t k0 = 0;
    while (k0 < line.size() && std::isspace(static_cast<unsigned char>(line[k0]))) ++k0;
    if (k0 == line.size()) continue;

    std::size_t colon_pos = line.find(':');
    if (colon_pos == std::string_view::npos)
      throw ParseError(line_no, static_cast<int>(k0) + 1, "expected 'key: value'");
    std::size_t k1 = colon_pos;
    while (k1 > k0 && std::isspace(static_cast<unsigned char>(line[k1 - 1]))) --k1;
    std::string key(line.substr(k0, k1 - k0));
    if (key.empty()) throw ParseError(line_no, static_cast<int>(k0) + 1, "missing key");

    static const char* known[] = {"ring", "vars", "dim", "generators", "J", "K",
                                  "n_max", "n_check", "format"};
    int index = 0;
    bool term = is_term_key(key, index);
    if (!term && std::find(std::begin(known), std::end(known), key) == std::end(known))
      throw ParseError(line_no, static_cast<int>(k0) + 1, "unknown key '" + key + "'");
    if (term) {
      if (term_keys.count(index))
        throw ParseError(line_no, static_cast<int>(k0) + 1,
                         "I_" + std::to_string(index) + " given twice");
      term_keys[index] = key;
    }
    if (entries.count(key))
      throw ParseError(line_no, static_cast<int>(k0) + 1, "duplicate key '" + key + "'");

    std::size_t v0 = colon_pos + 1;
    while (v0 < line.size() && std::isspace(static_cast<unsigned char>(line[v0]))) ++v0;
    if (v0 == line.size())
      throw ParseError(line_no, static_cast<int>(v0) + 1, "missing value for '" + key + "'");
    entries[key] = Entry{std::string(line.substr(v0)), line_no, static_cast<int>(v0) + 1,
                         static_cast<int>(k0) + 1};
    if (end == text.size()) break;
  }

  InputDocument doc;
  auto find = [&](const std::string& k) -> const Entry* {
    auto it = entries.find(k);
    return it == entries.end() ? nullptr : &it->second;
  };

  const Entry* ring = find("ring");
  if (!ring) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing 'ring:' line");
  auto ring_words = words(*ring);
  if (ring_words.size() != 1 || (ring_words[0] != "power-series" && ring_words[0] != "semigroup"))
    throw ParseError(ring->line, ring->column, "ring must be 'power-series' or 'semigroup'");
  const bool semigroup = ring_words[0] == "semigroup";
  doc.ring = semigroup ? RingKind::NumericalSemigroup : RingKind::PowerSeriesMonomial;

  if (semigroup) {
    for (const char* k : {"vars", "dim"})
      if (const Entry* e = find(k))
        throw ParseError(e->line, e->key_column, std::string("'") + k + "' is not used by semigroup rings");
    const Entry* g = find("generators");
    if (!g) throw ParseError(ring->line, ring->column, "semigroup ring needs a 'generators:' line");
    doc.ring_line = g->line;
    doc.ring_column = g->column;
    Cursor c(g->value, g->line, g->column);
    bool bracket = c.accept('[');
    do {
      int col = c.column();
      Int v = c.integer();
      if (v <= 0) throw ParseError(g->line, col, "semigroup generators must be positive");
      doc.semigroup_generators.push_back(v);
    } while (c.accept(',') || (!bracket && !c.done()));
    if (bracket) c.expect(']');
    if (!c.done()) c.fail("unexpected trailing text");
  } else {
    if (const Entry* e = find("generators"))
      throw ParseError(e->line, e->key_column, "'generators' is only used by semigroup rings");
    const Entry* vars = find("vars");
    const Entry* dim = find("dim");
    if (vars && dim) throw ParseError(dim->line, dim->key_column, "give either 'vars' or 'dim', not both");
    const Entry* where = vars ? vars : dim ? dim : ring;
    doc.ring_line = where->line;
    doc.ring_column = where->column;
    if (vars) {
      doc.variables = words(*vars);
      for (const auto& v : doc.variables) {
        Cursor c(v, vars->line, vars->column);
        c.identifier();
        if (!c.done()) throw ParseError(vars->line, vars->column, "bad variable name '" + v + "'");
      }
      auto sorted = doc.variables;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ParseError(vars->line, vars->column, "duplicate variable name");
    } else if (dim) {
      doc.variables = Ring::power_series(small_int(*dim, 1)).variables();
    } else {
      throw ParseError(ring->line, ring->column, "power-series ring needs 'vars:' or 'dim:'");
    }
  }

  if (term_keys.empty()) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing 'I:' line");
  int expected = 1;
  for (const auto& [index, key] : term_keys) {
    const Entry& e = entries.at(key);
    if (index != expected)
      throw ParseError(e.line, e.key_column,
                       "I" + std::to_string(index) + " given without I" + std::to_string(expected));
    doc.terms.push_back(ideal_value(e, doc.variables, semigroup, false));
    ++expected;
  }
  if (const Entry* e = find("J")) doc.J = ideal_value(*e, doc.variables, semigroup, false);
  if (const Entry* e = find("K")) doc.K = ideal_value(*e, doc.variables, semigroup, true);
  if (const Entry* e = find("n_max")) doc.n_max = small_int(*e, 1);
  if (const Entry* e = find("n_check")) doc.n_check = small_int(*e, 1);
  if (const Entry* e = find("format")) {
    auto w = words(*e);
    if (w.size() != 1 || (w[0] != "text" && w[0] != "tree"))
      throw ParseError(e->line, e->column, "format must be 'text' or 'tree'");
    doc.format = w[0] == "text" ? ReportFormat::Text : ReportFormat::Tree;
  }
  return doc;
}

namespace {

Ideal build_ideal(const IdealText& t, const Ring& ring) {
  switch (t.kind) {
    case IdealText::Kind::Maximal: return Ideal::maximal(ring);
    case IdealText::Kind::Unit: return Ideal::unit(ring);
    case IdealText::Kind::Generators: break;
  }
  try {
    return minimalize(t.generators, ring);
  } catch (const Error& e) {
    throw ParseError(t.line, t.column, e.what());
  }
}

}  // namespace

FiltrationSpec to_spec(const InputDocument& doc) {
  Ring ring = Ring::power_series(1);
  try {
    ring = doc.ring == RingKind::NumericalSemigroup ? Ring::numerical_semigroup(doc.semigroup_generators)
                                                    : Ring::power_series(doc.variables);
  } catch (const Error& e) {
    throw ParseError(doc.ring_line, doc.ring_column, e.what());
  }

  FiltrationSpec spec{ring, doc.terms.size() > 1 ? FiltrationMode::TruncatedGood : FiltrationMode::IAdic,
                      {}, build_ideal(doc.K, ring), std::nullopt, doc.n_max};
  for (const auto& t : doc.terms) spec.terms.push_back(build_ideal(t, ring));
  const IdealText& i1 = doc.terms.front();
  if (spec.I1().is_unit()) throw ParseError(i1.line, i1.column, "I must be a proper ideal");
  if (!colength(spec.I1())) throw ParseError(i1.line, i1.column, "I must be m-primary");
  if (!contains(spec.K, spec.I1()))
    throw ParseError(doc.K.line ? doc.K.line : i1.line, doc.K.line ? doc.K.column : i1.column,
                     "K must contain I");
  if (doc.J) {
    spec.J = build_ideal(*doc.J, ring);
    if (!contains(spec.I1(), *spec.J))
      throw ParseError(doc.J->line, doc.J->column, "J is not contained in I");
  }
  return spec;
}

namespace {

std::string ideal_text(const IdealText& t, bool semigroup) {
  if (t.kind == IdealText::Kind::Maximal) return "maximal";
  if (t.kind == IdealText::Kind::Unit) return "unit";
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < t.generators.size(); ++i) {
    if (i) out << ", ";
    const auto& e = t.generators[i].exponents;
    if (semigroup) {
      out << e[0];
      continue;
    }
    out << '[';
    for (std::size_t j = 0; j < e.size(); ++j) out << (j ? "," : "") << e[j];
    out << ']';
  }
  out << ']';
  return out.str();
}

}  // namespace

std::string to_text(const InputDocument& doc) {
  const bool semigroup = doc.ring == RingKind::NumericalSemigroup;
  std::ostringstream out;
  out << "ring: " << (semigroup ? "semigroup" : "power-series") << '\n';
  if (semigroup) {
    out << "generators:";
    for (Int g : doc.semigroup_generators) out << ' ' << g;
    out << '\n';
  } else {
    out << "vars:";
    for (const auto& v : doc.variables) out << ' ' << v;
    out << '\n';
  }
  for (std::size_t i = 0; i < doc.terms.size(); ++i)
    out << (i == 0 ? std::string("I") : "I" + std::to_string(i + 1)) << ": "
        << ideal_text(doc.terms[i], semigroup) << '\n';
  if (doc.J) out << "J: " << ideal_text(*doc.J, semigroup) << '\n';
  out << "K: " << ideal_text(doc.K, semigroup) << '\n';
  if (doc.n_max) out << "n_max: " << *doc.n_max << '\n';
  if (doc.n_check) out << "n_check: " << *doc.n_check << '\n';
  return out.str();
}

}  // namespace fibrekit
