#include "sdepth/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "sdepth/error.hpp"

namespace sdepth {

namespace {

struct Cursor {
  std::string_view text;
  size_t pos = 0;
  int line = 1;
  int line_start_pos = 0;

  [[noreturn]] void error(const std::string& message) const {
    fail("parse-error", "line " + std::to_string(line) + ", column " +
                            std::to_string(column()) + ": " + message);
  }
  int column() const { return static_cast<int>(pos) - line_start_pos + 1; }
  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void skip_blanks() {
    while (!done() && (peek() == ' ' || peek() == '\t')) ++pos;
  }
  bool consume(char c) {
    skip_blanks();
    if (done() || peek() != c) return false;
    ++pos;
    return true;
  }
  long long integer() {
    skip_blanks();
    if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
      error("expected a number");
    long long v = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1'000'000'000LL) error("number out of range");
      ++pos;
    }
    return v;
  }
};

int parse_var_index(Cursor& c, int ambient) {
  if (!c.consume('x')) c.error("expected a variable like x1");
  const long long idx = c.integer();
  if (idx < 1 || idx > ambient)
    c.error("variable index " + std::to_string(idx) + " outside ambient " +
            std::to_string(ambient));
  return static_cast<int>(idx);
}

Monomial parse_monomial_at(Cursor& c, int ambient) {
  c.skip_blanks();
  if (c.done()) c.error("expected a monomial");
  if (c.peek() == '1') {
    ++c.pos;
    return Monomial::unit(ambient);
  }
  Monomial m = Monomial::unit(ambient);
  while (true) {
    const int var = parse_var_index(c, ambient);
    long long exp = 1;
    if (c.consume('^')) exp = c.integer();
    const long long total = m.e[static_cast<size_t>(var) - 1] + exp;
    if (total > 1'000'000'000LL) c.error("exponent out of range");
    m.e[static_cast<size_t>(var) - 1] = static_cast<int>(total);
    if (!c.consume('*')) break;
  }
  return m;
}

std::vector<int> parse_varset_at(Cursor& c, int ambient) {
  std::vector<int> vars;
  c.skip_blanks();
  if (!c.done() && c.peek() == '0') {
    ++c.pos;
    return vars;
  }
  if (c.done() || c.peek() == ']') return vars;  // empty set
  while (true) {
    vars.push_back(parse_var_index(c, ambient));
    if (!c.consume(',')) break;
  }
  std::sort(vars.begin(), vars.end());
  if (std::adjacent_find(vars.begin(), vars.end()) != vars.end())
    c.error("repeated variable in set");
  return vars;
}

void expect_end(Cursor& c, const char* what) {
  c.skip_blanks();
  if (!c.done()) c.error(std::string("trailing characters after ") + what);
}

std::string trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Monomial parse_monomial(std::string_view text, int ambient) {
  Cursor c{text};
  Monomial m = parse_monomial_at(c, ambient);
  expect_end(c, "monomial");
  return m;
}

std::string format_monomial(const Monomial& m) {
  std::string out;
  for (int i = 1; i <= m.ambient(); ++i) {
    const int e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i);
    if (e > 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out.empty() ? "1" : out;
}

std::vector<int> parse_varset(std::string_view text, int ambient) {
  Cursor c{text};
  std::vector<int> vars = parse_varset_at(c, ambient);
  expect_end(c, "variable set");
  return vars;
}

std::string format_varset(const std::vector<int>& vars) {
  std::string out;
  for (int v : vars) {
    if (!out.empty()) out += ',';
    out += 'x';
    out += std::to_string(v);
  }
  return out;
}

MonomialPrime parse_prime(std::string_view text, int ambient) {
  return MonomialPrime(ambient, parse_varset(text, ambient));
}

std::string format_prime(const MonomialPrime& p) {
  return p.is_zero() ? "0" : format_varset(p.vars);
}

StanleySpace parse_space(std::string_view text, int ambient) {
  Cursor c{text};
  StanleySpace s;
  s.root = parse_monomial_at(c, ambient);
  c.skip_blanks();
  if (!c.consume('K') || !c.consume('['))
    c.error("expected K[...] after the space root");
  s.vars = parse_varset_at(c, ambient);
  if (!c.consume(']')) c.error("expected ']'");
  expect_end(c, "Stanley space");
  return s;
}

std::string format_space(const StanleySpace& s) {
  return format_monomial(s.root) + " K[" + format_varset(s.vars) + "]";
}

PrimeFiltration::Step parse_step(std::string_view text, int ambient) {
  Cursor c{text};
  PrimeFiltration::Step st;
  st.z = parse_monomial_at(c, ambient);
  if (!c.consume(':')) c.error("expected ':' after the step monomial");
  st.prime = MonomialPrime(ambient, parse_varset_at(c, ambient));
  expect_end(c, "filtration step");
  return st;
}

std::string format_step(const PrimeFiltration::Step& s) {
  return format_monomial(s.z) + " : " + format_prime(s.prime);
}

std::string format_generators(const MonomialIdeal& I) {
  std::string out;
  for (const Monomial& g : I.generators()) {
    if (!out.empty()) out += ", ";
    out += format_monomial(g);
  }
  return out;
}

MonomialIdeal ProblemFile::ideal() const {
  return MonomialIdeal::normalize(ambient, ideal_generators);
}

ProblemFile parse_problem(std::string_view text) {
  ProblemFile p;
  bool have_vars = false;
  enum class Section { none, decomposition, filtration } section = Section::none;
  size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    ++line_no;
    Cursor lc{raw, 0, line_no};
    std::string line = trim(raw);
    pos = eol + 1;
    if (line.empty() || line[0] == '#') {
      if (eol == text.size()) break;
      continue;
    }
    size_t colon_at = 0;
    auto header = [&](const char* key) {
      const size_t len = std::string_view(key).size();
      if (line.size() < len + 1 || line.compare(0, len, key) != 0) return false;
      size_t i = len;
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      if (i >= line.size() || line[i] != ':') return false;
      colon_at = i;
      return true;
    };
    auto value_of = [&](const char*) {
      return trim(std::string_view(line).substr(colon_at + 1));
    };
    if (header("vars")) {
      const std::string value = value_of("vars");
      Cursor vc{value, 0, line_no};
      const long long n = vc.integer();
      expect_end(vc, "ambient count");
      if (n < 1 || n > 64) lc.error("ambient must be between 1 and 64");
      p.ambient = static_cast<int>(n);
      have_vars = true;
      section = Section::none;
    } else if (header("ideal")) {
      if (!have_vars) lc.error("'vars:' must come before 'ideal:'");
      p.has_ideal = true;
      std::string v = value_of("ideal");
      Cursor ic{v, 0, line_no};
      ic.skip_blanks();
      while (!ic.done()) {
        p.ideal_generators.push_back(parse_monomial_at(ic, p.ambient));
        if (!ic.consume(',')) break;
      }
      expect_end(ic, "generator list");
      section = Section::none;
    } else if (header("u")) {
      if (!have_vars) lc.error("'vars:' must come before 'u:'");
      p.u = parse_monomial(value_of("u"), p.ambient);
      section = Section::none;
    } else if (header("decomposition")) {
      if (!have_vars) lc.error("'vars:' must come before 'decomposition:'");
      if (!trim(value_of("decomposition")).empty())
        lc.error("spaces belong on the lines after 'decomposition:'");
      p.decomposition.emplace();
      section = Section::decomposition;
    } else if (header("filtration")) {
      if (!have_vars) lc.error("'vars:' must come before 'filtration:'");
      if (!trim(value_of("filtration")).empty())
        lc.error("steps belong on the lines after 'filtration:'");
      p.filtration.emplace();
      section = Section::filtration;
    } else if (section == Section::decomposition) {
      Cursor sc{line, 0, line_no};
      StanleySpace s;
      s.root = parse_monomial_at(sc, p.ambient);
      sc.skip_blanks();
      if (!sc.consume('K') || !sc.consume('[')) sc.error("expected K[...] in space line");
      s.vars = parse_varset_at(sc, p.ambient);
      if (!sc.consume(']')) sc.error("expected ']'");
      expect_end(sc, "Stanley space");
      p.decomposition->push_back(std::move(s));
    } else if (section == Section::filtration) {
      p.filtration->push_back(parse_step(line, p.ambient));
    } else {
      lc.error("unrecognized line: " + line);
    }
    if (eol == text.size()) break;
  }
  if (!have_vars) {
    Cursor ec{text, 0, 1};
    ec.error("missing 'vars:' header");
  }
  return p;
}

std::string format_problem(const ProblemFile& p) {
  std::ostringstream out;
  out << "vars: " << p.ambient << '\n';
  if (p.has_ideal) {
    out << "ideal:";
    bool first = true;
    for (const Monomial& g : p.ideal_generators) {
      out << (first ? " " : ", ") << format_monomial(g);
      first = false;
    }
    out << '\n';
  }
  if (p.u) out << "u: " << format_monomial(*p.u) << '\n';
  if (p.decomposition) {
    out << "decomposition:\n";
    for (const StanleySpace& s : *p.decomposition) out << "  " << format_space(s) << '\n';
  }
  if (p.filtration) {
    out << "filtration:\n";
    for (const auto& st : *p.filtration) out << "  " << format_step(st) << '\n';
  }
  return out.str();
}

MonomialIdeal parse_ideal(std::string_view text) {
  ProblemFile p = parse_problem(text);
  if (!p.has_ideal) {
    Cursor c{text, 0, 1};
    c.error("missing 'ideal:' line");
  }
  return p.ideal();
}

std::string format_ideal(const MonomialIdeal& I) {
  std::string out = "vars: " + std::to_string(I.ambient()) + "\n";
  out += "ideal:";
  if (!I.is_zero()) out += " " + format_generators(I);
  out += "\n";
  return out;
}

std::string format_decomposition(const StanleyDecomposition& d) {
  std::string out;
  for (const StanleySpace& s : d.spaces) out += format_space(s) + "\n";
  return out;
}

std::string format_filtration(const PrimeFiltration& f) {
  std::string out;
  for (const auto& st : f.steps) out += format_step(st) + "\n";
  return out;
}

}  // namespace sdepth
