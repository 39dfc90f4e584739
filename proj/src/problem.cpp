#include "quotidx/problem.hpp"

#include <algorithm>
#include <sstream>

namespace quotidx {

namespace {

std::string trim(const std::string &s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string &s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

long parse_long(const std::string &s, std::size_t line) {
  try {
    std::size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception &) {
    throw InputError(line, "expected an integer, got '" + s + "'");
  }
}

std::vector<long> parse_long_list(const std::string &s, std::size_t line) {
  std::vector<long> out;
  for (const std::string &item : split(s, ','))
    out.push_back(parse_long(item, line));
  return out;
}

// Matrix literal [[a, b], [c, d]] with rational entries.
RatMatrix parse_matrix(const std::string &s, std::size_t line) {
  std::string t = trim(s);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw InputError(line, "matrix must be bracketed, like [[1, 0], [0, 1]]");
  std::vector<RatVec> rows;
  std::size_t i = 1;
  while (i < t.size() - 1) {
    while (i < t.size() - 1 && (t[i] == ' ' || t[i] == ',' || t[i] == '\t')) ++i;
    if (i >= t.size() - 1) break;
    if (t[i] != '[') throw InputError(line, "expected '[' starting a matrix row");
    std::size_t close = t.find(']', i);
    if (close == std::string::npos) throw InputError(line, "unterminated matrix row");
    RatVec row;
    for (const std::string &item : split(t.substr(i + 1, close - i - 1), ',')) {
      std::optional<Rat> v = parse_rational(item);
      if (!v) throw InputError(line, "bad matrix entry '" + item + "'");
      row.push_back(*v);
    }
    rows.push_back(std::move(row));
    i = close + 1;
  }
  if (rows.empty()) throw InputError(line, "empty matrix");
  for (const RatVec &r : rows)
    if (r.size() != rows[0].size()) throw InputError(line, "ragged matrix rows");
  return RatMatrix::from_rows(rows);
}

}  // namespace

OneForm ProblemDescription::form() const {
  if (f) return differential(*f);
  return OneForm{components};
}

MatrixAction ProblemDescription::action() const {
  if (diagonal)
    throw InputError(0, "this command needs a matrix group, not a diagonal one");
  if (generator_matrices.empty())
    throw InputError(0, "the group section has no generator matrices");
  return MatrixAction(AbelianGroup(invariant_factors), generator_matrices);
}

DiagonalAction ProblemDescription::diagonal_action() const {
  if (!diagonal) throw InputError(0, "the group section is not in diagonal form");
  return DiagonalAction{modulus, variables.size(), characters};
}

ProblemDescription parse_problem(const std::string &text) {
  ProblemDescription d;
  std::istringstream in(text);
  std::string raw;
  std::string section;
  std::size_t line_no = 0;
  std::vector<std::pair<std::string, std::size_t>> form_lines;  // defer until ring known

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[' && line.back() == ']') {
      section = trim(line.substr(1, line.size() - 2));
      if (section != "ring" && section != "group" && section != "form" &&
          section != "task" && section != "burnside")
        throw InputError(line_no, "unknown section [" + section + "]");
      continue;
    }
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw InputError(line_no, "expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (section.empty())
      throw InputError(line_no, "'" + key + "' appears before any section header");

    if (section == "ring") {
      if (key == "variables") {
        d.variables = split(value, ',');
        for (const std::string &v : d.variables)
          if (v.empty()) throw InputError(line_no, "empty variable name");
      } else {
        throw InputError(line_no, "unknown ring key '" + key + "'");
      }
    } else if (section == "group") {
      if (key == "invariant_factors") {
        d.invariant_factors = parse_long_list(value, line_no);
      } else if (key == "generator") {
        d.generator_matrices.push_back(parse_matrix(value, line_no));
      } else if (key == "modulus") {
        d.diagonal = true;
        d.modulus = parse_long(value, line_no);
        if (d.modulus <= 0) throw InputError(line_no, "modulus must be positive");
      } else if (key == "character") {
        d.diagonal = true;
        d.characters.push_back(parse_long_list(value, line_no));
      } else {
        throw InputError(line_no, "unknown group key '" + key + "'");
      }
    } else if (section == "form") {
      if (key == "f" || key == "component") {
        form_lines.emplace_back(key + "=" + value, line_no);
      } else {
        throw InputError(line_no, "unknown form key '" + key + "'");
      }
    } else if (section == "task") {
      if (key == "command") {
        d.command = value;
      } else {
        throw InputError(line_no, "unknown task key '" + key + "'");
      }
    } else {  // burnside
      if (key == "element") {
        d.burnside_coeffs = parse_long_list(value, line_no);
      } else {
        throw InputError(line_no, "unknown burnside key '" + key + "'");
      }
    }
  }

  if (d.variables.empty())
    throw InputError(0, "missing [ring] section with a variables list");
  {
    auto sorted = d.variables;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InputError(0, "duplicate variable name");
  }
  std::size_t n = d.variables.size();

  for (const auto &[entry, ln] : form_lines) {
    std::size_t eq = entry.find('=');
    std::string key = entry.substr(0, eq);
    std::string value = entry.substr(eq + 1);
    Poly p;
    try {
      p = parse_poly(value, d.variables);
    } catch (const std::exception &e) {
      throw InputError(ln, std::string("bad polynomial: ") + e.what());
    }
    if (key == "f") {
      if (d.f) throw InputError(ln, "duplicate f");
      d.f = p;
    } else {
      d.components.push_back(p);
    }
  }
  if (d.f && !d.components.empty())
    throw InputError(0, "give either f or component lines, not both");
  if (!d.components.empty() && d.components.size() != n)
    throw InputError(0, "expected one component per variable");

  if (d.diagonal) {
    if (!d.invariant_factors.empty() || !d.generator_matrices.empty())
      throw InputError(0, "mix of matrix and diagonal group descriptions");
    if (d.characters.empty())
      throw InputError(0, "diagonal group needs at least one character line");
    for (const auto &c : d.characters)
      if (c.size() != n)
        throw InputError(0, "character vector length must match the variable count");
  } else {
    if (d.invariant_factors.empty()) {
      // No group section: the trivial group acting on R^n.
      d.invariant_factors = {1};
      d.generator_matrices = {RatMatrix::identity(n)};
    }
    if (d.generator_matrices.empty() &&
        d.invariant_factors == std::vector<long>{1})
      d.generator_matrices = {RatMatrix::identity(n)};
    // Generator matrices may be absent for Burnside-only documents.
    if (!d.generator_matrices.empty()) {
      if (d.generator_matrices.size() != d.invariant_factors.size())
        throw InputError(0, "need one generator matrix per invariant factor");
      for (const RatMatrix &g : d.generator_matrices)
        if (g.rows() != n || g.cols() != n)
          throw InputError(0, "generator matrices must be square of the variable count");
      try {
        MatrixAction check(AbelianGroup(d.invariant_factors), d.generator_matrices);
      } catch (const std::exception &e) {
        throw InputError(0, std::string("bad group action: ") + e.what());
      }
    }
  }
  return d;
}

std::string format_problem(const ProblemDescription &d) {
  std::ostringstream out;
  out << "[ring]\nvariables = ";
  for (std::size_t i = 0; i < d.variables.size(); ++i)
    out << (i ? ", " : "") << d.variables[i];
  out << "\n\n[group]\n";
  if (d.diagonal) {
    out << "modulus = " << d.modulus << "\n";
    for (const auto &c : d.characters) {
      out << "character = ";
      for (std::size_t i = 0; i < c.size(); ++i) out << (i ? ", " : "") << c[i];
      out << "\n";
    }
  } else {
    out << "invariant_factors = ";
    for (std::size_t i = 0; i < d.invariant_factors.size(); ++i)
      out << (i ? ", " : "") << d.invariant_factors[i];
    out << "\n";
    for (const RatMatrix &g : d.generator_matrices) {
      out << "generator = [";
      for (std::size_t i = 0; i < g.rows(); ++i) {
        out << (i ? ", [" : "[");
        for (std::size_t j = 0; j < g.cols(); ++j)
          out << (j ? ", " : "") << rat_to_string(g.at(i, j));
        out << "]";
      }
      out << "]\n";
    }
  }
  out << "\n[form]\n";
  if (d.f) {
    out << "f = " << d.f->to_string(d.variables) << "\n";
  } else {
    for (const Poly &c : d.components)
      out << "component = " << c.to_string(d.variables) << "\n";
  }
  if (!d.command.empty()) out << "\n[task]\ncommand = " << d.command << "\n";
  if (!d.burnside_coeffs.empty()) {
    out << "\n[burnside]\nelement = ";
    for (std::size_t i = 0; i < d.burnside_coeffs.size(); ++i)
      out << (i ? ", " : "") << d.burnside_coeffs[i];
    out << "\n";
  }
  return out.str();
}

}  // namespace quotidx
