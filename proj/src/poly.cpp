#include "quotidx/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace quotidx {

int total_degree(const Monomial &m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

bool divides(const Monomial &a, const Monomial &b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial mono_mul(const Monomial &a, const Monomial &b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Monomial mono_div(const Monomial &a, const Monomial &b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Monomial mono_lcm(const Monomial &a, const Monomial &b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Poly Poly::constant(std::size_t nvars, const Rat &c) {
  Poly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t i) {
  Poly p(nvars);
  Monomial m(nvars, 0);
  m[i] = 1;
  p.add_term(m, Rat(1));
  return p;
}

Poly Poly::term(const Monomial &m, const Rat &c) {
  Poly p(m.size());
  p.add_term(m, c);
  return p;
}

void Poly::add_term(const Monomial &m, const Rat &c) {
  if (c == 0) return;
  if (m.size() != nvars_) throw std::invalid_argument("monomial arity mismatch");
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat Poly::coeff(const Monomial &m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

Poly Poly::operator+(const Poly &other) const {
  Poly r = *this;
  for (const auto &[m, c] : other.terms_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly &other) const {
  Poly r = *this;
  for (const auto &[m, c] : other.terms_) r.add_term(m, -c);
  return r;
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (const auto &[m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly Poly::operator*(const Poly &other) const {
  Poly r(nvars_);
  for (const auto &[m1, c1] : terms_)
    for (const auto &[m2, c2] : other.terms_) r.add_term(mono_mul(m1, m2), c1 * c2);
  return r;
}

Poly Poly::operator*(const Rat &c) const {
  Poly r(nvars_);
  if (c == 0) return r;
  for (const auto &[m, cc] : terms_) r.terms_.emplace(m, cc * c);
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly r = Poly::constant(nvars_, Rat(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

Poly Poly::derivative(std::size_t var) const {
  Poly r(nvars_);
  for (const auto &[m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    d[var] -= 1;
    r.add_term(d, c * Rat(m[var]));
  }
  return r;
}

int Poly::degree() const {
  int d = -1;
  for (const auto &[m, c] : terms_) d = std::max(d, total_degree(m));
  return d;
}

Poly Poly::truncate_degree(int bound) const {
  Poly r(nvars_);
  for (const auto &[m, c] : terms_)
    if (total_degree(m) < bound) r.terms_.emplace(m, c);
  return r;
}

Cplx Poly::eval(const std::vector<Cplx> &point) const {
  if (point.size() != nvars_) throw std::invalid_argument("evaluation arity mismatch");
  Cplx v(0, 0);
  for (const auto &[m, c] : terms_) {
    Cplx t(rat_to_double(c), 0);
    for (std::size_t i = 0; i < nvars_; ++i)
      for (int k = 0; k < m[i]; ++k) t *= point[i];
    v += t;
  }
  return v;
}

Rat Poly::eval_rat(const RatVec &point) const {
  if (point.size() != nvars_) throw std::invalid_argument("evaluation arity mismatch");
  Rat v(0);
  for (const auto &[m, c] : terms_) {
    Rat t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (int k = 0; k < m[i]; ++k) t *= point[i];
    v += t;
  }
  return v;
}

Poly Poly::substitute_linear(const RatMatrix &g) const {
  std::vector<Poly> images;
  for (std::size_t i = 0; i < nvars_; ++i) {
    Poly li(nvars_);
    for (std::size_t j = 0; j < nvars_; ++j) {
      Monomial m(nvars_, 0);
      m[j] = 1;
      li.add_term(m, g.at(i, j));
    }
    images.push_back(li);
  }
  return substitute(images, nvars_);
}

Poly Poly::substitute(const std::vector<Poly> &values, std::size_t out_nvars) const {
  if (values.size() != nvars_) throw std::invalid_argument("substitution arity mismatch");
  Poly r(out_nvars);
  for (const auto &[m, c] : terms_) {
    Poly t = Poly::constant(out_nvars, c);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (m[i] > 0) t = t * values[i].pow(static_cast<unsigned>(m[i]));
    r = r + t;
  }
  return r;
}

std::string Poly::to_string(const std::vector<std::string> &var_names) const {
  if (terms_.empty()) return "0";
  // Display in descending graded-lex order for readability.
  std::vector<std::pair<Monomial, Rat>> items(terms_.begin(), terms_.end());
  std::sort(items.begin(), items.end(), [](const auto &a, const auto &b) {
    int da = total_degree(a.first), db = total_degree(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto &[m, c] : items) {
    Rat a = c;
    if (first) {
      if (a < 0) { out << "-"; a = -a; }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool has_vars = total_degree(m) > 0;
    bool printed = false;
    if (a != 1 || !has_vars) {
      out << rat_to_string(a);
      printed = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (printed) out << "*";
      out << var_names[i];
      if (m[i] > 1) out << "^" << m[i];
      printed = true;
    }
  }
  return out.str();
}

OneForm differential(const Poly &f) {
  OneForm w;
  for (std::size_t i = 0; i < f.nvars(); ++i) w.components.push_back(f.derivative(i));
  return w;
}

Poly jacobian_det(const OneForm &omega) {
  std::size_t n = omega.nvars();
  std::vector<std::vector<Poly>> jac(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) jac[i][j] = omega.components[i].derivative(j);
  // Cofactor expansion; n stays small.
  std::vector<std::size_t> cols(n);
  for (std::size_t j = 0; j < n; ++j) cols[j] = j;
  struct Rec {
    const std::vector<std::vector<Poly>> &jac;
    std::size_t n;
    Poly run(std::size_t row, std::vector<std::size_t> cols) {
      if (cols.empty()) return Poly::constant(jac.empty() ? 0 : jac[0][0].nvars(), Rat(1));
      Poly acc(jac[0][0].nvars());
      for (std::size_t k = 0; k < cols.size(); ++k) {
        const Poly &e = jac[row][cols[k]];
        if (e.is_zero()) continue;
        std::vector<std::size_t> rest;
        for (std::size_t j = 0; j < cols.size(); ++j)
          if (j != k) rest.push_back(cols[j]);
        Poly minor = run(row + 1, rest);
        Poly contrib = e * minor;
        if (k % 2 == 1) contrib = -contrib;
        acc = acc + contrib;
      }
      return acc;
    }
  } rec{jac, n};
  if (n == 0) return Poly::constant(0, Rat(1));
  return rec.run(0, cols);
}

Poly act_linear(const Poly &p, const RatMatrix &g) {
  RatMatrix ginv = inverse(g);  // throws on singular g
  return p.substitute_linear(ginv);
}

namespace {

struct Parser {
  const std::string &text;
  const std::vector<std::string> &vars;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string &msg) {
    throw std::invalid_argument("polynomial syntax error at position " +
                                std::to_string(pos) + ": " + msg);
  }

  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  bool accept(char c) {
    if (peek(c)) { ++pos; return true; }
    return false;
  }

  Rat parse_number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected number");
    std::string num = text.substr(start, pos - start);
    if (accept('/')) {
      skip_ws();
      std::size_t dstart = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == dstart) fail("expected denominator");
      num += "/" + text.substr(dstart, pos - dstart);
    }
    auto r = parse_rational(num);
    if (!r) fail("bad rational '" + num + "'");
    return *r;
  }

  int parse_exponent() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected exponent");
    return std::stoi(text.substr(start, pos - start));
  }

  // Factor: number | variable [^ exponent]
  Poly parse_factor() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Poly::constant(vars.size(), parse_number());
    }
    // Longest-match variable name.
    std::size_t best = vars.size();
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (vars[i].size() > best_len && text.compare(pos, vars[i].size(), vars[i]) == 0) {
        best = i;
        best_len = vars[i].size();
      }
    }
    if (best == vars.size()) fail(std::string("unknown symbol '") + c + "'");
    pos += best_len;
    int e = 1;
    if (accept('^')) e = parse_exponent();
    if (e < 0) fail("negative exponent");
    Monomial m(vars.size(), 0);
    m[best] = e;
    return Poly::term(m, Rat(1));
  }

  Poly parse_term() {
    Poly t = parse_factor();
    while (accept('*')) t = t * parse_factor();
    return t;
  }

  Poly parse_sum() {
    Poly total(vars.size());
    bool neg = false;
    skip_ws();
    if (accept('-')) neg = true;
    else accept('+');
    while (true) {
      Poly t = parse_term();
      total = neg ? total - t : total + t;
      skip_ws();
      if (accept('-')) neg = true;
      else if (accept('+')) neg = false;
      else break;
    }
    skip_ws();
    if (pos != text.size()) fail("trailing input");
    return total;
  }
};

}  // namespace

Poly parse_poly(const std::string &text, const std::vector<std::string> &var_names) {
  Parser p{text, var_names};
  return p.parse_sum();
}

}  // namespace quotidx
