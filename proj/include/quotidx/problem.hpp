#ifndef QUOTIDX_PROBLEM_HPP
#define QUOTIDX_PROBLEM_HPP

#include <optional>

#include "quotidx/group.hpp"
#include "quotidx/quantum.hpp"

namespace quotidx {

// Bad input document; `line` is 1-based, 0 when no specific line applies.
struct InputError : std::runtime_error {
  InputError(std::size_t line_no, const std::string &msg)
      : std::runtime_error(line_no ? "line " + std::to_string(line_no) + ": " + msg
                                   : msg),
        line(line_no) {}
  std::size_t line;
};

// Parsed problem document. Sections: [ring] (variables), [group] (either
// invariant_factors + generator matrices, or modulus + character vectors),
// [form] (f or per-variable components), optional [task] and [burnside].
struct ProblemDescription {
  std::vector<std::string> variables;

  std::vector<long> invariant_factors;
  std::vector<RatMatrix> generator_matrices;

  bool diagonal = false;
  long modulus = 1;
  std::vector<std::vector<long>> characters;

  std::optional<Poly> f;
  std::vector<Poly> components;

  std::string command;
  std::vector<long> burnside_coeffs;

  OneForm form() const;          // d(f) or the explicit components
  MatrixAction action() const;   // matrix route only
  DiagonalAction diagonal_action() const;
};

ProblemDescription parse_problem(const std::string &text);

// Canonical rendering; parse(format(d)) reproduces d.
std::string format_problem(const ProblemDescription &d);

}  // namespace quotidx

#endif
