#ifndef QUOTIDX_RATIONAL_HPP
#define QUOTIDX_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

namespace quotidx {

using Rat = mpq_class;

inline int sgn(const Rat &x) { return sgn(x.get_num()); }

// Parses "p", "-p" or "p/q". Returns nullopt on malformed input.
std::optional<Rat> parse_rational(const std::string &s);

std::string rat_to_string(const Rat &x);

double rat_to_double(const Rat &x);

}  // namespace quotidx

#endif
