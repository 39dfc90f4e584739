#include "quotidx/rational.hpp"

namespace quotidx {

std::optional<Rat> parse_rational(const std::string &s) {
  if (s.empty()) return std::nullopt;
  std::string t;
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) return std::nullopt;
  std::size_t pos = 0;
  if (t[0] == '+' || t[0] == '-') pos = 1;
  if (pos >= t.size()) return std::nullopt;
  bool seen_slash = false;
  for (std::size_t i = pos; i < t.size(); ++i) {
    if (t[i] == '/') {
      if (seen_slash || i + 1 == t.size() || i == pos) return std::nullopt;
      seen_slash = true;
    } else if (!isdigit(static_cast<unsigned char>(t[i]))) {
      return std::nullopt;
    }
  }
  Rat r;
  if (r.set_str(t, 10) != 0) return std::nullopt;
  if (seen_slash && r.get_den() == 0) return std::nullopt;
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat &x) { return x.get_str(); }

double rat_to_double(const Rat &x) { return x.get_d(); }

}  // namespace quotidx
