#include "quotidx/burnside.hpp"

#include "quotidx/roots.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace quotidx {

Cyclotomic::Cyclotomic(long n, RatVec coeffs) : n_(n), coeffs_(std::move(coeffs)) {
  if (n_ <= 0) throw std::invalid_argument("conductor must be positive");
  reduce();
}

void Cyclotomic::reduce() {
  RatVec phi = cyclotomic_poly(n_);
  coeffs_ = poly_divmod_1v(coeffs_, phi).second;
  coeffs_.resize(phi.size() - 1, Rat(0));
}

Cyclotomic Cyclotomic::rational(long n, const Rat &c) {
  return Cyclotomic(n, RatVec{c});
}

Cyclotomic Cyclotomic::root_of_unity(long n, long k) {
  k = ((k % n) + n) % n;
  RatVec v(k + 1, Rat(0));
  v[k] = 1;
  return Cyclotomic(n, std::move(v));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic &other) const {
  if (n_ != other.n_) throw std::invalid_argument("conductor mismatch");
  RatVec v = coeffs_;
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) v[i] += other.coeffs_[i];
  return Cyclotomic(n_, std::move(v));
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic &other) const {
  if (n_ != other.n_) throw std::invalid_argument("conductor mismatch");
  RatVec v = coeffs_;
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) v[i] -= other.coeffs_[i];
  return Cyclotomic(n_, std::move(v));
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic &other) const {
  if (n_ != other.n_) throw std::invalid_argument("conductor mismatch");
  return Cyclotomic(n_, poly_mul_1v(coeffs_, other.coeffs_));
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rat Cyclotomic::rational_part() const {
  if (!is_rational()) throw std::logic_error("value is not rational");
  return coeffs_.empty() ? Rat(0) : coeffs_[0];
}

std::string Cyclotomic::to_string() const {
  if (is_rational()) return rat_to_string(rational_part());
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) out << " + ";
    first = false;
    out << rat_to_string(coeffs_[i]);
    if (i > 0) out << "*z^" << i;
  }
  out << "  (z = primitive " << n_ << "th root of unity)";
  return out.str();
}

BurnsideRing::BurnsideRing(AbelianGroup group, std::size_t max_order)
    : group_(std::move(group)),
      lattice_(subgroup_lattice(group_, max_order)),
      elements_(group_.elements()) {}

BurnsideElement BurnsideRing::basis_class(std::size_t subgroup_index) const {
  if (subgroup_index >= lattice_.subgroups.size())
    throw std::invalid_argument("subgroup index out of range");
  BurnsideElement e;
  e.coeffs[subgroup_index] = 1;
  return e;
}

BurnsideElement BurnsideRing::unit() const {
  return basis_class(lattice_.subgroups.size() - 1);  // [G/G], largest subgroup
}

BurnsideElement BurnsideRing::add(const BurnsideElement &a, const BurnsideElement &b) const {
  BurnsideElement r = a;
  for (const auto &[h, c] : b.coeffs) {
    r.coeffs[h] += c;
    if (r.coeffs[h] == 0) r.coeffs.erase(h);
  }
  return r;
}

BurnsideElement BurnsideRing::scale(const BurnsideElement &a, long c) const {
  BurnsideElement r;
  if (c == 0) return r;
  for (const auto &[h, k] : a.coeffs) r.coeffs[h] = k * c;
  return r;
}

BurnsideElement BurnsideRing::multiply(const BurnsideElement &a, const BurnsideElement &b) const {
  BurnsideElement r;
  for (const auto &[hi, ci] : a.coeffs)
    for (const auto &[ki, di] : b.coeffs) {
      const Subgroup &h = lattice_.subgroups[hi];
      const Subgroup &k = lattice_.subgroups[ki];
      Subgroup meet;
      std::set_intersection(h.begin(), h.end(), k.begin(), k.end(),
                            std::back_inserter(meet));
      std::size_t mi = lattice_.index_of(meet);
      long mult = static_cast<long>(group_.order() * meet.size() / (h.size() * k.size()));
      r.coeffs[mi] += ci * di * mult;
      if (r.coeffs[mi] == 0) r.coeffs.erase(mi);
    }
  return r;
}

long BurnsideRing::r0(const BurnsideElement &a) const {
  long s = 0;
  for (const auto &[h, c] : a.coeffs) s += c;
  return s;
}

long BurnsideRing::r1(const BurnsideElement &a) const {
  long s = 0;
  for (const auto &[h, c] : a.coeffs)
    s += c * static_cast<long>(lattice_.subgroups[h].size());
  return s;
}

RepRingElement BurnsideRing::to_rep_ring(const BurnsideElement &a) const {
  long n_exp = group_.exponent();
  const std::vector<long> &factors = group_.invariant_factors();
  std::vector<GroupElem> chars = elements_;  // dual group indexed the same way

  auto char_value_exp = [&](const GroupElem &t, const GroupElem &g) -> long {
    long e = 0;
    for (std::size_t i = 0; i < factors.size(); ++i)
      e = (e + t[i] * g[i] % factors[i] * (n_exp / factors[i])) % n_exp;
    return e;
  };

  RepRingElement out;
  out.values.assign(elements_.size(), Cyclotomic::rational(n_exp, Rat(0)));
  for (const auto &[hi, c] : a.coeffs) {
    const Subgroup &h = lattice_.subgroups[hi];
    // Characters of G trivial on H.
    for (const GroupElem &t : chars) {
      bool trivial = true;
      for (const GroupElem &hh : h)
        if (char_value_exp(t, hh) != 0) { trivial = false; break; }
      if (!trivial) continue;
      for (std::size_t gi = 0; gi < elements_.size(); ++gi) {
        Cyclotomic v = Cyclotomic::root_of_unity(n_exp, char_value_exp(t, elements_[gi]));
        Cyclotomic scaled = v * Cyclotomic::rational(n_exp, Rat(c));
        out.values[gi] = out.values[gi] + scaled;
      }
    }
  }
  return out;
}

BurnsideElement BurnsideRing::induce(const BurnsideElement &a_sub,
                                     const SubgroupLattice &sub_lattice) const {
  BurnsideElement r;
  for (const auto &[hi, c] : a_sub.coeffs) {
    const Subgroup &h = sub_lattice.subgroups.at(hi);
    std::size_t gi;
    try {
      gi = lattice_.index_of(h);
    } catch (const std::invalid_argument &) {
      throw std::invalid_argument("induce: subgroup is not a subgroup of the target group");
    }
    r.coeffs[gi] += c;
    if (r.coeffs[gi] == 0) r.coeffs.erase(gi);
  }
  return r;
}

std::string BurnsideRing::to_string(const BurnsideElement &a) const {
  if (a.coeffs.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto &[h, c] : a.coeffs) {
    long v = c;
    if (first) {
      if (v < 0) { out << "-"; v = -v; }
    } else {
      out << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    first = false;
    if (v != 1) out << v << "*";
    out << "[G/H" << h << "]";
  }
  return out.str();
}

}  // namespace quotidx
