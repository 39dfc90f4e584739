#ifndef QUOTIDX_BURNSIDE_HPP
#define QUOTIDX_BURNSIDE_HPP

#include <map>

#include "quotidx/group.hpp"

namespace quotidx {

// Exact element of Q(zeta_N) represented in Q[x]/Phi_N(x).
class Cyclotomic {
 public:
  Cyclotomic() : n_(1) {}
  explicit Cyclotomic(long n, RatVec coeffs = {});

  static Cyclotomic rational(long n, const Rat &c);
  static Cyclotomic root_of_unity(long n, long k);  // zeta_N^k

  long conductor() const { return n_; }
  const RatVec &coeffs() const { return coeffs_; }

  Cyclotomic operator+(const Cyclotomic &other) const;
  Cyclotomic operator-(const Cyclotomic &other) const;
  Cyclotomic operator*(const Cyclotomic &other) const;
  bool operator==(const Cyclotomic &other) const = default;

  bool is_rational() const;
  Rat rational_part() const;  // valid when is_rational()

  std::string to_string() const;

 private:
  void reduce();
  long n_;
  RatVec coeffs_;  // degree < deg Phi_n
};

// Integer combination of classes [G/H]; subgroups keyed by lattice index.
struct BurnsideElement {
  std::map<std::size_t, long> coeffs;

  bool operator==(const BurnsideElement &) const = default;
};

struct RepRingElement {
  // Character value per group element, in enumeration order of the group.
  std::vector<Cyclotomic> values;

  bool operator==(const RepRingElement &) const = default;
};

class BurnsideRing {
 public:
  BurnsideRing(AbelianGroup group, std::size_t max_order = 256);

  const AbelianGroup &group() const { return group_; }
  const SubgroupLattice &lattice() const { return lattice_; }
  const std::vector<GroupElem> &elements() const { return elements_; }

  BurnsideElement basis_class(std::size_t subgroup_index) const;
  BurnsideElement unit() const;  // [G/G]
  BurnsideElement add(const BurnsideElement &a, const BurnsideElement &b) const;
  BurnsideElement scale(const BurnsideElement &a, long c) const;
  // Bilinear extension of [G/H][G/K] = (|G||H^K| / |H||K|) [G/(H^K)].
  BurnsideElement multiply(const BurnsideElement &a, const BurnsideElement &b) const;

  long r0(const BurnsideElement &a) const;  // sum of coefficients
  long r1(const BurnsideElement &a) const;  // sum a_H |H|

  // Character of the virtual permutation representation: per subgroup H the
  // sum of the characters of G trivial on H, evaluated exactly.
  RepRingElement to_rep_ring(const BurnsideElement &a) const;

  // Relabels [G_p/H] as [G/H] for a subgroup G_p given by its lattice index.
  // `a_sub` is keyed by the subgroup lattice of G_p.
  BurnsideElement induce(const BurnsideElement &a_sub, const SubgroupLattice &sub_lattice) const;

  std::string to_string(const BurnsideElement &a) const;

 private:
  AbelianGroup group_;
  SubgroupLattice lattice_;
  std::vector<GroupElem> elements_;
};

}  // namespace quotidx

#endif
