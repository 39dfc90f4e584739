#include "quotidx/group.hpp"

#include "quotidx/roots.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace quotidx {

AbelianGroup::AbelianGroup(std::vector<long> invariant_factors)
    : factors_(std::move(invariant_factors)) {
  order_ = 1;
  for (long m : factors_) {
    if (m <= 0) throw std::invalid_argument("invariant factors must be positive");
    order_ *= static_cast<std::size_t>(m);
  }
}

long AbelianGroup::exponent() const {
  long e = 1;
  for (long m : factors_) e = std::lcm(e, m);
  return e;
}

GroupElem AbelianGroup::add(const GroupElem &a, const GroupElem &b) const {
  GroupElem r(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i)
    r[i] = (a[i] + b[i]) % factors_[i];
  return r;
}

GroupElem AbelianGroup::neg(const GroupElem &a) const {
  GroupElem r(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i)
    r[i] = (factors_[i] - a[i]) % factors_[i];
  return r;
}

long AbelianGroup::elem_order(const GroupElem &a) const {
  long ord = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    long m = factors_[i];
    long k = m / std::gcd(a[i], m);
    ord = std::lcm(ord, k);
  }
  return ord;
}

std::vector<GroupElem> AbelianGroup::elements() const {
  std::vector<GroupElem> out;
  GroupElem cur(factors_.size(), 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = 0;
    while (i < factors_.size()) {
      if (++cur[i] < factors_[i]) break;
      cur[i] = 0;
      ++i;
    }
    if (i == factors_.size()) break;
  }
  return out;
}

std::size_t SubgroupLattice::index_of(const Subgroup &h) const {
  for (std::size_t i = 0; i < subgroups.size(); ++i)
    if (subgroups[i] == h) return i;
  throw std::invalid_argument("subgroup not found in lattice");
}

Subgroup subgroup_closure(const AbelianGroup &g, std::vector<GroupElem> gens) {
  std::set<GroupElem> seen;
  seen.insert(g.identity());
  std::vector<GroupElem> frontier = {g.identity()};
  while (!frontier.empty()) {
    std::vector<GroupElem> next;
    for (const GroupElem &a : frontier)
      for (const GroupElem &s : gens) {
        GroupElem b = g.add(a, s);
        if (seen.insert(b).second) next.push_back(b);
      }
    frontier = std::move(next);
  }
  return Subgroup(seen.begin(), seen.end());
}

SubgroupLattice subgroup_lattice(const AbelianGroup &g, std::size_t max_order) {
  if (g.order() > max_order)
    throw std::invalid_argument("group order exceeds subgroup lattice bound");
  std::vector<GroupElem> elems = g.elements();
  std::set<Subgroup> found;
  found.insert(subgroup_closure(g, {}));
  // Close the collection under joins with cyclic subgroups.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Subgroup> snapshot(found.begin(), found.end());
    for (const Subgroup &h : snapshot)
      for (const GroupElem &a : elems) {
        std::vector<GroupElem> gens(h.begin(), h.end());
        gens.push_back(a);
        Subgroup joined = subgroup_closure(g, gens);
        if (found.insert(joined).second) changed = true;
      }
  }
  SubgroupLattice lat;
  lat.subgroups.assign(found.begin(), found.end());
  std::sort(lat.subgroups.begin(), lat.subgroups.end(),
            [](const Subgroup &a, const Subgroup &b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  std::size_t n = lat.subgroups.size();
  lat.inclusion.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      lat.inclusion[i][j] = std::includes(lat.subgroups[j].begin(), lat.subgroups[j].end(),
                                          lat.subgroups[i].begin(), lat.subgroups[i].end());
  return lat;
}

MatrixAction::MatrixAction(AbelianGroup group, std::vector<RatMatrix> generators)
    : group_(std::move(group)), generators_(std::move(generators)) {
  if (generators_.size() != group_.invariant_factors().size())
    throw std::invalid_argument("need one generator matrix per invariant factor");
  n_ = generators_.empty() ? 0 : generators_[0].rows();
  for (const RatMatrix &m : generators_)
    if (m.rows() != n_ || m.cols() != n_)
      throw std::invalid_argument("generator matrices must be square of equal size");
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (generators_[i] * generators_[j] != generators_[j] * generators_[i])
        throw std::invalid_argument("generator matrices do not commute");
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    long m = group_.invariant_factors()[i];
    std::vector<RatMatrix> powers;
    powers.push_back(RatMatrix::identity(n_));
    for (long k = 1; k < m; ++k) powers.push_back(powers.back() * generators_[i]);
    if (!(powers.back() * generators_[i]).is_identity())
      throw std::invalid_argument("generator order does not divide its invariant factor");
    gen_powers_.push_back(std::move(powers));
  }
}

RatMatrix MatrixAction::element_matrix(const GroupElem &a) const {
  if (a.size() != generators_.size()) throw std::invalid_argument("element arity mismatch");
  RatMatrix m = RatMatrix::identity(n_);
  for (std::size_t i = 0; i < a.size(); ++i) m = m * gen_powers_[i][a[i]];
  return m;
}

int MatrixAction::det_sign(const GroupElem &a) const {
  Rat d = determinant(element_matrix(a));
  if (d == 1) return 1;
  if (d == -1) return -1;
  throw std::logic_error("finite-order matrix with determinant other than +-1");
}

Subgroup MatrixAction::det_kernel() const {
  std::vector<GroupElem> gens;
  for (const GroupElem &a : group_.elements())
    if (det_sign(a) == 1) gens.push_back(a);
  std::sort(gens.begin(), gens.end());
  return gens;  // already closed: kernel of a homomorphism
}

PmEigenspaces pm_eigenspaces(const RatMatrix &g) {
  RatMatrix id = RatMatrix::identity(g.rows());
  return {kernel_basis(g - id), kernel_basis(g + id)};
}

namespace {

// Canonical key: RREF of the basis rows.
std::vector<RatVec> canonical_rows(const std::vector<RatVec> &rows, std::size_t n) {
  if (rows.empty()) return {};
  RatMatrix m = RatMatrix::from_rows(rows);
  std::vector<std::size_t> pivots = rref(m);
  std::vector<RatVec> out;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    RatVec r(n);
    for (std::size_t j = 0; j < n; ++j) r[j] = m.at(i, j);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::vector<Stratum> stratify(const MatrixAction &action) {
  std::size_t n = action.nvars();
  std::vector<Stratum> strata;
  std::set<std::pair<std::vector<RatVec>, std::vector<RatVec>>> seen;

  auto push = [&](const GroupElem &g, std::vector<RatVec> plus, std::vector<RatVec> minus) {
    auto key = std::make_pair(canonical_rows(plus, n), canonical_rows(minus, n));
    if (!seen.insert(key).second) return;
    Stratum s;
    s.g = g;
    s.k = minus.size();
    s.plus_basis = std::move(plus);
    s.minus_basis = std::move(minus);
    strata.push_back(std::move(s));
  };

  // The real stratum R^n always appears (witness e, k = 0).
  {
    std::vector<RatVec> full;
    for (std::size_t i = 0; i < n; ++i) {
      RatVec e(n, Rat(0));
      e[i] = 1;
      full.push_back(std::move(e));
    }
    push(action.group().identity(), full, {});
  }
  for (const GroupElem &g : action.group().elements()) {
    if (action.group().elem_order(g) % 2 != 0) continue;
    PmEigenspaces pm = pm_eigenspaces(action.element_matrix(g));
    push(g, pm.plus, pm.minus);
  }
  return strata;
}

RatVec cyclotomic_poly(long d) {
  static std::map<long, RatVec> cache;
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  // x^d - 1 divided by the cyclotomic polynomials of the proper divisors.
  RatVec num(d + 1, Rat(0));
  num[0] = -1;
  num[d] = 1;
  for (long e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    auto [q, r] = poly_divmod_1v(num, cyclotomic_poly(e));
    if (!r.empty()) throw std::logic_error("cyclotomic division failure");
    num = std::move(q);
  }
  cache[d] = num;
  return num;
}

namespace {

RatMatrix eval_poly_at_matrix(const RatVec &p, const RatMatrix &m) {
  RatMatrix acc(m.rows(), m.cols());
  RatMatrix pw = RatMatrix::identity(m.rows());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != 0) acc = acc + pw * p[i];
    if (i + 1 < p.size()) pw = pw * m;
  }
  return acc;
}

long matrix_order(const RatMatrix &m, long cap = 4096) {
  RatMatrix pw = m;
  for (long k = 1; k <= cap; ++k) {
    if (pw.is_identity()) return k;
    pw = pw * m;
  }
  throw std::invalid_argument("matrix order exceeds cap; not finite order?");
}

// Restriction of op to the column span of basis: op * B = B * C.
RatMatrix restrict_to_span(const RatMatrix &op, const std::vector<RatVec> &basis) {
  std::size_t n = op.rows(), d = basis.size();
  RatMatrix b(n, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < n; ++i) b.at(i, j) = basis[j][i];
  RatMatrix c(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    RatVec img = mat_vec(op, basis[j]);
    auto x = solve(b, img);
    if (!x) throw std::invalid_argument("subspace is not invariant under operator");
    for (std::size_t i = 0; i < d; ++i) c.at(i, j) = (*x)[i];
  }
  return c;
}

}  // namespace

std::vector<IsotypicBlock> cyclotomic_refinement(const std::vector<RatMatrix> &ops) {
  if (ops.empty()) return {};
  std::size_t n = ops[0].rows();
  std::vector<IsotypicBlock> blocks;
  {
    IsotypicBlock full;
    for (std::size_t i = 0; i < n; ++i) {
      RatVec e(n, Rat(0));
      e[i] = 1;
      full.basis.push_back(std::move(e));
    }
    blocks.push_back(std::move(full));
  }
  for (const RatMatrix &op : ops) {
    long ord = matrix_order(op);
    std::vector<IsotypicBlock> next;
    for (IsotypicBlock &blk : blocks) {
      RatMatrix c = restrict_to_span(op, blk.basis);
      std::size_t d = blk.basis.size();
      std::size_t covered = 0;
      for (long e = 1; e <= ord && covered < d; ++e) {
        if (ord % e != 0) continue;
        RatMatrix phi = eval_poly_at_matrix(cyclotomic_poly(e), c);
        std::vector<RatVec> ker = kernel_basis(phi);
        if (ker.empty()) continue;
        IsotypicBlock sub;
        sub.cyclotomic_orders = blk.cyclotomic_orders;
        sub.cyclotomic_orders.push_back(e);
        for (const RatVec &kv : ker) {
          RatVec v(n, Rat(0));
          for (std::size_t j = 0; j < d; ++j)
            for (std::size_t i = 0; i < n; ++i) v[i] += blk.basis[j][i] * kv[j];
          sub.basis.push_back(std::move(v));
        }
        covered += ker.size();
        next.push_back(std::move(sub));
      }
      if (covered != d)
        throw std::logic_error("cyclotomic kernels do not fill the block");
    }
    blocks = std::move(next);
  }
  return blocks;
}

std::vector<IsotypicBlock> isotypic_refinement(const MatrixAction &action) {
  if (action.generators().empty()) {
    IsotypicBlock full;
    for (std::size_t i = 0; i < action.nvars(); ++i) {
      RatVec e(action.nvars(), Rat(0));
      e[i] = 1;
      full.basis.push_back(std::move(e));
    }
    return {full};
  }
  return cyclotomic_refinement(action.generators());
}

}  // namespace quotidx
