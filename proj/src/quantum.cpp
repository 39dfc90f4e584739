#include "quotidx/quantum.hpp"

#include <algorithm>
#include <set>

namespace quotidx {

Restriction restrict_to_fixed(const Poly &f, const GroupElem &g, const MatrixAction &action) {
  std::size_t n = action.nvars();
  RatMatrix gm = action.element_matrix(g);
  std::vector<RatVec> fixed = kernel_basis(gm - RatMatrix::identity(n));
  std::size_t ng = fixed.size();

  Restriction r{fixed, ng, Poly(ng),
                MatrixAction(action.group(), std::vector<RatMatrix>(
                                                 action.generators().size(),
                                                 RatMatrix::identity(ng ? ng : 1)))};
  if (ng == 0) {
    r.restricted_f = Poly(0);
    // Residual action on the zero space: keep 1x1 identities as placeholders.
    return r;
  }
  // x = B y with B columns the fixed basis.
  std::vector<Poly> images(n, Poly(ng));
  for (std::size_t i = 0; i < n; ++i) {
    Poly li(ng);
    for (std::size_t j = 0; j < ng; ++j) {
      Monomial m(ng, 0);
      m[j] = 1;
      li.add_term(m, fixed[j][i]);
    }
    images[i] = li;
  }
  r.restricted_f = f.substitute(images, ng);

  // Residual action: h B = B C_h (well defined: G abelian preserves ker(g-I)).
  RatMatrix b(n, ng);
  for (std::size_t j = 0; j < ng; ++j)
    for (std::size_t i = 0; i < n; ++i) b.at(i, j) = fixed[j][i];
  std::vector<RatMatrix> residual;
  for (const RatMatrix &h : action.generators()) {
    RatMatrix c(ng, ng);
    for (std::size_t j = 0; j < ng; ++j) {
      RatVec img = mat_vec(h, fixed[j]);
      auto x = solve(b, img);
      if (!x) throw std::logic_error("fixed subspace not invariant under the group");
      for (std::size_t i = 0; i < ng; ++i) c.at(i, j) = (*x)[i];
    }
    residual.push_back(std::move(c));
  }
  r.residual_action = MatrixAction(action.group(), residual);
  return r;
}

Sector sector(const Poly &f, const GroupElem &g, const MatrixAction &action) {
  Restriction res = restrict_to_fixed(f, g, action);
  Sector s;
  s.g = g;
  s.fixed_basis = res.fixed_basis;
  s.n_g = res.n_g;
  s.restricted_f = res.restricted_f;
  if (s.n_g == 0) {
    // Zero-variable sector: Milnor number one, positive by convention.
    s.inv_dim = 1;
    s.inertia = InertiaTriple{1, 0, 0};
    return s;
  }
  OneForm w = differential(res.restricted_f);
  OmegaModule m(w, res.residual_action);
  ResiduePairing p = residue_pairing(m);
  s.inv_dim = p.invariant_basis.size();
  s.inertia = p.inertia_invariant;
  return s;
}

QuantumReport quantum_report(const Poly &f, const MatrixAction &action) {
  QuantumReport rep;
  for (const GroupElem &g : action.group().elements()) {
    Sector s = sector(f, g, action);
    rep.total_dim += s.inv_dim;
    long sign = (s.n_g % 2 == 0) ? 1 : -1;
    rep.orbifold_dim += sign * static_cast<long>(s.inv_dim);
    rep.real_signature += s.inertia.signature();
    rep.sectors.push_back(std::move(s));
  }
  return rep;
}

std::vector<std::vector<long>> DiagonalAction::elements() const {
  std::set<std::vector<long>> seen;
  std::vector<long> id(nvars, 0);
  seen.insert(id);
  std::vector<std::vector<long>> frontier = {id};
  while (!frontier.empty()) {
    std::vector<std::vector<long>> next;
    for (const auto &a : frontier)
      for (const auto &s : generators) {
        std::vector<long> b(nvars);
        for (std::size_t j = 0; j < nvars; ++j) b[j] = (a[j] + s[j]) % modulus;
        if (seen.insert(b).second) next.push_back(b);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

DiagonalReport diagonal_sector_dims(const Poly &f, const DiagonalAction &action) {
  std::size_t n = action.nvars;
  if (f.nvars() != n) throw std::invalid_argument("polynomial arity mismatch");
  for (const auto &gvec : action.generators)
    if (gvec.size() != n) throw std::invalid_argument("character vector arity mismatch");

  DiagonalReport rep;
  for (const auto &a : action.elements()) {
    DiagonalSector sec;
    sec.g = a;
    std::vector<std::size_t> fixed;
    for (std::size_t j = 0; j < n; ++j)
      if (a[j] % action.modulus == 0) fixed.push_back(j);
    sec.n_g = fixed.size();
    if (sec.n_g == 0) {
      sec.dim = 1;
    } else {
      // Restrict f to the fixed coordinates.
      std::vector<Poly> images(n, Poly(sec.n_g));
      for (std::size_t j = 0; j < n; ++j) images[j] = Poly(sec.n_g);
      for (std::size_t jj = 0; jj < fixed.size(); ++jj) {
        Monomial m(sec.n_g, 0);
        m[jj] = 1;
        images[fixed[jj]].add_term(m, Rat(1));
      }
      Poly fg = f.substitute(images, sec.n_g);
      OneForm w = differential(fg);
      MonomialOrder local{OrderKind::LocalNegDegRevLex};
      QuotientAlgebra q(w.components, local);  // NonIsolatedError propagates
      std::size_t count = 0;
      for (const Monomial &k : q.monomial_basis()) {
        bool ok = true;
        for (const auto &gen : action.generators) {
          long s = 0;
          for (std::size_t jj = 0; jj < fixed.size(); ++jj)
            s = (s + gen[fixed[jj]] * (k[jj] + 1)) % action.modulus;
          if (s % action.modulus != 0) { ok = false; break; }
        }
        if (ok) ++count;
      }
      sec.dim = count;
    }
    rep.total_dim += sec.dim;
    rep.orbifold_dim += ((sec.n_g % 2 == 0) ? 1 : -1) * static_cast<long>(sec.dim);
    rep.sectors.push_back(std::move(sec));
  }
  return rep;
}

bool admissibility_check(const std::vector<long> &weights, long degree,
                         const DiagonalAction &action) {
  if (weights.size() != action.nvars)
    throw std::invalid_argument("weight vector arity mismatch");
  if (degree <= 0 || action.modulus % degree != 0)
    throw std::invalid_argument("quasidegree must divide the presented torus order");
  std::vector<long> j(action.nvars);
  for (std::size_t i = 0; i < action.nvars; ++i)
    j[i] = (weights[i] * (action.modulus / degree)) % action.modulus;
  for (const auto &a : action.elements())
    if (a == j) return true;
  return false;
}

}  // namespace quotidx
