#include "quotidx/localalg.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace quotidx {

namespace {

// grevlex tie-break on equal total degree: a > b iff the last nonzero entry
// of a-b is negative.
bool revlex_greater(const Monomial &a, const Monomial &b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace

bool MonomialOrder::greater(const Monomial &a, const Monomial &b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) {
    if (kind == OrderKind::GlobalDegRevLex) return da > db;
    return da < db;  // local: lower degree is larger, 1 is the top monomial
  }
  return revlex_greater(a, b);
}

Monomial leading_monomial(const Poly &p, const MonomialOrder &order) {
  if (p.is_zero()) throw std::invalid_argument("leading monomial of zero");
  const Monomial *best = nullptr;
  for (const auto &[m, c] : p.terms()) {
    if (!best || order.greater(m, *best)) best = &m;
  }
  return *best;
}

Rat leading_coeff(const Poly &p, const MonomialOrder &order) {
  return p.coeff(leading_monomial(p, order));
}

namespace {

int ecart(const Poly &p, const MonomialOrder &order) {
  return p.degree() - total_degree(leading_monomial(p, order));
}

Poly reduce_step(const Poly &h, const Monomial &lm_h, const Poly &g,
                 const MonomialOrder &order) {
  Monomial lm_g = leading_monomial(g, order);
  Rat c = h.coeff(lm_h) / g.coeff(lm_g);
  Poly mult = Poly::term(mono_div(lm_h, lm_g), c);
  return h - mult * g;
}

// Mora's weak normal form with ecart selection; valid for both order kinds,
// required for termination under the local one.
Poly mora_weak_nf(Poly h, const std::vector<Poly> &basis, const MonomialOrder &order) {
  std::vector<Poly> pool = basis;
  while (!h.is_zero()) {
    Monomial lm_h = leading_monomial(h, order);
    const Poly *pick = nullptr;
    int pick_ecart = 0;
    for (const Poly &g : pool) {
      if (!divides(leading_monomial(g, order), lm_h)) continue;
      int e = ecart(g, order);
      if (!pick || e < pick_ecart) {
        pick = &g;
        pick_ecart = e;
      }
    }
    if (!pick) break;
    Poly chosen = *pick;  // copy: push_back below may reallocate the pool
    if (pick_ecart > ecart(h, order)) pool.push_back(h);
    h = reduce_step(h, lm_h, chosen, order);
  }
  return h;
}

// Plain multivariate division (tails included); terminates for well-orders.
Poly division_nf(Poly p, const std::vector<Poly> &basis, const MonomialOrder &order) {
  Poly result(p.nvars());
  while (!p.is_zero()) {
    Monomial lm = leading_monomial(p, order);
    bool reduced = false;
    for (const Poly &g : basis) {
      if (divides(leading_monomial(g, order), lm)) {
        p = reduce_step(p, lm, g, order);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      Rat c = p.coeff(lm);
      result.add_term(lm, c);
      p.add_term(lm, -c);
    }
  }
  return result;
}

Poly normal_form_poly(Poly p, const std::vector<Poly> &basis, const MonomialOrder &order) {
  if (order.kind == OrderKind::GlobalDegRevLex) return division_nf(std::move(p), basis, order);
  return mora_weak_nf(std::move(p), basis, order);
}

Poly spoly(const Poly &f, const Poly &g, const MonomialOrder &order) {
  Monomial lf = leading_monomial(f, order), lg = leading_monomial(g, order);
  Monomial l = mono_lcm(lf, lg);
  Poly a = Poly::term(mono_div(l, lf), 1 / f.coeff(lf)) * f;
  Poly b = Poly::term(mono_div(l, lg), 1 / g.coeff(lg)) * g;
  return a - b;
}

}  // namespace

std::vector<Poly> standard_basis(const std::vector<Poly> &gens, const MonomialOrder &order) {
  std::vector<Poly> basis;
  for (const Poly &g : gens)
    if (!g.is_zero()) basis.push_back(g);
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    Monomial li = leading_monomial(basis[i], order);
    Monomial lj = leading_monomial(basis[j], order);
    // Buchberger's product criterion.
    if (mono_lcm(li, lj) == mono_mul(li, lj)) continue;
    Poly r = normal_form_poly(spoly(basis[i], basis[j], order), basis, order);
    if (r.is_zero()) continue;
    for (std::size_t k = 0; k < basis.size(); ++k) pairs.emplace_back(k, basis.size());
    basis.push_back(std::move(r));
  }
  // Minimalize: drop elements whose lead is divisible by another lead.
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Monomial li = leading_monomial(basis[i], order);
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      Monomial lj = leading_monomial(basis[j], order);
      if (lj == li) {
        redundant = j < i;
      } else if (divides(lj, li)) {
        redundant = true;
      }
    }
    if (!redundant) minimal.push_back(basis[i] * (1 / leading_coeff(basis[i], order)));
  }
  // Global order: fully reduce the tails too.
  if (order.kind == OrderKind::GlobalDegRevLex) {
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Poly> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      Poly lead = Poly::term(leading_monomial(minimal[i], order), Rat(1));
      Poly tail = division_nf(minimal[i] - lead, others, order);
      minimal[i] = lead + tail;
    }
  }
  std::sort(minimal.begin(), minimal.end(), [&order](const Poly &a, const Poly &b) {
    return order.greater(leading_monomial(b, order), leading_monomial(a, order));
  });
  return minimal;
}

QuotientAlgebra::QuotientAlgebra(const std::vector<Poly> &gens, const MonomialOrder &order)
    : order_(order) {
  nvars_ = 0;
  for (const Poly &g : gens) nvars_ = std::max(nvars_, g.nvars());
  sb_ = standard_basis(gens, order_);
  for (const Poly &g : sb_) leads_.push_back(leading_monomial(g, order_));

  // Zero-dimensionality: every variable needs a pure power among the leads.
  std::vector<int> pure_power(nvars_, -1);
  bool unit_ideal = false;
  for (const Monomial &l : leads_) {
    if (total_degree(l) == 0) unit_ideal = true;
    for (std::size_t v = 0; v < nvars_; ++v) {
      if (l[v] == total_degree(l)) {
        if (pure_power[v] < 0 || l[v] < pure_power[v]) pure_power[v] = l[v];
      }
    }
  }
  if (!unit_ideal) {
    for (std::size_t v = 0; v < nvars_; ++v)
      if (pure_power[v] < 0)
        throw NonIsolatedError("non-isolated singularity: quotient is infinite-dimensional");
  }

  // Standard monomials.
  if (!unit_ideal) {
    Monomial m(nvars_, 0);
    std::vector<Monomial> stack = {m};
    // Enumerate the box below the pure powers, filter by divisibility.
    std::vector<int> bound(nvars_);
    for (std::size_t v = 0; v < nvars_; ++v) bound[v] = pure_power[v];
    std::vector<int> idx(nvars_, 0);
    while (true) {
      Monomial cand(idx.begin(), idx.end());
      bool in_ideal = false;
      for (const Monomial &l : leads_)
        if (divides(l, cand)) { in_ideal = true; break; }
      if (!in_ideal) monos_.push_back(cand);
      std::size_t v = 0;
      while (v < nvars_) {
        if (++idx[v] < bound[v]) break;
        idx[v] = 0;
        ++v;
      }
      if (v == nvars_) break;
    }
    std::sort(monos_.begin(), monos_.end(), [this](const Monomial &a, const Monomial &b) {
      return order_.greater(a, b);
    });
  }

  if (order_.kind == OrderKind::LocalNegDegRevLex && !monos_.empty()) {
    // Find a degree bound N with every monomial of degree >= N inside the
    // localized ideal; certified by Mora weak normal forms at degree N.
    int n0 = 0;
    for (const Monomial &m : monos_) n0 = std::max(n0, total_degree(m));
    for (const Monomial &l : leads_) n0 = std::max(n0, total_degree(l));
    ++n0;
    const int cap = n0 + 60;
    for (int N = n0; N <= cap; ++N) {
      bool ok = true;
      std::vector<int> idx(nvars_, 0);
      // All exponent vectors of total degree N.
      std::function<bool(std::size_t, int)> walk = [&](std::size_t v, int rem) -> bool {
        if (v + 1 == nvars_) {
          idx[v] = rem;
          Monomial cand(idx.begin(), idx.end());
          return mora_weak_nf(Poly::term(cand, Rat(1)), sb_, order_).is_zero();
        }
        for (int e = 0; e <= rem; ++e) {
          idx[v] = e;
          if (!walk(v + 1, rem - e)) return false;
        }
        return true;
      };
      if (nvars_ == 0) break;
      ok = walk(0, N);
      if (ok) {
        trunc_degree_ = N;
        break;
      }
    }
    if (trunc_degree_ < 0)
      throw std::runtime_error("failed to certify a truncation degree for the local quotient");
  }

  // Multiplication matrices.
  for (std::size_t v = 0; v < nvars_; ++v) {
    RatMatrix m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      Monomial xm = monos_[j];
      xm[v] += 1;
      RatVec nf = normal_form(Poly::term(xm, Rat(1)));
      for (std::size_t i = 0; i < dim(); ++i) m.at(i, j) = nf[i];
    }
    mult_.push_back(std::move(m));
  }
}

std::size_t QuotientAlgebra::basis_index(const Monomial &m) const {
  for (std::size_t i = 0; i < monos_.size(); ++i)
    if (monos_[i] == m) return i;
  return static_cast<std::size_t>(-1);
}

Poly QuotientAlgebra::reduce(Poly p) const {
  Poly result(nvars_);
  if (monos_.empty()) return result;  // unit ideal: everything is zero
  if (order_.kind == OrderKind::LocalNegDegRevLex && trunc_degree_ >= 0)
    p = p.truncate_degree(trunc_degree_);
  while (!p.is_zero()) {
    Monomial lm = leading_monomial(p, order_);
    bool reduced = false;
    for (std::size_t k = 0; k < sb_.size(); ++k) {
      if (divides(leads_[k], lm)) {
        p = reduce_step(p, lm, sb_[k], order_);
        if (order_.kind == OrderKind::LocalNegDegRevLex && trunc_degree_ >= 0)
          p = p.truncate_degree(trunc_degree_);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      Rat c = p.coeff(lm);
      result.add_term(lm, c);
      p.add_term(lm, -c);
    }
  }
  return result;
}

RatVec QuotientAlgebra::normal_form(const Poly &p) const {
  Poly r = reduce(p);
  RatVec v(dim(), Rat(0));
  for (const auto &[m, c] : r.terms()) {
    std::size_t idx = basis_index(m);
    if (idx == static_cast<std::size_t>(-1))
      throw std::runtime_error("normal form produced a non-basis monomial");
    v[idx] = c;
  }
  return v;
}

QuotientAlgebra quotient_algebra(const OneForm &omega, const MonomialOrder &order) {
  return QuotientAlgebra(omega.components, order);
}

}  // namespace quotidx
