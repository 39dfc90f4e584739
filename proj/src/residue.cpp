#include "quotidx/residue.hpp"

#include <algorithm>
#include <sstream>

namespace quotidx {

namespace {

bool is_invariant_form(const OneForm &omega, const RatMatrix &g) {
  // Invariance of sum A_i dx_i: (g^{-1})^T applied to (A o g^{-1}) gives A back.
  RatMatrix ginv = inverse(g);
  std::size_t n = omega.nvars();
  for (std::size_t i = 0; i < n; ++i) {
    Poly acc(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (ginv.at(j, i) == 0) continue;
      acc = acc + omega.components[j].substitute_linear(ginv) * ginv.at(j, i);
    }
    if (!(acc == omega.components[i])) return false;
  }
  return true;
}

}  // namespace

OmegaModule::OmegaModule(OneForm omega, MatrixAction action)
    : omega_(std::move(omega)), action_(std::move(action)) {
  if (omega_.nvars() != action_.nvars())
    throw std::invalid_argument("1-form and action dimension mismatch");
  for (std::size_t i = 0; i < action_.generators().size(); ++i) {
    if (!is_invariant_form(omega_, action_.generators()[i])) {
      throw NonInvariantFormError("1-form is not invariant under generator " +
                                  std::to_string(i + 1));
    }
  }
  MonomialOrder local{OrderKind::LocalNegDegRevLex};
  algebra_ = std::make_shared<QuotientAlgebra>(omega_.components, local);
  if (algebra_->dim() > 0) jac_class_ = algebra_->normal_form(jacobian_det(omega_));
}

RatMatrix OmegaModule::action_on_basis(const GroupElem &g, bool twisted) const {
  std::size_t d = dim();
  RatMatrix m(d, d);
  RatMatrix gm = action_.element_matrix(g);
  Rat det_twist = twisted ? Rat(action_.det_sign(g)) : Rat(1);
  RatMatrix ginv = inverse(gm);
  for (std::size_t j = 0; j < d; ++j) {
    Poly bj = Poly::term(algebra_->monomial_basis()[j], Rat(1));
    RatVec img = algebra_->normal_form(bj.substitute_linear(ginv) * det_twist);
    for (std::size_t i = 0; i < d; ++i) m.at(i, j) = img[i];
  }
  return m;
}

RatMatrix OmegaModule::twist_matrix(const GroupElem &g) const {
  auto it = twist_cache_.find(g);
  if (it != twist_cache_.end()) return it->second;
  RatMatrix m = action_on_basis(g, true);
  twist_cache_.emplace(g, m);
  return m;
}

RatMatrix OmegaModule::untwisted_matrix(const GroupElem &g) const {
  auto it = untwist_cache_.find(g);
  if (it != untwist_cache_.end()) return it->second;
  RatMatrix m = action_on_basis(g, false);
  untwist_cache_.emplace(g, m);
  return m;
}

std::vector<RatVec> OmegaModule::invariant_basis() const {
  std::size_t d = dim();
  if (d == 0) return {};
  const auto &gens = action_.group().invariant_factors();
  if (gens.empty()) {
    std::vector<RatVec> full;
    for (std::size_t i = 0; i < d; ++i) {
      RatVec e(d, Rat(0));
      e[i] = 1;
      full.push_back(std::move(e));
    }
    return full;
  }
  // Stack (twist(gen_i) - I) for all generators.
  RatMatrix stacked(d * gens.size(), d);
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    GroupElem e = action_.group().identity();
    e[gi] = 1 % gens[gi];
    RatMatrix t = twist_matrix(e) - RatMatrix::identity(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) stacked.at(gi * d + i, j) = t.at(i, j);
  }
  return kernel_basis(stacked);
}

RatVec residue_functional(const OmegaModule &m) {
  std::size_t d = m.dim();
  const RatVec &jac = m.jacobian_class();
  bool jac_zero = true;
  for (const Rat &c : jac) if (c != 0) { jac_zero = false; break; }
  if (d == 0 || jac_zero)
    throw std::runtime_error("zero Jacobian class: the singularity is degenerate");

  // Complete {jac} to a basis by greedy pivoting over basis covectors in
  // descending local order (the monomial basis is already sorted that way).
  RatMatrix cols(d, d);
  for (std::size_t i = 0; i < d; ++i) cols.at(i, 0) = jac[i];
  std::size_t filled = 1;
  for (std::size_t cand = 0; cand < d && filled < d; ++cand) {
    RatMatrix trial = cols;
    trial.at(cand, filled) = 1;
    RatMatrix sub(d, filled + 1);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j <= filled; ++j) sub.at(i, j) = trial.at(i, j);
    if (rank(sub) == filled + 1) {
      cols.at(cand, filled) = 1;
      ++filled;
    }
  }
  if (filled != d) throw std::logic_error("basis completion failed");
  // ell0 = first row of cols^{-1}: ell0(jac)=1, ell0(e_cand)=0 for the others.
  RatMatrix inv = inverse(cols);
  RatVec ell0(d);
  for (std::size_t j = 0; j < d; ++j) ell0[j] = inv.at(0, j);

  // Symmetrize over the untwisted action.
  RatVec ell(d, Rat(0));
  std::vector<GroupElem> elems = m.action().group().elements();
  for (const GroupElem &g : elems) {
    RatVec part = vec_mat(ell0, m.untwisted_matrix(g));
    for (std::size_t j = 0; j < d; ++j) ell[j] += part[j];
  }
  Rat scale = Rat(1) / Rat(static_cast<long>(elems.size()));
  for (Rat &c : ell) c *= scale;
  if (dot(ell, jac) != 1)
    throw std::logic_error("symmetrized functional does not normalize the Jacobian class");
  return ell;
}

namespace {

ResiduePairing build_pairing(const OmegaModule &m, const RatVec &ell) {
  std::size_t d = m.dim();
  const QuotientAlgebra &q = m.algebra();
  ResiduePairing p;
  p.functional = ell;
  p.gram_full = RatMatrix(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Poly prod = Poly::term(q.monomial_basis()[i], Rat(1)) *
                  Poly::term(q.monomial_basis()[j], Rat(1));
      Rat v = dot(ell, q.normal_form(prod));
      p.gram_full.at(i, j) = v;
      p.gram_full.at(j, i) = v;
    }
  p.invariant_basis = m.invariant_basis();
  std::size_t k = p.invariant_basis.size();
  p.gram_invariant = RatMatrix(k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b) {
      Rat v = dot(p.invariant_basis[a], mat_vec(p.gram_full, p.invariant_basis[b]));
      p.gram_invariant.at(a, b) = v;
      p.gram_invariant.at(b, a) = v;
    }
  p.inertia_full = inertia(p.gram_full);
  p.inertia_invariant = inertia(p.gram_invariant);
  return p;
}

}  // namespace

ResiduePairing residue_pairing(const OmegaModule &m) {
  if (m.dim() == 0) return ResiduePairing{};
  ResiduePairing p = build_pairing(m, residue_functional(m));
  if (p.inertia_full.n_zero != 0) {
    std::ostringstream out;
    out << "degenerate residue pairing on the full module; gram = "
        << p.gram_full.to_string();
    throw DegeneratePairingError(out.str());
  }
  if (p.inertia_invariant.n_zero != 0) {
    std::ostringstream out;
    out << "degenerate residue pairing on the invariant part; gram = "
        << p.gram_invariant.to_string();
    throw DegeneratePairingError(out.str());
  }
  return p;
}

ResiduePairing residue_pairing_with_functional(const OmegaModule &m, RatVec ell_raw) {
  std::size_t d = m.dim();
  if (d == 0) return ResiduePairing{};
  if (ell_raw.size() != d) throw std::invalid_argument("functional dimension mismatch");
  // Symmetrize, then rescale so that ell(jac) = 1.
  RatVec ell(d, Rat(0));
  std::vector<GroupElem> elems = m.action().group().elements();
  for (const GroupElem &g : elems) {
    RatVec part = vec_mat(ell_raw, m.untwisted_matrix(g));
    for (std::size_t j = 0; j < d; ++j) ell[j] += part[j];
  }
  Rat val = dot(ell, m.jacobian_class());
  if (val == 0) throw std::invalid_argument("functional vanishes on the Jacobian class");
  Rat scale = Rat(1) / (val * Rat(static_cast<long>(elems.size())));
  // Note: dividing by |G| then rescaling to ell(jac)=1 collapses into one factor.
  for (Rat &c : ell) c *= Rat(static_cast<long>(elems.size())) * scale;
  return build_pairing(m, ell);
}

std::vector<SignatureBlock> g_signature(const OmegaModule &m, const ResiduePairing &p) {
  std::vector<SignatureBlock> out;
  std::size_t d = m.dim();
  if (d == 0) return out;
  const auto &factors = m.action().group().invariant_factors();
  std::vector<RatMatrix> gens;
  for (std::size_t gi = 0; gi < factors.size(); ++gi) {
    GroupElem e = m.action().group().identity();
    e[gi] = 1 % factors[gi];
    gens.push_back(m.twist_matrix(e));
  }
  std::vector<IsotypicBlock> blocks;
  if (gens.empty()) {
    IsotypicBlock full;
    for (std::size_t i = 0; i < d; ++i) {
      RatVec e(d, Rat(0));
      e[i] = 1;
      full.basis.push_back(std::move(e));
    }
    blocks.push_back(std::move(full));
  } else {
    blocks = cyclotomic_refinement(gens);
  }
  for (IsotypicBlock &blk : blocks) {
    SignatureBlock sb;
    sb.cyclotomic_orders = blk.cyclotomic_orders;
    sb.basis = blk.basis;
    std::size_t k = blk.basis.size();
    RatMatrix gram(k, k);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a; b < k; ++b) {
        Rat v = dot(blk.basis[a], mat_vec(p.gram_full, blk.basis[b]));
        gram.at(a, b) = v;
        gram.at(b, a) = v;
      }
    sb.inertia = inertia(gram);
    sb.is_sign_character = true;
    for (long ord : sb.cyclotomic_orders) {
      if (ord == 1) sb.character.push_back(1);
      else if (ord == 2) sb.character.push_back(-1);
      else sb.is_sign_character = false;
    }
    if (!sb.is_sign_character) sb.character.clear();
    out.push_back(std::move(sb));
  }
  return out;
}

RadialIndexReport radial_index_report(const OneForm &omega, const MatrixAction &action) {
  OmegaModule m(omega, action);
  RadialIndexReport rep;
  rep.dim = m.dim();
  if (rep.dim == 0) {
    rep.invariant_dim = 0;
    rep.index = 0;
    return rep;
  }
  rep.pairing = residue_pairing(m);
  rep.invariant_dim = rep.pairing.invariant_basis.size();
  rep.index = rep.pairing.signature();
  rep.blocks = g_signature(m, rep.pairing);
  return rep;
}

}  // namespace quotidx
