#include "quotidx/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

namespace quotidx {

namespace {

Rat small_rational(std::mt19937_64 &rng) {
  std::uniform_int_distribution<long> num(1, 9);
  std::uniform_int_distribution<long> den(1, 4);
  std::uniform_int_distribution<int> sgn(0, 1);
  Rat r(num(rng), den(rng));
  return sgn(rng) ? r : -r;
}

double point_norm(const std::vector<Cplx> &p) {
  double s = 0;
  for (const Cplx &c : p) s += std::norm(c);
  return std::sqrt(s);
}

double point_dist(const std::vector<Cplx> &a, const std::vector<Cplx> &b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}

// Solves a square complex system by Gaussian elimination with partial
// pivoting. Throws AmbiguousClassificationError when nearly singular.
std::vector<Cplx> solve_cplx(std::vector<std::vector<Cplx>> a, std::vector<Cplx> b) {
  std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (std::abs(a[piv][col]) < 1e-14)
      throw AmbiguousClassificationError("nearly singular linear system");
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    for (std::size_t r = col + 1; r < n; ++r) {
      Cplx f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Cplx> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Cplx s = b[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= a[i][c] * x[c];
    x[i] = s / a[i][i];
  }
  return x;
}

// Like solve_cplx but floors tiny pivots instead of failing; inverse
// iteration wants the division by a near-zero pivot.
std::vector<Cplx> solve_cplx_floored(std::vector<std::vector<Cplx>> a,
                                     std::vector<Cplx> b) {
  std::size_t n = a.size();
  double scale = 0;
  for (const auto &row : a)
    for (const Cplx &c : row) scale = std::max(scale, std::abs(c));
  double floor_pivot = 1e-300 + 1e-18 * scale;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    if (std::abs(a[col][col]) < floor_pivot) a[col][col] = floor_pivot;
    for (std::size_t r = col + 1; r < n; ++r) {
      Cplx f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Cplx> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Cplx s = b[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= a[i][c] * x[c];
    x[i] = s / a[i][i];
  }
  return x;
}

std::vector<Cplx> apply_cplx(const std::vector<std::vector<Cplx>> &m,
                             const std::vector<Cplx> &v) {
  std::vector<Cplx> out(m.size(), Cplx(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

// Eigenvector of m for the approximate eigenvalue lambda, by inverse
// iteration with Rayleigh-quotient refinement of lambda.
std::vector<Cplx> eigen_vector(const std::vector<std::vector<Cplx>> &m,
                               Cplx lambda, double max_drift) {
  const Cplx seed_lambda = lambda;
  std::size_t n = m.size();
  std::vector<Cplx> v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = Cplx(1.0 + 0.1 * static_cast<double>(i % 7),
                0.3 + 0.05 * static_cast<double>(i % 5));
  for (int it = 0; it < 25; ++it) {
    auto shifted = m;
    for (std::size_t i = 0; i < n; ++i) shifted[i][i] -= lambda;
    std::vector<Cplx> w = solve_cplx_floored(shifted, v);
    // Pre-scale by the largest entry; the floored solve can return components
    // near 1/pivot_floor whose squared norm would overflow.
    double maxabs = 0;
    for (const Cplx &c : w) maxabs = std::max(maxabs, std::abs(c));
    if (maxabs > 0 && std::isfinite(maxabs))
      for (Cplx &c : w) c /= maxabs;
    double norm = 0;
    for (const Cplx &c : w) norm += std::norm(c);
    norm = std::sqrt(norm);
    if (!(norm > 0) || !std::isfinite(norm))
      throw AmbiguousClassificationError("inverse iteration broke down");
    for (Cplx &c : w) c /= norm;
    v = std::move(w);
    std::vector<Cplx> mv = apply_cplx(m, v);
    Cplx num(0), den(0);
    for (std::size_t i = 0; i < n; ++i) {
      num += std::conj(v[i]) * mv[i];
      den += std::conj(v[i]) * v[i];
    }
    Cplx refined = num / den;
    // Stay locked to the seeded eigenvalue: reject refinements that drift
    // toward a neighbouring one.
    if (std::abs(refined - seed_lambda) < max_drift) lambda = refined;
    double res = 0;
    for (std::size_t i = 0; i < n; ++i)
      res = std::max(res, std::abs(mv[i] - lambda * v[i]));
    if (res < 1e-10) break;
  }
  // Certify the candidate eigenvector.
  std::vector<Cplx> mv = apply_cplx(m, v);
  double res = 0, scale = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    res = std::max(res, std::abs(mv[i] - lambda * v[i]));
    for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(m[i][j]));
  }
  if (res > 1e-6 * scale)
    throw AmbiguousClassificationError("no eigenvector for the eigenvalue");
  return v;
}

std::vector<std::vector<Cplx>> to_cplx(const RatMatrix &m) {
  std::vector<std::vector<Cplx>> out(m.rows(), std::vector<Cplx>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out[i][j] = Cplx(rat_to_double(m.at(i, j)), 0);
  return out;
}

}  // namespace

std::vector<Poly> invariant_generators(const MatrixAction &action, int max_degree) {
  std::size_t n = action.nvars();
  std::vector<GroupElem> elems = action.group().elements();
  std::vector<RatMatrix> inverses;
  for (const GroupElem &g : elems) inverses.push_back(inverse(action.element_matrix(g)));
  Rat avg = Rat(1) / Rat(static_cast<long>(elems.size()));

  std::vector<Poly> out;
  // Independence tracking: coefficient rows over all monomials seen so far.
  std::vector<Monomial> cols;
  std::map<Monomial, std::size_t> col_of;
  std::vector<RatVec> rows;

  auto process = [&](const Monomial &m) {
    Poly p(n);
    for (const RatMatrix &gi : inverses)
      p = p + Poly::term(m, Rat(1)).substitute_linear(gi);
    p = p * avg;
    if (p.is_zero()) return;
    for (const auto &[mono, c] : p.terms()) {
      (void)c;
      if (!col_of.count(mono)) {
        col_of[mono] = cols.size();
        cols.push_back(mono);
        for (RatVec &r : rows) r.push_back(Rat(0));
      }
    }
    RatVec row(cols.size(), Rat(0));
    for (const auto &[mono, c] : p.terms()) row[col_of[mono]] = c;
    std::vector<RatVec> trial = rows;
    trial.push_back(row);
    if (rank(RatMatrix::from_rows(trial)) == trial.size()) {
      rows = std::move(trial);
      out.push_back(std::move(p));
    }
  };

  // Degree-ordered enumeration keeps the output list stable.
  Monomial m(n, 0);
  std::function<void(std::size_t, int)> walk = [&](std::size_t var, int remaining) {
    if (var + 1 == n) {
      m[var] = remaining;
      process(m);
      m[var] = 0;
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      m[var] = e;
      walk(var + 1, remaining - e);
    }
    m[var] = 0;
  };
  for (int d = 1; d <= max_degree; ++d) walk(0, d);
  return out;
}

Perturbation perturb(const OneForm &omega, const std::vector<Poly> &generators,
                     const Rat &t, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Perturbation p;
  p.t = t;
  p.generators = generators;
  p.form = omega;
  for (const Poly &z : generators) {
    Rat lambda = small_rational(rng);
    p.lambdas.push_back(lambda);
    OneForm dz = differential(z);
    for (std::size_t i = 0; i < omega.nvars(); ++i)
      p.form.components[i] = p.form.components[i] + dz.components[i] * (t * lambda);
  }
  return p;
}

std::vector<ComplexPoint> singular_points(const OneForm &omega, double tol,
                                          std::uint64_t seed) {
  std::size_t n = omega.nvars();
  MonomialOrder global{OrderKind::GlobalDegRevLex};
  QuotientAlgebra q(omega.components, global);
  std::size_t d = q.dim();
  if (d == 0) return {};

  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  RatMatrix mh(d, d);
  for (std::size_t i = 0; i < n; ++i) {
    Rat c = small_rational(rng);
    mh = mh + q.mult_matrix(i) * c;
  }
  RatVec cp = char_poly(mh);
  std::vector<ComplexRoot> eigs = complex_roots(cp, tol, seed);
  for (const ComplexRoot &e : eigs)
    if (e.multiplicity > 1)
      throw AmbiguousClassificationError("multiple eigenvalue: degenerate draw");
  double sep = 1e6 * tol;
  for (std::size_t i = 0; i < eigs.size(); ++i)
    for (std::size_t j = i + 1; j < eigs.size(); ++j)
      if (std::abs(eigs[i].value - eigs[j].value) < sep)
        throw AmbiguousClassificationError("clustered eigenvalues: resample");

  std::vector<std::vector<Cplx>> mht(d, std::vector<Cplx>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) mht[i][j] = rat_to_double(mh.at(j, i));
  std::vector<std::vector<std::vector<Cplx>>> mit;
  for (std::size_t v = 0; v < n; ++v) {
    auto mt = to_cplx(q.mult_matrix(v).transpose());
    mit.push_back(std::move(mt));
  }

  // Jacobian of the coefficient map, for Newton polish.
  std::vector<std::vector<Poly>> jac(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) jac[i][j] = omega.components[i].derivative(j);

  std::vector<ComplexPoint> out;
  for (const ComplexRoot &e : eigs) {
    double gap = 1e300;
    for (const ComplexRoot &other : eigs)
      if (&other != &e)
        gap = std::min(gap, std::abs(other.value - e.value));
    std::vector<Cplx> v = eigen_vector(mht, e.value, gap / 3.0);
    Cplx vv(0);
    for (const Cplx &c : v) vv += std::conj(c) * c;
    ComplexPoint p;
    for (std::size_t var = 0; var < n; ++var) {
      std::vector<Cplx> mv = apply_cplx(mit[var], v);
      Cplx num(0);
      for (std::size_t i = 0; i < d; ++i) num += std::conj(v[i]) * mv[i];
      p.coordinates.push_back(num / vv);
    }
    // Newton polish on the square system A(p) = 0.
    for (int it = 0; it < 30; ++it) {
      std::vector<Cplx> f(n);
      double res = 0;
      for (std::size_t i = 0; i < n; ++i) {
        f[i] = omega.components[i].eval(p.coordinates);
        res = std::max(res, std::abs(f[i]));
      }
      if (res < 1e-14 * (1.0 + point_norm(p.coordinates))) break;
      std::vector<std::vector<Cplx>> jm(n, std::vector<Cplx>(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) jm[i][j] = jac[i][j].eval(p.coordinates);
      std::vector<Cplx> delta = solve_cplx(jm, f);
      for (std::size_t j = 0; j < n; ++j) p.coordinates[j] -= delta[j];
    }
    double res = 0;
    for (std::size_t i = 0; i < n; ++i)
      res = std::max(res, std::abs(omega.components[i].eval(p.coordinates)));
    p.residual = res / (1.0 + point_norm(p.coordinates));
    if (p.residual > tol)
      throw AmbiguousClassificationError("point residual above tolerance");
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), [](const ComplexPoint &a, const ComplexPoint &b) {
    for (std::size_t i = 0; i < a.coordinates.size(); ++i) {
      if (a.coordinates[i].real() != b.coordinates[i].real())
        return a.coordinates[i].real() < b.coordinates[i].real();
      if (a.coordinates[i].imag() != b.coordinates[i].imag())
        return a.coordinates[i].imag() < b.coordinates[i].imag();
    }
    return false;
  });
  // Distinct eigenvalues must give distinct points.
  for (std::size_t i = 0; i + 1 < out.size(); ++i)
    if (point_dist(out[i].coordinates, out[i + 1].coordinates) < sep)
      throw AmbiguousClassificationError("colliding recovered points: resample");
  return out;
}

std::vector<ClassifiedOrbit> classify(const std::vector<ComplexPoint> &points,
                                      const OneForm &omega,
                                      const MatrixAction &action, double tol,
                                      double ball_radius) {
  std::vector<GroupElem> elems = action.group().elements();
  std::vector<std::vector<std::vector<Cplx>>> mats;
  for (const GroupElem &g : elems) mats.push_back(to_cplx(action.element_matrix(g)));

  auto match = [&](const std::vector<Cplx> &target) -> long {
    long best = -1;
    double best_d = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      double dd = point_dist(points[i].coordinates, target);
      if (best < 0 || dd < best_d) { best = static_cast<long>(i); best_d = dd; }
    }
    double scale = 1.0 + point_norm(target);
    if (best >= 0 && best_d < tol * scale) return best;
    if (best >= 0 && best_d < 1e3 * tol * scale)
      throw AmbiguousClassificationError("near-miss while matching orbit points");
    return -1;
  };

  Poly jac = jacobian_det(omega);
  std::vector<bool> used(points.size(), false);
  std::vector<ClassifiedOrbit> out;
  for (std::size_t start = 0; start < points.size(); ++start) {
    if (used[start]) continue;
    ClassifiedOrbit orb;
    const std::vector<Cplx> &p = points[start].coordinates;
    double scale = 1.0 + point_norm(p);
    std::vector<GroupElem> iso_elems;
    for (std::size_t gi = 0; gi < elems.size(); ++gi) {
      std::vector<Cplx> gp = apply_cplx(mats[gi], p);
      long idx = match(gp);
      if (idx < 0)
        throw AmbiguousClassificationError("orbit leaves the recovered point set");
      if (!used[idx]) {
        used[idx] = true;
        orb.point_indices.push_back(idx);
      }
      if (point_dist(gp, p) < tol * scale) iso_elems.push_back(elems[gi]);
    }
    orb.representative = points[start];
    orb.isotropy = subgroup_closure(action.group(), iso_elems);
    if (orb.isotropy.size() != iso_elems.size())
      throw AmbiguousClassificationError("numerical isotropy is not a subgroup");
    orb.isotropy_in_kernel = true;
    for (const GroupElem &g : orb.isotropy)
      if (action.det_sign(g) != 1) { orb.isotropy_in_kernel = false; break; }

    std::vector<Cplx> pbar(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) pbar[i] = std::conj(p[i]);
    orb.real_in_closure = false;
    std::size_t best_k = 0;
    for (std::size_t gi = 0; gi < elems.size(); ++gi) {
      std::vector<Cplx> gp = apply_cplx(mats[gi], p);
      if (point_dist(gp, pbar) < tol * scale) {
        RatMatrix gm = action.element_matrix(elems[gi]);
        std::size_t k =
            kernel_basis(gm + RatMatrix::identity(gm.rows())).size();
        if (!orb.real_in_closure || k < best_k) {
          orb.real_in_closure = true;
          orb.witness = elems[gi];
          best_k = k;
        }
      }
    }
    orb.stratum_k = best_k;

    double radius = point_norm(p);
    if (std::isfinite(ball_radius) &&
        radius > 0.95 * ball_radius && radius < 1.05 * ball_radius)
      throw AmbiguousClassificationError("point too close to the cutoff ball");
    orb.inside_ball = radius <= ball_radius;

    if (orb.real_in_closure) {
      Cplx jv = jac.eval(p);
      if (orb.stratum_k % 2 == 1) jv = -jv;
      double mag = std::abs(jv);
      if (std::abs(jv.imag()) > tol * (1.0 + mag) || std::abs(jv.real()) < 1e3 * tol)
        throw AmbiguousClassificationError("ambiguous Jacobian sign at orbit");
      orb.jacobian_sign = jv.real() > 0 ? 1 : -1;
    }
    orb.contribution = (orb.real_in_closure && orb.isotropy_in_kernel &&
                        orb.inside_ball)
                           ? orb.jacobian_sign
                           : 0;
    out.push_back(std::move(orb));
  }
  return out;
}

long conservation_sum(const std::vector<ClassifiedOrbit> &orbits) {
  long s = 0;
  for (const ClassifiedOrbit &o : orbits) s += o.contribution;
  return s;
}

OracleReport oracle_check(const OneForm &omega, const MatrixAction &action,
                          const OracleOptions &options) {
  std::vector<Poly> gens = invariant_generators(action, options.max_degree);
  std::string last_error = "no attempt made";
  for (int attempt = 0; attempt < options.max_resample; ++attempt) {
    Rat t = options.t;
    for (int s = 0; s < attempt / 4; ++s) t /= 4;
    std::uint64_t seed = options.seed + 0x1000u * static_cast<std::uint64_t>(attempt);
    try {
      OracleReport rep;
      rep.perturbation = perturb(omega, gens, t, seed);
      rep.points = singular_points(rep.perturbation.form, options.tol_root, seed);
      rep.orbits = classify(rep.points, rep.perturbation.form, action,
                            options.tol_classify, options.ball_radius);
      for (const ClassifiedOrbit &o : rep.orbits)
        if (!o.inside_ball) ++rep.escapees;
      rep.sum = conservation_sum(rep.orbits);
      return rep;
    } catch (const AmbiguousClassificationError &e) {
      last_error = e.what();
    } catch (const NonIsolatedError &e) {
      // Non-generic lambda draw, or the generator pool is too small.
      last_error = e.what();
      if (attempt == 0 && gens.size() < omega.nvars())
        gens = invariant_generators(action, options.max_degree + 2);
    }
  }
  throw std::runtime_error("oracle failed after resampling: " + last_error);
}

}  // namespace quotidx
