#include "quotidx/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace quotidx {

namespace {

RatVec trim(RatVec p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

std::vector<Cplx> to_doubles(const RatVec &p) {
  std::vector<Cplx> c(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) c[i] = Cplx(rat_to_double(p[i]), 0.0);
  return c;
}

Cplx eval(const std::vector<Cplx> &c, Cplx z) {
  Cplx v(0, 0);
  for (std::size_t i = c.size(); i-- > 0;) v = v * z + c[i];
  return v;
}

double eval_abs(const std::vector<Cplx> &c, double r) {
  double v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * r + std::abs(c[i]);
  return v;
}

}  // namespace

RatVec poly_derivative_1v(const RatVec &p) {
  RatVec d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long>(i)));
  return trim(d);
}

RatVec poly_mul_1v(const RatVec &a, const RatVec &b) {
  if (a.empty() || b.empty()) return {};
  RatVec r(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return trim(r);
}

std::pair<RatVec, RatVec> poly_divmod_1v(const RatVec &a, const RatVec &b) {
  RatVec rem = trim(a), div = trim(b);
  if (div.empty()) throw std::invalid_argument("division by zero polynomial");
  if (rem.size() < div.size()) return {{}, rem};
  RatVec quo(rem.size() - div.size() + 1, Rat(0));
  for (std::size_t k = quo.size(); k-- > 0;) {
    if (rem.size() < div.size() + k) continue;
    Rat c = rem[div.size() - 1 + k] / div.back();
    if (c == 0) continue;
    quo[k] = c;
    for (std::size_t j = 0; j < div.size(); ++j) rem[j + k] -= c * div[j];
  }
  return {trim(quo), trim(rem)};
}

RatVec poly_gcd_1v(RatVec a, RatVec b) {
  a = trim(a);
  b = trim(b);
  while (!b.empty()) {
    RatVec r = poly_divmod_1v(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    Rat inv = 1 / a.back();
    for (Rat &c : a) c *= inv;
  }
  return a;
}

std::vector<RatVec> squarefree_decomposition(const RatVec &p_in) {
  RatVec p = trim(p_in);
  if (p.empty()) throw std::invalid_argument("squarefree decomposition of zero");
  std::vector<RatVec> out;
  if (p.size() == 1) return out;
  // Yun's algorithm.
  RatVec dp = poly_derivative_1v(p);
  RatVec a = poly_gcd_1v(p, dp);
  RatVec b = poly_divmod_1v(p, a).first;
  RatVec c = poly_divmod_1v(dp, a).first;
  RatVec d(c.size(), Rat(0));
  {
    RatVec db = poly_derivative_1v(b);
    d = c;
    for (std::size_t i = 0; i < db.size(); ++i) {
      if (i >= d.size()) d.resize(i + 1, Rat(0));
      d[i] -= db[i];
    }
    d = trim(d);
  }
  while (b.size() > 1) {
    RatVec f = poly_gcd_1v(b, d);
    out.push_back(f);
    b = poly_divmod_1v(b, f).first;
    RatVec cnext = poly_divmod_1v(d, f).first;
    RatVec db = poly_derivative_1v(b);
    d = cnext;
    for (std::size_t i = 0; i < db.size(); ++i) {
      if (i >= d.size()) d.resize(i + 1, Rat(0));
      d[i] -= db[i];
    }
    d = trim(d);
  }
  return out;
}

std::vector<ComplexRoot> complex_roots(const RatVec &p_in, double tol, std::uint64_t seed) {
  RatVec p = trim(p_in);
  if (p.empty()) throw std::invalid_argument("complex_roots of zero polynomial");
  std::vector<ComplexRoot> roots;
  // Exact factor x^k.
  std::size_t zero_mult = 0;
  while (zero_mult < p.size() && p[zero_mult] == 0) ++zero_mult;
  if (zero_mult > 0) {
    roots.push_back({Cplx(0, 0), zero_mult, 0.0});
    p.erase(p.begin(), p.begin() + zero_mult);
  }
  if (p.size() <= 1) return roots;

  std::vector<RatVec> factors = squarefree_decomposition(p);
  for (std::size_t fi = 0; fi < factors.size(); ++fi) {
    std::size_t mult = fi + 1;
    RatVec f = factors[fi];
    if (f.size() <= 1) continue;
    std::size_t d = f.size() - 1;
    std::vector<Cplx> c = to_doubles(f);
    std::vector<Cplx> dc(d);
    for (std::size_t i = 1; i <= d; ++i) dc[i - 1] = c[i] * static_cast<double>(i);

    // Fujiwara radius bound and randomized start angles.
    double radius = 0;
    for (std::size_t i = 0; i < d; ++i) {
      double q = std::abs(c[i]) / std::abs(c[d]);
      if (q > 0)
        radius = std::max(radius, std::pow(q, 1.0 / static_cast<double>(d - i)));
    }
    radius = 2.0 * radius + 1.0;
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ull * (fi + 1)));
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double phase = 2.0 * std::numbers::pi * unif(rng);
    std::vector<Cplx> z(d);
    for (std::size_t k = 0; k < d; ++k) {
      double a = phase + 2.0 * std::numbers::pi * (k + 0.35) / d;
      z[k] = radius * Cplx(std::cos(a), std::sin(a));
    }

    const int max_iter = 500;
    bool converged = false;
    for (int it = 0; it < max_iter && !converged; ++it) {
      converged = true;
      for (std::size_t k = 0; k < d; ++k) {
        Cplx pv = eval(c, z[k]);
        double scale = eval_abs(c, std::abs(z[k]));
        if (std::abs(pv) <= 0.1 * tol * scale) continue;
        converged = false;
        Cplx dv = eval(dc, z[k]);
        Cplx ratio = (dv == Cplx(0, 0)) ? Cplx(0, 0) : pv / dv;
        Cplx sum(0, 0);
        for (std::size_t j = 0; j < d; ++j)
          if (j != k) sum += 1.0 / (z[k] - z[j]);
        Cplx denom = 1.0 - ratio * sum;
        Cplx step = (denom == Cplx(0, 0)) ? ratio : ratio / denom;
        if (dv == Cplx(0, 0) || !std::isfinite(step.real()) ||
            !std::isfinite(step.imag())) {
          // Nudge off a critical point or an overflowed iterate.
          step = 0.1 * radius * Cplx(std::cos(unif(rng) * 6.28), std::sin(unif(rng) * 6.28));
        }
        z[k] -= step;
      }
    }
    for (std::size_t k = 0; k < d; ++k) {
      double scale = eval_abs(c, std::abs(z[k]));
      double res = std::abs(eval(c, z[k])) / (scale > 0 ? scale : 1.0);
      if (!std::isfinite(res) || res > tol)
        throw std::runtime_error("complex_roots: Aberth iteration did not converge");
      roots.push_back({z[k], mult, res});
    }
  }
  std::sort(roots.begin(), roots.end(), [](const ComplexRoot &a, const ComplexRoot &b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return roots;
}

}  // namespace quotidx
