#include "blx/elimination.hpp"

#include <algorithm>
#include <cassert>

namespace blx {

namespace {

// Fraction-free Gaussian elimination (Bareiss). All divisions are exact.
MPoly bareiss_det(std::vector<std::vector<MPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return MPoly(mpq_class(1));
  int sign = 1;
  MPoly prev(mpq_class(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k].is_zero()) ++pivot;
    if (pivot == n) return MPoly();
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        auto q = MPoly::divide_exact(num, prev);
        if (!q) throw poly_error("bareiss: inexact division");
        m[i][j] = std::move(*q);
      }
      m[i][k] = MPoly();
    }
    prev = m[k][k];
  }
  MPoly det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

std::vector<MPoly> coeffs_in(const MPoly& f, Var v, long deg) {
  std::vector<MPoly> c(static_cast<std::size_t>(deg) + 1);
  for (long k = 0; k <= deg; ++k) c[static_cast<std::size_t>(k)] = f.coeff_of(v, k);
  return c;
}

}  // namespace

MPoly resultant(const MPoly& f, const MPoly& g, Var v) {
  if (f.is_zero() || g.is_zero()) throw poly_error("resultant: zero input");
  long m = f.degree_in(v).value_or(0);
  long n = g.degree_in(v).value_or(0);
  if (m == 0 && n == 0)
    throw poly_error("resultant: both inputs free of the eliminated variable");
  if (m == 0) return f.pow(static_cast<unsigned long>(n));
  if (n == 0) return g.pow(static_cast<unsigned long>(m));

  auto fc = coeffs_in(f, v, m);
  auto gc = coeffs_in(g, v, n);
  std::size_t N = static_cast<std::size_t>(m + n);
  std::vector<std::vector<MPoly>> s(N, std::vector<MPoly>(N));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j <= m; ++j)
      s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] =
          fc[static_cast<std::size_t>(m - j)];
  for (long i = 0; i < m; ++i)
    for (long j = 0; j <= n; ++j)
      s[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + j)] =
          gc[static_cast<std::size_t>(n - j)];
  return bareiss_det(s);
}

MPoly resultant_t3_homogeneous(const MPoly& f, const MPoly& g) {
  VarSet tblock = VarSet::of_block(Block::T);
  if (!f.is_homogeneous_in(tblock) || !g.is_homogeneous_in(tblock))
    throw poly_error("resultant_t3_homogeneous: inputs not homogeneous in the parameters");
  long m = f.degree_in(tblock).value_or(0);
  long n = g.degree_in(tblock).value_or(0);
  if (f.degree_in(Var::t3).value_or(-1) != m || g.degree_in(Var::t3).value_or(-1) != n)
    throw poly_error("resultant_t3_homogeneous: inputs drop degree in t3");
  std::map<Var, MPoly> slice{{Var::t2, MPoly(mpq_class(1))}};
  MPoly r = resultant(f.substitute(slice), g.substitute(slice), Var::t3);
  if (r.is_zero()) return r;
  long total = m * n;
  MPoly out;
  for (const auto& [e, c] : r.terms()) {
    long d1 = e[static_cast<unsigned>(Var::t1)];
    if (d1 > total) throw poly_error("resultant_t3_homogeneous: degree overflow");
    Exponents e2 = e;
    e2[static_cast<unsigned>(Var::t2)] = static_cast<std::uint16_t>(total - d1);
    out += MPoly::monomial(e2, c);
  }
  return out;
}

ContentSplit content_split(const MPoly& f, VarSet block) {
  if (f.is_zero()) throw poly_error("content_split: zero input");
  auto groups = f.collect(block);
  std::vector<MPoly> coeffs;
  coeffs.reserve(groups.size());
  for (auto& [e, p] : groups) coeffs.push_back(std::move(p));
  MPoly content = gcd_multi(coeffs);
  auto prim = MPoly::divide_exact(f, content);
  if (!prim) throw poly_error("content_split: content does not divide input");
  return ContentSplit{std::move(content), std::move(*prim), block};
}

// ------------------------- univariate helpers -------------------------

UPoly upoly_from(const MPoly& f, Var v) {
  UPoly u;
  long d = f.degree_in(v).value_or(-1);
  if (d < 0) return u;
  u.resize(static_cast<std::size_t>(d) + 1, mpq_class(0));
  for (const auto& [e, c] : f.terms()) {
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (e[i] > 0 && static_cast<Var>(i) != v)
        throw poly_error("upoly_from: polynomial is not univariate");
    }
    u[e[static_cast<unsigned>(v)]] = c;
  }
  return u;
}

void upoly_trim(UPoly& u) {
  while (!u.empty() && u.back() == 0) u.pop_back();
}

long upoly_deg(const UPoly& u) { return static_cast<long>(u.size()) - 1; }

mpq_class upoly_eval(const UPoly& u, const mpq_class& x) {
  mpq_class acc(0);
  for (auto it = u.rbegin(); it != u.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly upoly_derivative(const UPoly& u) {
  UPoly d;
  for (std::size_t i = 1; i < u.size(); ++i) d.push_back(u[i] * mpq_class(static_cast<long>(i)));
  upoly_trim(d);
  return d;
}

namespace {

UPoly upoly_rem(UPoly a, const UPoly& b) {
  assert(!b.empty());
  while (upoly_deg(a) >= upoly_deg(b)) {
    mpq_class q = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= q * b[i];
    a.pop_back();
    upoly_trim(a);
    if (a.empty()) break;
  }
  return a;
}

void upoly_make_monic(UPoly& u) {
  if (u.empty()) return;
  mpq_class lc = u.back();
  for (auto& c : u) c /= lc;
}

// Scale to integer coefficients with content 1.
UPoly upoly_primitive_int(const UPoly& u) {
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& c : u) {
    if (c == 0) continue;
    mpz_class n = c.get_num(), d = c.get_den();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  mpq_class scale(den_lcm, num_gcd);
  scale.canonicalize();
  UPoly out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] * scale;
  return out;
}

int sgn(const mpq_class& q) { return sgn(q.get_num()); }

std::vector<UPoly> sturm_chain(const UPoly& squarefree) {
  std::vector<UPoly> chain;
  chain.push_back(squarefree);
  chain.push_back(upoly_derivative(squarefree));
  while (!chain.back().empty() && upoly_deg(chain.back()) > 0) {
    UPoly r = upoly_rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return chain;
}

long sign_variations(const std::vector<UPoly>& chain, const mpq_class& x) {
  long var = 0;
  int last = 0;
  for (const auto& p : chain) {
    if (p.empty()) continue;
    int s = sgn(upoly_eval(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++var;
    last = s;
  }
  return var;
}

// Simplest rational (smallest denominator) in the open interval (lo, hi).
mpq_class simplest_in(const mpq_class& lo, const mpq_class& hi) {
  assert(lo < hi);
  if (lo < 0 && hi > 0) return mpq_class(0);
  if (hi <= 0) return -simplest_in(-hi, -lo);
  // 0 <= lo < hi
  mpz_class fl = lo.get_num() / lo.get_den();  // floor for non-negative lo
  if (hi > fl + 1) return mpq_class(fl + 1);
  if (lo == fl) {
    // interval (fl, hi) with hi <= fl+1: answer fl + 1/(floor(1/(hi-fl)) + 1)
    mpq_class w = hi - mpq_class(fl);
    mpz_class k = w.get_den() / w.get_num();  // floor(1/w)
    mpq_class frac(1, k + 1);
    frac.canonicalize();
    return mpq_class(fl) + frac;
  }
  mpq_class r = simplest_in(mpq_class(1) / (hi - mpq_class(fl)),
                            mpq_class(1) / (lo - mpq_class(fl)));
  return mpq_class(fl) + mpq_class(1) / r;
}

struct Interval {
  mpq_class lo, hi;  // open, contains exactly one real root, endpoints non-roots
};

std::vector<Interval> isolate_roots(const UPoly& sf, std::vector<mpq_class>& exact_hits) {
  std::vector<Interval> out;
  if (upoly_deg(sf) <= 0) return out;
  // Cauchy bound
  mpq_class maxratio(0);
  for (std::size_t i = 0; i + 1 < sf.size(); ++i) {
    mpq_class r = abs(sf[i] / sf.back());
    if (r > maxratio) maxratio = r;
  }
  mpq_class bound = maxratio + 1;
  auto chain = sturm_chain(sf);

  struct Item {
    mpq_class lo, hi;
    long vlo, vhi;
  };
  std::vector<Item> stack;
  mpq_class lo = -bound, hi = bound;
  // nudge endpoints off roots (the bound itself is never a root, by Cauchy)
  stack.push_back({lo, hi, sign_variations(chain, lo), sign_variations(chain, hi)});
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    long count = it.vlo - it.vhi;
    if (count <= 0) continue;
    if (count == 1) {
      out.push_back({it.lo, it.hi});
      continue;
    }
    mpq_class mid = (it.lo + it.hi) / 2;
    if (upoly_eval(sf, mid) == 0) {
      exact_hits.push_back(mid);
      // split around the hit; shrink to keep endpoints off the root
      mpq_class eps = (it.hi - it.lo) / 4;
      mpq_class l2 = mid - eps, r2 = mid + eps;
      while (upoly_eval(sf, l2) == 0) l2 = (it.lo + l2) / 2;
      while (upoly_eval(sf, r2) == 0) r2 = (r2 + it.hi) / 2;
      stack.push_back({it.lo, l2, it.vlo, sign_variations(chain, l2)});
      stack.push_back({r2, it.hi, sign_variations(chain, r2), it.vhi});
    } else {
      long vm = sign_variations(chain, mid);
      stack.push_back({it.lo, mid, it.vlo, vm});
      stack.push_back({mid, it.hi, vm, it.vhi});
    }
  }
  return out;
}

}  // namespace

UPoly upoly_gcd(UPoly a, UPoly b) {
  upoly_trim(a);
  upoly_trim(b);
  while (!b.empty()) {
    UPoly r = upoly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  upoly_make_monic(a);
  return a;
}

long upoly_distinct_root_count(const UPoly& u) {
  UPoly v = u;
  upoly_trim(v);
  if (upoly_deg(v) <= 0) return 0;
  UPoly g = upoly_gcd(v, upoly_derivative(v));
  return upoly_deg(v) - upoly_deg(g);
}

std::vector<std::pair<mpq_class, long>> upoly_rational_roots(const UPoly& u) {
  std::vector<std::pair<mpq_class, long>> roots;
  UPoly v = u;
  upoly_trim(v);
  if (upoly_deg(v) <= 0) return roots;

  UPoly g = upoly_gcd(v, upoly_derivative(v));
  // square-free part = v / gcd(v, v'), exact division
  UPoly sf(v.size() - g.size() + 1, mpq_class(0));
  {
    UPoly r = v;
    while (!r.empty() && upoly_deg(r) >= upoly_deg(g)) {
      mpq_class c = r.back() / g.back();
      std::size_t shift = r.size() - g.size();
      sf[shift] = c;
      for (std::size_t i = 0; i < g.size(); ++i) r[i + shift] -= c * g[i];
      r.pop_back();
      upoly_trim(r);
    }
    upoly_trim(sf);
  }

  UPoly sf_int = upoly_primitive_int(sf);
  mpz_class den_bound = abs(sf_int.back().get_num());

  std::vector<mpq_class> found;
  std::vector<mpq_class> exact_hits;
  auto intervals = isolate_roots(sf_int, exact_hits);
  for (const auto& h : exact_hits) found.push_back(h);
  for (auto iv : intervals) {
    mpq_class lo = iv.lo, hi = iv.hi;
    int slo = sgn(upoly_eval(sf_int, lo));
    for (;;) {
      mpq_class cand = simplest_in(lo, hi);
      if (cand.get_den() > den_bound) break;  // the root is irrational
      mpq_class val = upoly_eval(sf_int, cand);
      if (val == 0) {
        found.push_back(cand);
        break;
      }
      if (sgn(val) == slo) lo = cand;
      else hi = cand;
    }
  }

  // multiplicities against the original polynomial
  for (const auto& r : found) {
    UPoly cur = v;
    long mult = 0;
    while (!cur.empty() && upoly_eval(cur, r) == 0) {
      // synthetic division by (t - r): q[deg-1] = c_deg, q[k-1] = c_k + r*q[k]
      UPoly q(cur.size() - 1, mpq_class(0));
      q[q.size() - 1] = cur.back();
      for (std::size_t k = cur.size() - 2; k >= 1; --k) {
        q[k - 1] = cur[k] + r * q[k];
      }
      cur = std::move(q);
      upoly_trim(cur);
      ++mult;
    }
    roots.emplace_back(r, mult);
  }
  std::sort(roots.begin(), roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return roots;
}

// ---------------------- homogeneous linear factors ----------------------

MPoly linear_factor_poly(const LinearFactor& lf) {
  MPoly t1 = MPoly::variable(Var::t1), t2 = MPoly::variable(Var::t2);
  MPoly f = t1 * mpq_class(lf.b) - t2 * mpq_class(lf.a);
  return f.normalized();
}

LinearFactorization homogeneous_linear_factors(const MPoly& f) {
  if (f.is_zero()) throw poly_error("homogeneous_linear_factors: zero input");
  VarSet t12{Var::t1, Var::t2};
  for (std::size_t i = 0; i < kNumVars; ++i) {
    Var v = static_cast<Var>(i);
    if (!t12.contains(v) && f.uses(v))
      throw poly_error("homogeneous_linear_factors: input has variables beyond t1, t2");
  }
  if (!f.is_homogeneous_in(t12))
    throw poly_error("homogeneous_linear_factors: input not homogeneous");

  LinearFactorization out;
  long e1 = -1, e2 = -1;
  for (const auto& [e, c] : f.terms()) {
    long a1 = e[static_cast<unsigned>(Var::t1)];
    long a2 = e[static_cast<unsigned>(Var::t2)];
    e1 = (e1 < 0) ? a1 : std::min(e1, a1);
    e2 = (e2 < 0) ? a2 : std::min(e2, a2);
  }
  MPoly g = f;
  if (e1 > 0) {
    // factor t1^e1 : direction (0 : 1)
    Exponents m{};
    m[static_cast<unsigned>(Var::t1)] = static_cast<std::uint16_t>(e1);
    g = *MPoly::divide_exact(g, MPoly::monomial(m, 1));
    out.factors.push_back({mpz_class(0), mpz_class(1), e1});
  }
  if (e2 > 0) {
    // factor t2^e2 : direction (1 : 0)
    Exponents m{};
    m[static_cast<unsigned>(Var::t2)] = static_cast<std::uint16_t>(e2);
    g = *MPoly::divide_exact(g, MPoly::monomial(m, 1));
    out.factors.push_back({mpz_class(1), mpz_class(0), e2});
  }

  if (g.is_constant()) {
    out.residual = g.normalized();
    return out;
  }

  // dehomogenize at t2 = 1; roots p/q give factors (q t1 - p t2)
  MPoly g1 = g.substitute({{Var::t2, MPoly(mpq_class(1))}});
  UPoly u = upoly_from(g1, Var::t1);
  auto roots = upoly_rational_roots(u);
  MPoly rest = g;
  for (const auto& [r, mult] : roots) {
    mpz_class p = r.get_num(), q = r.get_den();
    LinearFactor lf{p, q, mult};
    MPoly fac = linear_factor_poly(lf);
    for (long k = 0; k < mult; ++k) {
      auto d = MPoly::divide_exact(rest, fac);
      if (!d) throw poly_error("homogeneous_linear_factors: inexact factor division");
      rest = *d;
    }
    out.factors.push_back(lf);
  }
  out.residual = rest.normalized();
  return out;
}

}  // namespace blx
