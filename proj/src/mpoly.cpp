#include "blx/mpoly.hpp"

#include <algorithm>

namespace blx {

namespace {

constexpr std::string_view kVarNames[kNumVars] = {
    "t1", "t2", "t3",
    "x1", "x2", "x3", "x4",
    "y1", "y2", "y3", "y4",
    "z11", "z12", "z13", "z21", "z22", "z23", "z31", "z32", "z33",
    "h1", "h2",
    "u1", "u2", "u3", "u4",
};

}  // namespace

std::string_view var_name(Var v) { return kVarNames[static_cast<unsigned>(v)]; }

std::optional<Var> var_by_name(std::string_view name) {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (kVarNames[i] == name) return static_cast<Var>(i);
  }
  return std::nullopt;
}

MPoly::MPoly(const mpq_class& c) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

MPoly MPoly::variable(Var v) {
  Exponents e{};
  e[static_cast<unsigned>(v)] = 1;
  return monomial(e, 1);
}

MPoly MPoly::monomial(const Exponents& e, const mpq_class& c) {
  MPoly p;
  if (c != 0) p.terms_.emplace(e, c);
  return p;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == Exponents{};
}

mpq_class MPoly::constant_value() const {
  if (terms_.empty()) return mpq_class(0);
  if (!is_constant()) throw poly_error("constant_value: polynomial is not constant");
  return terms_.begin()->second;
}

void MPoly::add_term(const Exponents& e, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r(*this);
  r += o;
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
  MPoly r(*this);
  r -= o;
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly r;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e;
      for (std::size_t i = 0; i < kNumVars; ++i) {
        unsigned long s = static_cast<unsigned long>(ea[i]) + eb[i];
        if (s > 0xffffu) throw poly_error("exponent overflow in multiplication");
        e[i] = static_cast<std::uint16_t>(s);
      }
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MPoly& MPoly::operator*=(const MPoly& o) {
  *this = *this * o;
  return *this;
}

MPoly MPoly::operator*(const mpq_class& c) const {
  MPoly r;
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

MPoly operator*(const mpq_class& c, const MPoly& f) { return f * c; }

MPoly MPoly::pow(unsigned long n) const {
  MPoly r(mpq_class(1));
  MPoly base(*this);
  while (n > 0) {
    if (n & 1) r *= base;
    base = (n >>= 1) ? base * base : base;
  }
  return r;
}

std::optional<long> MPoly::degree_in(Var v) const {
  if (terms_.empty()) return std::nullopt;
  long d = 0;
  for (const auto& [e, c] : terms_) d = std::max<long>(d, e[static_cast<unsigned>(v)]);
  return d;
}

std::optional<long> MPoly::degree_in(VarSet s) const {
  if (terms_.empty()) return std::nullopt;
  long d = 0;
  for (const auto& [e, c] : terms_) {
    long t = 0;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (s.contains(static_cast<Var>(i))) t += e[i];
    }
    d = std::max(d, t);
  }
  return d;
}

std::optional<long> MPoly::total_degree() const { return degree_in(VarSet::all()); }

bool MPoly::is_homogeneous_in(VarSet s) const {
  if (terms_.empty()) return true;
  std::optional<long> common;
  for (const auto& [e, c] : terms_) {
    long t = 0;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (s.contains(static_cast<Var>(i))) t += e[i];
    }
    if (!common) {
      common = t;
    } else if (*common != t) {
      return false;
    }
  }
  return true;
}

bool MPoly::uses(Var v) const {
  for (const auto& [e, c] : terms_) {
    if (e[static_cast<unsigned>(v)] > 0) return true;
  }
  return false;
}

VarSet MPoly::variables() const {
  VarSet s;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (e[i] > 0) s.insert(static_cast<Var>(i));
    }
  }
  return s;
}

MPoly MPoly::coeff_of(Var v, long k) const {
  MPoly r;
  auto vi = static_cast<unsigned>(v);
  for (const auto& [e, c] : terms_) {
    if (e[vi] == k) {
      Exponents e2 = e;
      e2[vi] = 0;
      r.terms_.emplace(e2, c);
    }
  }
  return r;
}

MPoly MPoly::leading_coeff_in(Var v) const {
  auto d = degree_in(v);
  if (!d) return MPoly();
  return coeff_of(v, *d);
}

std::vector<std::pair<Exponents, MPoly>> MPoly::collect(VarSet s) const {
  std::map<Exponents, MPoly, GrlexLess> groups;
  for (const auto& [e, c] : terms_) {
    Exponents eblock{}, erest = e;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (s.contains(static_cast<Var>(i))) {
        eblock[i] = e[i];
        erest[i] = 0;
      }
    }
    groups[eblock].add_term(erest, c);
  }
  std::vector<std::pair<Exponents, MPoly>> out;
  out.reserve(groups.size());
  for (auto& [e, p] : groups) out.emplace_back(e, std::move(p));
  return out;
}

MPoly MPoly::derivative(Var v) const {
  MPoly r;
  auto vi = static_cast<unsigned>(v);
  for (const auto& [e, c] : terms_) {
    if (e[vi] == 0) continue;
    Exponents e2 = e;
    e2[vi] -= 1;
    r.add_term(e2, c * mpq_class(static_cast<long>(e[vi])));
  }
  return r;
}

MPoly MPoly::substitute(const std::map<Var, MPoly>& sigma) const {
  // Power cache per substituted variable.
  std::map<Var, std::vector<MPoly>> powers;
  MPoly result;
  for (const auto& [e, c] : terms_) {
    MPoly term(c);
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (e[i] == 0) continue;
      Var v = static_cast<Var>(i);
      auto it = sigma.find(v);
      if (it == sigma.end()) {
        Exponents em{};
        em[i] = e[i];
        term *= monomial(em, 1);
        continue;
      }
      auto& cache = powers[v];
      if (cache.empty()) cache.push_back(MPoly(mpq_class(1)));
      while (cache.size() <= e[i]) cache.push_back(cache.back() * it->second);
      term *= cache[e[i]];
    }
    result += term;
  }
  return result;
}

MPoly MPoly::substitute_values(const std::map<Var, mpq_class>& sigma) const {
  std::map<Var, MPoly> s;
  for (const auto& [v, q] : sigma) s.emplace(v, MPoly(q));
  return substitute(s);
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& num, const MPoly& den) {
  if (den.is_zero()) throw poly_error("division by zero polynomial");
  if (num.is_zero()) return MPoly();
  if (den.is_constant()) return num * (mpq_class(1) / den.constant_value());
  MPoly r = num, q;
  const auto& dlead = *den.terms_.rbegin();
  while (!r.is_zero()) {
    const auto& rlead = *r.terms_.rbegin();
    Exponents e;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (rlead.first[i] < dlead.first[i]) return std::nullopt;
      e[i] = rlead.first[i] - dlead.first[i];
    }
    MPoly t = monomial(e, rlead.second / dlead.second);
    q += t;
    r -= t * den;
  }
  return q;
}

mpq_class MPoly::leading_coeff() const {
  if (terms_.empty()) return mpq_class(0);
  return terms_.rbegin()->second;
}

MPoly MPoly::normalized() const {
  if (terms_.empty()) return MPoly();
  // scale = gcd(numerators)/lcm(denominators), sign from the leading term
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& [e, c] : terms_) {
    mpz_class n = c.get_num(), d = c.get_den();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  mpq_class scale(den_lcm, num_gcd);
  scale.canonicalize();
  mpq_class lead = terms_.rbegin()->second;
  if (lead * scale < 0) scale = -scale;
  return *this * scale;
}

MPoly pseudo_rem(const MPoly& f, const MPoly& g, Var v) {
  auto dg = g.degree_in(v);
  if (!dg) throw poly_error("pseudo_rem: divisor free of the main variable");
  auto df = f.degree_in(v);
  if (!df || *df < *dg) return f;
  MPoly lc_g = g.leading_coeff_in(v);
  MPoly r = f;
  long e = *df - *dg + 1;
  while (!r.is_zero()) {
    auto dr = r.degree_in(v);
    if (!dr || *dr < *dg) break;
    MPoly lc_r = r.coeff_of(v, *dr);
    Exponents shift{};
    shift[static_cast<unsigned>(v)] = static_cast<std::uint16_t>(*dr - *dg);
    r = r * lc_g - MPoly::monomial(shift, 1) * lc_r * g;
    --e;
  }
  for (long k = 0; k < e; ++k) r = r * lc_g;
  return r;
}

namespace {

std::optional<Var> pick_main_var(const MPoly& f, const MPoly& g) {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    Var v = static_cast<Var>(i);
    if (f.uses(v) && g.uses(v)) return v;
  }
  return std::nullopt;
}

}  // namespace

MPoly content_in_var(const MPoly& f, Var v) {
  auto d = f.degree_in(v);
  if (!d) return MPoly();
  MPoly c;
  for (long k = 0; k <= *d; ++k) {
    MPoly coeff = f.coeff_of(v, k);
    if (coeff.is_zero()) continue;
    c = gcd_multi(c, coeff);
    if (c.is_constant()) break;
  }
  return c;
}

MPoly primpart_in_var(const MPoly& f, Var v) {
  if (f.is_zero()) return MPoly();
  MPoly c = content_in_var(f, v);
  auto q = MPoly::divide_exact(f, c);
  if (!q) throw poly_error("primpart_in_var: content does not divide");
  return *q;
}

MPoly gcd_multi(const MPoly& f, const MPoly& g) {
  if (f.is_zero()) return g.normalized();
  if (g.is_zero()) return f.normalized();
  if (f.is_constant() || g.is_constant()) return MPoly(mpq_class(1));
  auto mv = pick_main_var(f, g);
  if (!mv) return MPoly(mpq_class(1));
  Var v = *mv;

  MPoly cf = content_in_var(f, v), cg = content_in_var(g, v);
  MPoly cont = gcd_multi(cf, cg);
  MPoly a = *MPoly::divide_exact(f, cf);
  MPoly b = *MPoly::divide_exact(g, cg);
  if (*a.degree_in(v) < *b.degree_in(v)) std::swap(a, b);

  // primitive polynomial remainder sequence
  while (!b.is_zero()) {
    MPoly r = pseudo_rem(a, b, v);
    a = b;
    b = r.is_zero() ? MPoly() : primpart_in_var(r, v);
  }
  return (cont * a).normalized();
}

MPoly gcd_multi(const std::vector<MPoly>& fs) {
  MPoly g;
  for (const auto& f : fs) {
    g = gcd_multi(g, f);
    if (!g.is_zero() && g.is_constant()) break;
  }
  return g;
}

}  // namespace blx
