#include "blx/oracle.hpp"

#include <algorithm>

#include "blx/elimination.hpp"

namespace blx {

namespace {

MPoly translate_to_origin(const MPoly& f, const mpq_class& a1, const mpq_class& a2) {
  std::map<Var, MPoly> sigma{
      {Var::t1, MPoly::variable(Var::t1) + MPoly(a1)},
      {Var::t2, MPoly::variable(Var::t2) + MPoly(a2)},
  };
  return f.substitute(sigma);
}

// order of vanishing at 0 of a univariate polynomial in t1
long order_at_zero(const MPoly& u) {
  long ord = -1;
  for (const auto& [e, c] : u.terms()) {
    long k = e[static_cast<unsigned>(Var::t1)];
    ord = (ord < 0) ? k : std::min(ord, k);
  }
  return ord;
}

long imult_origin(MPoly f, MPoly g, int depth = 0) {
  if (depth > 4000) throw oracle_error("intersection multiplicity: recursion limit");
  auto vanishes = [](const MPoly& p) {
    return p.substitute_values({{Var::t1, 0}, {Var::t2, 0}}).constant_value() == 0;
  };
  if (!vanishes(f) || !vanishes(g)) return 0;

  MPoly a = f.substitute({{Var::t2, MPoly()}});  // f(t1, 0)
  MPoly b = g.substitute({{Var::t2, MPoly()}});
  if (a.is_zero() && b.is_zero())
    throw oracle_error("intersection multiplicity: common component through the point");
  if (a.is_zero()) {
    auto h = MPoly::divide_exact(f, MPoly::variable(Var::t2));
    if (!h) throw oracle_error("intersection multiplicity: expected a t2 factor");
    return order_at_zero(b) + imult_origin(*h, g, depth + 1);
  }
  if (b.is_zero()) {
    auto h = MPoly::divide_exact(g, MPoly::variable(Var::t2));
    if (!h) throw oracle_error("intersection multiplicity: expected a t2 factor");
    return order_at_zero(a) + imult_origin(f, *h, depth + 1);
  }
  long da = a.degree_in(Var::t1).value_or(0);
  long db = b.degree_in(Var::t1).value_or(0);
  if (da > db) return imult_origin(g, f, depth + 1);
  // kill the leading t1-term of g's restriction
  mpq_class ratio = b.leading_coeff_in(Var::t1).constant_value() /
                    a.leading_coeff_in(Var::t1).constant_value();
  Exponents sh{};
  sh[static_cast<unsigned>(Var::t1)] = static_cast<std::uint16_t>(db - da);
  MPoly g2 = g - MPoly::monomial(sh, ratio) * f;
  return imult_origin(f, g2, depth + 1);
}

}  // namespace

long local_intersection_multiplicity(const MPoly& f, const MPoly& g,
                                     const mpq_class& a1, const mpq_class& a2) {
  MPoly d = gcd_multi(f, g);
  if (!d.is_constant() &&
      d.substitute_values({{Var::t1, a1}, {Var::t2, a2}}).constant_value() == 0)
    throw oracle_error("intersection multiplicity is infinite: common component through A");
  MPoly ft = translate_to_origin(f, a1, a2);
  MPoly gt = translate_to_origin(g, a1, a2);
  return imult_origin(ft, gt);
}

long local_algebra_multiplicity(const MPoly& f, const MPoly& g,
                                const mpq_class& a1, const mpq_class& a2,
                                long max_level) {
  MPoly ft = translate_to_origin(f, a1, a2);
  MPoly gt = translate_to_origin(g, a1, a2);

  auto truncated_dim = [&](long level) -> long {
    // monomials of total degree <= level in t1, t2
    std::vector<std::pair<long, long>> mons;
    for (long d = 0; d <= level; ++d)
      for (long i = 0; i <= d; ++i) mons.emplace_back(i, d - i);
    std::map<std::pair<long, long>, std::size_t> index;
    for (std::size_t i = 0; i < mons.size(); ++i) index[mons[i]] = i;

    // rows: truncations of m*f and m*g for all monomials m of degree <= level
    std::vector<std::vector<mpq_class>> rows;
    for (const MPoly* base : {&ft, &gt}) {
      for (const auto& [i, j] : mons) {
        Exponents e{};
        e[static_cast<unsigned>(Var::t1)] = static_cast<std::uint16_t>(i);
        e[static_cast<unsigned>(Var::t2)] = static_cast<std::uint16_t>(j);
        MPoly prod = MPoly::monomial(e, 1) * (*base);
        std::vector<mpq_class> row(mons.size(), 0);
        bool nonzero = false;
        for (const auto& [ex, c] : prod.terms()) {
          long u = ex[static_cast<unsigned>(Var::t1)];
          long v = ex[static_cast<unsigned>(Var::t2)];
          if (u + v > level) continue;
          row[index[{u, v}]] = c;
          nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(row));
      }
    }
    // rank by Gaussian elimination over the rationals
    std::size_t rank = 0, cols = mons.size();
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
      std::size_t pivot = rank;
      while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
      if (pivot == rows.size()) continue;
      std::swap(rows[pivot], rows[rank]);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == rank || rows[r][col] == 0) continue;
        mpq_class fac = rows[r][col] / rows[rank][col];
        for (std::size_t c2 = col; c2 < cols; ++c2) rows[r][c2] -= fac * rows[rank][c2];
      }
      ++rank;
    }
    return static_cast<long>(mons.size()) - static_cast<long>(rank);
  };

  long prev = -1;
  for (long level = 1; level <= max_level; ++level) {
    long dim = truncated_dim(level);
    if (dim == prev) return dim;
    prev = dim;
  }
  throw oracle_error("local algebra dimension did not stabilize");
}

LocalMultResult specialized_local_multiplicity(const MPoly& f, const MPoly& g,
                                               const mpq_class& a1, const mpq_class& a2,
                                               std::uint64_t seed, int votes) {
  LocalMultResult res;
  Rng rng(seed ^ 0x0bacULL);
  long agreed = -1;
  int done = 0;
  for (int attempt = 0; attempt < votes * 4 && done < votes; ++attempt) {
    std::uint64_t sub_seed = rng.next();
    Rng sub(sub_seed);
    std::map<Var, mpq_class> vals;
    VarSet coeff = VarSet::of_block(Block::X) | VarSet::of_block(Block::Y);
    for (std::size_t i = 0; i < kNumVars; ++i) {
      Var v = static_cast<Var>(i);
      if (coeff.contains(v) && (f.uses(v) || g.uses(v))) vals[v] = mpq_class(sub.integer(50));
    }
    MPoly fs = f.substitute_values(vals), gs = g.substitute_values(vals);
    long m;
    try {
      m = local_intersection_multiplicity(fs, gs, a1, a2);
    } catch (const oracle_error&) {
      continue;  // degenerate specialization, resample
    }
    if (agreed < 0) {
      agreed = m;
    } else if (m != agreed) {
      throw oracle_error("specialized multiplicities disagree across seeds");
    }
    res.seeds_used.push_back(sub_seed);
    ++done;
  }
  if (done < votes) throw oracle_error("not enough successful specializations");
  res.value = agreed;
  res.agreement_count = done;
  return res;
}

namespace {

// distinct projective roots of a nonzero {t1,t2}-homogeneous form
long distinct_line_count(const MPoly& r) {
  long e2 = -1;
  for (const auto& [e, c] : r.terms()) {
    long k = e[static_cast<unsigned>(Var::t2)];
    e2 = (e2 < 0) ? k : std::min(e2, k);
  }
  MPoly slice = r.substitute({{Var::t2, MPoly(mpq_class(1))}});
  UPoly u = upoly_from(slice, Var::t1);
  long n = upoly_distinct_root_count(u);
  return n + (e2 > 0 ? 1 : 0);
}

MPoly squarefree_homogeneous(const MPoly& r) {
  // r = t2^e * core; square-free part = (e>0 ? t2 : 1) * sf(core)
  long e2 = -1;
  for (const auto& [e, c] : r.terms()) {
    long k = e[static_cast<unsigned>(Var::t2)];
    e2 = (e2 < 0) ? k : std::min(e2, k);
  }
  MPoly slice = r.substitute({{Var::t2, MPoly(mpq_class(1))}});
  UPoly u = upoly_from(slice, Var::t1);
  upoly_trim(u);
  UPoly g = upoly_gcd(u, upoly_derivative(u));
  // sf = u / g
  UPoly sf(u.size() - g.size() + 1, mpq_class(0));
  UPoly rem = u;
  while (!rem.empty() && upoly_deg(rem) >= upoly_deg(g)) {
    mpq_class c = rem.back() / g.back();
    std::size_t shift = rem.size() - g.size();
    sf[shift] = c;
    for (std::size_t i = 0; i < g.size(); ++i) rem[i + shift] -= c * g[i];
    rem.pop_back();
    upoly_trim(rem);
  }
  upoly_trim(sf);
  long d = upoly_deg(sf);
  MPoly out;
  for (long k = 0; k <= d; ++k) {
    if (sf[static_cast<std::size_t>(k)] == 0) continue;
    Exponents e{};
    e[static_cast<unsigned>(Var::t1)] = static_cast<std::uint16_t>(k);
    e[static_cast<unsigned>(Var::t2)] = static_cast<std::uint16_t>(d - k);
    out += MPoly::monomial(e, sf[static_cast<std::size_t>(k)]);
  }
  if (e2 > 0) out *= MPoly::variable(Var::t2);
  return out.normalized();
}

}  // namespace

long fiber_count_plane(const std::vector<MPoly>& s, std::uint64_t seed) {
  if (s.size() != 3) throw oracle_error("fiber_count_plane: expected three components");
  Rng rng(seed ^ 0xf1beull);

  for (int attempt = 0; attempt < 5; ++attempt) {
    // two random rational targets taken from the image
    std::vector<std::vector<mpq_class>> targets;
    while (targets.size() < 2) {
      mpq_class w1(rng.integer(40)), w2(rng.integer(40)), w3(rng.integer(40));
      if (w3 == 0) continue;
      std::map<Var, mpq_class> pt{{Var::t1, w1}, {Var::t2, w2}, {Var::t3, w3}};
      std::vector<mpq_class> tgt;
      bool ok = true;
      for (const auto& c : s) {
        mpq_class v = c.substitute_values(pt).constant_value();
        if (v == 0) ok = false;
        tgt.push_back(v);
      }
      if (ok) targets.push_back(std::move(tgt));
    }

    // one shear shared by both targets so base lines cancel in the gcd
    ProjTransform shear = ProjTransform::identity(2);
    shear.m[0][2] = rng.integer(25);
    shear.m[1][2] = rng.integer(25);

    std::vector<MPoly> sf_parts;
    std::vector<long> counts;
    bool degenerate = false;
    for (const auto& tgt : targets) {
      // pullbacks of two independent lines through the target
      MPoly F = s[0] * tgt[1] - s[1] * tgt[0];
      MPoly G = s[0] * tgt[2] - s[2] * tgt[0];
      std::vector<MPoly> sheared = apply_param(shear, {F, G});
      MPoly Fs = sheared[0], Gs = sheared[1];
      auto at001 = [](const MPoly& p) {
        return p.substitute_values({{Var::t1, 0}, {Var::t2, 0}, {Var::t3, 1}})
            .constant_value();
      };
      if (at001(Fs) == 0 || at001(Gs) == 0) {
        degenerate = true;
        break;
      }
      MPoly R = resultant_t3_homogeneous(Fs, Gs);
      if (R.is_zero()) {
        degenerate = true;
        break;
      }
      sf_parts.push_back(squarefree_homogeneous(R));
      counts.push_back(distinct_line_count(R));
    }
    if (degenerate) continue;

    MPoly base_lines = gcd_multi(sf_parts[0], sf_parts[1]);
    long base_count = base_lines.is_constant()
                          ? 0
                          : distinct_line_count(base_lines);
    long f1 = counts[0] - base_count;
    long f2 = counts[1] - base_count;
    if (f1 == f2 && f1 >= 1) return f1;
  }
  throw oracle_error("fiber_count_plane: targets disagree after 5 attempts");
}

}  // namespace blx
