#include "blx/baselocus.hpp"

#include <algorithm>

#include "blx/parse.hpp"

namespace blx {

namespace {

constexpr VarSet kT = VarSet::of_block(Block::T);
constexpr VarSet kX = VarSet::of_block(Block::X);
constexpr VarSet kY = VarSet::of_block(Block::Y);
const std::vector<Var> kXVars = {Var::x1, Var::x2, Var::x3, Var::x4};
const std::vector<Var> kYVars = {Var::y1, Var::y2, Var::y3, Var::y4};

mpq_class eval_at(const MPoly& f, const std::vector<mpq_class>& a) {
  return f.substitute_values({{Var::t1, a[0]}, {Var::t2, a[1]}, {Var::t3, a[2]}})
      .constant_value();
}

}  // namespace

ParamSurface ParamSurface::from_components(std::array<MPoly, 4> comps) {
  ParamSurface P;
  std::optional<long> deg;
  for (const auto& c : comps) {
    if (c.is_zero()) continue;
    if (!c.is_homogeneous_in(kT))
      throw poly_error("surface components must be homogeneous in the parameters");
    VarSet used = c.variables();
    for (std::size_t i = 0; i < kNumVars; ++i) {
      Var v = static_cast<Var>(i);
      if (used.contains(v) && block_of(v) != Block::T)
        throw poly_error("surface components must use only the parameter variables");
    }
    long d = c.degree_in(kT).value_or(0);
    if (deg && *deg != d) throw poly_error("surface components must share one degree");
    deg = d;
  }
  if (!deg) throw poly_error("all surface components are zero");
  MPoly g = gcd_multi({comps[0], comps[1], comps[2], comps[3]});
  if (!g.is_constant())
    throw poly_error("surface components share the factor " + format_poly(g) +
                     "; divide it out first");
  P.p = std::move(comps);
  P.deg = *deg;
  return P;
}

bool ParamSurface::hypotheses_hold() const {
  if (p[3].is_zero()) return false;
  for (const auto& c : p) {
    if (c.is_zero()) continue;  // defines no curve
    if (c.substitute_values({{Var::t1, 0}, {Var::t2, 0}, {Var::t3, 1}}).constant_value() == 0)
      return false;
  }
  return true;
}

bool ParamSurface::is_base_point(const std::vector<mpq_class>& a) const {
  for (const auto& c : p)
    if (eval_at(c, a) != 0) return false;
  return true;
}

NormalizedSurface normalize_surface(const ParamSurface& P, std::uint64_t seed, long bound) {
  Normalization n = normalize_hypotheses(P.component_vector(), seed, bound);
  NormalizedSurface out;
  out.surface = ParamSurface::from_components(
      {n.components[0], n.components[1], n.components[2], n.components[3]});
  out.surface.hypotheses = n.certificate;
  out.surface.known_degmap = P.known_degmap;
  out.surface.degmap_provenance = P.degmap_provenance;
  out.surface.known_surface_degree = P.known_surface_degree;
  out.surface.surface_degree_provenance = P.surface_degree_provenance;
  out.param_change = n.param_change;
  out.image_permutation = n.image_permutation;
  return out;
}

std::pair<MPoly, MPoly> build_W(const ParamSurface& P) {
  MPoly w1, w2;
  for (int i = 0; i < 4; ++i) {
    w1 += MPoly::variable(kXVars[static_cast<std::size_t>(i)]) * P.p[static_cast<std::size_t>(i)];
    w2 += MPoly::variable(kYVars[static_cast<std::size_t>(i)]) * P.p[static_cast<std::size_t>(i)];
  }
  return {w1, w2};
}

std::pair<MPoly, MPoly> build_K(const ParamSurface& P, const ProjTransform& L) {
  if (L.k != 3 || !L.is_star())
    throw poly_error("build_K: the transformation must fix the last coordinate form");
  std::vector<MPoly> lp = apply_left(L, P.component_vector());
  MPoly k1 = MPoly::variable(Var::x4) * lp[0] - MPoly::variable(Var::x1) * lp[3];
  MPoly k2 = MPoly::variable(Var::x4) * lp[2] - MPoly::variable(Var::x3) * lp[3];
  return {k1, k2};
}

namespace {

struct CoreResult {
  MPoly content;
  MPoly primpart;
  GenericityCertificate cert;
  ProjTransform L;
  unsigned trials_used = 0;
};

CoreResult mult_core_w(const std::array<MPoly, 4>& p, const std::optional<ProjTransform>& forced) {
  ProjTransform L = forced ? *forced : ProjTransform::identity(3);
  std::vector<MPoly> comps = apply_left(L, {p[0], p[1], p[2], p[3]});
  MPoly w1, w2;
  for (int i = 0; i < 4; ++i) {
    w1 += MPoly::variable(kXVars[static_cast<std::size_t>(i)]) * comps[static_cast<std::size_t>(i)];
    w2 += MPoly::variable(kYVars[static_cast<std::size_t>(i)]) * comps[static_cast<std::size_t>(i)];
  }
  MPoly r = resultant_t3_homogeneous(w1, w2);
  CoreResult res;
  res.L = L;
  res.cert.checks.push_back({"resultant of the generic curves non-zero", !r.is_zero()});
  if (r.is_zero())
    throw certification_error("generic-coefficient resultant vanished");
  ContentSplit split = content_split(r, kX | kY);
  res.content = split.content.normalized();
  res.primpart = split.primpart.normalized();
  return res;
}

CoreResult mult_core_k(const std::array<MPoly, 4>& p, unsigned trials, Rng& rng, long bound,
                       const std::optional<ProjTransform>& forced) {
  // The content of the generic-coefficient resultant equals the base-point
  // factor for every transformation, so it anchors the certificate: a
  // sampled L whose simplified curves produce a larger content is rejected.
  // The gcd conditions alone do not rule that out (the identity can pass
  // them and still fail).
  MPoly reference = mult_core_w(p, std::nullopt).content;

  unsigned attempts = 0;
  for (unsigned trial = 0; trial < std::max(trials, 1u); ++trial) {
    ProjTransform L;
    if (forced) {
      if (trial > 0) break;
      L = *forced;
    } else {
      L = (trial == 0) ? ProjTransform::identity(3) : sample_star_transform(3, rng, bound);
    }
    ++attempts;
    GenericityCertificate cert;
    std::vector<MPoly> lp = apply_left(L, {p[0], p[1], p[2], p[3]});
    bool g14 = gcd_multi(lp[0], lp[3]).is_constant();
    bool g34 = gcd_multi(lp[2], lp[3]).is_constant();
    cert.checks.push_back({"gcd(L1(P), L4(P)) = 1", g14});
    cert.checks.push_back({"gcd(L3(P), L4(P)) = 1", g34});
    if (!g14 || !g34) continue;
    MPoly k1 = MPoly::variable(Var::x4) * lp[0] - MPoly::variable(Var::x1) * lp[3];
    MPoly k2 = MPoly::variable(Var::x4) * lp[2] - MPoly::variable(Var::x3) * lp[3];
    long d = p[0].degree_in(kT).value_or(0);
    for (const auto& c : p) d = std::max(d, c.degree_in(kT).value_or(0));
    bool full1 = k1.degree_in(Var::t3).value_or(-1) == d;
    bool full2 = k2.degree_in(Var::t3).value_or(-1) == d;
    cert.checks.push_back({"K1, K2 of full t3-degree", full1 && full2});
    if (!full1 || !full2) continue;
    MPoly r = resultant_t3_homogeneous(k1, k2);
    cert.checks.push_back({"Res_t3(K1, K2) != 0", !r.is_zero()});
    if (r.is_zero()) continue;
    ContentSplit split = content_split(r, kX);
    MPoly content = split.content.normalized();
    bool anchored = (content == reference);
    cert.checks.push_back({"content agrees with the generic-coefficient family", anchored});
    if (!anchored) continue;
    CoreResult res;
    res.content = std::move(content);
    res.primpart = split.primpart.normalized();
    res.cert = std::move(cert);
    res.L = L;
    res.trials_used = trial + 1;
    return res;
  }
  throw certification_error("no transformation passed the genericity certificate after " +
                            std::to_string(attempts) + " trials");
}

CoreResult mult_core(const std::array<MPoly, 4>& p, char path, unsigned trials, Rng& rng,
                     long bound, const std::optional<ProjTransform>& forced) {
  if (path == 'w') return mult_core_w(p, forced);
  return mult_core_k(p, trials, rng, bound, forced);
}

long content_degree(const MPoly& content) {
  return content.degree_in(kT).value_or(0);
}

struct Attribution {
  std::vector<RationalBasePoint> points;
  long residual_from_lines = 0;  // rational lines carrying no rational point
};

// Matches each rational line factor of the content with the base points on
// that parameter line. nullopt when some line carries more than one base
// point, which a fresh parameter change resolves.
std::optional<Attribution> attribute_points(const std::array<MPoly, 4>& p,
                                            const MPoly& content) {
  Attribution out;
  if (content.is_constant()) return out;
  LinearFactorization fac = homogeneous_linear_factors(content);
  for (const auto& lf : fac.factors) {
    // parameter line through (a : b : *) traced by (a*s : b*s : w), with
    // (s, w) reusing the slots (t1, t2)
    std::map<Var, MPoly> line{
        {Var::t1, MPoly::variable(Var::t1) * mpq_class(lf.a)},
        {Var::t2, MPoly::variable(Var::t1) * mpq_class(lf.b)},
        {Var::t3, MPoly::variable(Var::t2)},
    };
    std::vector<MPoly> restricted;
    for (const auto& c : p) restricted.push_back(c.substitute(line));
    MPoly g = gcd_multi(restricted);
    if (g.is_constant()) return std::nullopt;  // no base point on a content line
    LinearFactorization roots = homogeneous_linear_factors(g);
    if (roots.factors.empty()) {
      out.residual_from_lines += lf.multiplicity;  // conjugate points only
      continue;
    }
    if (roots.factors.size() > 1 || !roots.residual.is_constant()) return std::nullopt;
    const auto& r = roots.factors[0];
    RationalBasePoint bp;
    bp.point = {mpq_class(lf.a * r.a), mpq_class(lf.b * r.a), mpq_class(r.b)};
    bp.multiplicity = lf.multiplicity;
    out.points.push_back(std::move(bp));
  }
  return out;
}

std::vector<mpq_class> normalize_point(std::vector<mpq_class> pt) {
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& c : pt) {
    if (c == 0) continue;
    mpz_class n = c.get_num(), d = c.get_den();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  if (num_gcd == 0) throw poly_error("zero vector is not a projective point");
  mpq_class scale(den_lcm, num_gcd);
  scale.canonicalize();
  // last non-zero coordinate positive
  for (auto it = pt.rbegin(); it != pt.rend(); ++it) {
    if (*it != 0) {
      if (*it * scale < 0) scale = -scale;
      break;
    }
  }
  for (auto& c : pt) c *= scale;
  return pt;
}

}  // namespace

BaseLocusReport mult_base_locus(const ParamSurface& P, const MultOptions& opt) {
  if (!P.hypotheses_hold())
    throw poly_error("mult_base_locus: surface does not satisfy the standing hypotheses");
  Rng rng(opt.seed ^ 0x6a5eULL);
  CoreResult core = mult_core(P.p, opt.path, opt.trials, rng, opt.coeff_bound,
                              opt.forced_transform);

  BaseLocusReport rep;
  rep.path = opt.path;
  rep.seed = opt.seed;
  rep.content = core.content;
  rep.primpart = core.primpart;
  rep.primpart_degree = core.primpart.degree_in(kT).value_or(0);
  rep.mult_total = content_degree(core.content);
  rep.genericity = core.cert;
  rep.transform_used = core.L;
  rep.trials_used = core.trials_used;

  if (opt.validate) {
    CoreResult other = (opt.path == 'w')
                           ? mult_core(P.p, 'k', opt.trials, rng, opt.coeff_bound, std::nullopt)
                           : mult_core(P.p, 'w', opt.trials, rng, opt.coeff_bound, std::nullopt);
    bool deg_agree = content_degree(other.content) == rep.mult_total;
    bool content_agree = other.content == rep.content;
    rep.genericity.checks.push_back({"content degree agrees across both curve families", deg_agree});
    rep.genericity.checks.push_back({"content agrees across both curve families", content_agree});
    if (!deg_agree || !content_agree)
      throw certification_error("the two curve families disagree on the content");
    rep.validated_against_other_path = true;
  }

  std::optional<Attribution> attr = attribute_points(P.p, core.content);
  if (!attr) {
    // colinear base points: recompute behind a fresh parameter change
    for (unsigned retry = 0; retry < opt.trials && !attr; ++retry) {
      ProjTransform shift = sample_star_transform(2, rng, opt.coeff_bound);
      std::vector<MPoly> moved = apply_param(shift, P.component_vector());
      ParamSurface Ps;
      try {
        Ps = ParamSurface::from_components({moved[0], moved[1], moved[2], moved[3]});
      } catch (const poly_error&) {
        continue;
      }
      if (!Ps.hypotheses_hold()) continue;
      CoreResult core2;
      try {
        core2 = mult_core(Ps.p, opt.path, opt.trials, rng, opt.coeff_bound, std::nullopt);
      } catch (const certification_error&) {
        continue;
      }
      auto attr2 = attribute_points(Ps.p, core2.content);
      if (!attr2) continue;
      // map the points back through the shift
      for (auto& bp : attr2->points) bp.point = shift.apply_point(bp.point);
      attr = std::move(attr2);
    }
    if (!attr)
      throw certification_error(
          "could not separate colinear base points within the trial budget");
  }

  long attributed = 0;
  for (auto& bp : attr->points) {
    bp.point = normalize_point(bp.point);
    bp.curve_multiplicity = point_curve_multiplicity(P, bp.point);
    bp.tangent_cone = tangent_cone(P, bp.point);
    attributed += bp.multiplicity;
  }
  std::sort(attr->points.begin(), attr->points.end(),
            [](const RationalBasePoint& a, const RationalBasePoint& b) {
              for (std::size_t i = 0; i < 3; ++i) {
                if (a.point[i] != b.point[i]) return a.point[i] < b.point[i];
              }
              return false;
            });
  rep.rational_points = std::move(attr->points);
  rep.residual_degree = rep.mult_total - attributed;

  // residual polynomial from the primary content
  LinearFactorization fac = homogeneous_linear_factors(core.content);
  rep.residual = fac.residual;
  return rep;
}

long point_curve_multiplicity(const ParamSurface& P, const std::vector<mpq_class>& a) {
  if (!P.is_base_point(a))
    throw poly_error("point_curve_multiplicity: not a base point");
  MPoly cone = tangent_cone(P, a);
  return cone.degree_in(kT).value_or(0);
}

MPoly tangent_cone(const ParamSurface& P, const std::vector<mpq_class>& a) {
  if (a.size() != 3) throw poly_error("tangent_cone: expected a plane point");
  if (!P.is_base_point(a)) throw poly_error("tangent_cone: not a base point");
  // coordinate change sending (0:0:1) to the point: columns e_i, e_j, a
  std::size_t k = 3;
  for (std::size_t i = 3; i-- > 0;) {
    if (a[i] != 0) {
      k = i;
      break;
    }
  }
  ProjTransform tau = ProjTransform::identity(2);
  std::size_t col = 0;
  for (std::size_t j = 0; j < 3; ++j) {
    if (j == k) continue;
    for (std::size_t i = 0; i < 3; ++i) tau.m[i][col] = (i == j) ? 1 : 0;
    ++col;
  }
  for (std::size_t i = 0; i < 3; ++i) tau.m[i][2] = a[i];

  std::vector<MPoly> moved = apply_param(tau, P.component_vector());
  long n = P.deg;
  long min_order = n + 1;
  std::array<long, 4> orders{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (moved[i].is_zero()) {
      orders[i] = n + 1;  // no curve, never attains the minimum
      continue;
    }
    orders[i] = n - moved[i].degree_in(Var::t3).value_or(0);
    min_order = std::min(min_order, orders[i]);
  }
  MPoly cone;
  for (std::size_t i = 0; i < 4; ++i) {
    if (orders[i] != min_order) continue;
    cone += MPoly::variable(kXVars[i]) * moved[i].coeff_of(Var::t3, n - min_order);
  }
  return cone;
}

DegreeFormulaReport degree_formula_report(const ParamSurface& P, const MultOptions& opt,
                                          std::optional<long> degmap,
                                          std::optional<long> surface_degree) {
  DegreeFormulaReport rep;
  rep.base = mult_base_locus(P, opt);
  rep.deg_p = P.deg;
  rep.mult_total = rep.base.mult_total;
  rep.primpart_degree = rep.base.primpart_degree;
  long expected = rep.deg_p * rep.deg_p - rep.mult_total;
  rep.degree_split_holds = (rep.primpart_degree == expected);
  if (!rep.degree_split_holds)
    throw certification_error("degree split failed: content and primitive part degrees "
                              "do not add up to deg^2");

  if (degmap && surface_degree) {
    if (*degmap * *surface_degree != expected)
      throw poly_error("inconsistent data: degmap * surface degree != deg^2 - mult");
    rep.degmap = degmap;
    rep.surface_degree = surface_degree;
    rep.degmap_provenance = rep.surface_degree_provenance = "supplied";
  } else if (degmap) {
    if (*degmap <= 0 || expected % *degmap != 0)
      throw poly_error("deg^2 - mult is not divisible by the supplied degmap");
    rep.degmap = degmap;
    rep.degmap_provenance = "supplied";
    rep.surface_degree = expected / *degmap;
    rep.surface_degree_provenance = "derived from the degree formula";
  } else if (surface_degree) {
    if (*surface_degree <= 0 || expected % *surface_degree != 0)
      throw poly_error("deg^2 - mult is not divisible by the supplied surface degree");
    rep.surface_degree = surface_degree;
    rep.surface_degree_provenance = "supplied";
    rep.degmap = expected / *surface_degree;
    rep.degmap_provenance = "derived from the degree formula";
  }

  rep.sqrt_bound_holds = rep.deg_p * rep.deg_p >= expected;
  if (rep.degmap && *rep.degmap == 1 && rep.surface_degree) {
    rep.birational_case_holds = (*rep.surface_degree == expected);
    long s = *rep.surface_degree;
    long r = 0;
    while (r * r < s) ++r;
    rep.nonsquare_obstruction = (r * r != s);
  }
  return rep;
}

}  // namespace blx
