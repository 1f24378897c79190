#include "blx/planemaps.hpp"

#include <algorithm>

#include "blx/parse.hpp"

namespace blx {

namespace {

constexpr VarSet kT = VarSet::of_block(Block::T);
constexpr VarSet kX3 = VarSet{Var::x1, Var::x2, Var::x3};
constexpr VarSet kY3 = VarSet{Var::y1, Var::y2, Var::y3};
const std::vector<Var> kXVars = {Var::x1, Var::x2, Var::x3};
const std::vector<Var> kYVars = {Var::y1, Var::y2, Var::y3};

}  // namespace

PlaneMap PlaneMap::from_components(std::array<MPoly, 3> comps, std::uint64_t seed) {
  PlaneMap S;
  std::optional<long> deg;
  for (const auto& c : comps) {
    if (c.is_zero()) throw poly_error("plane map components must be non-zero");
    if (!c.is_homogeneous_in(kT))
      throw poly_error("plane map components must be homogeneous in the parameters");
    VarSet used = c.variables();
    for (std::size_t i = 0; i < kNumVars; ++i) {
      Var v = static_cast<Var>(i);
      if (used.contains(v) && block_of(v) != Block::T)
        throw poly_error("plane map components must use only the parameter variables");
    }
    long d = c.degree_in(kT).value_or(0);
    if (deg && *deg != d) throw poly_error("plane map components must share one degree");
    deg = d;
  }
  MPoly g = gcd_multi({comps[0], comps[1], comps[2]});
  if (!g.is_constant())
    throw poly_error("plane map components share the factor " + format_poly(g) +
                     "; divide it out first");
  S.s = std::move(comps);
  S.deg = *deg;

  // dominance: Jacobian of the two affine coordinate functions has rank 2
  // at a random rational point
  Rng rng(seed ^ 0xd0317a7eULL);
  MPoly f1 = S.s[0], f2 = S.s[1], f3 = S.s[2];
  auto d1 = [](const MPoly& f) { return f.derivative(Var::t1); };
  auto d2 = [](const MPoly& f) { return f.derivative(Var::t2); };
  MPoly det = (d1(f1) * f3 - f1 * d1(f3)) * (d2(f2) * f3 - f2 * d2(f3)) -
              (d2(f1) * f3 - f1 * d2(f3)) * (d1(f2) * f3 - f2 * d1(f3));
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::map<Var, mpq_class> pt{{Var::t1, mpq_class(rng.integer(50))},
                                {Var::t2, mpq_class(rng.integer(50))},
                                {Var::t3, mpq_class(1)}};
    if (f3.substitute_values(pt).constant_value() == 0) continue;
    if (det.substitute_values(pt).constant_value() != 0) {
      S.dominance_witness = {pt[Var::t1], pt[Var::t2], pt[Var::t3]};
      return S;
    }
  }
  throw poly_error("plane map is not dominant (Jacobian rank below 2)");
}

bool PlaneMap::hypotheses_hold() const {
  for (const auto& c : s) {
    if (c.substitute_values({{Var::t1, 0}, {Var::t2, 0}, {Var::t3, 1}}).constant_value() == 0)
      return false;
  }
  return true;
}

bool PlaneMap::is_base_point(const std::vector<mpq_class>& a) const {
  for (const auto& c : s) {
    if (c.substitute_values({{Var::t1, a[0]}, {Var::t2, a[1]}, {Var::t3, a[2]}})
            .constant_value() != 0)
      return false;
  }
  return true;
}

NormalizedPlaneMap normalize_plane_map(const PlaneMap& S, std::uint64_t seed, long bound) {
  Normalization n = normalize_hypotheses(S.component_vector(), seed, bound);
  NormalizedPlaneMap out;
  out.map = PlaneMap::from_components({n.components[0], n.components[1], n.components[2]}, seed);
  out.map.hypotheses = n.certificate;
  out.param_change = n.param_change;
  out.image_permutation = n.image_permutation;
  return out;
}

std::pair<MPoly, MPoly> build_V(const PlaneMap& S) {
  MPoly v1, v2;
  for (std::size_t i = 0; i < 3; ++i) {
    v1 += MPoly::variable(kXVars[i]) * S.s[i];
    v2 += MPoly::variable(kYVars[i]) * S.s[i];
  }
  return {v1, v2};
}

std::pair<MPoly, MPoly> build_J(const PlaneMap& S, const ProjTransform& L) {
  if (L.k != 2) throw poly_error("build_J: the transformation must act on the plane");
  std::vector<MPoly> ls = apply_left(L, S.component_vector());
  MPoly j1 = MPoly::variable(Var::x3) * ls[0] - MPoly::variable(Var::x1) * ls[2];
  MPoly j2 = MPoly::variable(Var::x3) * ls[1] - MPoly::variable(Var::x2) * ls[2];
  return {j1, j2};
}

namespace {

struct PlaneCore {
  MPoly content;
  MPoly primpart;
  GenericityCertificate cert;
  ProjTransform L;
  unsigned trials_used = 0;
};

PlaneCore plane_core_v(const std::array<MPoly, 3>& s, const std::optional<ProjTransform>& forced) {
  ProjTransform L = forced ? *forced : ProjTransform::identity(2);
  std::vector<MPoly> comps = apply_left(L, {s[0], s[1], s[2]});
  MPoly v1, v2;
  for (std::size_t i = 0; i < 3; ++i) {
    v1 += MPoly::variable(kXVars[i]) * comps[i];
    v2 += MPoly::variable(kYVars[i]) * comps[i];
  }
  MPoly r = resultant_t3_homogeneous(v1, v2);
  PlaneCore res;
  res.L = L;
  res.cert.checks.push_back({"resultant of the generic curves non-zero", !r.is_zero()});
  if (r.is_zero())
    throw certification_error("generic-coefficient resultant vanished");
  ContentSplit split = content_split(r, kX3 | kY3);
  res.content = split.content.normalized();
  res.primpart = split.primpart.normalized();
  return res;
}

PlaneCore plane_core_j(const std::array<MPoly, 3>& s, unsigned trials, Rng& rng, long bound,
                       const std::optional<ProjTransform>& forced) {
  // anchor, as for surfaces: the generic-coefficient content is the
  // base-point factor for every transformation
  MPoly reference = plane_core_v(s, std::nullopt).content;

  unsigned attempts = 0;
  for (unsigned trial = 0; trial < std::max(trials, 1u); ++trial) {
    ProjTransform L;
    if (forced) {
      if (trial > 0) break;
      L = *forced;
    } else {
      L = (trial == 0) ? ProjTransform::identity(2) : sample_transform(2, rng, bound);
    }
    ++attempts;
    GenericityCertificate cert;
    std::vector<MPoly> ls = apply_left(L, {s[0], s[1], s[2]});
    bool g13 = gcd_multi(ls[0], ls[2]).is_constant();
    bool g23 = gcd_multi(ls[1], ls[2]).is_constant();
    cert.checks.push_back({"gcd(L1(S), L3(S)) = 1", g13});
    cert.checks.push_back({"gcd(L2(S), L3(S)) = 1", g23});
    if (!g13 || !g23) continue;
    MPoly j1 = MPoly::variable(Var::x3) * ls[0] - MPoly::variable(Var::x1) * ls[2];
    MPoly j2 = MPoly::variable(Var::x3) * ls[1] - MPoly::variable(Var::x2) * ls[2];
    long d = s[0].degree_in(kT).value_or(0);
    bool full1 = j1.degree_in(Var::t3).value_or(-1) == d;
    bool full2 = j2.degree_in(Var::t3).value_or(-1) == d;
    cert.checks.push_back({"J1, J2 of full t3-degree", full1 && full2});
    if (!full1 || !full2) continue;
    MPoly r = resultant_t3_homogeneous(j1, j2);
    cert.checks.push_back({"Res_t3(J1, J2) != 0", !r.is_zero()});
    if (r.is_zero()) continue;
    ContentSplit split = content_split(r, kX3);
    MPoly content = split.content.normalized();
    bool anchored = (content == reference);
    cert.checks.push_back({"content agrees with the generic-coefficient family", anchored});
    if (!anchored) continue;
    PlaneCore res;
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

PlaneCore plane_core(const std::array<MPoly, 3>& s, char path, unsigned trials, Rng& rng,
                     long bound, const std::optional<ProjTransform>& forced) {
  if (path == 'v') return plane_core_v(s, forced);
  return plane_core_j(s, trials, rng, bound, forced);
}

// Per-point attribution reuses the surface machinery through the
// associated parametrization, which has the same base locus.
ParamSurface associated_unchecked(const PlaneMap& S) {
  return ParamSurface::from_components({S.s[0], S.s[1], S.s[1], S.s[2]});
}

}  // namespace

PlaneMapReport mult_base_locus_plane(const PlaneMap& S, const PlaneMultOptions& opt) {
  if (!S.hypotheses_hold())
    throw poly_error("mult_base_locus_plane: map does not satisfy the standing hypotheses");
  Rng rng(opt.seed ^ 0x9a7eULL);
  PlaneCore core = plane_core(S.s, opt.path, opt.trials, rng, opt.coeff_bound,
                              opt.forced_transform);

  PlaneMapReport rep;
  rep.deg_s = S.deg;
  rep.path = opt.path;
  rep.seed = opt.seed;
  rep.content = core.content;
  rep.primpart = core.primpart;
  rep.primpart_degree = core.primpart.degree_in(kT).value_or(0);
  rep.mult_total = core.content.degree_in(kT).value_or(0);
  rep.genericity = core.cert;
  rep.transform_used = core.L;
  rep.trials_used = core.trials_used;

  if (opt.validate) {
    PlaneCore other = plane_core(S.s, opt.path == 'v' ? 'j' : 'v', opt.trials, rng,
                                 opt.coeff_bound, std::nullopt);
    bool deg_agree = other.content.degree_in(kT).value_or(0) == rep.mult_total;
    bool content_agree = other.content == rep.content;
    rep.genericity.checks.push_back({"content degree agrees across both curve families", deg_agree});
    rep.genericity.checks.push_back({"content agrees across both curve families", content_agree});
    if (!deg_agree || !content_agree)
      throw certification_error("the two curve families disagree on the content");
  }

  // attribution via the associated surface (identical base locus)
  ParamSurface P = associated_unchecked(S);
  MultOptions sopt;
  sopt.path = opt.path == 'v' ? 'w' : 'k';
  sopt.trials = opt.trials;
  sopt.seed = opt.seed;
  sopt.coeff_bound = opt.coeff_bound;
  BaseLocusReport srep = mult_base_locus(P, sopt);
  if (srep.mult_total != rep.mult_total)
    throw certification_error("plane map and associated surface disagree on the multiplicity");
  rep.rational_points = srep.rational_points;
  rep.residual_degree = srep.residual_degree;
  return rep;
}

long degmap_plane(const PlaneMap& S, const PlaneMultOptions& opt) {
  PlaneMapReport rep = mult_base_locus_plane(S, opt);
  long d = S.deg * S.deg - rep.mult_total;
  if (d < 1)
    throw certification_error("degmap came out non-positive; the map is not dominant "
                              "or an upstream computation failed");
  return d;
}

bool is_birational(const PlaneMap& S, const PlaneMultOptions& opt) {
  return degmap_plane(S, opt) == 1;
}

PlaneMapReport plane_map_report(const PlaneMap& S, const PlaneMultOptions& opt) {
  PlaneMapReport rep = mult_base_locus_plane(S, opt);
  rep.degmap = S.deg * S.deg - rep.mult_total;
  if (rep.degmap < 1)
    throw certification_error("degmap came out non-positive; the map is not dominant "
                              "or an upstream computation failed");
  rep.birational = (rep.degmap == 1);
  return rep;
}

ParamSurface associated_surface_param(const PlaneMap& S) {
  ParamSurface P = associated_unchecked(S);
  P.known_degmap = std::nullopt;
  P.known_surface_degree = 1;
  P.surface_degree_provenance = "image is the plane u2 = u3";
  return P;
}

IrreducibilityReport check_J_irreducible(const PlaneMap& S, const ProjTransform& L) {
  std::vector<MPoly> ls = apply_left(L, S.component_vector());
  IrreducibilityReport rep;
  rep.j1_irreducible = gcd_multi(ls[0], ls[2]).is_constant();
  rep.j2_irreducible = gcd_multi(ls[1], ls[2]).is_constant();
  rep.certified = true;
  return rep;
}

bool verify_inverse_parametrizes_J(const PlaneMap& S, const ProjTransform& L,
                                   const std::array<MPoly, 3>& rinv) {
  std::vector<MPoly> ls = apply_left(L, S.component_vector());

  // composition check: (L o S)(rinv) must be the identity up to a factor
  std::map<Var, MPoly> sub{{Var::t1, rinv[0]}, {Var::t2, rinv[1]}, {Var::t3, rinv[2]}};
  std::array<MPoly, 3> comp;
  for (std::size_t i = 0; i < 3; ++i) comp[i] = ls[i].substitute(sub);
  std::array<MPoly, 3> tv{MPoly::variable(Var::t1), MPoly::variable(Var::t2),
                          MPoly::variable(Var::t3)};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (!(comp[i] * tv[j] - comp[j] * tv[i]).is_zero())
        throw poly_error("the supplied map is not an inverse of the transformed map");
    }
  }

  MPoly j1 = MPoly::variable(Var::x3) * ls[0] - MPoly::variable(Var::x1) * ls[2];
  MPoly j2 = MPoly::variable(Var::x3) * ls[1] - MPoly::variable(Var::x2) * ls[2];

  // curve parametrizations: substitute, homogenize in h1 with h2 to a
  // common degree, and plug into J
  auto parametrization = [&](Var a, Var b, Var c) -> std::array<MPoly, 3> {
    std::array<MPoly, 3> out;
    long dmax = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      std::map<Var, MPoly> sigma{{Var::t1, MPoly::variable(a)},
                                 {Var::t2, MPoly::variable(b)},
                                 {Var::t3, MPoly::variable(c)}};
      out[i] = rinv[i].substitute(sigma);
      dmax = std::max(dmax, out[i].degree_in(Var::h1).value_or(0));
    }
    for (std::size_t i = 0; i < 3; ++i) {
      MPoly hom;
      for (const auto& [e, coeff] : out[i].terms()) {
        long d1 = e[static_cast<unsigned>(Var::h1)];
        Exponents e2 = e;
        e2[static_cast<unsigned>(Var::h2)] = static_cast<std::uint16_t>(dmax - d1);
        hom += MPoly::monomial(e2, coeff);
      }
      out[i] = hom;
    }
    return out;
  };

  auto j1_param = parametrization(Var::x1, Var::h1, Var::x3);
  auto j2_param = parametrization(Var::h1, Var::x2, Var::x3);
  MPoly check1 = j1.substitute(
      {{Var::t1, j1_param[0]}, {Var::t2, j1_param[1]}, {Var::t3, j1_param[2]}});
  MPoly check2 = j2.substitute(
      {{Var::t1, j2_param[0]}, {Var::t2, j2_param[1]}, {Var::t3, j2_param[2]}});
  return check1.is_zero() && check2.is_zero();
}

}  // namespace blx
