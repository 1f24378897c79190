#include "blx/composition.hpp"

#include <algorithm>

#include "blx/parse.hpp"

namespace blx {

namespace {

constexpr VarSet kT = VarSet::of_block(Block::T);

std::array<MPoly, 4> raw_composition(const ParamSurface& Q, const PlaneMap& S) {
  std::map<Var, MPoly> sub{{Var::t1, S.s[0]}, {Var::t2, S.s[1]}, {Var::t3, S.s[2]}};
  std::array<MPoly, 4> raw;
  for (std::size_t i = 0; i < 4; ++i) raw[i] = Q.p[i].substitute(sub);
  return raw;
}

// normalized surface report in the original coordinates of `P`
BaseLocusReport surface_report(const ParamSurface& P, char path, const CompositionOptions& opt,
                               std::uint64_t salt) {
  NormalizedSurface n = normalize_surface(P, opt.seed ^ salt, opt.coeff_bound);
  MultOptions m;
  m.path = path;
  m.trials = opt.trials;
  m.seed = opt.seed ^ salt;
  m.coeff_bound = opt.coeff_bound;
  BaseLocusReport rep = mult_base_locus(n.surface, m);
  for (auto& bp : rep.rational_points)
    bp.point_original = n.param_change.apply_point(bp.point);
  return rep;
}

PlaneMapReport plane_report(const PlaneMap& S, const CompositionOptions& opt,
                            std::uint64_t salt) {
  NormalizedPlaneMap n = normalize_plane_map(S, opt.seed ^ salt, opt.coeff_bound);
  PlaneMultOptions m;
  m.path = opt.plane_path;
  m.trials = opt.trials;
  m.seed = opt.seed ^ salt;
  m.coeff_bound = opt.coeff_bound;
  PlaneMapReport rep = plane_map_report(n.map, m);
  for (auto& bp : rep.rational_points)
    bp.point_original = n.param_change.apply_point(bp.point);
  return rep;
}

}  // namespace

CompositionReport compose(const ParamSurface& Q, const PlaneMap& S) {
  CompositionReport rep;
  rep.raw = raw_composition(Q, S);
  rep.common_factor =
      gcd_multi({rep.raw[0], rep.raw[1], rep.raw[2], rep.raw[3]});
  std::array<MPoly, 4> reduced;
  for (std::size_t i = 0; i < 4; ++i) {
    auto q = MPoly::divide_exact(rep.raw[i], rep.common_factor);
    if (!q) throw poly_error("compose: gcd does not divide a raw component");
    reduced[i] = std::move(*q);
  }
  rep.composed = ParamSurface::from_components(reduced);
  rep.deg_q = Q.deg;
  rep.deg_s = S.deg;
  rep.deg_p = rep.composed.deg;
  long hdeg = rep.common_factor.degree_in(kT).value_or(0);
  if (rep.deg_p != rep.deg_q * rep.deg_s - hdeg)
    throw poly_error("compose: degree bookkeeping failed");
  rep.statement_gcd_trivial = rep.common_factor.is_constant();
  rep.statement_degree_multiplies = (rep.deg_p == rep.deg_q * rep.deg_s);
  return rep;
}

CompositionReport check_property_P1(const ParamSurface& Q, const PlaneMap& S,
                                    const CompositionInputs& meta,
                                    const CompositionOptions& opt) {
  if (meta.surfdeg_q <= 0 || meta.degmap_q <= 0)
    throw poly_error("check_property_P1: the image surface degree and map degree of Q "
                     "are required inputs");
  CompositionReport rep = compose(Q, S);

  rep.q_report = surface_report(Q, opt.surface_path, opt, 0x71ULL);
  rep.s_report = plane_report(S, opt, 0x52ULL);
  rep.p_report = surface_report(rep.composed, opt.surface_path, opt, 0x50ULL);

  rep.mult_q = rep.q_report.mult_total;
  rep.mult_s = rep.s_report.mult_total;
  rep.mult_p = rep.p_report.mult_total;
  rep.degmap_s = rep.s_report.degmap;
  rep.degmap_p = meta.degmap_q * rep.degmap_s;

  rep.rhs = rep.deg_s * rep.deg_s * rep.mult_q +
            meta.surfdeg_q * meta.degmap_q * rep.mult_s;
  rep.statement_mult_formula = (rep.mult_p == rep.rhs);
  rep.statements_agree = (rep.statement_gcd_trivial == rep.statement_degree_multiplies) &&
                         (rep.statement_degree_multiplies == rep.statement_mult_formula);

  rep.deg_inequality_holds = rep.deg_p <= rep.deg_q * rep.deg_s;
  rep.mult_inequality_holds = rep.mult_p <= rep.rhs;

  // metadata-consistency identity:
  // deg(P)^2 - deg(Q)^2 deg(S)^2 == mult(B(P)) - rhs
  long lhs = rep.deg_p * rep.deg_p - rep.deg_q * rep.deg_q * rep.deg_s * rep.deg_s;
  rep.degree_mult_identity_holds = (lhs == rep.mult_p - rep.rhs);

  check_no_base_points_Q(rep);
  return rep;
}

void check_no_base_points_Q(CompositionReport& rep) {
  if (rep.mult_q != 0) {
    rep.no_base_points_case_applies = false;
    return;
  }
  rep.no_base_points_case_applies = true;
  rep.nbp_gcd_trivial = rep.common_factor.is_constant();
  rep.nbp_degree_multiplies = (rep.deg_p == rep.deg_q * rep.deg_s);
  rep.nbp_mult_formula = (rep.mult_p == rep.rhs);
}

bool content_power_check(const ParamSurface& Q, const PlaneMap& S,
                         const CompositionInputs& meta, const CompositionOptions& opt,
                         CompositionReport& rep) {
  if (rep.mult_q != 0)
    throw poly_error("content_power_check: requires a base-point-free Q");

  // one parameter change normalizing the composed surface and the plane
  // map simultaneously, so both contents live in the same coordinates
  std::vector<MPoly> joint = rep.composed.component_vector();
  for (const auto& c : S.component_vector()) joint.push_back(c);
  Normalization n = normalize_hypotheses(joint, opt.seed ^ 0xC0ULL, opt.coeff_bound);

  ParamSurface Pn = ParamSurface::from_components(
      {n.components[0], n.components[1], n.components[2], n.components[3]});
  PlaneMap Sn = PlaneMap::from_components(
      {n.components[4], n.components[5], n.components[6]}, opt.seed);

  MultOptions mp;
  mp.path = 'k';
  mp.trials = opt.trials;
  mp.seed = opt.seed ^ 0xA1ULL;
  mp.coeff_bound = opt.coeff_bound;
  BaseLocusReport prep = mult_base_locus(Pn, mp);

  PlaneMultOptions ms;
  ms.path = 'j';
  ms.trials = opt.trials;
  ms.seed = opt.seed ^ 0xA2ULL;
  ms.coeff_bound = opt.coeff_bound;
  PlaneMapReport srep = mult_base_locus_plane(Sn, ms);

  long exponent = meta.surfdeg_q * meta.degmap_q;
  rep.content_power_exponent = exponent;
  rep.content_p = prep.content;
  rep.content_s = srep.content;
  MPoly powered = srep.content.pow(static_cast<unsigned long>(exponent)).normalized();
  rep.content_power_holds = (powered == prep.content);
  long dc_p = prep.content.degree_in(kT).value_or(0);
  long dc_s = srep.content.degree_in(kT).value_or(0);
  rep.content_power_degree_holds = (dc_p == exponent * dc_s);
  return *rep.content_power_holds;
}

}  // namespace blx
