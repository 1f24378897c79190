#ifndef BLX_COMPOSITION_HPP
#define BLX_COMPOSITION_HPP

#include <array>
#include <optional>

#include "blx/baselocus.hpp"
#include "blx/planemaps.hpp"

namespace blx {

// Metadata a composition analysis cannot derive on its own: the degree of
// the image surface of Q and the degree of the map induced by Q.
struct CompositionInputs {
  long surfdeg_q = 0;
  long degmap_q = 0;
};

struct CompositionReport {
  std::array<MPoly, 4> raw;   // q_i(s1, s2, s3)
  MPoly common_factor;        // h = gcd of the raw components
  ParamSurface composed;      // raw / h
  long deg_q = 0, deg_s = 0, deg_p = 0;

  BaseLocusReport q_report;
  PlaneMapReport s_report;
  BaseLocusReport p_report;

  long mult_q = 0, mult_s = 0, mult_p = 0;
  long rhs = 0;  // deg(S)^2 mult(B(Q)) + surfdeg(Q) degmap(Q) mult(B(S))

  bool statement_gcd_trivial = false;
  bool statement_degree_multiplies = false;
  bool statement_mult_formula = false;
  bool statements_agree = false;

  bool deg_inequality_holds = false;   // deg(P) <= deg(Q) deg(S)
  bool mult_inequality_holds = false;  // mult(B(P)) <= rhs
  bool degree_mult_identity_holds = false;  // metadata-consistency identity

  long degmap_s = 0;
  long degmap_p = 0;

  // populated by check_no_base_points_Q when mult(B(Q)) = 0
  std::optional<bool> no_base_points_case_applies;
  std::optional<bool> nbp_gcd_trivial;
  std::optional<bool> nbp_degree_multiplies;
  std::optional<bool> nbp_mult_formula;

  // populated by content_power_check
  std::optional<bool> content_power_holds;
  std::optional<bool> content_power_degree_holds;
  long content_power_exponent = 0;
  MPoly content_p;
  MPoly content_s;
};

struct CompositionOptions {
  unsigned trials = 25;
  std::uint64_t seed = 0;
  long coeff_bound = 10;
  char surface_path = 'k';
  char plane_path = 'j';
};

// Raw composition, gcd extraction and degree bookkeeping only.
CompositionReport compose(const ParamSurface& Q, const PlaneMap& S);

// Full equivalence analysis of gcd triviality, degree multiplicativity and
// the multiplicity formula, plus both inequalities.
CompositionReport check_property_P1(const ParamSurface& Q, const PlaneMap& S,
                                    const CompositionInputs& meta,
                                    const CompositionOptions& opt);

// Assertions available when Q has no base points; extends a P1 report.
void check_no_base_points_Q(CompositionReport& rep);

// When Q has no base points: the content of the composed surface's
// resultant is the content of the plane map's resultant raised to
// surfdeg(Q) * degmap(Q). Both contents are computed after one shared
// parameter normalization so they live in the same coordinates.
bool content_power_check(const ParamSurface& Q, const PlaneMap& S,
                         const CompositionInputs& meta, const CompositionOptions& opt,
                         CompositionReport& rep);

}  // namespace blx

#endif
