#ifndef BLX_BASELOCUS_HPP
#define BLX_BASELOCUS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "blx/elimination.hpp"
#include "blx/mpoly.hpp"
#include "blx/transform.hpp"

namespace blx {

// Projective parametrization (p1 : p2 : p3 : p4) of a surface, components
// homogeneous in the parameters of a common degree with trivial gcd.
struct ParamSurface {
  std::array<MPoly, 4> p;
  long deg = 0;
  HypothesisCertificate hypotheses;
  std::optional<long> known_degmap;
  std::string degmap_provenance;
  std::optional<long> known_surface_degree;
  std::string surface_degree_provenance;

  static ParamSurface from_components(std::array<MPoly, 4> comps);
  std::vector<MPoly> component_vector() const { return {p[0], p[1], p[2], p[3]}; }
  bool hypotheses_hold() const;
  // All components vanish at the point.
  bool is_base_point(const std::vector<mpq_class>& a) const;
};

// Normalization wrapper: surface in new parameter coordinates plus the
// records needed to map results back.
struct NormalizedSurface {
  ParamSurface surface;
  ProjTransform param_change;      // original(l(t)) = normalized
  ProjTransform image_permutation;
};

NormalizedSurface normalize_surface(const ParamSurface& P, std::uint64_t seed,
                                    long bound = 10);

std::pair<MPoly, MPoly> build_W(const ParamSurface& P);
// K1 = x4 L1(P) - x1 L4(P), K2 = x4 L3(P) - x3 L4(P); L must fix the last
// coordinate form (the substitution that removes the second coefficient
// block is only valid there).
std::pair<MPoly, MPoly> build_K(const ParamSurface& P, const ProjTransform& L);

struct GenericityCheck {
  std::string name;
  bool pass = false;
};

struct GenericityCertificate {
  std::vector<GenericityCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct RationalBasePoint {
  std::vector<mpq_class> point;           // coordinates of the analyzed surface
  std::vector<mpq_class> point_original;  // through the recorded normalization
  long multiplicity = 0;                  // share of the content degree
  long curve_multiplicity = 0;            // min vanishing order of the components
  MPoly tangent_cone;
};

struct BaseLocusReport {
  long mult_total = 0;
  MPoly content;    // normalized, in {t1, t2}
  MPoly primpart;   // normalized primitive part of the resultant
  long primpart_degree = 0;
  std::vector<RationalBasePoint> rational_points;
  long residual_degree = 0;
  MPoly residual;
  GenericityCertificate genericity;
  char path = 'k';
  ProjTransform transform_used;
  std::uint64_t seed = 0;
  unsigned trials_used = 0;
  bool validated_against_other_path = false;
};

struct MultOptions {
  char path = 'k';  // 'w' or 'k'
  unsigned trials = 25;
  std::uint64_t seed = 0;
  long coeff_bound = 10;
  bool validate = false;
  std::optional<ProjTransform> forced_transform;
};

// Multiplicity of the base point locus as the parameter degree of the
// content of the resultant of the two auxiliary curves, with per-point
// attribution for the rational base points.
BaseLocusReport mult_base_locus(const ParamSurface& P, const MultOptions& opt);

// Minimum vanishing order of the components at a rational base point.
long point_curve_multiplicity(const ParamSurface& P, const std::vector<mpq_class>& a);

// Weighted sum of the lowest-order forms of the components at a base point,
// homogeneous in {t1, t2} of degree point_curve_multiplicity.
MPoly tangent_cone(const ParamSurface& P, const std::vector<mpq_class>& a);

struct DegreeFormulaReport {
  long deg_p = 0;
  long mult_total = 0;
  long primpart_degree = 0;  // deg_p^2 - mult_total
  std::optional<long> degmap;
  std::string degmap_provenance;
  std::optional<long> surface_degree;
  std::string surface_degree_provenance;
  bool degree_split_holds = false;   // content + primpart degrees == deg_p^2
  bool sqrt_bound_holds = false;     // deg_p >= sqrt(surface_degree * degmap)
  std::optional<bool> birational_case_holds;  // degmap == 1: deg_S == deg_p^2 - mult
  bool nonsquare_obstruction = false;  // degmap == 1 and deg_S not a perfect square
  BaseLocusReport base;
};

// Degree bookkeeping around deg(P)^2 = mult + deg(S) * degmap; one of the
// two unknowns may be supplied and the other is derived (exact division
// enforced).
DegreeFormulaReport degree_formula_report(const ParamSurface& P, const MultOptions& opt,
                                          std::optional<long> degmap,
                                          std::optional<long> surface_degree);

}  // namespace blx

#endif
