#ifndef BLX_PLANEMAPS_HPP
#define BLX_PLANEMAPS_HPP

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "blx/baselocus.hpp"
#include "blx/mpoly.hpp"
#include "blx/transform.hpp"

namespace blx {

// Dominant rational self-map (s1 : s2 : s3) of the projective plane.
struct PlaneMap {
  std::array<MPoly, 3> s;
  long deg = 0;
  HypothesisCertificate hypotheses;
  std::vector<mpq_class> dominance_witness;  // rational point with full Jacobian rank

  static PlaneMap from_components(std::array<MPoly, 3> comps, std::uint64_t seed = 0);
  std::vector<MPoly> component_vector() const { return {s[0], s[1], s[2]}; }
  bool hypotheses_hold() const;
  bool is_base_point(const std::vector<mpq_class>& a) const;
};

struct NormalizedPlaneMap {
  PlaneMap map;
  ProjTransform param_change;
  ProjTransform image_permutation;
};

NormalizedPlaneMap normalize_plane_map(const PlaneMap& S, std::uint64_t seed,
                                       long bound = 10);

std::pair<MPoly, MPoly> build_V(const PlaneMap& S);
// J1 = x3 L1(S) - x1 L3(S), J2 = x3 L2(S) - x2 L3(S) for invertible L.
std::pair<MPoly, MPoly> build_J(const PlaneMap& S, const ProjTransform& L);

struct PlaneMapReport {
  long deg_s = 0;
  long mult_total = 0;
  long degmap = 0;
  bool birational = false;
  MPoly content;
  MPoly primpart;
  long primpart_degree = 0;
  std::vector<RationalBasePoint> rational_points;
  long residual_degree = 0;
  GenericityCertificate genericity;
  char path = 'j';
  ProjTransform transform_used;
  std::uint64_t seed = 0;
  unsigned trials_used = 0;
};

struct PlaneMultOptions {
  char path = 'j';  // 'v' or 'j'
  unsigned trials = 25;
  std::uint64_t seed = 0;
  long coeff_bound = 10;
  bool validate = false;
  std::optional<ProjTransform> forced_transform;
};

// Base-locus multiplicity of a normalized plane map; fills everything in
// PlaneMapReport except the degmap/birational entries.
PlaneMapReport mult_base_locus_plane(const PlaneMap& S, const PlaneMultOptions& opt);

// degmap = deg^2 - mult, which must be a positive integer.
long degmap_plane(const PlaneMap& S, const PlaneMultOptions& opt);
bool is_birational(const PlaneMap& S, const PlaneMultOptions& opt);

// Full report: multiplicity, map degree, birationality.
PlaneMapReport plane_map_report(const PlaneMap& S, const PlaneMultOptions& opt);

// Surface parametrization (s1 : s2 : s2 : s3) with the same base locus.
ParamSurface associated_surface_param(const PlaneMap& S);

struct IrreducibilityReport {
  bool j1_irreducible = false;
  bool j2_irreducible = false;
  bool certified = true;
};

// Irreducibility of J1, J2 over the field generated by the coefficient
// variables. For forms linear in those variables this reduces to a gcd
// condition on the transformed components, so the verdict is exact.
IrreducibilityReport check_J_irreducible(const PlaneMap& S, const ProjTransform& L);

// Checks that the supplied inverse of L o S parametrizes both curves C(J_i)
// through the homogenized substitutions; throws if the composition of
// L o S with the candidate is not the identity up to a common factor.
bool verify_inverse_parametrizes_J(const PlaneMap& S, const ProjTransform& L,
                                   const std::array<MPoly, 3>& rinv);

}  // namespace blx

#endif
