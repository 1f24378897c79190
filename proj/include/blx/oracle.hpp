#ifndef BLX_ORACLE_HPP
#define BLX_ORACLE_HPP

#include <vector>

#include "blx/mpoly.hpp"
#include "blx/transform.hpp"

namespace blx {

class oracle_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Intersection number at A of the affine curves f = 0, g = 0 in the
// variables (t1, t2), by the classical recursive reduction on the
// restrictions to t2 = const lines. Throws if the curves share a
// component through A.
long local_intersection_multiplicity(const MPoly& f, const MPoly& g,
                                     const mpq_class& a1, const mpq_class& a2);

// Second, independent route: dimension of the truncated local algebra at A,
// grown until two consecutive truncation levels agree.
long local_algebra_multiplicity(const MPoly& f, const MPoly& g,
                                const mpq_class& a1, const mpq_class& a2,
                                long max_level = 64);

struct LocalMultResult {
  long value = 0;
  std::vector<std::uint64_t> seeds_used;
  int agreement_count = 0;
};

// Specializes the generic-coefficient variables of f, g to random integers
// in [-50, 50] and computes the local intersection number at A; requires
// agreement across `votes` specializations.
LocalMultResult specialized_local_multiplicity(const MPoly& f, const MPoly& g,
                                               const mpq_class& a1, const mpq_class& a2,
                                               std::uint64_t seed, int votes = 3);

// Number of points of the plane over the algebraic closure mapping to a
// random rational target under the map with the given components
// (base points excluded). The components must satisfy the standing
// hypotheses and define a dominant map.
long fiber_count_plane(const std::vector<MPoly>& s, std::uint64_t seed);

}  // namespace blx

#endif
