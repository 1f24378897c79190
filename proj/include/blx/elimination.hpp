#ifndef BLX_ELIMINATION_HPP
#define BLX_ELIMINATION_HPP

#include <utility>
#include <vector>

#include "blx/mpoly.hpp"

namespace blx {

// Sylvester resultant eliminating v, exact over the polynomial ring in the
// remaining variables. Rejects the degenerate case where both inputs are
// free of v.
MPoly resultant(const MPoly& f, const MPoly& g, Var v);

// Resultant in t3 of two polynomials homogeneous in the parameter block,
// both of full t3-degree. Works on the t2 = 1 slice and restores
// the homogeneous result of degree deg_t(f) * deg_t(g); agrees with
// resultant() exactly.
MPoly resultant_t3_homogeneous(const MPoly& f, const MPoly& g);

struct ContentSplit {
  MPoly content;    // free of the block
  MPoly primpart;   // content * primpart == input
  VarSet block;
};

// Content (gcd of the block-monomial coefficients) and primitive part of a
// non-zero polynomial with respect to a variable block.
ContentSplit content_split(const MPoly& f, VarSet block);

struct LinearFactor {
  // Factor b*t1 - a*t2 of a {t1,t2}-homogeneous form, for the direction
  // (a : b); a,b coprime integers, b > 0 or (b == 0 and a > 0).
  mpz_class a;
  mpz_class b;
  long multiplicity;
};

struct LinearFactorization {
  std::vector<LinearFactor> factors;
  MPoly residual;  // product of the irreducible non-linear factors
};

// All rational linear factors of a non-zero {t1,t2}-homogeneous form.
LinearFactorization homogeneous_linear_factors(const MPoly& f);

MPoly linear_factor_poly(const LinearFactor& lf);

// ---- exact univariate helpers (dense, index = exponent) ----

using UPoly = std::vector<mpq_class>;

UPoly upoly_from(const MPoly& f, Var v);
void upoly_trim(UPoly& u);
long upoly_deg(const UPoly& u);  // -1 for zero
mpq_class upoly_eval(const UPoly& u, const mpq_class& x);
UPoly upoly_derivative(const UPoly& u);
UPoly upoly_gcd(UPoly a, UPoly b);  // monic gcd over the rationals

// Distinct-root count of the square-free part over the algebraic closure.
long upoly_distinct_root_count(const UPoly& u);

// All rational roots with multiplicities.
std::vector<std::pair<mpq_class, long>> upoly_rational_roots(const UPoly& u);

}  // namespace blx

#endif
