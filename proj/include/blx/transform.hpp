#ifndef BLX_TRANSFORM_HPP
#define BLX_TRANSFORM_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "blx/mpoly.hpp"

namespace blx {

class certification_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Deterministic 64-bit generator (splitmix64); seeds are explicit inputs
// everywhere, never ambient state.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // uniform integer in [-bound, bound]
  long integer(long bound) {
    auto span = static_cast<std::uint64_t>(2 * bound + 1);
    return static_cast<long>(next() % span) - bound;
  }
  Rng fork() { return Rng(next()); }

 private:
  std::uint64_t state_;
};

// Invertible projective transformation of P^k, k in {2, 3}.
struct ProjTransform {
  int k = 2;
  std::vector<std::vector<mpq_class>> m;  // (k+1) x (k+1)

  static ProjTransform identity(int k);
  static ProjTransform permutation(int k, const std::vector<int>& perm);

  bool is_star() const;  // block form: fixes the last coordinate form
  mpq_class det() const;
  ProjTransform inverse() const;
  ProjTransform compose(const ProjTransform& o) const;  // this after o

  // i-th component as a linear form in the given variables.
  MPoly row_form(std::size_t i, const std::vector<Var>& vars) const;
  // Image of a rational point (projective coordinates).
  std::vector<mpq_class> apply_point(const std::vector<mpq_class>& pt) const;
};

// Entries uniform in [-bound, bound], resampled until invertible.
ProjTransform sample_transform(int k, Rng& rng, long bound = 10);
ProjTransform sample_star_transform(int k, Rng& rng, long bound = 10);
ProjTransform sample_star_transform(int k, std::uint64_t seed, long bound = 10);

// Components L_i(F) for a tuple of polynomials (left action on the image).
std::vector<MPoly> apply_left(const ProjTransform& L, const std::vector<MPoly>& comps);

// Substitution of the parameters: F(l(t)).
std::vector<MPoly> apply_param(const ProjTransform& l, const std::vector<MPoly>& comps);

struct HypothesisCheck {
  std::string name;
  bool pass = false;
  std::string witness;
};

struct HypothesisCertificate {
  std::vector<HypothesisCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct Normalization {
  std::vector<MPoly> components;   // satisfies the standing hypotheses
  ProjTransform param_change;      // l with components = input(l(t))
  ProjTransform image_permutation; // slot fix when the last component was zero
  HypothesisCertificate certificate;
};

// Makes every component non-vanishing at (0:0:1) and the last component
// non-zero, via a component permutation and a parameter change l, trying
// the identity first. Requires gcd(components) = 1.
Normalization normalize_hypotheses(const std::vector<MPoly>& comps, std::uint64_t seed,
                                   long bound = 10);

}  // namespace blx

#endif
