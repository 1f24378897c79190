#ifndef BLX_MPOLY_HPP
#define BLX_MPOLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace blx {

// Closed variable universe. Every polynomial in the library lives in this
// ring; blocks partition the variables by role (parameters, generic
// coefficients, transformation coefficients, curve parameters, ambient
// space coordinates).
enum class Var : unsigned char {
  t1, t2, t3,
  x1, x2, x3, x4,
  y1, y2, y3, y4,
  z11, z12, z13, z21, z22, z23, z31, z32, z33,
  h1, h2,
  u1, u2, u3, u4,
};

inline constexpr std::size_t kNumVars = 26;

enum class Block : unsigned char { T, X, Y, Z, H, U };

constexpr Block block_of(Var v) {
  auto i = static_cast<unsigned>(v);
  if (i < 3) return Block::T;
  if (i < 7) return Block::X;
  if (i < 11) return Block::Y;
  if (i < 20) return Block::Z;
  if (i < 22) return Block::H;
  return Block::U;
}

std::string_view var_name(Var v);
std::optional<Var> var_by_name(std::string_view name);

// Bitmask over the variable universe.
class VarSet {
 public:
  constexpr VarSet() = default;
  constexpr VarSet(std::initializer_list<Var> vs) {
    for (Var v : vs) insert(v);
  }
  static constexpr VarSet of_block(Block b) {
    VarSet s;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      Var v = static_cast<Var>(i);
      if (block_of(v) == b) s.insert(v);
    }
    return s;
  }
  static constexpr VarSet all() {
    VarSet s;
    for (std::size_t i = 0; i < kNumVars; ++i) s.insert(static_cast<Var>(i));
    return s;
  }

  constexpr void insert(Var v) { bits_ |= (1u << static_cast<unsigned>(v)); }
  constexpr bool contains(Var v) const { return (bits_ >> static_cast<unsigned>(v)) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr VarSet operator|(VarSet o) const {
    VarSet r;
    r.bits_ = bits_ | o.bits_;
    return r;
  }
  bool operator==(const VarSet&) const = default;

 private:
  std::uint32_t bits_ = 0;
};

using Exponents = std::array<std::uint16_t, kNumVars>;

inline unsigned long total_of(const Exponents& e) {
  unsigned long s = 0;
  for (auto x : e) s += x;
  return s;
}

// Graded lexicographic order on the declared Var order.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    unsigned long da = total_of(a), db = total_of(b);
    if (da != db) return da < db;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

class poly_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are kept in graded-lex order and never store a zero coefficient,
// so equality of canonical forms is structural equality.
class MPoly {
 public:
  using TermMap = std::map<Exponents, mpq_class, GrlexLess>;

  MPoly() = default;
  explicit MPoly(const mpq_class& c);
  explicit MPoly(long c) : MPoly(mpq_class(c)) {}

  static MPoly variable(Var v);
  static MPoly monomial(const Exponents& e, const mpq_class& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant value; throws unless the polynomial is constant.
  mpq_class constant_value() const;
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  MPoly operator-() const;
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly operator*(const mpq_class& c) const;
  MPoly pow(unsigned long n) const;

  // Degree queries return nullopt for the zero polynomial.
  std::optional<long> degree_in(Var v) const;
  std::optional<long> degree_in(VarSet s) const;
  std::optional<long> total_degree() const;
  bool is_homogeneous_in(VarSet s) const;
  bool uses(Var v) const;
  VarSet variables() const;

  // Coefficient of v^k, a polynomial free of v.
  MPoly coeff_of(Var v, long k) const;
  MPoly leading_coeff_in(Var v) const;
  // Grouping of terms by their monomial in the variables of s:
  // pairs (block monomial restricted to s, cofactor polynomial free of s).
  std::vector<std::pair<Exponents, MPoly>> collect(VarSet s) const;

  MPoly derivative(Var v) const;

  // Total substitution of the listed variables; unlisted ones are kept.
  MPoly substitute(const std::map<Var, MPoly>& sigma) const;
  MPoly substitute_values(const std::map<Var, mpq_class>& sigma) const;

  // Exact quotient; nullopt if the division is not exact.
  static std::optional<MPoly> divide_exact(const MPoly& num, const MPoly& den);

  // Integer-primitive associate with positive leading coefficient.
  MPoly normalized() const;
  // Leading (grlex-largest) coefficient.
  mpq_class leading_coeff() const;

 private:
  void add_term(const Exponents& e, const mpq_class& c);
  TermMap terms_;
};

MPoly operator*(const mpq_class& c, const MPoly& f);

// Pseudo-remainder of f by g with respect to v: lc_v(g)^(df-dg+1) * f = q*g + r.
MPoly pseudo_rem(const MPoly& f, const MPoly& g, Var v);

// Gcd over the rationals, normalized integer-primitive with positive
// leading coefficient; gcd(f, 0) is the normalized f.
MPoly gcd_multi(const MPoly& f, const MPoly& g);
MPoly gcd_multi(const std::vector<MPoly>& fs);

// Content of f with respect to v (gcd of the v-coefficients).
MPoly content_in_var(const MPoly& f, Var v);
MPoly primpart_in_var(const MPoly& f, Var v);

}  // namespace blx

#endif
