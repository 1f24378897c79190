#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "blx/baselocus.hpp"
#include "blx/parse.hpp"
#include "blx/transform.hpp"

using namespace blx;

namespace {
MPoly P(const char* s) { return parse_poly(s); }
}

TEST_CASE("star sampling produces the block shape") {
  Rng rng(1);
  for (int i = 0; i < 10; ++i) {
    ProjTransform L = sample_star_transform(3, rng);
    CHECK(L.is_star());
    CHECK(L.det() != 0);
    for (int j = 0; j < 3; ++j) {
      CHECK(L.m[3][static_cast<std::size_t>(j)] == 0);
    }
    CHECK(L.m[3][3] == 1);
  }
  CHECK(ProjTransform::identity(3).is_star());
  CHECK(ProjTransform::identity(2).is_star());
}

TEST_CASE("distinct seeds give distinct matrices") {
  std::set<std::string> seen;
  for (std::uint64_t s = 0; s < 10; ++s) {
    ProjTransform L = sample_star_transform(3, s);
    std::string key;
    for (const auto& row : L.m)
      for (const auto& e : row) key += e.get_str() + ",";
    seen.insert(key);
  }
  CHECK(seen.size() >= 9);
}

TEST_CASE("determinism per seed") {
  ProjTransform a = sample_star_transform(3, 1234);
  ProjTransform b = sample_star_transform(3, 1234);
  CHECK(a.m == b.m);
}

TEST_CASE("apply_left basics") {
  std::vector<MPoly> p = {P("t1"), P("t2"), P("t3"), P("t1")};
  CHECK(apply_left(ProjTransform::identity(3), p) == p);

  ProjTransform perm = ProjTransform::permutation(3, {1, 0, 2, 3});
  auto swapped = apply_left(perm, p);
  CHECK(swapped[0] == P("t2"));
  CHECK(swapped[1] == P("t1"));

  CHECK_THROWS_AS(apply_left(ProjTransform::identity(2), p), poly_error);
}

TEST_CASE("apply_param preserves degree and homogeneity") {
  std::vector<MPoly> p = {P("t2^2*t3 + t1^3"), P("t1^2*t3 + t2^3"), P("t1*t2*t3"),
                          P("t2^2*t3")};
  ProjTransform shift = ProjTransform::identity(2);
  shift.m[0][2] = 1;
  shift.m[1][2] = 1;
  auto shifted = apply_param(shift, p);
  VarSet T = VarSet::of_block(Block::T);
  for (const auto& f : shifted) {
    CHECK(f.is_homogeneous_in(T));
    CHECK(f.degree_in(T).value() == 3);
  }
  CHECK(shifted[0] == P("(t2 + t3)^2*t3 + (t1 + t3)^3"));

  // l then l^{-1} is the identity on components
  auto back = apply_param(shift.inverse(), shifted);
  CHECK(back == p);
  CHECK(apply_param(ProjTransform::identity(2), p) == p);
}

TEST_CASE("gcd triviality is preserved by both actions") {
  Rng rng(7);
  std::vector<MPoly> p = {P("t2^2*t3 + t1^3"), P("t1^2*t3 + t2^3"), P("t1*t2*t3"),
                          P("t2^2*t3")};
  ProjTransform L = sample_transform(3, rng);
  ProjTransform l = sample_star_transform(2, rng);
  auto lp = apply_left(L, p);
  auto pp = apply_param(l, p);
  CHECK(gcd_multi(lp).is_constant());
  CHECK(gcd_multi(pp).is_constant());
}

TEST_CASE("normalization leaves a passing input alone") {
  std::vector<MPoly> p = {P("t1^3 + t3^3"), P("t2^3 + t3^3"), P("t1*t2*t3 + t3^3"),
                          P("t3^3")};
  Normalization n = normalize_hypotheses(p, 0);
  CHECK(n.components == p);
  CHECK(n.param_change.m == ProjTransform::identity(2).m);
  CHECK(n.certificate.all_pass());
}

TEST_CASE("normalization shifts the shared-vanishing input") {
  std::vector<MPoly> cremona = {P("t2*t3"), P("t1*t3"), P("t1*t2")};
  Normalization n = normalize_hypotheses(cremona, 0);
  CHECK(n.certificate.all_pass());
  for (const auto& c : n.components) {
    CHECK(c.substitute_values({{Var::t1, 0}, {Var::t2, 0}, {Var::t3, 1}}).constant_value() !=
          0);
  }
  // idempotent on its own output
  Normalization again = normalize_hypotheses(n.components, 0);
  CHECK(again.param_change.m == ProjTransform::identity(2).m);
  CHECK(again.components == n.components);
}

TEST_CASE("normalization permutes a zero last component") {
  std::vector<MPoly> p = {P("t1^2"), P("t3^2"), P("t2^2"), MPoly()};
  Normalization n = normalize_hypotheses(p, 0);
  CHECK_FALSE(n.components.back().is_zero());
  CHECK(n.certificate.all_pass());
}

TEST_CASE("normalization rejects a shared factor") {
  std::vector<MPoly> p = {P("t1*t2"), P("t1*t3"), P("t1^2"), P("t1*(t1+t2)")};
  CHECK_THROWS_AS(normalize_hypotheses(p, 0), poly_error);
}

TEST_CASE("base locus multiplicity is invariant under parameter changes") {
  ParamSurface base = ParamSurface::from_components(
      {P("t2^2*t3 + t1^3"), P("t1^2*t3 + t2^3"), P("t1*t2*t3"), P("t2^2*t3")});
  NormalizedSurface n0 = normalize_surface(base, 0);
  MultOptions opt;
  opt.seed = 0;
  long reference = mult_base_locus(n0.surface, opt).mult_total;
  CHECK(reference == 4);

  Rng rng(3);
  for (int i = 0; i < 3; ++i) {
    ProjTransform l = sample_star_transform(2, rng, 4);
    auto moved = apply_param(l, base.component_vector());
    ParamSurface Pm = ParamSurface::from_components({moved[0], moved[1], moved[2], moved[3]});
    NormalizedSurface nm = normalize_surface(Pm, static_cast<std::uint64_t>(i) + 11);
    CHECK(mult_base_locus(nm.surface, opt).mult_total == reference);
  }
}
