#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "blx/baselocus.hpp"
#include "blx/oracle.hpp"
#include "blx/parse.hpp"

using namespace blx;

namespace {

MPoly P(const char* s) { return parse_poly(s); }

ParamSurface surface(const char* a, const char* b, const char* c, const char* d) {
  return ParamSurface::from_components({P(a), P(b), P(c), P(d)});
}

const ParamSurface kQuintic =
    surface("t2^2*t3 + t1^3", "t1^2*t3 + t2^3", "t1*t2*t3", "t2^2*t3");

const ParamSurface kSextic = surface("t1^3 - t1*t2*t3 - t3^3", "t2*t3^2 - t1^3 - 5*t3^3",
                                     "t1^3 - t2^2*t3 - t1^2*t3 + 4*t3^3",
                                     "t1^3 - t2*t3^2 - t3^3");

}  // namespace

TEST_CASE("surface validation") {
  CHECK(kQuintic.deg == 3);
  CHECK_THROWS_AS(surface("t1*t2", "t1*t3", "t1^2", "t1*(t1 + t2)"), poly_error);
  CHECK_THROWS_AS(surface("t1", "t2", "t3", "t1^2"), poly_error);
  CHECK_THROWS_AS(surface("t1 + x1", "t2", "t3", "t1"), poly_error);
}

TEST_CASE("generic curve construction") {
  ParamSurface plane = surface("t1", "t2", "t3", "t1");
  auto [w1, w2] = build_W(plane);
  CHECK(w1 == P("x1*t1 + x2*t2 + x3*t3 + x4*t1"));
  CHECK(w2 == P("y1*t1 + y2*t2 + y3*t3 + y4*t1"));
  VarSet T = VarSet::of_block(Block::T);
  auto [W1, W2] = build_W(kQuintic);
  CHECK(W1.is_homogeneous_in(T));
  CHECK(W1.degree_in(T).value() == 3);
  CHECK(W1.degree_in(VarSet::of_block(Block::X)).value() == 1);
  CHECK(W2.degree_in(VarSet::of_block(Block::Y)).value() == 1);
}

TEST_CASE("simplified curves at the identity") {
  ParamSurface plane = surface("t1", "t2", "t3", "t1");
  auto [k1, k2] = build_K(plane, ProjTransform::identity(3));
  CHECK(k1 == P("(x4 - x1)*t1"));
  CHECK(k2 == P("x4*t3 - x3*t1"));

  ProjTransform nonstar = ProjTransform::identity(3);
  nonstar.m[3][0] = 1;
  CHECK_THROWS_AS(build_K(plane, nonstar), poly_error);
}

TEST_CASE("simplified curves are a substitution of the generic ones") {
  Rng rng(3);
  ProjTransform L = sample_star_transform(3, rng);
  std::vector<MPoly> lp = apply_left(L, kQuintic.component_vector());
  ParamSurface LP = ParamSurface::from_components({lp[0], lp[1], lp[2], lp[3]});
  auto [w1, w2] = build_W(LP);
  auto [k1, k2] = build_K(kQuintic, L);
  // first curve: x -> (x4, 0, 0, -x1)
  MPoly w1s = w1.substitute({{Var::x1, MPoly::variable(Var::x4)},
                             {Var::x2, MPoly()},
                             {Var::x3, MPoly()},
                             {Var::x4, -MPoly::variable(Var::x1)}});
  CHECK(w1s == k1);
  // second curve: y -> (0, 0, x4, -x3)
  MPoly w2s = w2.substitute({{Var::y1, MPoly()},
                             {Var::y2, MPoly()},
                             {Var::y3, MPoly::variable(Var::x4)},
                             {Var::y4, -MPoly::variable(Var::x3)}});
  CHECK(w2s == k2);
}

TEST_CASE("multiplicity of the shifted quintic, both families") {
  NormalizedSurface n = normalize_surface(kQuintic, 0);
  REQUIRE(n.surface.hypotheses_hold());

  for (char path : {'k', 'w'}) {
    MultOptions opt;
    opt.path = path;
    opt.seed = 0;
    BaseLocusReport rep = mult_base_locus(n.surface, opt);
    CAPTURE(path);
    CHECK(rep.mult_total == 4);
    CHECK(rep.content == P("(t1 - t2)^4"));
    CHECK(rep.primpart_degree == 5);
    REQUIRE(rep.rational_points.size() == 1);
    const auto& bp = rep.rational_points[0];
    CHECK(bp.multiplicity == 4);
    CHECK(bp.curve_multiplicity == 2);
    // maps back to the triple intersection of the original components
    auto orig = n.param_change.apply_point(bp.point);
    mpq_class l = orig[2];
    CHECK(orig[0] / l == 0);
    CHECK(orig[1] / l == 0);
    CHECK(rep.residual_degree == 0);
  }
}

TEST_CASE("empty base locus") {
  ParamSurface q = surface("t1^2", "t2^2", "t3^2", "t1*t2");
  NormalizedSurface n = normalize_surface(q, 0);
  for (char path : {'k', 'w'}) {
    MultOptions opt;
    opt.path = path;
    BaseLocusReport rep = mult_base_locus(n.surface, opt);
    CHECK(rep.mult_total == 0);
    CHECK(rep.content.is_constant());
    CHECK(rep.rational_points.empty());
  }
}

TEST_CASE("degree-3 sextic surface fixture") {
  // already satisfies the hypotheses, no shift expected
  NormalizedSurface n = normalize_surface(kSextic, 0);
  CHECK(n.param_change.m == ProjTransform::identity(2).m);
  MultOptions opt;
  BaseLocusReport rep = mult_base_locus(n.surface, opt);
  CHECK(rep.mult_total == 3);
  CHECK(rep.primpart_degree == 6);
}

TEST_CASE("validation flag cross-checks the families") {
  NormalizedSurface n = normalize_surface(kQuintic, 0);
  MultOptions opt;
  opt.validate = true;
  BaseLocusReport rep = mult_base_locus(n.surface, opt);
  CHECK(rep.validated_against_other_path);
  CHECK(rep.genericity.all_pass());
}

TEST_CASE("multiplicity is invariant across random image transformations") {
  NormalizedSurface n = normalize_surface(kQuintic, 0);
  Rng rng(23);
  for (int i = 0; i < 3; ++i) {
    MultOptions opt;
    opt.path = 'w';
    opt.forced_transform = sample_transform(3, rng);
    BaseLocusReport rep = mult_base_locus(n.surface, opt);
    CHECK(rep.mult_total == 4);
  }
}

TEST_CASE("degree split for certified transformations") {
  NormalizedSurface n = normalize_surface(kQuintic, 0);
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    MultOptions opt;
    opt.seed = seed;
    BaseLocusReport rep = mult_base_locus(n.surface, opt);
    CHECK(rep.mult_total + rep.primpart_degree == n.surface.deg * n.surface.deg);
  }
}

TEST_CASE("colinear rational base points are separated") {
  // two base points (1:1:1) and (1:1:2) on one line through (0:0:1)
  ParamSurface p = surface("2*t1^2 - 3*t1*t3 + t3^2", "2*t2^2 - 3*t2*t3 + t3^2",
                           "2*t1*t2 - t1*t3 - 2*t2*t3 + t3^2",
                           "t1^2 + t2^2 - 2*t1*t3 - t2*t3 + t3^2");
  REQUIRE(p.hypotheses_hold());
  MultOptions opt;
  BaseLocusReport rep = mult_base_locus(p, opt);
  CHECK(rep.mult_total == 2);
  CHECK(rep.content == P("(t1 - t2)^2"));
  REQUIRE(rep.rational_points.size() == 2);
  std::vector<std::vector<mpq_class>> expected = {{1, 1, 1}, {mpq_class(1, 2), mpq_class(1, 2), 1}};
  for (const auto& bp : rep.rational_points) {
    CHECK(bp.multiplicity == 1);
    bool found = false;
    for (const auto& e : expected) {
      mpq_class l = bp.point[2] / e[2];
      if (l != 0 && bp.point[0] == e[0] * l && bp.point[1] == e[1] * l) found = true;
    }
    CHECK(found);
  }
  CHECK(rep.residual_degree == 0);
}

TEST_CASE("vanishing orders and tangent cones at base points") {
  // unique base point of the quintic parametrization, original coordinates
  std::vector<mpq_class> a = {0, 0, 1};
  CHECK(point_curve_multiplicity(kQuintic, a) == 2);
  MPoly cone = tangent_cone(kQuintic, a);
  CHECK(cone == P("(x1 + x4)*t2^2 + x2*t1^2 + x3*t1*t2"));
  CHECK(cone.is_homogeneous_in(VarSet::of_block(Block::T)));
  CHECK(cone.degree_in(VarSet::of_block(Block::T)).value() == 2);

  // composition-derived monomial surface at (1:0:0)
  ParamSurface p0 = surface("t2^2*t3^2", "t1^2*t3^2", "t1^2*t2^2", "t1*t2*t3^2");
  CHECK(point_curve_multiplicity(p0, {1, 0, 0}) == 2);

  // padded-degree construction: only the first component attains the minimum
  ParamSurface pad = surface("t1*t3", "t1^2 + t2^2", "t2^2 - t1*t2", "t1^2 + t2^2 + t1*t2");
  MPoly padded_cone = tangent_cone(pad, {0, 0, 1});
  CHECK(padded_cone == P("x1*t1"));

  CHECK_THROWS_AS(point_curve_multiplicity(kQuintic, {1, 1, 1}), poly_error);
}

TEST_CASE("tangent cone degree equals point multiplicity on corpus points") {
  NormalizedSurface n = normalize_surface(kQuintic, 0);
  MultOptions opt;
  BaseLocusReport rep = mult_base_locus(n.surface, opt);
  for (const auto& bp : rep.rational_points) {
    CHECK(bp.tangent_cone.degree_in(VarSet::of_block(Block::T)).value() ==
          bp.curve_multiplicity);
    CHECK(bp.multiplicity >= bp.curve_multiplicity);
  }
}

TEST_CASE("degree formula bookkeeping") {
  NormalizedSurface n = normalize_surface(kQuintic, 0);
  MultOptions opt;
  DegreeFormulaReport rep = degree_formula_report(n.surface, opt, 1, std::nullopt);
  CHECK(rep.mult_total == 4);
  CHECK(rep.primpart_degree == 5);
  CHECK(rep.surface_degree.value() == 5);
  CHECK(rep.degree_split_holds);  // 4 == 3^2 - 5*1
  CHECK(rep.sqrt_bound_holds);
  CHECK(rep.birational_case_holds.value());
  CHECK(rep.nonsquare_obstruction);  // 5 is not a square and the locus is non-empty

  NormalizedSurface ns = normalize_surface(kSextic, 1);
  DegreeFormulaReport rs = degree_formula_report(ns.surface, opt, 1, std::nullopt);
  CHECK(rs.mult_total == 3);
  CHECK(rs.surface_degree.value() == 6);

  ParamSurface plane = surface("t1", "t2", "t3", "t1 + t2 + t3");
  NormalizedSurface np = normalize_surface(plane, 0);
  DegreeFormulaReport rp = degree_formula_report(np.surface, opt, 1, std::nullopt);
  CHECK(rp.mult_total == 0);
  CHECK(rp.surface_degree.value() == 1);  // 0 = 1 - 1*1

  CHECK_THROWS_AS(degree_formula_report(n.surface, opt, 2, std::nullopt), poly_error);
  CHECK_THROWS_AS(degree_formula_report(n.surface, opt, 1, 4), poly_error);
  DegreeFormulaReport rboth = degree_formula_report(n.surface, opt, 1, 5);
  CHECK(rboth.degmap.value() == 1);
}

TEST_CASE("oracle sum matches the content degree on the quintic") {
  NormalizedSurface n = normalize_surface(kQuintic, 0);
  MultOptions opt;
  BaseLocusReport rep = mult_base_locus(n.surface, opt);
  REQUIRE(rep.residual_degree == 0);
  auto [w1, w2] = build_W(n.surface);
  std::map<Var, MPoly> chart{{Var::t3, MPoly(mpq_class(1))}};
  long total = 0;
  for (const auto& bp : rep.rational_points) {
    REQUIRE(bp.point[2] != 0);
    LocalMultResult r =
        specialized_local_multiplicity(w1.substitute(chart), w2.substitute(chart),
                                       bp.point[0] / bp.point[2], bp.point[1] / bp.point[2], 5);
    total += r.value;
  }
  CHECK(total == rep.mult_total);
}

TEST_CASE("unnormalized input is rejected") {
  MultOptions opt;
  CHECK_THROWS_AS(mult_base_locus(kQuintic, opt), poly_error);
}
