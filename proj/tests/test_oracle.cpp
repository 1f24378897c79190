#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blx/oracle.hpp"
#include "blx/parse.hpp"
#include "blx/planemaps.hpp"

using namespace blx;

namespace {
MPoly P(const char* s) { return parse_poly(s); }

long imult(const char* f, const char* g, long a = 0, long b = 0) {
  return local_intersection_multiplicity(P(f), P(g), mpq_class(a), mpq_class(b));
}
}  // namespace

TEST_CASE("textbook intersection numbers") {
  struct Pair {
    const char* f;
    const char* g;
    long expect;
  };
  // constructed from explicit products, tangencies and branch orders
  const Pair pairs[] = {
      {"t1", "t2", 1},                                   // transversal lines
      {"t2", "t2 - t1^2", 2},                            // conic with its tangent
      {"t2 - t1^2", "t2 + t1^2", 2},                     // two tangent conics
      {"t2", "t1^3", 3},                                 // triple line vs axis
      {"t2 - t1^3", "t2", 3},                            // cubic graph vs tangent
      {"t2^2 - t1^3", "t2", 3},                          // cusp with its tangent
      {"t2^2 - t1^3", "t1^2 - t2^3", 4},                 // two cusps, cones transversal
      {"t2 - t1^2", "t2^2 - t1^5", 4},                   // branch order on a smooth curve
      {"t2 - t1^2", "t2^2 - 2*t1^2*t2 + t1^4 - t1^5", 5},// osculating to order five
      {"t2^2 - t1^3", "t2^2 + t1^3", 6},                 // opposite cusps
  };
  for (const auto& p : pairs) {
    CAPTURE(p.f);
    CAPTURE(p.g);
    CHECK(imult(p.f, p.g) == p.expect);
  }
}

TEST_CASE("second oracle route agrees on the textbook pairs") {
  struct Pair {
    const char* f;
    const char* g;
  };
  const Pair pairs[] = {
      {"t1", "t2"},
      {"t2", "t2 - t1^2"},
      {"t2^2 - t1^3", "t1^2 - t2^3"},
      {"t2 - t1^2", "t2^2 - t1^5"},
      {"t2^2 - t1^3", "t2^2 + t1^3"},
  };
  for (const auto& p : pairs) {
    long a = local_intersection_multiplicity(P(p.f), P(p.g), 0, 0);
    long b = local_algebra_multiplicity(P(p.f), P(p.g), 0, 0);
    CHECK(a == b);
  }
}

TEST_CASE("intersection numbers away from the origin") {
  CHECK(imult("t1 - 1", "t2 - 2", 1, 2) == 1);
  CHECK(imult("t2 - 2 - (t1 - 1)^2", "t2 - 2", 1, 2) == 2);
}

TEST_CASE("points off a curve and shared components are rejected") {
  CHECK(imult("t1 - 1", "t2", 5, 0) == 0);  // not on the first curve
  CHECK_THROWS_AS(imult("t1*t2", "t1*(t1 + t2)"), oracle_error);
  CHECK_THROWS_AS(imult("t1", "t1"), oracle_error);
}

TEST_CASE("symmetry and unimodular invariance") {
  Rng rng(13);
  const char* fs[] = {"t2 - t1^2", "t2^2 - t1^3", "t1*t2 - t1^3 + t2^4"};
  const char* gs[] = {"t2", "t1^2 - t2^3", "t1 + t2^2"};
  for (int i = 0; i < 3; ++i) {
    MPoly f = P(fs[i]), g = P(gs[i]);
    long fwd = local_intersection_multiplicity(f, g, 0, 0);
    long bwd = local_intersection_multiplicity(g, f, 0, 0);
    CHECK(fwd == bwd);
    for (int k = 0; k < 3; ++k) {
      // random unimodular change fixing the origin
      long a = rng.integer(3), b = rng.integer(3);
      MPoly u = MPoly::variable(Var::t1) + MPoly::variable(Var::t2) * mpq_class(a);
      MPoly v = MPoly::variable(Var::t2) + u * mpq_class(b);
      std::map<Var, MPoly> sigma{{Var::t1, u}, {Var::t2, v}};
      long moved = local_intersection_multiplicity(f.substitute(sigma), g.substitute(sigma), 0, 0);
      CHECK(moved == fwd);
    }
  }
}

TEST_CASE("non-singular Jacobian forces multiplicity one") {
  Rng rng(29);
  int done = 0;
  for (int i = 0; done < 10 && i < 100; ++i) {
    // random curves through the origin
    MPoly f, g;
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; a + b <= 2; ++b) {
        if (a == 0 && b == 0) continue;
        Exponents e{};
        e[static_cast<unsigned>(Var::t1)] = static_cast<std::uint16_t>(a);
        e[static_cast<unsigned>(Var::t2)] = static_cast<std::uint16_t>(b);
        f += MPoly::monomial(e, mpq_class(rng.integer(5)));
        g += MPoly::monomial(e, mpq_class(rng.integer(5)));
      }
    if (f.is_zero() || g.is_zero()) continue;
    mpq_class jac = f.derivative(Var::t1).substitute_values({{Var::t1, 0}, {Var::t2, 0}}).constant_value() *
                        g.derivative(Var::t2).substitute_values({{Var::t1, 0}, {Var::t2, 0}}).constant_value() -
                    f.derivative(Var::t2).substitute_values({{Var::t1, 0}, {Var::t2, 0}}).constant_value() *
                        g.derivative(Var::t1).substitute_values({{Var::t1, 0}, {Var::t2, 0}}).constant_value();
    if (jac == 0) continue;
    if (!gcd_multi(f, g).is_constant()) continue;
    ++done;
    CHECK(local_intersection_multiplicity(f, g, 0, 0) == 1);
  }
  CHECK(done == 10);
}

TEST_CASE("specialization voting on generic-coefficient curves") {
  // the generic curves of the quintic fixture, shifted so the base point is affine
  MPoly p1 = P("(t2 + t3)^2*t3 + (t1 + t3)^3");
  MPoly p2 = P("(t1 + t3)^2*t3 + (t2 + t3)^3");
  MPoly p3 = P("(t1 + t3)*(t2 + t3)*t3");
  MPoly p4 = P("(t2 + t3)^2*t3");
  MPoly w1, w2;
  const Var xs[] = {Var::x1, Var::x2, Var::x3, Var::x4};
  const Var ys[] = {Var::y1, Var::y2, Var::y3, Var::y4};
  const MPoly* ps[] = {&p1, &p2, &p3, &p4};
  for (int i = 0; i < 4; ++i) {
    w1 += MPoly::variable(xs[i]) * *ps[i];
    w2 += MPoly::variable(ys[i]) * *ps[i];
  }
  std::map<Var, MPoly> chart{{Var::t3, MPoly(mpq_class(1))}};
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    LocalMultResult r = specialized_local_multiplicity(w1.substitute(chart),
                                                       w2.substitute(chart), -1, -1, seed);
    CHECK(r.value == 4);
    CHECK(r.agreement_count == 3);
  }
}

TEST_CASE("fiber counting") {
  std::vector<MPoly> cremona = {P("t2*t3"), P("t1*t3"), P("t1*t2")};
  CHECK(fiber_count_plane(cremona, 0) == 1);
  CHECK(fiber_count_plane(cremona, 7) == 1);

  std::vector<MPoly> squares = {P("t1^2"), P("t2^2"), P("t3^2")};
  CHECK(fiber_count_plane(squares, 0) == 4);
  CHECK(fiber_count_plane(squares, 5) == 4);

  std::vector<MPoly> linear = {P("t1 + t2"), P("t2 - t3"), P("t3 + 2*t1")};
  CHECK(fiber_count_plane(linear, 0) == 1);

  // mixed-degree fibers: two branches
  std::vector<MPoly> two = {P("t1^2"), P("t1*t2"), P("t3^2")};
  CHECK(fiber_count_plane(two, 0) == 2);
}
