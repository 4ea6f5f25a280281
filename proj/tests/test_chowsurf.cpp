#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "psikit/chow.hpp"

using namespace psikit;

namespace {

const char* kTheoremCorpus[] = {
    "y^2*z - x^2*(x+z)",        // nodal cubic
    "y^2*z - x^3",              // cuspidal cubic
    "y^2*z^2 - x^4 + y^4",      // tacnodal quartic
    "x*y*(x+y)*z + x^4 + y^4",  // ordinary triple point quartic
    "y^2*z^2 - x^4",            // two tacnodes, one at infinity
    "x*y*z",                    // triangle of lines
    "x*y*(x+y)",                // three concurrent lines in the plane
    "x*y*(x+y)*z",              // concurrent triple plus a transverse line
    "y*z - x^2",                // smooth conic
};

ChowClass strata_with_alpha(const PlaneCurve& curve, long long pick_mult) {
  GlobalResolution g = resolve_global(curve);
  SurfaceModel s{g.k};
  std::vector<DivisorClass> divisors;
  std::vector<Rat> weights;
  divisors.push_back(g.strict_class);
  weights.push_back(Rat(pick_mult == 1 ? 1 : 0));
  for (size_t i = 0; i < g.node_classes.size(); ++i) {
    divisors.push_back(g.node_classes[i]);
    weights.push_back(Rat(g.node_mults[i] == pick_mult ? 1 : 0));
  }
  return csm_strata_class(s, divisors, weights);
}

}  // namespace

TEST_CASE("intersection form") {
  SurfaceModel s{2};
  DivisorClass H = {1, 0, 0}, e1 = {0, 1, 0};
  CHECK(intersection_number(s, H, H) == 1);
  CHECK(intersection_number(s, e1, e1) == -1);
  DivisorClass a = {3, -2, 0};
  CHECK(intersection_number(s, a, e1) == 2);
  CHECK_THROWS_AS(intersection_number(s, {1, 0}, e1), Error);
}

TEST_CASE("csm class of a complement on the plane") {
  SurfaceModel plane{0};
  ChowClass line = csm_complement(plane, {h_class(plane)});
  CHECK(line.top == 1);
  CHECK(line.div == DivisorClass{2});
  CHECK(line.pts == Rat(1));

  ChowClass full = csm_complement(plane, {});
  CHECK(full.div == DivisorClass{3});
  CHECK(full.pts == Rat(3));

  // smooth cubic: degree of the complement class is chi(P^2) - chi(cubic) = 3
  ChowClass cubic = csm_complement(plane, {h_class(plane, 3)});
  CHECK(cubic.div == DivisorClass{0});
  CHECK(cubic.pts == Rat(3));
}

TEST_CASE("strata classes on the embedded point surface") {
  SurfaceModel s{1};
  DivisorClass l_tilde = {1, -1}, e = {0, 1};
  ChowClass cls = csm_strata_class(s, {l_tilde, e}, {Rat(1), Rat(2)});
  ChowClass pushed = pushforward_to_plane(s, cls);
  CHECK(pushed.div == DivisorClass{1});
  CHECK(pushed.pts == Rat(3));  // [L] + 3[pt]
}

TEST_CASE("strata class of a smooth conic") {
  SurfaceModel plane{0};
  ChowClass cls = csm_strata_class(plane, {h_class(plane, 2)}, {Rat(1)});
  CHECK(cls.div == DivisorClass{2});
  CHECK(cls.pts == Rat(2));  // chi of a conic
  ChowClass zero = csm_strata_class(plane, {h_class(plane, 2)}, {Rat(0)});
  CHECK(zero == zero_class(plane));
  CHECK_THROWS_AS(csm_strata_class(plane, {h_class(plane)}, {}), Error);
}

TEST_CASE("gysin restriction") {
  SurfaceModel plane{0};
  ChowClass c;
  c.top = 1;
  c.div = {2};
  c.pts = Rat(1);
  ChowClass restricted = gysin_restrict(plane, c, h_class(plane));
  CHECK(restricted.top == 0);
  CHECK(restricted.div == DivisorClass{1});  // [L]
  CHECK(restricted.pts == Rat(2));           // + 2[pt]

  ChowClass cubic = csm_complement(plane, {h_class(plane, 3)});
  ChowClass r2 = gysin_restrict(plane, cubic, h_class(plane, 3));
  CHECK(r2.div == DivisorClass{3});
  CHECK(r2.pts == Rat(0));

  CHECK(gysin_restrict(plane, zero_class(plane), h_class(plane)) == zero_class(plane));
}

TEST_CASE("pushforward to the plane") {
  SurfaceModel s{1};
  ChowClass c = zero_class(s);
  c.div = {3, -2};
  ChowClass pushed = pushforward_to_plane(s, c);
  CHECK(pushed.div == DivisorClass{3});
  ChowClass pts_only = zero_class(s);
  pts_only.pts = Rat(5);
  CHECK(pushforward_to_plane(s, pts_only).pts == Rat(5));
}

TEST_CASE("specialization identity across the corpus") {
  for (const char* poly : kTheoremCorpus) {
    CAPTURE(poly);
    TheoremReport rep = theorem_one_check(parse_curve_projective(poly));
    CHECK(rep.equal);
    CHECK(rep.degree_lhs == rep.degree_rhs);
    CHECK(rep.degree_matches_fiber);
    CHECK(rep.degree_matches_chi);
  }
}

TEST_CASE("worked degrees") {
  TheoremReport cusp = theorem_one_check(parse_curve_projective("y^2*z - x^3"));
  CHECK(cusp.degree_lhs == Rat(0));
  CHECK(cusp.chi_curve == 2);
  REQUIRE(cusp.per_point.size() == 1);
  CHECK(cusp.per_point[0].psi == -1);

  TheoremReport nodal = theorem_one_check(parse_curve_projective("y^2*z - x^2*(x+z)"));
  CHECK(nodal.degree_lhs == Rat(0));
  CHECK(nodal.chi_curve == 1);

  TheoremReport conic = theorem_one_check(parse_curve_projective("y*z - x^2"));
  CHECK(conic.degree_lhs == Rat(2));
  CHECK(conic.per_point.empty());
}

TEST_CASE("monodromy decomposition of classes is additive") {
  for (const char* poly : kTheoremCorpus) {
    CAPTURE(poly);
    PlaneCurve curve = parse_curve_projective(poly);
    GlobalResolution g = resolve_global(curve);
    SurfaceModel s{g.k};
    std::vector<DivisorClass> divisors;
    std::vector<Rat> weights;
    divisors.push_back(g.strict_class);
    weights.push_back(Rat(1));
    std::set<long long> mults = {1};
    for (size_t i = 0; i < g.node_classes.size(); ++i) {
      divisors.push_back(g.node_classes[i]);
      weights.push_back(Rat(Int(g.node_mults[i])));
      mults.insert(g.node_mults[i]);
    }
    ChowClass identity_cls = csm_strata_class(s, divisors, weights);
    ChowClass sum = zero_class(s);
    for (long long m : mults) {
      ChowClass piece = strata_with_alpha(curve, m);
      sum.top += piece.top * m;
      for (size_t i = 0; i < sum.div.size(); ++i) sum.div[i] += piece.div[i] * Int(m);
      sum.pts += piece.pts * Rat(Int(m));
    }
    CHECK(sum == identity_cls);
  }
}

TEST_CASE("weighted Chern-Mather stand-in counts Milnor numbers") {
  WmaReport cusp = wma_standin(parse_curve_projective("y^2*z - x^3"));
  CHECK(cusp.total == 2);
  REQUIRE(cusp.per_point.size() == 1);
  CHECK(cusp.per_point[0].mu == 2);
  CHECK(cusp.cls.pts == Rat(2));

  WmaReport nodal = wma_standin(parse_curve_projective("y^2*z - x^2*(x+z)"));
  CHECK(nodal.total == 1);

  WmaReport smooth = wma_standin(parse_curve_projective("y*z - x^2"));
  CHECK(smooth.total == 0);
  CHECK(smooth.per_point.empty());

  // degree route: chi(X) - (3d - d^2) equals the sum of Milnor numbers
  TheoremReport rep = theorem_one_check(parse_curve_projective("y^2*z^2 - x^4 + y^4"));
  WmaReport wma = wma_standin(parse_curve_projective("y^2*z^2 - x^4 + y^4"));
  CHECK(Rat(rep.chi_curve) - rep.degree_lhs == Rat(wma.total));
}
