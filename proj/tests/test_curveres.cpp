#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "psikit/resolve.hpp"

using namespace psikit;

namespace {

struct CorpusEntry {
  const char* name;
  const char* poly;
  long long mu;
};

// The singularity corpus: every entry has rational centers and contacts.
const CorpusEntry kCorpus[] = {
    {"node", "y^2 - x^2", 1},
    {"cusp", "y^2 - x^3", 2},
    {"tacnode", "y^2 - x^4", 3},
    {"A4", "y^2 - x^5", 4},
    {"A5", "y^2 - x^6", 5},
    {"A6", "y^2 - x^7", 6},
    {"E6", "y^3 - x^4", 6},
    {"E8", "y^3 - x^5", 8},
    {"ord2", "x*y", 1},
    {"ord3", "x*y*(x+y)", 4},
    {"ord4", "x*y*(x+y)*(x-y)", 9},
    {"ord5", "x*y*(x+y)*(x-y)*(x-2*y)", 16},
};

std::multiset<std::tuple<long long, long long, int>> node_data(const LocalResolution& r) {
  std::multiset<std::tuple<long long, long long, int>> out;
  for (const auto& n : r.nodes) out.insert({n.mult, n.discrepancy, n.contacts});
  return out;
}

Poly2 swap_xy(const Poly2& f) {
  Poly2 out;
  for (const auto& [k, c] : f.terms()) out.add_term({k[1], k[0]}, c);
  return out;
}

}  // namespace

TEST_CASE("polynomial parser") {
  PlaneCurve c = parse_curve_affine("y^2 - x^3");
  CHECK(c.degree == 3);
  CHECK(c.squarefree);
  CHECK(parse_curve_affine("(x + y)^2 - 1/2*x").affine().coeff({1, 0}) == Rat(-1, 2));
  CHECK_THROWS_AS(parse_curve_affine("x + z"), Error);      // z not allowed in affine input
  CHECK_THROWS_AS(parse_curve_affine("x % y"), Error);
  CHECK_THROWS_AS(parse_curve_affine("2x"), Error);         // implicit product rejected
  CHECK_THROWS_AS(parse_curve_projective("x^2 + y"), Error);  // inhomogeneous
}

TEST_CASE("cusp resolution graph") {
  LocalResolution r = resolve_local(parse_curve_affine("y^2 - x^3").affine());
  REQUIRE(r.nodes.size() == 3);
  CHECK(r.nodes[0].mult == 2);
  CHECK(r.nodes[0].discrepancy == 1);
  CHECK(r.nodes[0].contacts == 1);
  CHECK(r.nodes[1].mult == 3);
  CHECK(r.nodes[1].discrepancy == 2);
  CHECK(r.nodes[1].contacts == 1);
  CHECK(r.nodes[2].mult == 6);
  CHECK(r.nodes[2].discrepancy == 4);
  CHECK(r.nodes[2].contacts == 3);
  CHECK(r.branch_count == 1);
  CHECK(r.blowup_count == 3);
  CHECK(r.mult_sequence == std::vector<long long>{2, 1, 1});
  CHECK(psi_at(r) == -1);
  CHECK(milnor_from_psi(r) == 2);
}

TEST_CASE("ordinary m-fold points") {
  const char* polys[] = {"x*y", "x*y*(x+y)", "x*y*(x+y)*(x-y)", "x*y*(x+y)*(x-y)*(x-2*y)"};
  for (int m = 2; m <= 5; ++m) {
    LocalResolution r = resolve_local(parse_curve_affine(polys[m - 2]).affine());
    REQUIRE(r.nodes.size() == 1);
    CHECK(r.nodes[0].mult == m);
    CHECK(r.nodes[0].discrepancy == 1);
    CHECK(r.nodes[0].contacts == m);
    CHECK(r.branch_count == m);
    CHECK(r.blowup_count == 1);
    CHECK(psi_at(r) == Int(m) * (2 - m));
  }
}

TEST_CASE("smooth point needs no blow-up") {
  LocalResolution r = resolve_local(parse_curve_affine("y - x^2").affine());
  CHECK(r.nodes.empty());
  CHECK(r.branch_count == 1);
  CHECK(r.blowup_count == 0);
  CHECK(psi_at(r) == 1);
  CHECK(milnor_from_psi(r) == 0);
}

TEST_CASE("tacnode") {
  LocalResolution r = resolve_local(parse_curve_affine("y^2 - x^4").affine());
  CHECK(psi_at(r) == -2);
  CHECK(milnor_from_psi(r) == 3);
  CHECK(milnor_oracle(parse_curve_affine("y^2 - x^4").affine()) == 3);
}

TEST_CASE("resolution preconditions") {
  CHECK_THROWS_AS(resolve_local(parse_curve_affine("y - x + 1").affine()), Error);  // misses origin
  CHECK_THROWS_AS(resolve_local(parse_curve_affine("x^2").affine()), Error);        // not reduced
}

TEST_CASE("irrational infinitely-near data is rejected") {
  CHECK_THROWS_AS(resolve_local(parse_curve_affine("x^3 - y^3").affine()), Error);
  try {
    resolve_local(parse_curve_affine("x^2 + y^2").affine());
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::irrational_infinitely_near_point);
  }
}

TEST_CASE("milnor oracle") {
  CHECK(milnor_oracle(parse_curve_affine("y^2 - x^3").affine()) == 2);
  CHECK(milnor_oracle(parse_curve_affine("x^2 + y^2").affine()) == 1);
  CHECK(milnor_oracle(parse_curve_affine("x^3 - y^3").affine()) == 4);
  CHECK(milnor_oracle(parse_curve_affine("y - x^2").affine()) == 0);
  try {
    milnor_oracle(parse_curve_affine("x^2").affine());
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::non_isolated);
  }
}

TEST_CASE("oracle agreement across the corpus") {
  for (const auto& entry : kCorpus) {
    CAPTURE(entry.name);
    Poly2 f = parse_curve_affine(entry.poly).affine();
    LocalResolution r = resolve_local(f);
    CHECK(milnor_from_psi(r) == Int(entry.mu));
    CHECK(milnor_oracle(f) == Int(entry.mu));
  }
}

TEST_CASE("route equivalence and behrend agreement across the corpus") {
  for (const auto& entry : kCorpus) {
    CAPTURE(entry.name);
    Poly2 f = parse_curve_affine(entry.poly).affine();
    LocalResolution r = resolve_local(f);
    NCModel m = to_ncmodel(r);
    CHECK(validate(m).empty());
    CHECK(psi(m).at("p") == Rat(psi_at(r)));
    CHECK(behrend_mu(m, 1).at("p") == Rat(Int(entry.mu)));
    CHECK(unit_reconstruction(m).at("p") == Rat(1));
    MTClass fiber = motivic_psi(m, AlphaFn::identity(), Scope::fiber("p"));
    CHECK(fiber.evaluate_at_one() == psi_at(r));
  }
}

TEST_CASE("chart consistency under swapping x and y") {
  for (const auto& entry : kCorpus) {
    CAPTURE(entry.name);
    Poly2 f = parse_curve_affine(entry.poly).affine();
    LocalResolution a = resolve_local(f);
    LocalResolution b = resolve_local(swap_xy(f));
    CHECK(node_data(a) == node_data(b));
    CHECK(psi_at(a) == psi_at(b));
    CHECK(a.branch_count == b.branch_count);
  }
}

TEST_CASE("find_singular_points") {
  auto points = find_singular_points(parse_curve_projective("x*y*z"));
  REQUIRE(points.size() == 3);
  CHECK(points[0] == make_proj_point(Rat(0), Rat(0), Rat(1)));
  CHECK(points[1] == make_proj_point(Rat(0), Rat(1), Rat(0)));
  CHECK(points[2] == make_proj_point(Rat(1), Rat(0), Rat(0)));

  auto nodal = find_singular_points(parse_curve_projective("y^2*z - x^2*(x+z)"));
  REQUIRE(nodal.size() == 1);
  CHECK(nodal[0] == make_proj_point(Rat(0), Rat(0), Rat(1)));

  CHECK(find_singular_points(parse_curve_projective("y*z - x^2")).empty());

  // two conjugate nodes at x = +-sqrt(2)
  try {
    find_singular_points(parse_curve_projective("y^2*z^2 - (x^2 - 2*z^2)^2"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::irrational_singular_point);
  }

  CHECK_THROWS_AS(find_singular_points(parse_curve_projective("x^2*y")), Error);  // not squarefree
}

TEST_CASE("singular points away from the standard chart") {
  // two tacnodes, one of them at infinity
  auto pts = find_singular_points(parse_curve_projective("y^2*z^2 - x^4"));
  REQUIRE(pts.size() == 2);
  CHECK(pts[0] == make_proj_point(Rat(0), Rat(0), Rat(1)));
  CHECK(pts[1] == make_proj_point(Rat(0), Rat(1), Rat(0)));
  GlobalResolution g = resolve_global(parse_curve_projective("y^2*z^2 - x^4"));
  REQUIRE(g.points.size() == 2);
  for (const auto& gp : g.points) CHECK(milnor_from_psi(gp.res) == 3);
}

TEST_CASE("curve topology") {
  CurveTopology nodal = curve_topology(resolve_global(parse_curve_projective("y^2*z - x^2*(x+z)")));
  CHECK(nodal.genus == 0);
  CHECK(nodal.chi == 1);
  CurveTopology cusp = curve_topology(resolve_global(parse_curve_projective("y^2*z - x^3")));
  CHECK(cusp.genus == 0);
  CHECK(cusp.chi == 2);
  CurveTopology quartic = curve_topology(resolve_global(parse_curve_projective(
      "x^4 + y^4 + z^4 + x*y*z^2")));
  CHECK(quartic.genus == 3);  // smooth quartic
  CHECK(quartic.chi == -4);
}

TEST_CASE("total transform identity in the divisor lattice") {
  // sum of mult * class over all components of the total transform is d*H
  for (const char* poly : {"y^2*z - x^3", "y^2*z - x^2*(x+z)", "y^2*z^2 - x^4 + y^4"}) {
    CAPTURE(poly);
    GlobalResolution g = resolve_global(parse_curve_projective(poly));
    std::vector<Int> total = g.strict_class;
    for (size_t i = 0; i < g.node_classes.size(); ++i)
      for (size_t j = 0; j < total.size(); ++j)
        total[j] += Int(g.node_mults[i]) * g.node_classes[i][j];
    CHECK(total[0] == g.degree);
    for (size_t j = 1; j < total.size(); ++j) CHECK(total[j] == 0);
  }
}

TEST_CASE("mult sequence drives the strict transform class") {
  GlobalResolution g = resolve_global(parse_curve_projective("y^2*z - x^3"));
  REQUIRE(g.k == 3);
  CHECK(g.strict_class == std::vector<Int>{3, -2, -1, -1});
}
