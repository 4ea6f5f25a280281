#include "psikit/resolve.hpp"

#include <algorithm>

namespace psikit {

namespace {

// ---- gcd computations over branches of Q[x]/(W), W squarefree -------------
//
// Coefficients are residues mod W; a leading coefficient that is a zero
// divisor splits W and the question is answered on each branch (the D5
// principle).  Only existence of a positive-degree common divisor is needed.

using YPoly = std::vector<UPoly>;  // coefficient of y^i at index i

YPoly reduce_mod(const YPoly& p, const UPoly& w) {
  YPoly out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back(c.mod(w));
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

// True iff some branch of W carries a common root in y of all of ps.
bool branch_common_root(UPoly w, std::vector<YPoly> ps) {
  w = w.monic();
  if (w.degree() <= 0) return false;

  for (auto& p : ps) p = reduce_mod(p, w);
  // Discard zero polynomials; a unit constant kills the branch.
  std::vector<YPoly> live;
  for (auto& p : ps) {
    if (p.empty()) continue;
    live.push_back(std::move(p));
  }
  if (live.empty()) return true;  // everything vanished: whole fibers of roots

  // Pick the polynomial of least y-degree to drive the elimination.
  auto least = std::min_element(live.begin(), live.end(),
                                [](const YPoly& a, const YPoly& b) {
                                  return a.size() < b.size();
                                });
  YPoly q = *least;
  UPoly lc = q.back();
  UPoly g = upoly_gcd(lc, w);
  if (g.degree() > 0 && g.degree() < w.degree()) {
    // Zero-divisor leading coefficient: split the branch.
    std::vector<YPoly> copy = live;
    if (branch_common_root(g, copy)) return true;
    return branch_common_root(w.divide_exact(g), live);
  }
  if (g.degree() == w.degree()) {
    // Leading coefficient vanishes identically: drop it and retry.
    least->pop_back();
    while (!least->empty() && least->back().mod(w).is_zero()) least->pop_back();
    return branch_common_root(w, live);
  }

  if (q.size() == 1) return false;  // invertible constant: no common root here

  if (live.size() == 1) return true;  // single poly, positive degree, invertible lc

  // Reduce every other polynomial modulo q (Euclidean division in y, with
  // the inverse of lc(q) mod w).
  UPoly t, s, dummy;
  // extended gcd to invert lc mod w
  {
    UPoly a = lc.mod(w), b = w, x0 = UPoly::constant(Rat(1)), x1;
    while (!b.is_zero()) {
      UPoly quo;
      UPoly r = a.mod(b, &quo);
      UPoly x2 = x0 - quo * x1;
      a = b;
      b = r;
      x0 = x1;
      x1 = x2;
    }
    // a = gcd = nonzero constant (invertibility established above)
    t = x0 * a.lc().inverse();
  }
  const UPoly lc_inv = t.mod(w);

  std::vector<YPoly> next;
  next.push_back(q);
  const int dq = static_cast<int>(q.size()) - 1;
  for (auto& p : live) {
    if (&*least == &p) continue;
    YPoly r = p;
    while (static_cast<int>(r.size()) - 1 >= dq) {
      UPoly f = (r.back() * lc_inv).mod(w);
      int shift_by = static_cast<int>(r.size()) - 1 - dq;
      for (int i = 0; i <= dq; ++i) {
        r[i + shift_by] = (r[i + shift_by] - f * q[i]).mod(w);
      }
      r.pop_back();
      while (!r.empty() && r.back().is_zero()) r.pop_back();
    }
    if (!r.empty()) next.push_back(std::move(r));
  }
  if (next.size() == 1 && next[0].size() > 1) return true;
  return branch_common_root(w, next);
}

// ---- resultant by evaluation-interpolation --------------------------------

int deg_x(const Poly2& p) {
  int d = 0;
  for (const auto& [k, c] : p.terms()) d = std::max(d, k[0]);
  return d;
}

int deg_y(const Poly2& p) {
  int d = 0;
  for (const auto& [k, c] : p.terms()) d = std::max(d, k[1]);
  return d;
}

// Res_y(p, q) for p with constant nonzero leading y-coefficient.
UPoly resultant_y(const Poly2& p, const Poly2& q) {
  const int dp = deg_y(p), dq = deg_y(q);
  const Rat gamma = p.coeff({0, dp});
  if (gamma.is_zero())
    throw Error(ErrorKind::invalid_input, "resultant_y needs a constant leading coefficient");
  const int bound = dp * deg_x(q) + dq * deg_x(p);
  std::vector<Rat> xs, ys;
  for (int n = 0; n <= bound; ++n) {
    Rat x0(n);
    UPoly pu = upoly_at(p, x0);
    UPoly qu = upoly_at(q, x0);
    Rat val;
    if (qu.is_zero()) {
      val = Rat(0);
    } else {
      // Degree of q may drop at x0; correct by the fixed leading coefficient.
      Rat corr(1);
      for (int i = 0; i < dq - qu.degree(); ++i) corr *= gamma;
      val = corr * resultant(pu, qu);
    }
    xs.push_back(x0);
    ys.push_back(val);
  }
  // Lagrange interpolation through (xs, ys).
  UPoly acc;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (ys[i].is_zero()) continue;
    UPoly li = UPoly::constant(Rat(1));
    Rat denom(1);
    for (size_t j = 0; j < xs.size(); ++j) {
      if (i == j) continue;
      li = li * UPoly({-xs[j], Rat(1)});
      denom *= xs[i] - xs[j];
    }
    acc = acc + li * (ys[i] / denom);
  }
  return acc;
}

YPoly to_ypoly(const Poly2& p) {
  YPoly out(deg_y(p) + 1);
  std::vector<std::vector<Rat>> rows(deg_y(p) + 1);
  for (const auto& [k, c] : p.terms()) {
    auto& row = rows[k[1]];
    if (static_cast<int>(row.size()) <= k[0]) row.resize(k[0] + 1, Rat(0));
    row[k[0]] = c;
  }
  for (size_t i = 0; i < rows.size(); ++i) out[i] = UPoly(std::move(rows[i]));
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

// Affine singular points of a squarefree f: V(f, f_x, f_y) with rationality
// guarantees; throws when any solution has residue degree > 1.
std::vector<std::pair<Rat, Rat>> affine_singular_points(const Poly2& f) {
  // Shear x -> x + s*y until the leading y-coefficient is a nonzero constant.
  Rat s(0);
  Poly2 g;
  bool found = false;
  for (int trial = 0; trial <= 2 * f.total_degree() + 2 && !found; ++trial) {
    s = Rat(trial % 2 == 0 ? trial / 2 : -(trial + 1) / 2);
    g = shear_x(f, s);
    found = g.coeff({0, deg_y(g)}) != Rat(0) && deg_x(Poly2::variable(0)) >= 0;
    // leading y-coefficient must not involve x:
    if (found) {
      int dy = deg_y(g);
      for (const auto& [k, c] : g.terms())
        if (k[1] == dy && k[0] > 0) { found = false; break; }
    }
  }
  if (!found)
    throw Error(ErrorKind::invalid_input, "could not normalize curve by shearing");

  const Poly2 gx = g.derivative(0);
  const Poly2 gy = g.derivative(1);
  UPoly res = resultant_y(g, gy);
  if (res.is_zero())
    throw Error(ErrorKind::invalid_input, "squarefree curve expected (vanishing discriminant)");
  RootReport xs = rational_roots(res);

  std::vector<std::pair<Rat, Rat>> out;
  for (const auto& [x0, mult] : xs.rational) {
    UPoly h = upoly_gcd(upoly_at(g, x0), upoly_at(gy, x0));
    h = upoly_gcd(h, upoly_at(gx, x0));
    if (h.degree() <= 0) continue;  // vertical tangency only, no singular point
    RootReport ys = rational_roots(h);
    if (!ys.irrational.empty())
      throw Error(ErrorKind::irrational_singular_point,
                  "singular point with irrational coordinates (residue degree > 1)");
    for (const auto& [y0, m2] : ys.rational) out.emplace_back(x0 + s * y0, y0);
  }

  // Residual factor without rational roots: check it carries no solutions.
  UPoly w = squarefree_part(res);
  for (const auto& [x0, mult] : xs.rational) w = w.deflate(x0);
  if (w.degree() > 0 &&
      branch_common_root(w, {to_ypoly(g), to_ypoly(gx), to_ypoly(gy)}))
    throw Error(ErrorKind::irrational_singular_point,
                "singular point with irrational coordinates (residue degree > 1)");
  return out;
}

}  // namespace

std::vector<ProjPoint> find_singular_points(const PlaneCurve& curve) {
  if (!curve.squarefree)
    throw Error(ErrorKind::invalid_input, "find_singular_points requires a squarefree curve");
  std::vector<ProjPoint> out;

  // Chart z = 1.
  Poly2 f = dehomogenize(curve.proj, Chart::z);
  if (!f.is_zero() && f.total_degree() > 0) {
    for (const auto& [x0, y0] : affine_singular_points(f))
      out.push_back(make_proj_point(x0, y0, Rat(1)));
  }

  // Points at infinity: common zeros of the three partials on z = 0.
  const Poly3 Fx = curve.proj.derivative(0);
  const Poly3 Fy = curve.proj.derivative(1);
  const Poly3 Fz = curve.proj.derivative(2);
  auto at_infinity = [](const Poly3& F) {
    // binary form in (x, y): restrict to z = 0, then parametrize x = 1
    UPoly u;
    std::vector<Rat> c;
    for (const auto& [k, v] : F.terms()) {
      if (k[2] != 0) continue;
      if (static_cast<int>(c.size()) <= k[1]) c.resize(k[1] + 1, Rat(0));
      c[k[1]] = v;
    }
    return UPoly(std::move(c));
  };
  auto coeff3 = [](const Poly3& F, int i, int j, int k) { return F.coeff({i, j, k}); };
  // The point (0:1:0): top y-degree coefficients of the partials.
  {
    int d = curve.degree;
    bool sing = coeff3(Fx, 0, d - 1, 0).is_zero() && coeff3(Fy, 0, d - 1, 0).is_zero() &&
                coeff3(Fz, 0, d - 1, 0).is_zero();
    if (sing) out.push_back(make_proj_point(Rat(0), Rat(1), Rat(0)));
  }
  // Points (1:t:0).
  UPoly u1 = at_infinity(Fx), u2 = at_infinity(Fy), u3 = at_infinity(Fz);
  UPoly h;
  bool all_zero = u1.is_zero() && u2.is_zero() && u3.is_zero();
  if (all_zero)
    throw Error(ErrorKind::invalid_input, "degenerate curve: all partials vanish on z=0");
  h = upoly_gcd(upoly_gcd(u1, u2), u3);
  if (h.degree() > 0) {
    RootReport ts = rational_roots(h);
    if (!ts.irrational.empty())
      throw Error(ErrorKind::irrational_singular_point,
                  "singular point at infinity with irrational coordinates");
    for (const auto& [t0, m] : ts.rational) out.push_back(make_proj_point(Rat(1), t0, Rat(0)));
  }

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace psikit
