#include "psikit/fuzz.hpp"

#include <random>
#include <sstream>
#include <vector>

namespace psikit {

namespace {

using Rng = std::mt19937_64;

int pick(Rng& rng, int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); }

EPoly random_class(Rng& rng) {
  auto piece = [&rng]() {
    static const long long coeffs[] = {-2, -1, 1, 1, 2, 3};
    EPoly p(Int(coeffs[rng() % 6]));
    p = p * std_class(StdKind::affine, rng() % 3);
    if (rng() % 3 == 0) p = p * std_class(StdKind::torus, 1 + rng() % 2);
    return p;
  };
  EPoly z = piece();
  if (rng() % 2 == 0) z += piece();
  return z;
}

std::vector<AlphaFn> alpha_suite(const NCModel& model, Rng& rng) {
  std::vector<AlphaFn> out;
  out.push_back(AlphaFn::identity());
  out.push_back(AlphaFn::constant(1));
  std::set<long long> mults;
  for (const auto& c : model.components) mults.insert(c.mult);
  for (long long m : mults) out.push_back(AlphaFn::indicator(m));
  for (int i = 0; i < 5; ++i) {
    std::map<long long, long long> t;
    for (long long m : mults) t[m] = static_cast<long long>(rng() % 11) - 3;
    out.push_back(AlphaFn::table(std::move(t), AlphaFn::Fallback::constant, 0));
  }
  return out;
}

struct Baseline {
  std::vector<BucketFunction> psi_values;                 // per alpha
  std::vector<std::map<std::string, MTClass>> motivic;    // per alpha, per point
  std::map<std::string, EPoly> lift_fiber;                // per point
  std::optional<EPoly> lift_total;
};

Baseline snapshot(const NCModel& m, const std::vector<AlphaFn>& alphas) {
  Baseline b;
  for (const auto& a : alphas) {
    b.psi_values.push_back(psi(m, a));
    std::map<std::string, MTClass> per_point;
    for (const auto& p : m.points) per_point[p] = motivic_psi(m, a, Scope::fiber(p));
    b.motivic.push_back(std::move(per_point));
  }
  for (const auto& p : m.points) b.lift_fiber[p] = naive_lift(m, Scope::fiber(p));
  if (m.strata_total) b.lift_total = naive_lift(m, Scope::total());
  return b;
}

// A random admissible center referencing only existing strata.
std::optional<CenterSpec> random_center(const NCModel& m, Rng& rng) {
  std::vector<std::pair<IdSet, std::optional<std::string>>> keys;
  for (const auto& [key, cls] : m.strata_fiber) keys.push_back({key.first, key.second});
  if (m.strata_total)
    for (const auto& [key, cls] : *m.strata_total) keys.push_back({key, std::nullopt});
  if (keys.empty()) return std::nullopt;
  for (int attempt = 0; attempt < 32; ++attempt) {
    const auto& [ids, at] = keys[pick(rng, static_cast<int>(keys.size()))];
    std::vector<std::string> pool(ids.begin(), ids.end());
    IdSet c;
    for (const auto& id : pool)
      if (rng() % 2 == 0) c.insert(id);
    if (c.empty()) c.insert(pool[pick(rng, static_cast<int>(pool.size()))]);
    int min_codim = std::max<int>(2, static_cast<int>(c.size()));
    if (min_codim > m.ambient_dim) continue;
    CenterSpec spec;
    spec.codim = min_codim + pick(rng, m.ambient_dim - min_codim + 1);
    spec.contains = c;
    // Pieces: every stratum containing C is a candidate; keep a random
    // nonempty subset including the one we started from.
    std::vector<CenterPiece> candidates;
    for (const auto& [key, at2] : keys) {
      bool contains_c = true;
      for (const auto& id : c) contains_c = contains_c && key.count(id);
      if (!contains_c) continue;
      IdSet extra;
      for (const auto& id : key)
        if (!c.count(id)) extra.insert(id);
      CenterPiece piece;
      piece.extra = std::move(extra);
      piece.at = at2;
      piece.cls = random_class(rng);
      candidates.push_back(std::move(piece));
    }
    std::vector<CenterPiece> chosen;
    for (auto& piece : candidates)
      if (rng() % 2 == 0) chosen.push_back(piece);
    if (chosen.empty()) chosen.push_back(candidates[pick(rng, static_cast<int>(candidates.size()))]);
    spec.pieces = std::move(chosen);
    return spec;
  }
  return std::nullopt;
}

template <typename T>
bool differs(const T& a, const T& b, const std::string& what, FuzzReport& rep) {
  if (a == b) return false;
  rep.ok = false;
  rep.detail = what;
  return true;
}

}  // namespace

FuzzReport check_blowup_invariance(const NCModel& base, std::uint64_t seed, int rounds,
                                   int max_steps_per_round) {
  FuzzReport rep;
  Rng rng(seed);
  std::vector<AlphaFn> alphas = alpha_suite(base, rng);
  Baseline want = snapshot(base, alphas);
  long long fresh = 0;

  for (int round = 0; round < rounds && rep.ok; ++round) {
    NCModel model = base;
    int steps = 1 + pick(rng, max_steps_per_round);
    for (int step = 0; step < steps && rep.ok; ++step) {
      auto center = random_center(model, rng);
      if (!center) break;
      std::ostringstream id;
      id << "zz" << ++fresh;
      NCModel next = blow_up(model, *center, id.str());
      ++rep.blowups;

      long long expect_mult = 0;
      for (const auto& cid : center->contains) expect_mult += model.find_component(cid)->mult;
      const Component* e = next.find_component(id.str());
      if (!e || e->mult != expect_mult) {
        rep.ok = false;
        rep.detail = "multiplicity rule violated for " + id.str();
        break;
      }

      Baseline got = snapshot(next, alphas);
      for (size_t i = 0; i < alphas.size() && rep.ok; ++i) {
        if (differs(got.psi_values[i], want.psi_values[i],
                     "psi changed under blow-up (alpha " + alphas[i].name() + ")", rep))
          break;
        if (differs(got.motivic[i], want.motivic[i],
                     "motivic fiber class changed under blow-up (alpha " + alphas[i].name() + ")",
                     rep))
          break;
      }
      if (rep.ok) differs(got.lift_fiber, want.lift_fiber, "naive lift (fiber) changed", rep);
      if (rep.ok && want.lift_total)
        differs(*got.lift_total, *want.lift_total, "naive lift (total) changed", rep);
      model = std::move(next);
    }
    ++rep.rounds;
  }
  return rep;
}

}  // namespace psikit
