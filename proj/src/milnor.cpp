#include "psikit/resolve.hpp"

#include <map>
#include <vector>

namespace psikit {

namespace {

// Rank over Q of the span of {m * g mod (x^K, y^K) : m a box monomial,
// g in gens} inside Q[x,y]/(x^K, y^K), by sparse Gaussian elimination.
int ideal_rank_in_box(const std::vector<Poly2>& gens, int K) {
  using Row = std::map<int, Rat>;  // column = i*K + j
  std::vector<Row> pivots(K * K);
  std::vector<bool> has_pivot(K * K, false);
  int rank = 0;
  for (const Poly2& g : gens) {
    if (g.is_zero()) continue;
    for (int a = 0; a < K; ++a) {
      for (int b = 0; b < K; ++b) {
        Row row;
        for (const auto& [k, c] : g.terms()) {
          int i = k[0] + a, j = k[1] + b;
          if (i < K && j < K) row[i * K + j] = c;
        }
        // Reduce against the existing pivots.
        while (!row.empty()) {
          int col = row.begin()->first;
          if (!has_pivot[col]) break;
          Rat factor = row.begin()->second;
          for (const auto& [c2, v2] : pivots[col]) {
            auto it = row.find(c2);
            Rat nv = (it == row.end() ? Rat(0) : it->second) - factor * v2;
            if (nv.is_zero()) {
              if (it != row.end()) row.erase(it);
            } else if (it == row.end()) {
              row.emplace(c2, nv);
            } else {
              it->second = nv;
            }
          }
        }
        if (row.empty()) continue;
        int col = row.begin()->first;
        Rat inv = row.begin()->second.inverse();
        for (auto& [c2, v2] : row) v2 *= inv;
        pivots[col] = std::move(row);
        has_pivot[col] = true;
        ++rank;
      }
    }
  }
  return rank;
}

Int box_quotient_dim(const Poly2& fx, const Poly2& fy, int K) {
  return Int(K) * K - ideal_rank_in_box({fx, fy}, K);
}

}  // namespace

Int milnor_oracle(const Poly2& f, int max_k) {
  Poly2 fx = f.derivative(0);
  Poly2 fy = f.derivative(1);
  if (fx.is_zero() && fy.is_zero())
    throw Error(ErrorKind::invalid_input, "constant polynomial has no critical points");
  Int prev = -1;
  for (int K = 4; K <= max_k; K *= 2) {
    Int dim = box_quotient_dim(fx, fy, K);
    if (dim == prev) return dim;
    prev = dim;
  }
  throw Error(ErrorKind::non_isolated,
              "local algebra dimension keeps growing; critical point is not isolated");
}

}  // namespace psikit
