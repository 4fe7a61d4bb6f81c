#include "minsurf/lll.hpp"

#include <algorithm>

namespace minsurf {

namespace {

bigint_t dot(const std::vector<bigint_t>& a, const std::vector<bigint_t>& b) {
  bigint_t s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bigrat_t rat_dot(const std::vector<bigrat_t>& a, const std::vector<bigint_t>& b) {
  bigrat_t s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bigrat_t rat_norm2(const std::vector<bigrat_t>& a) {
  bigrat_t s = 0;
  for (const auto& x : a) s += x * x;
  return s;
}

bigint_t round_rat(const bigrat_t& q) {
  // nearest integer, half away from zero
  const bigint_t num = numerator(q), den = denominator(q);
  const bigint_t twice = 2 * num;
  if (twice >= 0) return bigint_t((twice + den) / (2 * den));
  return bigint_t(-((-twice + den) / (2 * den)));
}

}  // namespace

void lll_reduce(std::vector<std::vector<bigint_t>>& basis) {
  const int n = static_cast<int>(basis.size());
  if (n <= 1) return;
  const size_t dim = basis[0].size();

  // exact Gram-Schmidt data
  std::vector<std::vector<bigrat_t>> gs(n, std::vector<bigrat_t>(dim));
  std::vector<std::vector<bigrat_t>> mu(n, std::vector<bigrat_t>(n));
  std::vector<bigrat_t> norm2(n);

  const auto recompute = [&](int from) {
    for (int i = from; i < n; ++i) {
      for (size_t d = 0; d < dim; ++d) gs[i][d] = bigrat_t(basis[i][d]);
      for (int j = 0; j < i; ++j) {
        if (norm2[j] == 0) {
          mu[i][j] = 0;
          continue;
        }
        mu[i][j] = rat_dot(gs[j], basis[i]) / norm2[j];
        for (size_t d = 0; d < dim; ++d) gs[i][d] -= mu[i][j] * gs[j][d];
      }
      norm2[i] = rat_norm2(gs[i]);
    }
  };
  recompute(0);

  const bigrat_t delta(3, 4);
  int k = 1;
  while (k < n) {
    // size reduction
    for (int j = k - 1; j >= 0; --j) {
      const bigint_t r = round_rat(mu[k][j]);
      if (r != 0) {
        for (size_t d = 0; d < dim; ++d) basis[k][d] -= r * basis[j][d];
        recompute(k);
      }
    }
    // Lovasz condition
    if (norm2[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * norm2[k - 1]) {
      ++k;
    } else {
      std::swap(basis[k], basis[k - 1]);
      recompute(k - 1);
      k = std::max(k - 1, 1);
    }
  }
}

int rank_exact(const IntMat& m) {
  // fraction-free Gaussian elimination (Bareiss)
  const int rows = m.rows(), cols = m.cols();
  IntMat a = m;
  int rank = 0;
  bigint_t prev = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r) {
      if (a(r, col) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != rank) {
      for (int j = 0; j < cols; ++j) std::swap(a(piv, j), a(rank, j));
    }
    for (int r = rank + 1; r < rows; ++r) {
      for (int j = col + 1; j < cols; ++j) {
        a(r, j) = (a(rank, col) * a(r, j) - a(r, col) * a(rank, j)) / prev;
      }
      a(r, col) = 0;
    }
    prev = a(rank, col);
    ++rank;
  }
  return rank;
}

std::vector<std::vector<bigint_t>> find_column_relations(const RealMat& P, const real_t& tol,
                                                         const bigint_t& max_height,
                                                         int scale_digits) {
  const int n = P.rows();
  const int w = P.cols();
  const real_t scale = pow(real_t(10), scale_digits);
  const real_t abs_tol = tol * std::max(real_t(1), max_abs(P));

  // rows: [ e_j | round(scale * P_col_j) ]
  std::vector<std::vector<bigint_t>> basis(w, std::vector<bigint_t>(w + n));
  for (int j = 0; j < w; ++j) {
    basis[j][j] = 1;
    for (int i = 0; i < n; ++i) {
      basis[j][w + i] = static_cast<bigint_t>(nearest_integer(scale * P(i, j)));
    }
  }
  lll_reduce(basis);

  // verify candidates against P in working precision and keep an independent set
  std::vector<std::vector<bigint_t>> verified;
  IntMat stack(0, 0);
  for (const auto& row : basis) {
    std::vector<bigint_t> c(row.begin(), row.begin() + w);
    bool nonzero = false;
    bool within_height = true;
    for (const auto& x : c) {
      if (x != 0) nonzero = true;
      if (abs(x) > max_height) within_height = false;
    }
    if (!nonzero || !within_height) continue;
    real_t resid = 0;
    for (int i = 0; i < n; ++i) {
      real_t s = 0;
      for (int j = 0; j < w; ++j) s += P(i, j) * real_t(c[j]);
      resid = std::max(resid, abs(s));
    }
    if (resid > abs_tol) continue;
    // extend the independent set only if the rank grows
    IntMat trial(static_cast<int>(verified.size()) + 1, w);
    for (size_t r = 0; r < verified.size(); ++r)
      for (int j = 0; j < w; ++j) trial(static_cast<int>(r), j) = verified[r][j];
    for (int j = 0; j < w; ++j) trial(static_cast<int>(verified.size()), j) = c[j];
    if (rank_exact(trial) == static_cast<int>(verified.size()) + 1) {
      verified.push_back(std::move(c));
    }
  }
  return verified;
}

}  // namespace minsurf
