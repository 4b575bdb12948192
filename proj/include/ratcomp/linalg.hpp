// Dense Gaussian elimination over an exact field.
#pragma once

#include <optional>
#include <vector>

namespace ratcomp {

// Solutions of A x = b as x0 + sum_k s_k * basis[k].
template <class F>
struct AffineSolution {
  std::vector<F> particular;
  std::vector<std::vector<F>> basis;

  std::vector<F> at(const std::vector<F>& s) const {
    std::vector<F> x = particular;
    for (std::size_t k = 0; k < basis.size(); ++k)
      for (std::size_t i = 0; i < x.size(); ++i) x[i] += s[k] * basis[k][i];
    return x;
  }
};

template <class F>
std::optional<AffineSolution<F>> solve_affine(std::vector<std::vector<F>> A, std::vector<F> b, std::size_t ncols) {
  std::size_t rows = A.size();
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < rows; ++col) {
    std::size_t p = rank;
    while (p < rows && A[p][col].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(A[p], A[rank]);
    std::swap(b[p], b[rank]);
    F inv = A[rank][col].inverse();
    for (auto& v : A[rank]) v *= inv;
    b[rank] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || A[r][col].is_zero()) continue;
      F f = A[r][col];
      for (std::size_t k = 0; k < ncols; ++k) A[r][k] -= f * A[rank][k];
      b[r] -= f * b[rank];
    }
    pivots.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r)
    if (!b[r].is_zero()) return std::nullopt;
  AffineSolution<F> sol;
  sol.particular.assign(ncols, F(0));
  for (std::size_t r = 0; r < rank; ++r) sol.particular[pivots[r]] = b[r];
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t fcol = 0; fcol < ncols; ++fcol) {
    if (is_pivot[fcol]) continue;
    std::vector<F> v(ncols, F(0));
    v[fcol] = F(1);
    for (std::size_t r = 0; r < rank; ++r) v[pivots[r]] = -A[r][fcol];
    sol.basis.push_back(std::move(v));
  }
  return sol;
}

}  // namespace ratcomp
