#include "mcs/linalg.hpp"

#include <cassert>

namespace mcs {

namespace {

// Reduces [a | b] to row echelon form, returns pivot columns.
std::vector<int> eliminate(Mat& a, Vec* b) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[r], a[p]);
    if (b) std::swap((*b)[r], (*b)[p]);
    const Scalar inv = 1 / a[r][c];
    for (int j = c; j < cols; ++j) a[r][j] *= inv;
    if (b) (*b)[r] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Scalar f = a[i][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      if (b) (*b)[i] -= f * (*b)[r];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

SolveResult solve_linear(Mat a, Vec b) {
  assert(a.size() == b.size());
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  SolveResult res;
  const std::vector<int> pivots = eliminate(a, &b);
  // Inconsistent row: 0 = nonzero.
  for (int i = static_cast<int>(pivots.size()); i < rows; ++i)
    if (b[i] != 0) return res;
  res.solvable = true;
  res.unique = static_cast<int>(pivots.size()) == cols;
  res.x.assign(cols, Scalar(0));
  for (size_t r = 0; r < pivots.size(); ++r) res.x[pivots[r]] = b[r];
  return res;
}

int rank(Mat a) {
  return static_cast<int>(eliminate(a, nullptr).size());
}

}  // namespace mcs
