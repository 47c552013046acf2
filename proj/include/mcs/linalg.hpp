#ifndef MCS_LINALG_HPP
#define MCS_LINALG_HPP

#include <optional>
#include <vector>

#include "mcs/scalar.hpp"

namespace mcs {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;  // row-major

struct SolveResult {
  bool solvable = false;
  bool unique = false;
  Vec x;  // one solution when solvable
};

// Exact Gaussian elimination over the rationals.
SolveResult solve_linear(Mat a, Vec b);

int rank(Mat a);

}  // namespace mcs

#endif
