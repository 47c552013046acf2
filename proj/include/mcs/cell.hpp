#ifndef MCS_CELL_HPP
#define MCS_CELL_HPP

#include <cstdint>
#include <map>
#include <string>

#include "mcs/scalar.hpp"

namespace mcs {

// Element of the cellular complex C_n: finite combination of basic forms
// w_I indexed by nonempty subsets I of {0,..,n} (bitmask, bit v = vertex v).
// w_I has degree |I| - 1.
class CellElement {
 public:
  explicit CellElement(int n = 0) : n_(n) {}

  static CellElement basis(int n, uint32_t mask);

  int dim() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<uint32_t, Scalar>& terms() const { return terms_; }
  Scalar coeff(uint32_t mask) const;

  CellElement& add(const Scalar& c, uint32_t mask);
  CellElement& operator+=(const CellElement& o);
  CellElement& operator-=(const CellElement& o);
  CellElement& operator*=(const Scalar& c);
  friend CellElement operator+(CellElement a, const CellElement& b) { return a += b; }
  friend CellElement operator-(CellElement a, const CellElement& b) { return a -= b; }
  friend CellElement operator*(const Scalar& c, CellElement a) { return a *= c; }
  bool operator==(const CellElement& o) const;

  CellElement component(int k) const;  // degree-k part
  bool homogeneous_degree(int* deg) const;

  // simplicial structure on index sets
  CellElement face(int i) const;        // C_n -> C_{n-1}
  CellElement degeneracy(int i) const;  // C_n -> C_{n+1}

  std::string str() const;

 private:
  int n_;
  std::map<uint32_t, Scalar> terms_;
};

std::string cell_mask_str(uint32_t mask);

// degree of w_I
inline int cell_degree(uint32_t mask) { return __builtin_popcount(mask) - 1; }

}  // namespace mcs

#endif
