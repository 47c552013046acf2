#ifndef MCS_DUPONT_HPP
#define MCS_DUPONT_HPP

#include <map>
#include <vector>

#include "mcs/cell.hpp"
#include "mcs/poly_form.hpp"

namespace mcs {

// The Dupont contraction (p, i, h) of Omega_n onto C_n, with exact simplex
// integration. One instance per simplex dimension; p and h are memoized on
// the monomial basis since every caller hits the same monomials repeatedly.
class Dupont {
 public:
  explicit Dupont(int n);

  int dim() const { return n_; }

  // Whitney form of the index set (nonempty mask over bits 0..n).
  const PolyForm& omega(uint32_t mask) const;

  PolyForm i(const CellElement& c) const;
  CellElement p(const PolyForm& a) const;
  PolyForm h(const PolyForm& a) const;

  // p d i on the basic-form basis; coincides with the simplicial cochain
  // differential.
  CellElement cell_d(const CellElement& c) const;

  // all nonempty index sets, by size then lexicographic
  const std::vector<uint32_t>& index_sets() const { return index_sets_; }

 private:
  const CellElement& p_term(const FormTerm& t) const;
  const PolyForm& h_term(const FormTerm& t) const;

  int n_;
  std::vector<uint32_t> index_sets_;
  mutable std::map<uint32_t, PolyForm> omega_cache_;
  mutable std::map<FormTerm, CellElement, FormTermLess> p_cache_;
  mutable std::map<FormTerm, PolyForm, FormTermLess> h_cache_;
  mutable std::map<uint32_t, CellElement> cell_d_cache_;
};

// shared per-dimension instances
const Dupont& dupont(int n);

}  // namespace mcs

#endif
