#ifndef MCS_POLY_FORM_HPP
#define MCS_POLY_FORM_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mcs/scalar.hpp"

namespace mcs {

// One monomial-times-exterior-monomial key: t_1^{e_1}..t_n^{e_n} dt_J.
// Bit i of dt (1-based) set iff dt_i is a factor; indices stored ascending.
struct FormTerm {
  std::vector<uint8_t> exp;
  uint32_t dt = 0;
};

int mask_cmp_lex(uint32_t a, uint32_t b);

// graded-lex on the monomial, then index-set-lex on dt
struct FormTermLess {
  bool operator()(const FormTerm& a, const FormTerm& b) const;
};

// Element of the Sullivan algebra Omega_n in canonical normal form: t_0 and
// dt_0 are eliminated via t_0 = 1 - sum t_i, dt_0 = -sum dt_i.
class PolyForm {
 public:
  explicit PolyForm(int n = 0) : n_(n) {}

  static PolyForm one(int n);
  static PolyForm constant(int n, const Scalar& c);
  // t_i / dt_i as normal-form elements; i = 0 expands the relation.
  static PolyForm t(int i, int n);
  static PolyForm dt(int i, int n);

  int dim() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<FormTerm, Scalar, FormTermLess>& terms() const { return terms_; }

  PolyForm& add(const Scalar& c, const FormTerm& term);
  PolyForm& operator+=(const PolyForm& o);
  PolyForm& operator-=(const PolyForm& o);
  PolyForm& operator*=(const Scalar& c);
  friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
  friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a -= b; }
  friend PolyForm operator*(const Scalar& c, PolyForm a) { return a *= c; }
  bool operator==(const PolyForm& o) const;

  PolyForm operator*(const PolyForm& o) const;  // graded-commutative product
  PolyForm d() const;                           // d(t_i) = dt_i, Leibniz

  // component of exterior degree k
  PolyForm component(int k) const;
  bool homogeneous_degree(int* deg) const;

  // simplicial structure
  PolyForm face(int i) const;        // Omega_n -> Omega_{n-1}
  PolyForm degeneracy(int i) const;  // Omega_n -> Omega_{n+1}

  // restriction to the subsimplex spanned by the vertices of I
  // (mask over bits 0..n), via iterated faces
  PolyForm restrict_to(uint32_t vertex_mask) const;

  // formal simplex integration of the top-degree component;
  // lower-degree components contribute 0
  Scalar integrate() const;

  Scalar vertex_value(int i) const;  // evaluation of the 0-form part

  // Poincare operator for the linear contraction onto vertex i:
  // pull back along t -> s t + (1-s) e_i, take the ds part, integrate s.
  PolyForm vertex_homotopy(int i) const;

  // pullback along an affine map: images[j] (0-based, for t_{j+1}) gives
  // the affine expression c0 + sum_k lin[k] u_{k+1} in the target algebra
  struct Affine {
    Scalar c0;
    std::vector<Scalar> lin;
  };
  PolyForm substitute(int target_n, const std::vector<Affine>& images) const;

  std::string str() const;

 private:
  int n_;
  std::map<FormTerm, Scalar, FormTermLess> terms_;
};

}  // namespace mcs

#endif
