#ifndef MCS_FREE_LIE_HPP
#define MCS_FREE_LIE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcs/scalar.hpp"

namespace mcs {

struct Generator {
  std::string name;
  int degree = 0;  // cohomological
};

// Immutable set of generators of one free graded Lie algebra. Elements refer
// to their generator set by shared pointer; mixing sets is an error.
class GeneratorSet {
 public:
  explicit GeneratorSet(std::vector<Generator> gens);
  int size() const { return static_cast<int>(gens_.size()); }
  const Generator& at(int i) const { return gens_.at(i); }
  int index_of(const std::string& name) const;

 private:
  std::vector<Generator> gens_;
};

using GeneratorSetPtr = std::shared_ptr<const GeneratorSet>;

// A word in the tensor algebra: sequence of generator indices.
// weight = length, degree = sum of generator degrees.
using TensorWord = std::vector<uint16_t>;

int word_degree(const GeneratorSet& gens, const TensorWord& w);

struct WordLess {
  bool operator()(const TensorWord& a, const TensorWord& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Element of the completed tensor algebra over a generator set, exact modulo
// words of weight > truncation_weight. Lie elements are the ones fixed by
// dynkin_project; the bracket and derivation/morphism extensions below are
// the only producers used in anger, and they preserve Lie-ness.
class FreeLieElement {
 public:
  FreeLieElement(GeneratorSetPtr gens, int truncation_weight);

  static FreeLieElement zero(GeneratorSetPtr gens, int trunc);
  static FreeLieElement generator(GeneratorSetPtr gens, int index, int trunc);

  const GeneratorSetPtr& gens() const { return gens_; }
  int truncation_weight() const { return trunc_; }
  const std::map<TensorWord, Scalar, WordLess>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool homogeneous_degree(int* deg) const;  // true if all terms share a degree

  FreeLieElement& add(const Scalar& c, const TensorWord& w);
  FreeLieElement& operator+=(const FreeLieElement& o);
  FreeLieElement& operator-=(const FreeLieElement& o);
  FreeLieElement& operator*=(const Scalar& c);
  friend FreeLieElement operator+(FreeLieElement a, const FreeLieElement& b) {
    return a += b;
  }
  friend FreeLieElement operator-(FreeLieElement a, const FreeLieElement& b) {
    return a -= b;
  }
  friend FreeLieElement operator*(const Scalar& c, FreeLieElement a) {
    return a *= c;
  }
  bool operator==(const FreeLieElement& o) const;

  // Tensor-algebra product, truncated.
  FreeLieElement concat(const FreeLieElement& o) const;

  std::string str() const;

 private:
  void check_compatible(const FreeLieElement& o) const;

  GeneratorSetPtr gens_;
  int trunc_;
  std::map<TensorWord, Scalar, WordLess> terms_;
};

// [a,b] = a.b - (-1)^{|a||b|} b.a, computed termwise on homogeneous words.
FreeLieElement lie_bracket(const FreeLieElement& a, const FreeLieElement& b);

// Drops all words of weight > n and lowers the truncation weight to n.
FreeLieElement truncate(const FreeLieElement& a, int n);

// Weight-w Dynkin idempotent (left-bracketing map / w) applied per weight
// component. Fixed points are exactly the Lie elements.
FreeLieElement dynkin_project(const FreeLieElement& a);

bool is_lie_element(const FreeLieElement& a);

// Graded Leibniz extension of the generator images; parity is the degree of
// the derivation. Missing generator image is an error.
FreeLieElement extend_derivation(const std::vector<FreeLieElement>& images,
                                 int parity, const FreeLieElement& a);

// Unique Lie algebra morphism determined by generator images, evaluated on a
// Lie element via the Dynkin rewrite a_w = (1/w) sum of left-nested brackets.
// Ops must provide: zero(), bracket(x, y), axpy(target, coeff, x).
template <class T, class Ops>
T extend_morphism(const std::vector<T>& images, const FreeLieElement& a,
                  const Ops& ops) {
  T out = ops.zero();
  for (const auto& [w, c] : a.terms()) {
    if (w.size() == 1) {
      ops.axpy(out, c, images.at(w[0]));
      continue;
    }
    T nested = images.at(w[0]);
    for (size_t j = 1; j < w.size(); ++j)
      nested = ops.bracket(nested, images.at(w[j]));
    ops.axpy(out, c / Scalar(static_cast<long>(w.size())), nested);
  }
  return out;
}

}  // namespace mcs

#endif
