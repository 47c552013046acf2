#ifndef MCS_SCALAR_HPP
#define MCS_SCALAR_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace mcs {

// Exact rational scalar. Always kept in lowest terms with positive
// denominator (gmp canonical form); every arithmetic operation is exact.
using Scalar = mpq_class;

// num/den constructor with canonicalization. mpq_class(a, b) alone does
// not reduce the fraction.
inline Scalar frac(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("frac: zero denominator");
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p/q" or "p". Throws on malformed input or zero denominator.
Scalar parse_scalar(const std::string& s);

// Renders as "p/q", including "/1" for integers. This is the wire format
// used by every document the tool emits.
std::string render_scalar(const Scalar& x);

// n! as an exact scalar.
Scalar factorial(unsigned long n);

inline int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace mcs

#endif
