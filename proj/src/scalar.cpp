#include "mcs/scalar.hpp"

namespace mcs {

Scalar parse_scalar(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_scalar: empty string");
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("parse_scalar: malformed rational '" + s + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("parse_scalar: zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string render_scalar(const Scalar& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Scalar factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Scalar(f);
}

}  // namespace mcs
