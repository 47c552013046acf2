#include "mcs/poly_form.hpp"

#include <bit>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mcs {

namespace {

int total_degree(const std::vector<uint8_t>& exp) {
  int s = 0;
  for (uint8_t e : exp) s += e;
  return s;
}

// sign of dt_i ^ dt_J with i inserted into the ascending product
int insert_sign(uint32_t mask, int i) {
  const uint32_t below = mask & ((1u << i) - 1);
  return parity_sign(std::popcount(below));
}

// sign of dt_A ^ dt_B when merging two ascending products (disjoint masks)
int merge_sign(uint32_t a, uint32_t b) {
  int inversions = 0;
  uint32_t rest = a;
  while (rest) {
    const int i = std::countr_zero(rest);
    inversions += std::popcount(b & ((1u << i) - 1));
    rest &= rest - 1;
  }
  return parity_sign(inversions);
}

}  // namespace

int mask_cmp_lex(uint32_t a, uint32_t b) {
  while (a && b) {
    const int ia = std::countr_zero(a);
    const int ib = std::countr_zero(b);
    if (ia != ib) return ia < ib ? -1 : 1;
    a &= a - 1;
    b &= b - 1;
  }
  if (a) return 1;
  if (b) return -1;
  return 0;
}

bool FormTermLess::operator()(const FormTerm& a, const FormTerm& b) const {
  const int da = total_degree(a.exp);
  const int db = total_degree(b.exp);
  if (da != db) return da < db;
  if (a.exp != b.exp) return a.exp < b.exp;
  return mask_cmp_lex(a.dt, b.dt) < 0;
}

PolyForm PolyForm::one(int n) { return constant(n, Scalar(1)); }

PolyForm PolyForm::constant(int n, const Scalar& c) {
  PolyForm f(n);
  FormTerm t;
  t.exp.assign(n, 0);
  f.add(c, t);
  return f;
}

PolyForm PolyForm::t(int i, int n) {
  if (i < 0 || i > n) throw std::out_of_range("PolyForm::t: index out of range");
  PolyForm f(n);
  if (i == 0) {
    f += one(n);
    for (int j = 1; j <= n; ++j) f -= t(j, n);
    return f;
  }
  FormTerm term;
  term.exp.assign(n, 0);
  term.exp[i - 1] = 1;
  f.add(1, term);
  return f;
}

PolyForm PolyForm::dt(int i, int n) {
  if (i < 0 || i > n) throw std::out_of_range("PolyForm::dt: index out of range");
  PolyForm f(n);
  if (i == 0) {
    for (int j = 1; j <= n; ++j) f -= dt(j, n);
    return f;
  }
  FormTerm term;
  term.exp.assign(n, 0);
  term.dt = 1u << i;
  f.add(1, term);
  return f;
}

PolyForm& PolyForm::add(const Scalar& c, const FormTerm& term) {
  assert(static_cast<int>(term.exp.size()) == n_);
  if (c == 0) return *this;
  auto it = terms_.find(term);
  if (it == terms_.end()) {
    terms_.emplace(term, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

PolyForm& PolyForm::operator+=(const PolyForm& o) {
  assert(n_ == o.n_);
  for (const auto& [t, c] : o.terms_) add(c, t);
  return *this;
}

PolyForm& PolyForm::operator-=(const PolyForm& o) {
  assert(n_ == o.n_);
  for (const auto& [t, c] : o.terms_) add(-c, t);
  return *this;
}

PolyForm& PolyForm::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, coeff] : terms_) coeff *= c;
  return *this;
}

bool PolyForm::operator==(const PolyForm& o) const {
  return n_ == o.n_ && terms_ == o.terms_;
}

PolyForm PolyForm::operator*(const PolyForm& o) const {
  if (n_ != o.n_) throw std::invalid_argument("PolyForm: dimension mismatch");
  PolyForm out(n_);
  for (const auto& [ta, ca] : terms_)
    for (const auto& [tb, cb] : o.terms_) {
      if (ta.dt & tb.dt) continue;
      FormTerm t;
      t.exp.resize(n_);
      for (int j = 0; j < n_; ++j) t.exp[j] = ta.exp[j] + tb.exp[j];
      t.dt = ta.dt | tb.dt;
      out.add(Scalar(merge_sign(ta.dt, tb.dt)) * ca * cb, t);
    }
  return out;
}

PolyForm PolyForm::d() const {
  PolyForm out(n_);
  for (const auto& [t, c] : terms_)
    for (int i = 1; i <= n_; ++i) {
      const uint8_t e = t.exp[i - 1];
      if (e == 0 || (t.dt & (1u << i))) continue;
      FormTerm nt = t;
      nt.exp[i - 1] = e - 1;
      nt.dt |= 1u << i;
      out.add(Scalar(static_cast<long>(e)) * Scalar(insert_sign(t.dt, i)) * c, nt);
    }
  return out;
}

PolyForm PolyForm::component(int k) const {
  PolyForm out(n_);
  for (const auto& [t, c] : terms_)
    if (std::popcount(t.dt) == k) out.add(c, t);
  return out;
}

bool PolyForm::homogeneous_degree(int* deg) const {
  bool first = true;
  int d = 0;
  for (const auto& [t, c] : terms_) {
    const int k = std::popcount(t.dt);
    if (first) {
      d = k;
      first = false;
    } else if (k != d) {
      return false;
    }
  }
  if (deg) *deg = d;
  return true;
}

PolyForm PolyForm::substitute(int target_n, const std::vector<Affine>& images) const {
  assert(static_cast<int>(images.size()) == n_);
  PolyForm out(target_n);
  // affine image and its differential as target forms, plus cached powers
  std::vector<PolyForm> img;
  std::vector<PolyForm> dimg;
  for (int j = 0; j < n_; ++j) {
    PolyForm f = PolyForm::constant(target_n, images[j].c0);
    PolyForm df(target_n);
    for (int k = 0; k < target_n; ++k) {
      if (images[j].lin[k] == 0) continue;
      f += images[j].lin[k] * PolyForm::t(k + 1, target_n);
      df += images[j].lin[k] * PolyForm::dt(k + 1, target_n);
    }
    img.push_back(f);
    dimg.push_back(df);
  }
  std::vector<std::vector<PolyForm>> powers(n_);  // powers[j][e] = img[j]^e
  for (int j = 0; j < n_; ++j) powers[j].push_back(PolyForm::one(target_n));

  for (const auto& [t, c] : terms_) {
    PolyForm acc = PolyForm::constant(target_n, c);
    for (int j = 0; j < n_ && !acc.is_zero(); ++j) {
      const int e = t.exp[j];
      while (static_cast<int>(powers[j].size()) <= e)
        powers[j].push_back(powers[j].back() * img[j]);
      if (e > 0) acc = acc * powers[j][e];
    }
    uint32_t rest = t.dt;
    while (rest && !acc.is_zero()) {
      const int i = std::countr_zero(rest);
      acc = acc * dimg[i - 1];
      rest &= rest - 1;
    }
    out += acc;
  }
  return out;
}

PolyForm PolyForm::face(int i) const {
  if (i < 0 || i > n_ || n_ < 1)
    throw std::out_of_range("PolyForm::face: index out of range");
  const int m = n_ - 1;
  std::vector<Affine> images(n_);
  for (int j = 1; j <= n_; ++j) {
    Affine& a = images[j - 1];
    a.c0 = 0;
    a.lin.assign(m, Scalar(0));
    if (i == 0) {
      if (j == 1) {
        a.c0 = 1;
        for (int k = 0; k < m; ++k) a.lin[k] = -1;
      } else {
        a.lin[j - 2] = 1;
      }
    } else {
      if (j < i)
        a.lin[j - 1] = 1;
      else if (j > i)
        a.lin[j - 2] = 1;
      // j == i: restricts to zero
    }
  }
  return substitute(m, images);
}

PolyForm PolyForm::degeneracy(int i) const {
  if (i < 0 || i > n_)
    throw std::out_of_range("PolyForm::degeneracy: index out of range");
  const int m = n_ + 1;
  std::vector<Affine> images(n_);
  for (int j = 1; j <= n_; ++j) {
    Affine& a = images[j - 1];
    a.c0 = 0;
    a.lin.assign(m, Scalar(0));
    if (j < i) {
      a.lin[j - 1] = 1;
    } else if (j == i) {
      a.lin[i - 1] = 1;
      a.lin[i] = 1;
    } else {
      a.lin[j] = 1;
    }
  }
  return substitute(m, images);
}

PolyForm PolyForm::restrict_to(uint32_t vertex_mask) const {
  if (vertex_mask == 0)
    throw std::invalid_argument("PolyForm::restrict_to: empty vertex set");
  PolyForm f = *this;
  for (int v = n_; v >= 0; --v)
    if (!(vertex_mask & (1u << v))) f = f.face(v);
  return f;
}

Scalar PolyForm::integrate() const {
  const uint32_t top = ((1u << (n_ + 1)) - 1) & ~1u;  // bits 1..n
  Scalar out(0);
  for (const auto& [t, c] : terms_) {
    if (t.dt != top) continue;
    Scalar num(1);
    long s = 0;
    for (int j = 0; j < n_; ++j) {
      num *= factorial(t.exp[j]);
      s += t.exp[j];
    }
    out += c * num / factorial(static_cast<unsigned long>(s) + n_);
  }
  return out;
}

Scalar PolyForm::vertex_value(int i) const {
  const PolyForm v = restrict_to(1u << i);
  Scalar out(0);
  for (const auto& [t, c] : v.terms()) {
    assert(t.dt == 0 && total_degree(t.exp) == 0);
    out += c;
  }
  return out;
}

PolyForm PolyForm::vertex_homotopy(int i) const {
  if (i < 0 || i > n_)
    throw std::out_of_range("PolyForm::vertex_homotopy: index out of range");
  PolyForm out(n_);
  for (const auto& [t, c] : terms_) {
    if (t.dt == 0) continue;  // 0-forms have no ds component
    // polynomial factor of the pullback: product over j of
    // (s t_j + (1-s) [j==i])^{e_j}, expanded as sum of (monomial, s-power)
    std::map<std::vector<uint8_t>, std::map<int, Scalar>> poly;
    {
      std::vector<uint8_t> exp0(n_, 0);
      poly[exp0][0] = Scalar(1);
    }
    for (int j = 1; j <= n_; ++j) {
      const int e = t.exp[j - 1];
      if (e == 0) continue;
      if (j != i) {
        // (s t_j)^e: multiply every entry by t_j^e s^e
        std::map<std::vector<uint8_t>, std::map<int, Scalar>> next;
        for (const auto& [mexp, spows] : poly) {
          std::vector<uint8_t> ne = mexp;
          ne[j - 1] += e;
          for (const auto& [sp, sc] : spows) next[ne][sp + e] += sc;
        }
        poly.swap(next);
      } else {
        // (s t_i + 1 - s)^e = sum_m C(e,m) t_i^m s^m (1-s)^{e-m}
        std::map<std::vector<uint8_t>, std::map<int, Scalar>> next;
        for (int m = 0; m <= e; ++m) {
          mpz_class binom_m;
          mpz_bin_uiui(binom_m.get_mpz_t(), e, m);
          for (int l = 0; l <= e - m; ++l) {
            mpz_class binom_l;
            mpz_bin_uiui(binom_l.get_mpz_t(), e - m, l);
            const Scalar coeff =
                Scalar(binom_m) * Scalar(binom_l) * Scalar(parity_sign(l));
            for (const auto& [mexp, spows] : poly) {
              std::vector<uint8_t> ne = mexp;
              ne[i - 1] += m;
              for (const auto& [sp, sc] : spows)
                next[ne][sp + m + l] += sc * coeff;
            }
          }
        }
        poly.swap(next);
      }
    }
    // dt factors: product over j in J of (s dt_j + (t_j - [j==i]) ds);
    // keep the single-ds expansions
    std::vector<int> J;
    for (uint32_t rest = t.dt; rest; rest &= rest - 1)
      J.push_back(std::countr_zero(rest));
    const int m = static_cast<int>(J.size());
    for (int p = 0; p < m; ++p) {
      const int jp = J[p];
      const Scalar sign(parity_sign(p));
      uint32_t ndt = t.dt & ~(1u << jp);
      // two summands of (t_{jp} - [jp==i]): the monomial bump and a constant
      for (int variant = 0; variant < 2; ++variant) {
        Scalar vc;
        int bump = 0;
        if (variant == 0) {
          vc = 1;
          bump = 1;
        } else {
          if (jp != i) continue;
          vc = -1;
        }
        for (const auto& [mexp, spows] : poly) {
          std::vector<uint8_t> ne = mexp;
          if (bump) ne[jp - 1] += 1;
          FormTerm nt;
          nt.exp = ne;
          nt.dt = ndt;
          for (const auto& [sp, sc] : spows) {
            const long stot = sp + (m - 1);
            out.add(c * sign * vc * sc / Scalar(stot + 1), nt);
          }
        }
      }
    }
  }
  return out;
}

std::string PolyForm::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    if (!first) os << " + ";
    os << "(" << render_scalar(c) << ")";
    for (int j = 0; j < n_; ++j) {
      if (t.exp[j] == 0) continue;
      os << " t" << (j + 1);
      if (t.exp[j] > 1) os << "^" << static_cast<int>(t.exp[j]);
    }
    for (uint32_t rest = t.dt; rest; rest &= rest - 1)
      os << " dt" << std::countr_zero(rest);
    first = false;
  }
  return os.str();
}

}  // namespace mcs
