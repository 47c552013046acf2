#include "mcs/cell.hpp"

#include <bit>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace mcs {

CellElement CellElement::basis(int n, uint32_t mask) {
  CellElement c(n);
  c.add(1, mask);
  return c;
}

Scalar CellElement::coeff(uint32_t mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? Scalar(0) : it->second;
}

CellElement& CellElement::add(const Scalar& c, uint32_t mask) {
  if (mask == 0 || (mask >> (n_ + 1)) != 0)
    throw std::out_of_range("CellElement: index set out of range");
  if (c == 0) return *this;
  auto it = terms_.find(mask);
  if (it == terms_.end()) {
    terms_.emplace(mask, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

CellElement& CellElement::operator+=(const CellElement& o) {
  assert(n_ == o.n_);
  for (const auto& [m, c] : o.terms_) add(c, m);
  return *this;
}

CellElement& CellElement::operator-=(const CellElement& o) {
  assert(n_ == o.n_);
  for (const auto& [m, c] : o.terms_) add(-c, m);
  return *this;
}

CellElement& CellElement::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

bool CellElement::operator==(const CellElement& o) const {
  return n_ == o.n_ && terms_ == o.terms_;
}

CellElement CellElement::component(int k) const {
  CellElement out(n_);
  for (const auto& [m, c] : terms_)
    if (cell_degree(m) == k) out.add(c, m);
  return out;
}

bool CellElement::homogeneous_degree(int* deg) const {
  bool first = true;
  int d = 0;
  for (const auto& [m, c] : terms_) {
    const int k = cell_degree(m);
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

CellElement CellElement::face(int i) const {
  if (i < 0 || i > n_ || n_ < 1)
    throw std::out_of_range("CellElement::face: index out of range");
  CellElement out(n_ - 1);
  for (const auto& [m, c] : terms_) {
    if (m & (1u << i)) continue;  // basis form dies on the opposite face
    const uint32_t low = m & ((1u << i) - 1);
    const uint32_t high = (m >> (i + 1)) << i;
    out.add(c, low | high);
  }
  return out;
}

CellElement CellElement::degeneracy(int i) const {
  if (i < 0 || i > n_)
    throw std::out_of_range("CellElement::degeneracy: index out of range");
  CellElement out(n_ + 1);
  for (const auto& [m, c] : terms_) {
    // preimages of I under the vertex collapse i, i+1 -> i that stay injective
    const uint32_t low = m & ((1u << i) - 1);
    const uint32_t above = (m >> (i + 1)) << (i + 2);
    if (m & (1u << i)) {
      out.add(c, low | above | (1u << i));
      out.add(c, low | above | (1u << (i + 1)));
    } else {
      out.add(c, low | above);
    }
  }
  return out;
}

std::string cell_mask_str(uint32_t mask) {
  std::ostringstream os;
  os << "w{";
  bool first = true;
  for (uint32_t rest = mask; rest; rest &= rest - 1) {
    if (!first) os << ",";
    os << std::countr_zero(rest);
    first = false;
  }
  os << "}";
  return os.str();
}

std::string CellElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    os << "(" << render_scalar(c) << ") " << cell_mask_str(m);
    first = false;
  }
  return os.str();
}

}  // namespace mcs
