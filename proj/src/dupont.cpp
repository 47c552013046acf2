#include "mcs/dupont.hpp"

#include <bit>
#include <stdexcept>

namespace mcs {

namespace {

std::vector<int> mask_bits(uint32_t mask) {
  std::vector<int> out;
  for (uint32_t rest = mask; rest; rest &= rest - 1)
    out.push_back(std::countr_zero(rest));
  return out;
}

}  // namespace

Dupont::Dupont(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("Dupont: negative dimension");
  for (int size = 1; size <= n + 1; ++size)
    for (uint32_t m = 1; m < (1u << (n + 1)); ++m)
      if (std::popcount(m) == size) index_sets_.push_back(m);
}

const PolyForm& Dupont::omega(uint32_t mask) const {
  auto it = omega_cache_.find(mask);
  if (it != omega_cache_.end()) return it->second;
  if (mask == 0 || (mask >> (n_ + 1)) != 0)
    throw std::out_of_range("Dupont::omega: index set out of range");
  const std::vector<int> idx = mask_bits(mask);
  const int k = static_cast<int>(idx.size()) - 1;
  PolyForm out(n_);
  for (int j = 0; j <= k; ++j) {
    PolyForm term = PolyForm::t(idx[j], n_);
    for (int l = 0; l <= k; ++l) {
      if (l == j) continue;
      term = term * PolyForm::dt(idx[l], n_);
    }
    out += Scalar(parity_sign(j)) * term;
  }
  out *= factorial(k);
  return omega_cache_.emplace(mask, std::move(out)).first->second;
}

PolyForm Dupont::i(const CellElement& c) const {
  if (c.dim() != n_) throw std::invalid_argument("Dupont::i: dimension mismatch");
  PolyForm out(n_);
  for (const auto& [m, coeff] : c.terms()) out += coeff * omega(m);
  return out;
}

const CellElement& Dupont::p_term(const FormTerm& t) const {
  auto it = p_cache_.find(t);
  if (it != p_cache_.end()) return it->second;
  PolyForm mono(n_);
  mono.add(1, t);
  CellElement out(n_);
  for (uint32_t mask : index_sets_) {
    const Scalar integral = mono.restrict_to(mask).integrate();
    if (integral != 0) out.add(integral, mask);
  }
  return p_cache_.emplace(t, std::move(out)).first->second;
}

CellElement Dupont::p(const PolyForm& a) const {
  if (a.dim() != n_) throw std::invalid_argument("Dupont::p: dimension mismatch");
  CellElement out(n_);
  for (const auto& [t, c] : a.terms()) out += c * p_term(t);
  return out;
}

const PolyForm& Dupont::h_term(const FormTerm& t) const {
  auto it = h_cache_.find(t);
  if (it != h_cache_.end()) return it->second;
  PolyForm mono(n_);
  mono.add(1, t);
  PolyForm out(n_);
  for (uint32_t mask : index_sets_) {
    if (mask == (1u << (n_ + 1)) - 1) continue;  // |I| = n+1 exceeds n-1 vertices cap
    const std::vector<int> idx = mask_bits(mask);
    if (static_cast<int>(idx.size()) > n_) continue;
    PolyForm acc = mono;
    for (int v : idx) acc = acc.vertex_homotopy(v);
    if (acc.is_zero()) continue;
    out += omega(mask) * acc;
  }
  return h_cache_.emplace(t, std::move(out)).first->second;
}

PolyForm Dupont::h(const PolyForm& a) const {
  if (a.dim() != n_) throw std::invalid_argument("Dupont::h: dimension mismatch");
  PolyForm out(n_);
  for (const auto& [t, c] : a.terms()) out += c * h_term(t);
  return out;
}

CellElement Dupont::cell_d(const CellElement& c) const {
  if (c.dim() != n_) throw std::invalid_argument("Dupont::cell_d: dimension mismatch");
  CellElement out(n_);
  for (const auto& [m, coeff] : c.terms()) {
    auto it = cell_d_cache_.find(m);
    if (it == cell_d_cache_.end())
      it = cell_d_cache_.emplace(m, p(i(CellElement::basis(n_, m)).d())).first;
    out += coeff * it->second;
  }
  return out;
}

const Dupont& dupont(int n) {
  static std::map<int, Dupont> instances;
  return instances.try_emplace(n, n).first->second;
}

}  // namespace mcs
