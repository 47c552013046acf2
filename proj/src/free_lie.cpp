#include "mcs/free_lie.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace mcs {

GeneratorSet::GeneratorSet(std::vector<Generator> gens) : gens_(std::move(gens)) {
  std::set<std::string> seen;
  for (const auto& g : gens_)
    if (!seen.insert(g.name).second)
      throw std::invalid_argument("GeneratorSet: duplicate generator '" + g.name + "'");
}

int GeneratorSet::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (gens_[i].name == name) return i;
  throw std::invalid_argument("GeneratorSet: unknown generator '" + name + "'");
}

int word_degree(const GeneratorSet& gens, const TensorWord& w) {
  int d = 0;
  for (uint16_t i : w) d += gens.at(i).degree;
  return d;
}

FreeLieElement::FreeLieElement(GeneratorSetPtr gens, int truncation_weight)
    : gens_(std::move(gens)), trunc_(truncation_weight) {
  if (trunc_ < 0) throw std::invalid_argument("FreeLieElement: negative truncation");
}

FreeLieElement FreeLieElement::zero(GeneratorSetPtr gens, int trunc) {
  return FreeLieElement(std::move(gens), trunc);
}

FreeLieElement FreeLieElement::generator(GeneratorSetPtr gens, int index, int trunc) {
  FreeLieElement e(std::move(gens), trunc);
  e.add(1, TensorWord{static_cast<uint16_t>(index)});
  return e;
}

void FreeLieElement::check_compatible(const FreeLieElement& o) const {
  if (gens_ != o.gens_)
    throw std::invalid_argument("FreeLieElement: mixing distinct generator sets");
}

bool FreeLieElement::homogeneous_degree(int* deg) const {
  bool first = true;
  int d = 0;
  for (const auto& [w, c] : terms_) {
    const int wd = word_degree(*gens_, w);
    if (first) {
      d = wd;
      first = false;
    } else if (wd != d) {
      return false;
    }
  }
  if (deg) *deg = d;
  return true;
}

FreeLieElement& FreeLieElement::add(const Scalar& c, const TensorWord& w) {
  if (w.empty()) throw std::invalid_argument("FreeLieElement: weight-0 word");
  if (static_cast<int>(w.size()) > trunc_ || c == 0) return *this;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

FreeLieElement& FreeLieElement::operator+=(const FreeLieElement& o) {
  check_compatible(o);
  trunc_ = std::min(trunc_, o.trunc_);
  std::erase_if(terms_, [&](const auto& t) {
    return static_cast<int>(t.first.size()) > trunc_;
  });
  for (const auto& [w, c] : o.terms_) add(c, w);
  return *this;
}

FreeLieElement& FreeLieElement::operator-=(const FreeLieElement& o) {
  check_compatible(o);
  trunc_ = std::min(trunc_, o.trunc_);
  std::erase_if(terms_, [&](const auto& t) {
    return static_cast<int>(t.first.size()) > trunc_;
  });
  for (const auto& [w, c] : o.terms_) add(-c, w);
  return *this;
}

FreeLieElement& FreeLieElement::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

bool FreeLieElement::operator==(const FreeLieElement& o) const {
  return gens_ == o.gens_ && terms_ == o.terms_;
}

FreeLieElement FreeLieElement::concat(const FreeLieElement& o) const {
  check_compatible(o);
  FreeLieElement out(gens_, std::min(trunc_, o.trunc_));
  for (const auto& [wa, ca] : terms_)
    for (const auto& [wb, cb] : o.terms_) {
      if (static_cast<int>(wa.size() + wb.size()) > out.trunc_) continue;
      TensorWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(ca * cb, w);
    }
  return out;
}

std::string FreeLieElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    os << (first ? "" : " + ") << render_scalar(c) << "*";
    for (size_t j = 0; j < w.size(); ++j)
      os << (j ? "." : "") << gens_->at(w[j]).name;
    first = false;
  }
  return os.str();
}

FreeLieElement lie_bracket(const FreeLieElement& a, const FreeLieElement& b) {
  FreeLieElement ab = a.concat(b);
  FreeLieElement out(a.gens(), ab.truncation_weight());
  out += ab;
  // termwise Koszul sign for the transposed product
  for (const auto& [wb, cb] : b.terms())
    for (const auto& [wa, ca] : a.terms()) {
      if (static_cast<int>(wa.size() + wb.size()) > out.truncation_weight()) continue;
      const int da = word_degree(*a.gens(), wa);
      const int db = word_degree(*b.gens(), wb);
      TensorWord w = wb;
      w.insert(w.end(), wa.begin(), wa.end());
      out.add(-Scalar(parity_sign(static_cast<long>(da) * db)) * cb * ca, w);
    }
  return out;
}

FreeLieElement truncate(const FreeLieElement& a, int n) {
  FreeLieElement out(a.gens(), n);
  for (const auto& [w, c] : a.terms())
    if (static_cast<int>(w.size()) <= n) out.add(c, w);
  return out;
}

FreeLieElement dynkin_project(const FreeLieElement& a) {
  FreeLieElement out(a.gens(), a.truncation_weight());
  for (const auto& [w, c] : a.terms()) {
    if (w.size() == 1) {
      out.add(c, w);
      continue;
    }
    // left-bracketing [[..[x1,x2],..],xw] / w
    FreeLieElement nested =
        FreeLieElement::generator(a.gens(), w[0], a.truncation_weight());
    for (size_t j = 1; j < w.size(); ++j)
      nested = lie_bracket(
          nested, FreeLieElement::generator(a.gens(), w[j], a.truncation_weight()));
    nested *= c / Scalar(static_cast<long>(w.size()));
    out += nested;
  }
  return out;
}

bool is_lie_element(const FreeLieElement& a) {
  return dynkin_project(a) == a;
}

FreeLieElement extend_derivation(const std::vector<FreeLieElement>& images,
                                 int parity, const FreeLieElement& a) {
  if (static_cast<int>(images.size()) != a.gens()->size())
    throw std::invalid_argument("extend_derivation: missing generator image");
  FreeLieElement out(a.gens(), a.truncation_weight());
  for (const auto& [w, c] : a.terms()) {
    int prefix_degree = 0;
    for (size_t j = 0; j < w.size(); ++j) {
      const Scalar sign(parity_sign(static_cast<long>(parity) * prefix_degree));
      const FreeLieElement& img = images.at(w[j]);
      for (const auto& [iw, ic] : img.terms()) {
        if (static_cast<int>(w.size() - 1 + iw.size()) > out.truncation_weight())
          continue;
        TensorWord nw(w.begin(), w.begin() + j);
        nw.insert(nw.end(), iw.begin(), iw.end());
        nw.insert(nw.end(), w.begin() + j + 1, w.end());
        out.add(sign * c * ic, nw);
      }
      prefix_degree += a.gens()->at(w[j]).degree;
    }
  }
  return out;
}

}  // namespace mcs
