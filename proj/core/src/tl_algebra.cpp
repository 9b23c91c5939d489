#include "tlfc/tl_algebra.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "tlfc/bijection.hpp"
#include "tlfc/error.hpp"

namespace tlfc {

DeltaPoly DeltaPoly::monomial(int exponent, BigCount coefficient) {
  DeltaPoly p;
  p.add_term(exponent, coefficient);
  return p;
}

BigCount DeltaPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigCount(0) : it->second;
}

void DeltaPoly::add_term(int exponent, const BigCount& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second == 0) terms_.erase(it);
}

DeltaPoly& DeltaPoly::operator+=(const DeltaPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

DeltaPoly operator*(const DeltaPoly& a, const DeltaPoly& b) {
  DeltaPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

std::string to_string(const DeltaPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  // Highest power first.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    BigCount magnitude = c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (magnitude < 0) magnitude = -magnitude;
    if (e == 0) {
      out += magnitude.str();
      continue;
    }
    if (magnitude != 1) out += magnitude.str() + "*";
    out += e == 1 ? "delta" : "delta^" + std::to_string(e);
  }
  return out;
}

TLElement TLElement::monomial(const FCElement& w, DeltaPoly coefficient) {
  TLElement x(w.rank());
  x.add_term(w, coefficient);
  return x;
}

TLElement TLElement::one(int rank) { return monomial(FCElement::identity(rank)); }

TLElement TLElement::generator(int rank, int i) {
  if (i < 1 || i > rank) {
    fail(ErrorCode::IndexOutOfRange,
         "e_" + std::to_string(i) + " at rank " + std::to_string(rank));
  }
  return monomial(FCElement::validate(rank, {{i, i}}));
}

void TLElement::add_term(const FCElement& w, const DeltaPoly& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second.is_zero()) terms_.erase(it);
}

TLElement& TLElement::operator+=(const TLElement& other) {
  if (other.rank_ != rank_) {
    fail(ErrorCode::RankMismatch,
         "ranks " + std::to_string(rank_) + " and " + std::to_string(other.rank_));
  }
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

std::string to_string(const TLElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : x.terms()) {
    if (!out.empty()) out += " + ";
    const bool compound = c.terms().size() > 1;
    out += compound ? "(" + to_string(c) + ")" : to_string(c);
    out += " * " + to_string(w);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const TLElement& x) { return os << to_string(x); }

MonomialProduct monomial_product(const FCElement& w1, const FCElement& w2) {
  if (w1.rank() != w2.rank()) {
    fail(ErrorCode::RankMismatch,
         to_string(w1) + " and " + to_string(w2) + " have different ranks");
  }
  Product product = concatenate(fc_to_diagram(w1), fc_to_diagram(w2));
  return {diagram_to_fc(product.diagram), product.loops};
}

TLElement multiply(const TLElement& x, const TLElement& y) {
  if (x.rank() != y.rank()) {
    fail(ErrorCode::RankMismatch,
         "ranks " + std::to_string(x.rank()) + " and " + std::to_string(y.rank()));
  }
  TLElement out(x.rank());
  for (const auto& [w1, c1] : x.terms()) {
    for (const auto& [w2, c2] : y.terms()) {
      const MonomialProduct m = monomial_product(w1, w2);
      out += TLElement::monomial(m.element, c1 * c2 * DeltaPoly::monomial(m.loops));
    }
  }
  return out;
}

DiagramDescents descents_from_diagram(const Diagram& d) {
  DiagramDescents out;
  for (int x = 1; x < d.strings(); ++x) {
    if (d.partner({Row::Top, x}) == Dot{Row::Top, x + 1}) out.left.push_back(x);
    if (d.partner({Row::Bottom, x}) == Dot{Row::Bottom, x + 1}) out.right.push_back(x);
  }
  return out;
}

std::vector<Arrow> equivalence_key(const Diagram& d) {
  const Components c = components(d);
  std::vector<Arrow> key = c.positive;
  key.insert(key.end(), c.negative.begin(), c.negative.end());
  std::sort(key.begin(), key.end());
  return key;
}

std::string key_to_string(const std::vector<Arrow>& key) {
  std::string out;
  for (const Arrow& a : key) {
    if (!out.empty()) out += ",";
    out += to_string(a);
  }
  return out.empty() ? "-" : out;
}

BigCount completion_count(int strings, const std::vector<Arrow>& key) {
  std::vector<bool> top_taken(static_cast<std::size_t>(strings) + 2, false);
  std::vector<bool> bottom_taken(top_taken.size(), false);
  for (const Arrow& a : key) {
    top_taken[static_cast<std::size_t>(a.tail.index)] = true;
    bottom_taken[static_cast<std::size_t>(a.head.index)] = true;
  }
  BigCount product = 1;
  for (const auto* taken : {&top_taken, &bottom_taken}) {
    int run = 0;
    for (int x = 1; x <= strings + 1; ++x) {
      if (x <= strings && !(*taken)[static_cast<std::size_t>(x)]) {
        ++run;
        continue;
      }
      // An odd run cannot be matched inside its gap.
      if (run % 2 != 0) return 0;
      product *= catalan(run / 2);
      run = 0;
    }
  }
  return product;
}

std::vector<CensusClass> census(int n, int p) {
  std::map<std::vector<Arrow>, BigCount> sizes;
  for (const FCElement& w : enumerate_fc(n, p)) ++sizes[equivalence_key(fc_to_diagram(w))];
  std::vector<CensusClass> out;
  out.reserve(sizes.size());
  for (auto& [key, size] : sizes) {
    out.push_back({key, size, completion_count(n + 1, key)});
  }
  return out;
}

}  // namespace tlfc
