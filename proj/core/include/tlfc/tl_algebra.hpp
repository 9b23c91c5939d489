#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "tlfc/counting.hpp"
#include "tlfc/diagram.hpp"
#include "tlfc/fc_element.hpp"

namespace tlfc {

/// Integer polynomial in delta: exponent -> coefficient, zeros never stored.
class DeltaPoly {
 public:
  DeltaPoly() = default;
  static DeltaPoly monomial(int exponent, BigCount coefficient = 1);

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<int, BigCount>& terms() const noexcept { return terms_; }
  BigCount coefficient(int exponent) const;

  DeltaPoly& operator+=(const DeltaPoly& other);
  friend DeltaPoly operator+(DeltaPoly a, const DeltaPoly& b) { return a += b; }
  friend DeltaPoly operator*(const DeltaPoly& a, const DeltaPoly& b);
  friend bool operator==(const DeltaPoly&, const DeltaPoly&) = default;

 private:
  void add_term(int exponent, const BigCount& coefficient);
  std::map<int, BigCount> terms_;
};

/// `3*delta^2 + delta`; the zero polynomial prints as `0`.
std::string to_string(const DeltaPoly& p);

/// A linear combination of monomials e_w over one rank.
class TLElement {
 public:
  explicit TLElement(int rank) : rank_(rank) {}
  static TLElement monomial(const FCElement& w, DeltaPoly coefficient = DeltaPoly::monomial(0));
  static TLElement one(int rank);
  /// e_i at rank n; throws IndexOutOfRange unless 1 <= i <= n.
  static TLElement generator(int rank, int i);

  int rank() const noexcept { return rank_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<FCElement, DeltaPoly>& terms() const noexcept { return terms_; }

  /// Throws RankMismatch.
  TLElement& operator+=(const TLElement& other);
  friend TLElement operator+(TLElement a, const TLElement& b) { return a += b; }
  friend bool operator==(const TLElement&, const TLElement&) = default;

 private:
  void add_term(const FCElement& w, const DeltaPoly& coefficient);
  int rank_;
  std::map<FCElement, DeltaPoly> terms_;
};

std::string to_string(const TLElement& x);
std::ostream& operator<<(std::ostream& os, const TLElement& x);

struct MonomialProduct {
  FCElement element;
  int loops = 0;
};

/// e_{w1} e_{w2} = delta^loops e_element, computed on diagrams.
MonomialProduct monomial_product(const FCElement& w1, const FCElement& w2);
TLElement multiply(const TLElement& x, const TLElement& y);

struct DiagramDescents {
  GeneratorSet left;
  GeneratorSet right;
};

/// Left descents are the i with (i, i+1) in the top row, right descents the
/// j with (j', (j+1)') in the bottom row.
DiagramDescents descents_from_diagram(const Diagram& d);

/// The cross-row arrows of d (positive and negative), sorted.
std::vector<Arrow> equivalence_key(const Diagram& d);
std::string key_to_string(const std::vector<Arrow>& key);

struct CensusClass {
  std::vector<Arrow> key;
  BigCount size;
  /// Product of catalan(len / 2) over the runs of free dots in each row
  /// between consecutive cross-row endpoints.
  BigCount catalan_product;
};

/// Partitions the size-p elements at rank n by equivalence key. Classes are
/// ordered by key.
std::vector<CensusClass> census(int n, int p);

/// Catalan product predicted for a given set of cross-row arrows.
BigCount completion_count(int strings, const std::vector<Arrow>& key);

}  // namespace tlfc
